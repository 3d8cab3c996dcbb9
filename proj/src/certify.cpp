#include "certify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "molien.hpp"

namespace reflinv {

std::string theorem_tag_str(TheoremTag t) {
  switch (t) {
    case TheoremTag::Main:
      return "main";
    case TheoremTag::RankTwo:
      return "ranktwo";
    case TheoremTag::Monomial:
      return "monomial";
    case TheoremTag::UserSupplied:
      return "user";
  }
  return "?";
}

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Certified:
      return "Certified";
    case Verdict::ProbablyCertified:
      return "ProbablyCertified";
    case Verdict::RefutedDegreeSum:
      return "RefutedDegreeSum";
    case Verdict::RefutedSingular:
      return "RefutedSingular";
  }
  return "?";
}

std::string BasisLabel::str() const {
  std::ostringstream os;
  if (!I.empty()) {
    os << "df{";
    for (size_t i = 0; i < I.size(); ++i) {
      if (i) os << ',';
      os << (I[i] + 1);
    }
    os << "}*";
  }
  os << (use_d ? "dtheta" : "theta") << (k + 1);
  return os.str();
}

std::vector<std::string> CandidateBasis::label_strings() const {
  std::vector<std::string> out;
  for (const auto& l : labels) out.push_back(l.str());
  return out;
}

namespace {

DiffDeriv realize_label(const ReflGroup& g, const InvariantData& inv, const BasisLabel& l) {
  unsigned ell = g.rank();
  std::vector<PolyForm> dfs;
  for (unsigned i : l.I) {
    if (i >= inv.f.size()) throw Error(Errc::BadSpec, "basis label indexes a missing invariant");
    dfs.push_back(d_poly(inv.f[i]));
  }
  PolyForm form = wedge_forms(dfs, ell);
  if (l.k >= inv.theta.size()) throw Error(Errc::BadSpec, "basis label indexes a missing derivation");
  DiffDeriv base = DiffDeriv::from_derivation(inv.theta[l.k]);
  if (l.use_d) base = exterior_d(base);
  return wedge_multiply(form, base);
}

}  // namespace

CandidateBasis basis_from_labels(const ReflGroup& g, const InvariantData& inv, unsigned m,
                                 std::vector<BasisLabel> labels) {
  CandidateBasis b;
  b.m = m;
  b.tag = TheoremTag::UserSupplied;
  b.labels = std::move(labels);
  for (const auto& l : b.labels) {
    DiffDeriv e = realize_label(g, inv, l);
    if (e.form_degree() != m)
      throw Error(Errc::BadSpec, "label " + l.str() + " has form degree " +
                                     std::to_string(e.form_degree()) + ", expected " +
                                     std::to_string(m));
    b.elements.push_back(std::move(e));
  }
  return b;
}

CandidateBasis candidate_basis(const ReflGroup& g, const InvariantData& inv, TheoremTag theorem,
                               unsigned m) {
  unsigned ell = g.rank();
  if (m > ell) throw Error(Errc::BadSpec, "form degree exceeds rank");
  std::vector<BasisLabel> labels;

  switch (theorem) {
    case TheoremTag::Main: {
      if (!inv.is_duality)
        throw Error(Errc::TheoremNotApplicable, "the duality-group basis requires a duality group");
      // { df_I theta_k : I in C([l-1], m) } u { df_I dtheta_k : I in C([l-1], m-1) }
      if (m < ell)
        for (const auto& i : subsets_of_size(ell - 1, m))
          for (unsigned k = 0; k < ell; ++k) labels.push_back({i, k, false});
      if (m >= 1)
        for (const auto& i : subsets_of_size(ell - 1, m - 1))
          for (unsigned k = 0; k < ell; ++k) labels.push_back({i, k, true});
      break;
    }
    case TheoremTag::RankTwo: {
      if (ell != 2) throw Error(Errc::TheoremNotApplicable, "the rank-two basis requires rank 2");
      if (inv.coexponents[0] != 1 || !(inv.theta[0] == euler_derivation(2)))
        throw Error(Errc::TheoremNotApplicable, "the rank-two basis requires theta1 = Euler");
      if (m == 0) {
        labels.push_back({{}, 0, false});
        labels.push_back({{}, 1, false});
      } else if (m == 1) {
        labels.push_back({{0}, 0, false});
        labels.push_back({{1}, 0, false});
        labels.push_back({{}, 0, true});
        labels.push_back({{}, 1, true});
      } else {
        labels.push_back({{0}, 0, true});
        labels.push_back({{1}, 0, true});
      }
      break;
    }
    case TheoremTag::Monomial: {
      const GroupSpec& spec = g.spec();
      if (spec.family != GroupSpec::Family::Monomial || spec.p >= spec.r)
        throw Error(Errc::TheoremNotApplicable,
                    "the monomial-group basis requires G(r,p,l) with 1 <= p < r");
      // { df_I theta_k : I in C([l], m), k in [l-m] }
      //   u { df_I dtheta_k : I in C([l], m-1), k in [l-m+1] }
      for (const auto& i : subsets_of_size(ell, m))
        for (unsigned k = 0; k < ell - m; ++k) labels.push_back({i, k, false});
      if (m >= 1)
        for (const auto& i : subsets_of_size(ell, m - 1))
          for (unsigned k = 0; k < ell - m + 1; ++k) labels.push_back({i, k, true});
      break;
    }
    case TheoremTag::UserSupplied:
      throw Error(Errc::BadSpec, "user-supplied bases are built from labels");
  }

  CandidateBasis b;
  b.m = m;
  b.tag = theorem;
  b.labels = std::move(labels);
  for (const auto& l : b.labels) b.elements.push_back(realize_label(g, inv, l));
  if (b.elements.size() != size_t(ell) * binom(ell, m))
    throw Error(Errc::Internal, "candidate basis has wrong cardinality");
  return b;
}

namespace {

Poly jq_power(const InvariantData& inv, unsigned long jp, unsigned long qp) {
  Poly acc = Poly::constant(inv.J.nvars(), 1);
  for (unsigned long i = 0; i < jp; ++i) acc *= inv.J;
  for (unsigned long i = 0; i < qp; ++i) acc *= inv.Q;
  return acc;
}

}  // namespace

CertReport saito_certify(const ReflGroup& g, const InvariantData& inv, const CandidateBasis& b,
                         CertMode mode, unsigned trials, std::uint64_t seed) {
  unsigned ell = g.rank();
  unsigned m = b.m;
  size_t expected = size_t(ell) * binom(ell, m);
  if (b.elements.size() != expected)
    throw Error(Errc::BadSpec, "candidate basis must have l * C(l,m) elements");

  CertReport rep;
  rep.m = m;
  rep.labels = b.label_strings();
  rep.theorem = theorem_tag_str(b.tag);
  rep.seed = seed;
  rep.j_power = (m >= 1) ? (ell - 1) * binom(ell - 1, m - 1) : 0;
  rep.q_power = binom(ell - 1, m);
  rep.target_delta = delta_formula(ell, m, inv.N, inv.Nstar);

  // condition (d): degree sum
  long sum = 0;
  for (const auto& e : b.elements) {
    auto d = e.poly_degree();
    if (!d) {
      // an identically zero or mixed element can never contribute correctly
      rep.verdict = e.is_zero() ? Verdict::RefutedSingular : Verdict::RefutedDegreeSum;
      if (!e.is_zero()) return rep;
      // zero element: degree sum is ill-defined, the determinant vanishes
      rep.degree_sum = -1;
      rep.mode = "exact";
      return rep;
    }
    sum += *d;
  }
  rep.degree_sum = sum;
  if (sum != rep.target_delta) {
    rep.verdict = Verdict::RefutedDegreeSum;
    rep.mode = "degree-sum";
    return rep;
  }

  if (mode == CertMode::Auto)
    mode = (expected <= 12) ? CertMode::Exact : CertMode::Probabilistic;

  CoefMatrix cm = coef_matrix(b.elements, rep.labels);

  if (mode == CertMode::Exact) {
    rep.mode = "exact";
    Poly det = det_fraction_free(cm.entries);
    rep.det = det;
    if (det.is_zero()) {
      rep.verdict = Verdict::RefutedSingular;
      return rep;
    }
    Poly target = jq_power(inv, rep.j_power, rep.q_power);
    auto quot = det.exact_div(target);
    if (!quot || !quot->is_constant() || quot->is_zero())
      throw Error(Errc::Internal,
                  "determinant of an invariant candidate is not a scalar multiple of J^a Q^b");
    rep.scalar = quot->constant_value();
    rep.verdict = Verdict::Certified;
    return rep;
  }

  rep.mode = "probabilistic";
  rep.trials = trials;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(1, 10007);
  std::optional<CycNum> ratio;
  for (unsigned t = 0; t < trials; ++t) {
    std::vector<CycNum> pt;
    CycNum jq_val;
    std::vector<long> pt_raw;
    while (true) {
      pt.clear();
      pt_raw.clear();
      for (unsigned i = 0; i < ell; ++i) {
        long v = dist(rng);
        pt_raw.push_back(v);
        pt.push_back(CycNum(v));
      }
      CycNum jv = inv.J.eval(pt);
      CycNum qv = inv.Q.eval(pt);
      if (jv.is_zero() || qv.is_zero()) continue;  // resample away from the arrangement
      jq_val = jv.pow(long(rep.j_power)) * qv.pow(long(rep.q_power));
      break;
    }
    rep.eval_points.push_back(pt_raw);
    CycMat num(unsigned(cm.entries.size()), unsigned(cm.entries.size()));
    for (unsigned i = 0; i < cm.entries.size(); ++i)
      for (unsigned j = 0; j < cm.entries.size(); ++j) num.at(i, j) = cm.entries[i][j].eval(pt);
    CycNum det_val = num.det();
    if (det_val.is_zero()) {
      rep.verdict = Verdict::RefutedSingular;
      return rep;
    }
    CycNum r = det_val * jq_val.inv();
    if (ratio && !(*ratio == r))
      throw Error(Errc::Internal, "evaluated determinant ratio is not constant");
    ratio = r;
  }
  rep.scalar = ratio.value_or(CycNum::zero());
  rep.verdict = Verdict::ProbablyCertified;
  return rep;
}

bool divisibility_check(const ReflGroup& g, const InvariantData& inv,
                        const std::vector<DiffDeriv>& b, unsigned m) {
  unsigned ell = g.rank();
  std::vector<std::string> labels(b.size(), "");
  CoefMatrix cm = coef_matrix(b, labels);
  Poly det = det_fraction_free(cm.entries);
  if (det.is_zero()) return true;
  unsigned long jp = (m >= 1) ? (ell - 1) * binom(ell - 1, m - 1) : 0;
  unsigned long qp = binom(ell - 1, m);
  return det.exact_div(jq_power(inv, jp, qp)).has_value();
}

TheoremTag auto_theorem(const ReflGroup& g, const InvariantData& inv) {
  if (inv.is_duality) return TheoremTag::Main;
  const GroupSpec& spec = g.spec();
  if (spec.family == GroupSpec::Family::Monomial && spec.p > 1 && spec.p < spec.r)
    return TheoremTag::Monomial;
  if (g.rank() == 2) return TheoremTag::RankTwo;
  throw Error(Errc::TheoremNotApplicable,
              "no catalogued basis theorem applies; supply a basis explicitly");
}

GenerationReport verify_generation(const ReflGroup& g, const InvariantData& inv, CertMode mode,
                                   unsigned trials, std::uint64_t seed) {
  GenerationReport rep;
  rep.theorem = auto_theorem(g, inv);
  rep.all_certified = true;
  rep.shapes_ok = true;
  for (unsigned m = 0; m <= g.rank(); ++m) {
    CandidateBasis b = candidate_basis(g, inv, rep.theorem, m);
    CertReport r = saito_certify(g, inv, b, mode, trials, seed);
    if (r.verdict != Verdict::Certified && r.verdict != Verdict::ProbablyCertified)
      rep.all_certified = false;
    rep.per_m.push_back(std::move(r));
  }
  return rep;
}

}  // namespace reflinv
