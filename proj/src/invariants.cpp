#include "invariants.hpp"

#include <algorithm>
#include <map>

#include "detff.hpp"

namespace reflinv {

long Derivation::degree() const {
  long d = -1;
  for (const auto& p : comp) d = std::max(d, p.degree());
  return d;
}

bool Derivation::is_zero() const {
  for (const auto& p : comp)
    if (!p.is_zero()) return false;
  return true;
}

bool Derivation::is_homogeneous() const {
  long d = -1;
  for (const auto& p : comp) {
    if (p.is_zero()) continue;
    if (!p.is_homogeneous()) return false;
    if (d >= 0 && p.degree() != d) return false;
    d = p.degree();
  }
  return true;
}

Derivation Derivation::scaled(const CycNum& s) const {
  Derivation r;
  for (const auto& p : comp) r.comp.push_back(p.scaled(s));
  return r;
}

Derivation Derivation::operator+(const Derivation& o) const {
  Derivation r = *this;
  for (size_t i = 0; i < comp.size(); ++i) r.comp[i] += o.comp[i];
  return r;
}

Derivation Derivation::operator-(const Derivation& o) const {
  Derivation r = *this;
  for (size_t i = 0; i < comp.size(); ++i) r.comp[i] -= o.comp[i];
  return r;
}

bool Derivation::operator==(const Derivation& o) const { return comp == o.comp; }

Derivation euler_derivation(unsigned ell) {
  Derivation th;
  for (unsigned j = 0; j < ell; ++j) th.comp.push_back(Poly::variable(ell, j));
  return th;
}

Derivation act_on_derivation(const ReflGroup& g, size_t w, const Derivation& th) {
  // w . (f (x) y_j) = (w f) (x) sum_i A_ij y_i
  unsigned ell = g.rank();
  const CycMat& a = g.element(w);
  Derivation r;
  r.comp.assign(ell, Poly(ell));
  for (unsigned j = 0; j < ell; ++j) {
    if (th.comp[j].is_zero()) continue;
    Poly acted = g.act_on_poly(w, th.comp[j]);
    for (unsigned i = 0; i < ell; ++i)
      if (!a.at(i, j).is_zero()) r.comp[i] += acted.scaled(a.at(i, j));
  }
  return r;
}

namespace {

// monomials of total degree d in grlex-descending order
std::vector<Expo> monomials_of_degree(unsigned nvars, unsigned d) {
  std::vector<Expo> out;
  Expo cur(nvars, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned pos, unsigned left) {
    if (pos + 1 == nvars) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (int take = int(left); take >= 0; --take) {
      cur[pos] = unsigned(take);
      rec(pos + 1, left - unsigned(take));
    }
  };
  if (nvars == 0) return out;
  rec(0, d);
  return out;
}

// reduced row echelon over Q(zeta), pivot = first nonzero coordinate
class Echelon {
 public:
  bool reduce(std::vector<CycNum>& v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      const CycNum& c = v[pivots_[r]];
      if (c.is_zero()) continue;
      CycNum f = c;  // pivot entries are 1
      for (size_t i = pivots_[r]; i < v.size(); ++i)
        if (!rows_[r][i].is_zero()) v[i] -= f * rows_[r][i];
    }
    for (const auto& c : v)
      if (!c.is_zero()) return true;
    return false;
  }

  bool insert(std::vector<CycNum> v) {
    if (!reduce(v)) return false;
    size_t p = 0;
    while (v[p].is_zero()) ++p;
    CycNum inv = v[p].inv();
    for (auto& c : v) c = c * inv;
    for (size_t r = 0; r < rows_.size(); ++r) {
      CycNum f = rows_[r][p];
      if (f.is_zero()) continue;
      for (size_t i = p; i < v.size(); ++i)
        if (!v[i].is_zero()) rows_[r][i] -= f * v[i];
    }
    size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < p) ++at;
    rows_.insert(rows_.begin() + long(at), std::move(v));
    pivots_.insert(pivots_.begin() + long(at), p);
    return true;
  }

  size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<CycNum>>& rows() const { return rows_; }

 private:
  std::vector<std::vector<CycNum>> rows_;
  std::vector<size_t> pivots_;
};

// exponent tuples a with sum a_i * degs_i = target
void degree_tuples(const std::vector<long>& degs, long target, size_t pos, std::vector<unsigned>& cur,
                   std::vector<std::vector<unsigned>>& out) {
  if (target == 0) {
    std::vector<unsigned> full = cur;
    full.resize(degs.size(), 0);
    out.push_back(full);
    return;
  }
  if (pos == degs.size() || target < 0) return;
  for (long take = 0; take * degs[pos] <= target; ++take) {
    cur[pos] = unsigned(take);
    degree_tuples(degs, target - take * degs[pos], pos + 1, cur, out);
  }
  cur[pos] = 0;
}

std::vector<std::vector<unsigned>> degree_tuples(const std::vector<long>& degs, long target) {
  std::vector<std::vector<unsigned>> out;
  if (target < 0) return out;
  std::vector<unsigned> cur(degs.size(), 0);
  degree_tuples(degs, target, 0, cur, out);
  return out;
}

std::vector<CycNum> poly_to_vec(const Poly& p, const std::vector<Expo>& monos,
                                const std::map<Expo, size_t>& mono_index, size_t dim_u,
                                size_t comp) {
  std::vector<CycNum> v(monos.size() * dim_u);
  for (const auto& [e, c] : p.terms()) v[mono_index.at(e) * dim_u + comp] = c;
  return v;
}

Poly vec_component_to_poly(const std::vector<CycNum>& v, const std::vector<Expo>& monos,
                           size_t dim_u, size_t comp, unsigned nvars) {
  Poly p(nvars);
  for (size_t m = 0; m < monos.size(); ++m) {
    const CycNum& c = v[m * dim_u + comp];
    if (!c.is_zero()) p.add_term(monos[m], c);
  }
  return p;
}

}  // namespace

std::vector<std::vector<Poly>> reynolds_project(const ReflGroup& g, unsigned d,
                                                const RepDescriptor& u) {
  unsigned ell = g.rank();
  size_t dim_u = size_t(u.dim(ell));
  std::vector<Expo> monos = monomials_of_degree(ell, d);
  std::map<Expo, size_t> mono_index;
  for (size_t i = 0; i < monos.size(); ++i) mono_index.emplace(monos[i], i);

  CycNum avg = CycNum(long(g.order())).inv();

  // accumulate the symmetrized image of every monomial (x) basis vector
  std::vector<std::vector<CycNum>> sums(monos.size() * dim_u,
                                        std::vector<CycNum>(monos.size() * dim_u));
  for (size_t w = 0; w < g.order(); ++w) {
    CycMat mu = rep_matrix(g.element(w), u);
    auto cols = g.subst_cols(w);
    for (size_t m = 0; m < monos.size(); ++m) {
      Poly acted = Poly::monomial(ell, monos[m], CycNum::one()).subst_linear(cols);
      for (size_t t = 0; t < dim_u; ++t) {
        auto& target = sums[m * dim_u + t];
        for (size_t s = 0; s < dim_u; ++s) {
          const CycNum& coef = mu.at(unsigned(s), unsigned(t));
          if (coef.is_zero()) continue;
          for (const auto& [e, c] : acted.terms()) {
            target[mono_index.at(e) * dim_u + s] += c * coef;
          }
        }
      }
    }
  }

  Echelon ech;
  for (auto& v : sums) {
    for (auto& c : v) c *= avg;
    ech.insert(std::move(v));
  }

  std::vector<std::vector<Poly>> basis;
  for (const auto& row : ech.rows()) {
    std::vector<Poly> elem;
    for (size_t t = 0; t < dim_u; ++t)
      elem.push_back(vec_component_to_poly(row, monos, dim_u, t, ell));
    basis.push_back(std::move(elem));
  }
  return basis;
}

namespace {

std::vector<Poly> monomial_family_invariants(unsigned r, unsigned p, unsigned ell) {
  std::vector<Poly> f;
  for (unsigned k = 1; k <= ell - 1; ++k) {
    Poly s(ell);
    for (unsigned j = 0; j < ell; ++j) {
      Expo e(ell, 0);
      e[j] = r * k;
      s.add_term(e, CycNum::one());
    }
    f.push_back(s);
  }
  Expo e(ell, r / p);
  f.push_back(Poly::monomial(ell, e, CycNum::one()));
  return f;
}

std::vector<Poly> generic_invariants(const ReflGroup& g, long degree_cap) {
  int trunc = std::min<long>(default_truncation(g), degree_cap + long(degree_cap) + 10);
  trunc = std::max(trunc, default_truncation(g));
  std::vector<long> degrees = invariant_degrees(g, trunc);
  for (long d : degrees)
    if (d > degree_cap)
      throw Error(Errc::ReynoldsDegreeBound,
                  "invariant degree " + std::to_string(d) + " exceeds the search cap " +
                      std::to_string(degree_cap));

  unsigned ell = g.rank();
  std::vector<Poly> chosen;
  std::vector<long> chosen_degs;
  std::map<long, unsigned> by_degree;
  for (long d : degrees) by_degree[d]++;

  for (const auto& [d, count] : by_degree) {
    std::vector<Expo> monos = monomials_of_degree(ell, unsigned(d));
    std::map<Expo, size_t> mono_index;
    for (size_t i = 0; i < monos.size(); ++i) mono_index.emplace(monos[i], i);

    // span of products of lower-degree generators
    Echelon products;
    for (const auto& tuple : degree_tuples(chosen_degs, d)) {
      Poly prod = Poly::constant(ell, 1);
      for (size_t i = 0; i < tuple.size(); ++i)
        for (unsigned k = 0; k < tuple[i]; ++k) prod *= chosen[i];
      products.insert(poly_to_vec(prod, monos, mono_index, 1, 0));
    }

    auto candidates = reynolds_project(g, unsigned(d), RepDescriptor::trivial());
    unsigned added = 0;
    Echelon residues = products;
    for (const auto& cand : candidates) {
      if (added == count) break;
      std::vector<CycNum> v = poly_to_vec(cand[0], monos, mono_index, 1, 0);
      std::vector<CycNum> probe = v;
      if (!residues.reduce(probe)) continue;
      residues.insert(v);
      Poly residue(ell);
      for (size_t m = 0; m < monos.size(); ++m)
        if (!probe[m].is_zero()) residue.add_term(monos[m], probe[m]);
      chosen.push_back(residue.monic());
      ++added;
    }
    if (added != count)
      throw Error(Errc::Internal, "could not realize the predicted number of basic invariants");
    for (unsigned i = 0; i < count; ++i) chosen_degs.push_back(d);
  }
  return chosen;
}

}  // namespace

std::vector<Poly> basic_invariants(const ReflGroup& g, long degree_cap) {
  if (degree_cap < 0) degree_cap = 2 * long(g.num_reflections() + g.num_hyperplanes());
  if (degree_cap < 1) degree_cap = 1;
  std::vector<Poly> f;
  switch (g.spec().family) {
    case GroupSpec::Family::Cyclic: {
      Expo e{g.spec().h};
      f.push_back(Poly::monomial(1, e, CycNum::one()));
      break;
    }
    case GroupSpec::Family::Monomial:
      f = monomial_family_invariants(g.spec().r, g.spec().p, g.spec().ell);
      break;
    case GroupSpec::Family::Generic:
      f = generic_invariants(g, degree_cap);
      break;
  }
  std::stable_sort(f.begin(), f.end(),
                   [](const Poly& a, const Poly& b) { return a.degree() < b.degree(); });
  for (auto& p : f) p = p.monic();
  return f;
}

namespace {

std::vector<Derivation> generic_derivations(const ReflGroup& g, const std::vector<Poly>& f,
                                            long degree_cap) {
  unsigned ell = g.rank();
  int trunc = default_truncation(g);
  std::vector<long> fdegs;
  for (const auto& p : f) fdegs.push_back(p.degree());
  QPolyZ gen = generator_polynomial(g, RepDescriptor::v(), fdegs, trunc);

  std::map<long, unsigned> by_degree;
  for (const auto& [d, coef] : gen)
    for (const auto& [tu, v] : coef) {
      if (!v.fits_slong_p() || v < 0)
        throw Error(Errc::Internal, "bad coexponent multiplicity");
      by_degree[d] += unsigned(v.get_si());
    }

  std::vector<Derivation> chosen;
  std::vector<long> chosen_degs;
  for (const auto& [d, count] : by_degree) {
    if (d > degree_cap)
      throw Error(Errc::ReynoldsDegreeBound,
                  "coexponent degree " + std::to_string(d) + " exceeds the search cap " +
                      std::to_string(degree_cap));
    std::vector<Expo> monos = monomials_of_degree(ell, unsigned(d));
    std::map<Expo, size_t> mono_index;
    for (size_t i = 0; i < monos.size(); ++i) mono_index.emplace(monos[i], i);
    auto to_vec = [&](const Derivation& th) {
      std::vector<CycNum> v(monos.size() * ell);
      for (unsigned j = 0; j < ell; ++j)
        for (const auto& [e, c] : th.comp[j].terms()) v[mono_index.at(e) * ell + j] = c;
      return v;
    };
    auto from_vec = [&](const std::vector<CycNum>& v) {
      Derivation th;
      for (unsigned j = 0; j < ell; ++j)
        th.comp.push_back(vec_component_to_poly(v, monos, ell, j, ell));
      return th;
    };

    // S^W_+ multiples of the lower-degree basic derivations
    Echelon span;
    for (size_t t = 0; t < chosen.size(); ++t) {
      long rem = d - chosen_degs[t];
      if (rem <= 0) continue;
      for (const auto& tuple : degree_tuples(fdegs, rem)) {
        Poly prod = Poly::constant(ell, 1);
        for (size_t i = 0; i < tuple.size(); ++i)
          for (unsigned k = 0; k < tuple[i]; ++k) prod *= f[i];
        Derivation scaledth;
        for (unsigned j = 0; j < ell; ++j) scaledth.comp.push_back(prod * chosen[t].comp[j]);
        span.insert(to_vec(scaledth));
      }
    }

    unsigned added = 0;
    // the Euler derivation is the canonical degree-1 generator
    if (d == 1) {
      Derivation eu = euler_derivation(ell);
      std::vector<CycNum> v = to_vec(eu);
      if (span.reduce(v)) {
        chosen.push_back(eu);
        chosen_degs.push_back(1);
        span.insert(to_vec(eu));
        ++added;
      }
    }
    if (added < count) {
      auto candidates = reynolds_project(g, unsigned(d), RepDescriptor::v());
      for (const auto& cand : candidates) {
        if (added == count) break;
        Derivation th;
        th.comp = cand;
        std::vector<CycNum> probe = to_vec(th);
        if (!span.reduce(probe)) continue;
        span.insert(to_vec(th));
        Derivation residue = from_vec(probe);
        // scale so the first nonzero component is monic
        for (unsigned j = 0; j < ell; ++j)
          if (!residue.comp[j].is_zero()) {
            residue = residue.scaled(residue.comp[j].lead_coeff().inv());
            break;
          }
        chosen.push_back(residue);
        chosen_degs.push_back(d);
        ++added;
      }
    }
    if (added != count)
      throw Error(Errc::Internal, "could not realize the predicted number of basic derivations");
  }
  return chosen;
}

}  // namespace

std::vector<Derivation> basic_derivations(const ReflGroup& g, const std::vector<Poly>& f,
                                          long degree_cap) {
  if (degree_cap < 0) degree_cap = 2 * long(g.num_reflections() + g.num_hyperplanes());
  if (degree_cap < 1) degree_cap = 1;
  unsigned ell = g.rank();
  const GroupSpec& spec = g.spec();
  if (spec.family == GroupSpec::Family::Cyclic) return {euler_derivation(1)};
  if (spec.family == GroupSpec::Family::Monomial && spec.p < spec.r) {
    // theta_k = sum_j x_j^{(k-1)r+1} (x) y_j
    std::vector<Derivation> theta;
    for (unsigned k = 1; k <= ell; ++k) {
      Derivation th;
      for (unsigned j = 0; j < ell; ++j) {
        Expo e(ell, 0);
        e[j] = (k - 1) * spec.r + 1;
        th.comp.push_back(Poly::monomial(ell, e, CycNum::one()));
      }
      theta.push_back(th);
    }
    return theta;
  }
  return generic_derivations(g, f, degree_cap);
}

JQResult jacobian_and_Q(const ReflGroup& g, const std::vector<Poly>& f,
                        const std::vector<Derivation>& theta) {
  unsigned ell = g.rank();
  JQResult out;

  PolyMatrix jac(ell, std::vector<Poly>(ell, Poly(ell)));
  for (unsigned i = 0; i < ell; ++i)
    for (unsigned j = 0; j < ell; ++j) jac[i][j] = f[i].partial(j);
  out.J = det_fraction_free(jac);
  if (out.J.is_zero())
    throw Error(Errc::ScalarMismatch, "basic invariants are algebraically dependent");

  out.Q = Poly::constant(ell, 1);
  Poly jq = Poly::constant(ell, 1);
  for (const auto& h : g.hyperplanes()) {
    out.Q *= h.linear_form;
    jq *= poly_pow(h.linear_form, h.e_H - 1);
  }

  auto jdiv = out.J.exact_div(jq);
  if (!jdiv || !jdiv->is_constant() || jdiv->is_zero())
    throw Error(Errc::ScalarMismatch, "J is not a scalar multiple of prod l_H^(e_H - 1)");
  out.j_scalar = jdiv->constant_value();

  PolyMatrix mth(ell, std::vector<Poly>(ell, Poly(ell)));
  for (unsigned i = 0; i < ell; ++i)
    for (unsigned j = 0; j < ell; ++j) mth[i][j] = theta[i].comp[j];
  Poly detm = det_fraction_free(mth);
  auto qdiv = detm.exact_div(out.Q);
  if (!qdiv || !qdiv->is_constant() || qdiv->is_zero())
    throw Error(Errc::ScalarMismatch, "det M(theta) is not a scalar multiple of Q");
  out.q_scalar = qdiv->constant_value();
  return out;
}

InvariantData build_invariants(const ReflGroup& g, long degree_cap) {
  InvariantData inv;
  inv.f = basic_invariants(g, degree_cap);
  inv.theta = basic_derivations(g, inv.f, degree_cap);
  std::stable_sort(inv.theta.begin(), inv.theta.end(),
                   [](const Derivation& a, const Derivation& b) { return a.degree() < b.degree(); });
  for (const auto& p : inv.f) inv.exponents.push_back(p.degree() - 1);
  for (const auto& th : inv.theta) inv.coexponents.push_back(th.degree());

  auto jq = jacobian_and_Q(g, inv.f, inv.theta);
  inv.J = jq.J;
  inv.Q = jq.Q;
  inv.j_scalar = jq.j_scalar;
  inv.q_scalar = jq.q_scalar;
  inv.N = inv.J.degree();
  inv.Nstar = inv.Q.degree();
  if (inv.N != long(g.num_reflections()) || inv.Nstar != long(g.num_hyperplanes()))
    throw Error(Errc::Internal, "deg J / deg Q do not match the reflection counts");

  inv.h = inv.f.back().degree();
  std::vector<long> co_desc = inv.coexponents;
  std::sort(co_desc.rbegin(), co_desc.rend());
  inv.is_duality = true;
  for (size_t i = 0; i < inv.exponents.size(); ++i)
    if (inv.exponents[i] + co_desc[i] != inv.h) inv.is_duality = false;
  return inv;
}

}  // namespace reflinv
