#include "group.hpp"

#include <numeric>
#include <sstream>
#include <unordered_map>

namespace reflinv {

GroupSpec GroupSpec::cyclic(unsigned h) {
  GroupSpec s;
  s.family = Family::Cyclic;
  s.h = h;
  return s;
}

GroupSpec GroupSpec::monomial(unsigned r, unsigned p, unsigned ell) {
  GroupSpec s;
  s.family = Family::Monomial;
  s.r = r;
  s.p = p;
  s.ell = ell;
  return s;
}

GroupSpec GroupSpec::generic(unsigned zeta_order, std::vector<CycMat> gens) {
  GroupSpec s;
  s.family = Family::Generic;
  s.zeta_order = zeta_order;
  s.generators = std::move(gens);
  return s;
}

void GroupSpec::validate() const {
  if (max_order == 0) throw Error(Errc::BadSpec, "max_order must be positive");
  switch (family) {
    case Family::Cyclic:
      if (h < 1) throw Error(Errc::BadSpec, "cyclic order must be >= 1");
      break;
    case Family::Monomial:
      if (r < 1 || ell < 1) throw Error(Errc::BadSpec, "monomial parameters must be positive");
      if (p < 1 || r % p != 0) throw Error(Errc::BadSpec, "p must divide r");
      break;
    case Family::Generic: {
      if (zeta_order < 1) throw Error(Errc::BadSpec, "zeta order must be positive");
      if (generators.empty()) throw Error(Errc::BadSpec, "generic spec needs generators");
      unsigned ell0 = generators[0].rows();
      for (const auto& g : generators)
        if (g.rows() != g.cols() || g.rows() != ell0)
          throw Error(Errc::BadSpec, "generators must be square matrices of equal size");
      break;
    }
  }
}

std::string GroupSpec::str() const {
  std::ostringstream os;
  switch (family) {
    case Family::Cyclic:
      os << "cyclic(" << h << ")";
      break;
    case Family::Monomial:
      os << "G(" << r << "," << p << "," << ell << ")";
      break;
    case Family::Generic:
      os << "generic(rank " << (generators.empty() ? 0 : generators[0].rows()) << ", "
         << generators.size() << " generators)";
      break;
  }
  return os.str();
}

namespace {

std::vector<CycMat> monomial_generators(unsigned r, unsigned p, unsigned ell, unsigned n) {
  std::vector<CycMat> gens;
  // adjacent transpositions
  for (unsigned i = 0; i + 1 < ell; ++i) {
    CycMat t = CycMat::identity(ell);
    t.at(i, i) = CycNum::zero();
    t.at(i + 1, i + 1) = CycNum::zero();
    t.at(i, i + 1) = CycNum::one();
    t.at(i + 1, i) = CycNum::one();
    gens.push_back(t);
  }
  if (p < r) {
    CycMat d = CycMat::identity(ell);
    d.at(0, 0) = CycNum::zeta(n, long(p));
    gens.push_back(d);
  }
  if (r > 1 && ell >= 2) {
    // order-2 reflection mixing the first two coordinates with zeta entries
    CycMat s = CycMat::identity(ell);
    s.at(0, 0) = CycNum::zero();
    s.at(1, 1) = CycNum::zero();
    s.at(1, 0) = CycNum::zeta(n, 1);
    s.at(0, 1) = CycNum::zeta(n, -1);
    gens.push_back(s);
  }
  return gens;
}

}  // namespace

ReflGroup build_group(const GroupSpec& spec) {
  spec.validate();
  ReflGroup g;
  g.spec_ = spec;

  std::vector<CycMat> gens;
  switch (spec.family) {
    case GroupSpec::Family::Cyclic: {
      g.ell_ = 1;
      g.n_ = spec.h;
      CycMat m(1, 1);
      m.at(0, 0) = CycNum::zeta(spec.h, 1);
      gens.push_back(m);
      break;
    }
    case GroupSpec::Family::Monomial: {
      g.ell_ = spec.ell;
      g.n_ = spec.r;
      gens = monomial_generators(spec.r, spec.p, spec.ell, g.n_);
      break;
    }
    case GroupSpec::Family::Generic: {
      g.ell_ = spec.generators[0].rows();
      unsigned n = spec.zeta_order;
      for (const auto& mat : spec.generators)
        for (unsigned i = 0; i < mat.rows(); ++i)
          for (unsigned j = 0; j < mat.cols(); ++j)
            n = unsigned(std::lcm(n, mat.at(i, j).order()));
      g.n_ = n;
      gens = spec.generators;
      break;
    }
  }
  for (auto& m : gens) m = m.to_order(g.n_);

  // breadth-first closure with canonical-form hashing
  std::unordered_map<std::string, size_t> index;
  CycMat id = CycMat::identity(g.ell_).to_order(g.n_);
  g.elems_.push_back(id);
  index.emplace(id.key(g.n_), 0);
  for (size_t cur = 0; cur < g.elems_.size(); ++cur) {
    for (const auto& gen : gens) {
      CycMat prod = (g.elems_[cur] * gen).to_order(g.n_);
      std::string k = prod.key(g.n_);
      if (index.emplace(k, g.elems_.size()).second) {
        g.elems_.push_back(std::move(prod));
        if (g.elems_.size() > spec.max_order)
          throw Error(Errc::OrderCapExceeded,
                      "group closure exceeded max_order = " + std::to_string(spec.max_order));
      }
    }
  }

  if (spec.family == GroupSpec::Family::Monomial) {
    unsigned long long expected = 1;
    for (unsigned i = 2; i <= spec.ell; ++i) expected *= i;
    for (unsigned i = 0; i < spec.ell; ++i) expected *= spec.r;
    expected /= spec.p;
    if (g.elems_.size() != expected)
      throw Error(Errc::Internal, "monomial group closure has wrong order");
  }
  if (spec.family == GroupSpec::Family::Cyclic && g.elems_.size() != spec.h)
    throw Error(Errc::Internal, "cyclic group closure has wrong order");

  g.inverse_.resize(g.elems_.size());
  g.dets_.resize(g.elems_.size());
  for (size_t i = 0; i < g.elems_.size(); ++i) {
    auto inv = g.elems_[i].inverse();
    if (!inv) throw Error(Errc::Internal, "group element is singular");
    auto it = index.find(inv->to_order(g.n_).key(g.n_));
    if (it == index.end()) throw Error(Errc::Internal, "closure is missing an inverse");
    g.inverse_[i] = it->second;
    g.dets_[i] = g.elems_[i].det();
  }

  // reflections and hyperplanes
  std::unordered_map<std::string, size_t> hyp_index;
  std::vector<int> refl_to_hyp;
  for (size_t i = 1; i < g.elems_.size(); ++i) {
    CycMat diff = g.elems_[i] - id;
    if (diff.rank() != 1) continue;
    // a nonzero row of (w - I) is the linear form cutting out the fixed
    // hyperplane
    std::vector<CycNum> normal;
    for (unsigned row = 0; row < g.ell_ && normal.empty(); ++row) {
      for (unsigned col = 0; col < g.ell_; ++col)
        if (!diff.at(row, col).is_zero()) {
          normal.reserve(g.ell_);
          for (unsigned c2 = 0; c2 < g.ell_; ++c2) normal.push_back(diff.at(row, c2));
          break;
        }
    }
    unsigned first = 0;
    while (normal[first].is_zero()) ++first;
    CycNum scale = normal[first].inv();
    for (auto& c : normal) c = (c * scale).to_order(g.n_);
    std::ostringstream key;
    for (const auto& c : normal) key << c.key() << '&';
    auto [it, inserted] = hyp_index.emplace(key.str(), g.hyperplanes_.size());
    if (inserted) {
      Hyperplane h;
      h.normal = normal;
      Poly lf(g.ell_);
      for (unsigned j = 0; j < g.ell_; ++j)
        if (!normal[j].is_zero()) lf += Poly::variable(g.ell_, j).scaled(normal[j]);
      h.linear_form = lf;
      h.stabilizer.push_back(0);
      g.hyperplanes_.push_back(std::move(h));
    }
    g.reflections_.push_back(i);
    refl_to_hyp.push_back(int(it->second));
    g.hyperplanes_[it->second].stabilizer.push_back(i);
  }
  for (auto& h : g.hyperplanes_) {
    std::sort(h.stabilizer.begin(), h.stabilizer.end());
    h.e_H = unsigned(h.stabilizer.size());
  }
  return g;
}

size_t ReflGroup::index_of(const CycMat& m) const {
  std::string k = m.to_order(n_).key(n_);
  for (size_t i = 0; i < elems_.size(); ++i)
    if (elems_[i].key(n_) == k) return i;
  throw Error(Errc::Internal, "matrix is not a group element");
}

std::vector<std::vector<CycNum>> ReflGroup::subst_cols(size_t w) const {
  const CycMat& ainv = elems_[inverse_[w]];
  std::vector<std::vector<CycNum>> cols(ell_, std::vector<CycNum>(ell_));
  for (unsigned j = 0; j < ell_; ++j)
    for (unsigned i = 0; i < ell_; ++i) cols[j][i] = ainv.at(j, i);
  return cols;
}

Poly ReflGroup::act_on_poly(size_t w, const Poly& f) const {
  return f.subst_linear(subst_cols(w));
}

std::vector<ReflectionInfo> enumerate_reflections(const ReflGroup& g) {
  std::vector<ReflectionInfo> out;
  for (size_t h = 0; h < g.hyperplanes().size(); ++h)
    for (size_t w : g.hyperplanes()[h].stabilizer)
      if (w != g.identity_index()) out.push_back({w, h, g.det(w)});
  return out;
}

CycNum character(const ReflGroup& g, size_t w, const RepDescriptor& u) {
  return rep_character(g.element(w), u);
}

std::vector<long> local_data(const ReflGroup& g, size_t hyperplane_index, const RepDescriptor& u) {
  const Hyperplane& h = g.hyperplanes().at(hyperplane_index);
  unsigned e = h.e_H;
  std::vector<CycNum> traces, det_vals;
  for (size_t w : h.stabilizer) {
    traces.push_back(character(g, w, u));
    det_vals.push_back(g.det(w));
  }
  CycNum einv = CycNum(long(e)).inv();
  std::vector<long> mu(e);
  for (unsigned j = 0; j < e; ++j) {
    CycNum acc;
    for (size_t i = 0; i < traces.size(); ++i) acc += traces[i] * det_vals[i].pow(-long(j));
    acc *= einv;
    if (!acc.is_integer())
      throw Error(Errc::NonIntegerMultiplicity, "character inner product is not an integer");
    Int z = acc.integer();
    if (z < 0 || !z.fits_slong_p())
      throw Error(Errc::NonIntegerMultiplicity, "multiplicity out of range");
    mu[j] = z.get_si();
  }
  return mu;
}

}  // namespace reflinv
