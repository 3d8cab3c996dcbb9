#include "diffderiv.hpp"

#include <algorithm>

namespace reflinv {

std::optional<std::pair<IndexSet, int>> wedge_indices(const IndexSet& a, const IndexSet& b) {
  IndexSet merged;
  merged.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  int sign = 1;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return std::nullopt;
    if (a[i] < b[j]) {
      merged.push_back(a[i++]);
    } else {
      // b[j] jumps over the remaining entries of a
      if ((a.size() - i) % 2) sign = -sign;
      merged.push_back(b[j++]);
    }
  }
  while (i < a.size()) merged.push_back(a[i++]);
  while (j < b.size()) merged.push_back(b[j++]);
  return std::make_pair(std::move(merged), sign);
}

PolyForm PolyForm::scalar(unsigned ell, const Poly& f) {
  PolyForm w(ell, 0);
  w.add_term({}, f);
  return w;
}

void PolyForm::add_term(const IndexSet& i, const Poly& p) {
  if (p.is_zero()) return;
  auto [it, inserted] = c_.emplace(i, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) c_.erase(it);
  }
}

Poly PolyForm::coeff(const IndexSet& i) const {
  auto it = c_.find(i);
  return it == c_.end() ? Poly(ell_) : it->second;
}

PolyForm d_poly(const Poly& f) {
  unsigned ell = f.nvars();
  PolyForm w(ell, 1);
  for (unsigned i = 0; i < ell; ++i) w.add_term({i}, f.partial(i));
  return w;
}

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  PolyForm r(a.ell(), a.form_degree() + b.form_degree());
  for (const auto& [ia, fa] : a.coeffs())
    for (const auto& [ib, fb] : b.coeffs()) {
      auto merged = wedge_indices(ia, ib);
      if (!merged) continue;
      Poly prod = fa * fb;
      if (merged->second < 0) prod = -prod;
      r.add_term(merged->first, prod);
    }
  return r;
}

PolyForm wedge_forms(const std::vector<PolyForm>& forms, unsigned ell) {
  PolyForm acc = PolyForm::scalar(ell, Poly::constant(ell, 1));
  for (const auto& f : forms) acc = wedge(acc, f);
  return acc;
}

Poly euler_E_form(const PolyForm& omega) {
  if (omega.form_degree() != 1)
    throw Error(Errc::FormDegreeNotOne, "E is defined on forms of degree one");
  unsigned ell = omega.ell();
  Poly out(ell);
  for (const auto& [i, f] : omega.coeffs()) out += f * Poly::variable(ell, i[0]);
  return out;
}

DiffDeriv DiffDeriv::from_derivation(const Derivation& th) {
  unsigned ell = unsigned(th.comp.size());
  DiffDeriv d(ell, 0);
  for (unsigned j = 0; j < ell; ++j) d.add_term({}, j, th.comp[j]);
  return d;
}

void DiffDeriv::add_term(const IndexSet& i, unsigned j, const Poly& p) {
  if (p.is_zero()) return;
  auto key = std::make_pair(i, j);
  auto [it, inserted] = c_.emplace(key, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) c_.erase(it);
  }
}

Poly DiffDeriv::coeff(const IndexSet& i, unsigned j) const {
  auto it = c_.find({i, j});
  return it == c_.end() ? Poly(ell_) : it->second;
}

std::optional<long> DiffDeriv::poly_degree() const {
  std::optional<long> d;
  for (const auto& [key, p] : c_) {
    if (!p.is_homogeneous()) return std::nullopt;
    if (d && *d != p.degree()) return std::nullopt;
    d = p.degree();
  }
  return d;
}

bool DiffDeriv::operator==(const DiffDeriv& o) const {
  return ell_ == o.ell_ && m_ == o.m_ && c_ == o.c_;
}

DiffDeriv DiffDeriv::operator+(const DiffDeriv& o) const {
  DiffDeriv r = *this;
  for (const auto& [key, p] : o.c_) r.add_term(key.first, key.second, p);
  return r;
}

DiffDeriv DiffDeriv::operator-(const DiffDeriv& o) const {
  DiffDeriv r = *this;
  for (const auto& [key, p] : o.c_) r.add_term(key.first, key.second, -p);
  return r;
}

DiffDeriv DiffDeriv::scaled(const CycNum& s) const {
  DiffDeriv r(ell_, m_);
  for (const auto& [key, p] : c_) r.add_term(key.first, key.second, p.scaled(s));
  return r;
}

DiffDeriv DiffDeriv::scaled(const Poly& f) const {
  DiffDeriv r(ell_, m_);
  for (const auto& [key, p] : c_) r.add_term(key.first, key.second, p * f);
  return r;
}

DiffDeriv wedge_multiply(const PolyForm& omega, const DiffDeriv& psi) {
  if (omega.form_degree() + psi.form_degree() > omega.ell())
    throw Error(Errc::BadSpec, "wedge product exceeds the rank");
  DiffDeriv r(psi.ell(), omega.form_degree() + psi.form_degree());
  for (const auto& [ia, fa] : omega.coeffs())
    for (const auto& [key, fb] : psi.coeffs()) {
      auto merged = wedge_indices(ia, key.first);
      if (!merged) continue;
      Poly prod = fa * fb;
      if (merged->second < 0) prod = -prod;
      r.add_term(merged->first, key.second, prod);
    }
  return r;
}

DiffDeriv exterior_d(const DiffDeriv& psi) {
  if (psi.form_degree() >= psi.ell())
    throw Error(Errc::BadSpec, "exterior derivative of a top-degree form");
  unsigned ell = psi.ell();
  DiffDeriv r(ell, psi.form_degree() + 1);
  for (const auto& [key, f] : psi.coeffs()) {
    for (unsigned i = 0; i < ell; ++i) {
      Poly g = f.partial(i);
      if (g.is_zero()) continue;
      auto merged = wedge_indices({i}, key.first);
      if (!merged) continue;
      if (merged->second < 0) g = -g;
      r.add_term(merged->first, key.second, g);
    }
  }
  return r;
}

PolyForm exterior_d_form(const PolyForm& omega) {
  unsigned ell = omega.ell();
  PolyForm r(ell, omega.form_degree() + 1);
  for (const auto& [idx, f] : omega.coeffs()) {
    for (unsigned i = 0; i < ell; ++i) {
      Poly g = f.partial(i);
      if (g.is_zero()) continue;
      auto merged = wedge_indices({i}, idx);
      if (!merged) continue;
      if (merged->second < 0) g = -g;
      r.add_term(merged->first, g);
    }
  }
  return r;
}

Derivation euler_E(const DiffDeriv& psi) {
  if (psi.form_degree() != 1)
    throw Error(Errc::FormDegreeNotOne, "E is defined on form degree one");
  unsigned ell = psi.ell();
  Derivation th;
  th.comp.assign(ell, Poly(ell));
  for (const auto& [key, f] : psi.coeffs())
    th.comp[key.second] += f * Poly::variable(ell, key.first[0]);
  return th;
}

DiffDeriv act(const ReflGroup& g, size_t w, const DiffDeriv& psi) {
  unsigned ell = g.rank();
  const CycMat& a = g.element(w);
  auto ainv = g.element(g.inverse_index(w));
  CycMat b = ainv.transpose();  // action of w on V*
  auto cols = g.subst_cols(w);
  unsigned m = psi.form_degree();
  auto targets = subsets_of_size(ell, m);
  DiffDeriv r(ell, m);
  for (const auto& [key, f] : psi.coeffs()) {
    Poly acted = f.subst_linear(cols);
    // w . dx_I = sum_{I'} det(B[I', I]) dx_{I'}
    for (const auto& tgt : targets) {
      CycMat minor(m, m);
      for (unsigned x = 0; x < m; ++x)
        for (unsigned y = 0; y < m; ++y) minor.at(x, y) = b.at(tgt[x], key.first[y]);
      CycNum dm = m == 0 ? CycNum::one() : minor.det();
      if (dm.is_zero()) continue;
      for (unsigned i2 = 0; i2 < ell; ++i2) {
        const CycNum& av = a.at(i2, key.second);
        if (av.is_zero()) continue;
        r.add_term(tgt, i2, acted.scaled(dm * av));
      }
    }
  }
  return r;
}

CoefMatrix coef_matrix(const std::vector<DiffDeriv>& basis, const std::vector<std::string>& labels) {
  if (basis.empty()) throw Error(Errc::BadSpec, "empty candidate basis");
  unsigned ell = basis[0].ell();
  unsigned m = basis[0].form_degree();
  for (const auto& b : basis)
    if (b.form_degree() != m || b.ell() != ell)
      throw Error(Errc::MixedFormDegree, "candidate elements have mixed form degree");
  CoefMatrix out;
  for (const auto& i : subsets_of_size(ell, m))
    for (unsigned j = 0; j < ell; ++j) out.row_labels.emplace_back(i, j);
  out.col_labels = labels;
  out.entries.assign(out.row_labels.size(), std::vector<Poly>(basis.size(), Poly(ell)));
  for (size_t col = 0; col < basis.size(); ++col)
    for (size_t row = 0; row < out.row_labels.size(); ++row)
      out.entries[row][col] = basis[col].coeff(out.row_labels[row].first, out.row_labels[row].second);
  return out;
}

}  // namespace reflinv
