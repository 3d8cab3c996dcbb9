#ifndef REFLINV_DIFFDERIV_HPP
#define REFLINV_DIFFDERIV_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "detff.hpp"
#include "group.hpp"
#include "invariants.hpp"
#include "poly.hpp"

namespace reflinv {

using IndexSet = std::vector<unsigned>;  // strictly increasing, 0-based

// sorted union of two disjoint index sets with the sign of the sorting
// permutation; nullopt when the sets intersect
std::optional<std::pair<IndexSet, int>> wedge_indices(const IndexSet& a, const IndexSet& b);

// element of S (x) wedge^m V*
class PolyForm {
 public:
  PolyForm(unsigned ell = 0, unsigned m = 0) : ell_(ell), m_(m) {}
  static PolyForm scalar(unsigned ell, const Poly& f);  // m = 0

  unsigned ell() const { return ell_; }
  unsigned form_degree() const { return m_; }
  bool is_zero() const { return c_.empty(); }
  const std::map<IndexSet, Poly>& coeffs() const { return c_; }
  void add_term(const IndexSet& i, const Poly& p);
  Poly coeff(const IndexSet& i) const;

 private:
  unsigned ell_, m_;
  std::map<IndexSet, Poly> c_;
};

// df = sum_i df/dx_i (x) x_i
PolyForm d_poly(const Poly& f);
// df_{i_1} ^ ... ^ df_{i_m}, indices ascending
PolyForm wedge_forms(const std::vector<PolyForm>& forms, unsigned ell);
PolyForm wedge(const PolyForm& a, const PolyForm& b);
// E on a 1-form: dx_i -> x_i
Poly euler_E_form(const PolyForm& omega);

// element of S (x) wedge^m V* (x) V
class DiffDeriv {
 public:
  DiffDeriv(unsigned ell = 0, unsigned m = 0) : ell_(ell), m_(m) {}

  static DiffDeriv from_derivation(const Derivation& th);

  unsigned ell() const { return ell_; }
  unsigned form_degree() const { return m_; }
  bool is_zero() const { return c_.empty(); }
  const std::map<std::pair<IndexSet, unsigned>, Poly>& coeffs() const { return c_; }
  void add_term(const IndexSet& i, unsigned j, const Poly& p);
  Poly coeff(const IndexSet& i, unsigned j) const;

  // common S-degree of all stored coefficients; nullopt when mixed or zero
  std::optional<long> poly_degree() const;
  bool operator==(const DiffDeriv& o) const;
  DiffDeriv operator+(const DiffDeriv& o) const;
  DiffDeriv operator-(const DiffDeriv& o) const;
  DiffDeriv scaled(const CycNum& s) const;
  DiffDeriv scaled(const Poly& p) const;

 private:
  unsigned ell_, m_;
  std::map<std::pair<IndexSet, unsigned>, Poly> c_;
};

DiffDeriv wedge_multiply(const PolyForm& omega, const DiffDeriv& psi);
DiffDeriv exterior_d(const DiffDeriv& psi);
PolyForm exterior_d_form(const PolyForm& omega);
// (E (x) 1) on a form-degree-1 differential derivation; throws FormDegreeNotOne
Derivation euler_E(const DiffDeriv& psi);
DiffDeriv act(const ReflGroup& g, size_t w, const DiffDeriv& psi);

struct CoefMatrix {
  std::vector<std::pair<IndexSet, unsigned>> row_labels;  // (I, j), I-major then j
  std::vector<std::string> col_labels;
  PolyMatrix entries;
};

// rows ordered lexicographically on I then j; throws MixedFormDegree
CoefMatrix coef_matrix(const std::vector<DiffDeriv>& basis,
                       const std::vector<std::string>& labels);

}  // namespace reflinv

#endif
