#ifndef REFLINV_INVARIANTS_HPP
#define REFLINV_INVARIANTS_HPP

#include <vector>

#include "group.hpp"
#include "molien.hpp"
#include "poly.hpp"

namespace reflinv {

// homogeneous element of S (x) V
struct Derivation {
  std::vector<Poly> comp;  // component polynomials, index j for y_{j+1}

  long degree() const;
  bool is_zero() const;
  bool is_homogeneous() const;
  Derivation scaled(const CycNum& s) const;
  Derivation operator+(const Derivation& o) const;
  Derivation operator-(const Derivation& o) const;
  bool operator==(const Derivation& o) const;
};

Derivation euler_derivation(unsigned ell);
Derivation act_on_derivation(const ReflGroup& g, size_t w, const Derivation& th);

struct InvariantData {
  std::vector<Poly> f;              // basic invariants, degrees nondecreasing
  std::vector<Derivation> theta;    // basic derivations, degrees nondecreasing
  std::vector<long> exponents;      // deg f_i - 1
  std::vector<long> coexponents;    // deg theta_k
  Poly J;                           // det Jac(f)
  Poly Q;                           // prod_H l_H (canonical linear forms)
  CycNum j_scalar;                  // J = j_scalar * prod_H l_H^{e_H - 1}
  CycNum q_scalar;                  // det M(theta) = q_scalar * Q
  long N = 0, Nstar = 0;            // deg J, deg Q
  long h = 0;                       // largest invariant degree
  bool is_duality = false;          // e_i + e*_i = h after sorting
};

// basis of the degree-d invariant space (S_d (x) U)^W; each element is a
// coefficient vector over the functorial basis of U
std::vector<std::vector<Poly>> reynolds_project(const ReflGroup& g, unsigned d,
                                                const RepDescriptor& u);

std::vector<Poly> basic_invariants(const ReflGroup& g, long degree_cap = -1);
std::vector<Derivation> basic_derivations(const ReflGroup& g, const std::vector<Poly>& f,
                                          long degree_cap = -1);

struct JQResult {
  Poly J, Q;
  CycNum j_scalar, q_scalar;
};
JQResult jacobian_and_Q(const ReflGroup& g, const std::vector<Poly>& f,
                        const std::vector<Derivation>& theta);

InvariantData build_invariants(const ReflGroup& g, long degree_cap = -1);

}  // namespace reflinv

#endif
