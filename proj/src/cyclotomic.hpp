#ifndef REFLINV_CYCLOTOMIC_HPP
#define REFLINV_CYCLOTOMIC_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace reflinv {

using Rat = mpq_class;
using Int = mpz_class;

enum class Errc {
  DivisionByZero,
  NotPolynomial,
  OrderCapExceeded,
  NonIntegerMultiplicity,
  NonIntegerCoefficient,
  ReynoldsDegreeBound,
  ScalarMismatch,
  MixedFormDegree,
  FormDegreeNotOne,
  TheoremNotApplicable,
  NotDualityGroup,
  Mismatch,
  BadSpec,
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

unsigned euler_phi(unsigned n);
std::vector<unsigned> divisors(unsigned n);

// Coefficients of the n-th cyclotomic polynomial, low degree first, monic.
const std::vector<Int>& cyclotomic_poly(unsigned n);

// An exact element of Q(zeta_n), stored in the power basis of Q[x]/(Phi_n).
class CycNum {
 public:
  CycNum() : order_(1), c_(1, Rat(0)) {}
  explicit CycNum(const Rat& q) : order_(1), c_(1, q) { c_[0].canonicalize(); }
  explicit CycNum(long v) : order_(1), c_(1, Rat(v)) {}

  static CycNum zero() { return CycNum(); }
  static CycNum one() { return CycNum(1); }
  // zeta_n^k
  static CycNum zeta(unsigned n, long k = 1);
  // canonical residue of sum raw[i] x^i modulo Phi_n
  static CycNum normalize(std::vector<Rat> raw, unsigned n);

  unsigned order() const { return order_; }
  const std::vector<Rat>& coords() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rat rational() const;  // requires is_rational()
  bool is_integer() const;
  Int integer() const;

  CycNum to_order(unsigned m) const;  // requires order() | m

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }

  CycNum inv() const;  // throws DivisionByZero on zero
  CycNum conj() const;  // zeta -> zeta^{-1}
  CycNum pow(long k) const;

  bool operator==(const CycNum& o) const;
  bool operator!=(const CycNum& o) const { return !(*this == o); }

  // canonical byte serialization (order-sensitive; coerce first when hashing
  // across a group)
  std::string key() const;
  std::string str() const;

 private:
  unsigned order_;
  std::vector<Rat> c_;  // length euler_phi(order_)

  static void align(CycNum& a, CycNum& b);
};

inline CycNum operator*(const Rat& s, CycNum a) { return CycNum(s) * a; }

}  // namespace reflinv

#endif
