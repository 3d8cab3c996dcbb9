#ifndef REFLINV_POLY_HPP
#define REFLINV_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclotomic.hpp"

namespace reflinv {

using Expo = std::vector<unsigned>;

inline unsigned expo_total(const Expo& e) {
  unsigned s = 0;
  for (unsigned x : e) s += x;
  return s;
}

// graded lexicographic with x_1 > x_2 > ... > x_l, descending (leading term first)
struct GrlexGreater {
  bool operator()(const Expo& a, const Expo& b) const {
    unsigned da = expo_total(a), db = expo_total(b);
    if (da != db) return da > db;
    return a > b;  // lexicographic on exponent vectors
  }
};

// Sparse multivariate polynomial over Q(zeta) in variables x_1..x_l.
class Poly {
 public:
  explicit Poly(unsigned nvars = 0) : nvars_(nvars) {}

  static Poly constant(unsigned nvars, CycNum c);
  static Poly constant(unsigned nvars, long c) { return constant(nvars, CycNum(c)); }
  static Poly variable(unsigned nvars, unsigned i);  // x_{i+1}, 0-based index
  static Poly monomial(unsigned nvars, Expo e, CycNum c);

  unsigned nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  long degree() const;  // total degree; -1 for the zero polynomial
  bool is_homogeneous() const;
  bool is_constant() const;
  CycNum constant_value() const;  // 0 if zero, else requires is_constant

  const std::map<Expo, CycNum, GrlexGreater>& terms() const { return terms_; }
  CycNum coeff(const Expo& e) const;
  const Expo& lead_expo() const;
  const CycNum& lead_coeff() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const CycNum& s) const;

  bool operator==(const Poly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly partial(unsigned i) const;  // d/dx_{i+1}
  CycNum eval(const std::vector<CycNum>& point) const;
  // substitute x_j -> sum_i cols[j][i] * x_i (a linear change of variables)
  Poly subst_linear(const std::vector<std::vector<CycNum>>& cols) const;
  // exact division; nullopt when the divisor does not divide exactly
  std::optional<Poly> exact_div(const Poly& d) const;

  Poly monic() const;  // scaled so the graded-lex leading coefficient is 1

  std::string str() const;
  std::string key() const;

  void add_term(const Expo& e, const CycNum& c);

 private:
  unsigned nvars_;
  std::map<Expo, CycNum, GrlexGreater> terms_;  // no zero coefficients stored
};

Poly poly_pow(const Poly& p, unsigned k);

}  // namespace reflinv

#endif
