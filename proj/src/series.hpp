#ifndef REFLINV_SERIES_HPP
#define REFLINV_SERIES_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"

namespace reflinv {

// exponent of t and u in a series coefficient
using TU = std::pair<int, int>;
using TUPolyZ = std::map<TU, Int>;
using TUPolyC = std::map<TU, CycNum>;

// Truncated power series in q whose coefficients are integer polynomials in t
// and u.  Truncation degree propagates as the min over operands.
class GradedSeries {
 public:
  explicit GradedSeries(int trunc = 0) : trunc_(trunc), c_(size_t(trunc) + 1) {}

  int trunc() const { return trunc_; }
  const TUPolyZ& at(int qdeg) const { return c_[size_t(qdeg)]; }
  Int coeff(int qdeg, int tdeg = 0, int udeg = 0) const;
  void add(int qdeg, int tdeg, int udeg, const Int& v);

  static GradedSeries one(int trunc);
  static GradedSeries qt_monomial(int trunc, int qdeg, int tdeg, int udeg, const Int& v);
  // 1/(1-q^d)
  static GradedSeries inv_one_minus_qpow(int trunc, int d);

  GradedSeries operator+(const GradedSeries& o) const;
  GradedSeries operator-(const GradedSeries& o) const;
  GradedSeries operator*(const GradedSeries& o) const;

  bool operator==(const GradedSeries& o) const;
  // first (q,t,u) where the two differ, up to min truncation
  std::optional<std::tuple<int, int, int>> first_mismatch(const GradedSeries& o) const;

  std::string str() const;

 private:
  int trunc_;
  std::vector<TUPolyZ> c_;
};

// CycNum-coefficient accumulator used while summing Molien terms; converted to
// a GradedSeries once the average is known to be integral.
class CycSeries {
 public:
  explicit CycSeries(int trunc = 0) : trunc_(trunc), c_(size_t(trunc) + 1) {}

  int trunc() const { return trunc_; }
  void add(int qdeg, int tdeg, int udeg, const CycNum& v);
  void add_series(const CycSeries& o);
  // multiply in place by a (t,u) polynomial with CycNum coefficients
  void mul_tu(const TUPolyC& f);
  void scale(const CycNum& s);

  // pure q-series from coefficients 1/p(q), p(0) = 1
  static CycSeries inverse_of_qpoly(const std::vector<CycNum>& p, int trunc);

  // every coefficient must be a rational integer
  GradedSeries to_graded() const;

 private:
  int trunc_;
  std::vector<TUPolyC> c_;
};

// Polynomial in q with integer (t,u)-polynomial coefficients.
using QPolyZ = std::map<int, TUPolyZ>;

// Multiply `numer` by prod_i (1 - q^{d_i}) and require the result to be a
// polynomial supported strictly below trunc - max(d_i); throws NotPolynomial
// when nonzero coefficients survive into the guard band.
QPolyZ series_quotient_to_polynomial(const GradedSeries& numer, const std::vector<long>& denom_exponents);

// sum of deg * coeff over a pure-q polynomial (coefficients must be t,u free)
long qpoly_weighted_degree_sum(const QPolyZ& p);
long qpoly_eval_at_one(const QPolyZ& p);
std::string qpoly_str(const QPolyZ& p);

}  // namespace reflinv

#endif
