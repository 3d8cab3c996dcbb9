#include "series.hpp"

#include <algorithm>
#include <sstream>

namespace reflinv {

Int GradedSeries::coeff(int qdeg, int tdeg, int udeg) const {
  if (qdeg < 0 || qdeg > trunc_) return 0;
  auto it = c_[size_t(qdeg)].find({tdeg, udeg});
  return it == c_[size_t(qdeg)].end() ? Int(0) : it->second;
}

void GradedSeries::add(int qdeg, int tdeg, int udeg, const Int& v) {
  if (qdeg < 0 || qdeg > trunc_ || v == 0) return;
  auto& slot = c_[size_t(qdeg)][{tdeg, udeg}];
  slot += v;
  if (slot == 0) c_[size_t(qdeg)].erase({tdeg, udeg});
}

GradedSeries GradedSeries::one(int trunc) {
  GradedSeries s(trunc);
  s.add(0, 0, 0, 1);
  return s;
}

GradedSeries GradedSeries::qt_monomial(int trunc, int qdeg, int tdeg, int udeg, const Int& v) {
  GradedSeries s(trunc);
  s.add(qdeg, tdeg, udeg, v);
  return s;
}

GradedSeries GradedSeries::inv_one_minus_qpow(int trunc, int d) {
  GradedSeries s(trunc);
  for (int k = 0; k <= trunc; k += d) s.add(k, 0, 0, 1);
  return s;
}

GradedSeries GradedSeries::operator+(const GradedSeries& o) const {
  GradedSeries r(std::min(trunc_, o.trunc_));
  for (int d = 0; d <= r.trunc_; ++d) {
    for (const auto& [tu, v] : c_[size_t(d)]) r.add(d, tu.first, tu.second, v);
    for (const auto& [tu, v] : o.c_[size_t(d)]) r.add(d, tu.first, tu.second, v);
  }
  return r;
}

GradedSeries GradedSeries::operator-(const GradedSeries& o) const {
  GradedSeries r(std::min(trunc_, o.trunc_));
  for (int d = 0; d <= r.trunc_; ++d) {
    for (const auto& [tu, v] : c_[size_t(d)]) r.add(d, tu.first, tu.second, v);
    for (const auto& [tu, v] : o.c_[size_t(d)]) r.add(d, tu.first, tu.second, -v);
  }
  return r;
}

GradedSeries GradedSeries::operator*(const GradedSeries& o) const {
  GradedSeries r(std::min(trunc_, o.trunc_));
  for (int a = 0; a <= trunc_ && a <= r.trunc_; ++a) {
    if (c_[size_t(a)].empty()) continue;
    for (int b = 0; a + b <= r.trunc_ && b <= o.trunc_; ++b) {
      if (o.c_[size_t(b)].empty()) continue;
      for (const auto& [tu1, v1] : c_[size_t(a)])
        for (const auto& [tu2, v2] : o.c_[size_t(b)])
          r.add(a + b, tu1.first + tu2.first, tu1.second + tu2.second, v1 * v2);
    }
  }
  return r;
}

bool GradedSeries::operator==(const GradedSeries& o) const {
  return !first_mismatch(o).has_value();
}

std::optional<std::tuple<int, int, int>> GradedSeries::first_mismatch(const GradedSeries& o) const {
  int d = std::min(trunc_, o.trunc_);
  for (int q = 0; q <= d; ++q) {
    std::map<TU, Int> diff = c_[size_t(q)];
    for (const auto& [tu, v] : o.c_[size_t(q)]) {
      diff[tu] -= v;
      if (diff[tu] == 0) diff.erase(tu);
    }
    if (!diff.empty()) {
      auto tu = diff.begin()->first;
      return std::make_tuple(q, tu.first, tu.second);
    }
  }
  return std::nullopt;
}

std::string GradedSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (int q = 0; q <= trunc_; ++q) {
    for (const auto& [tu, v] : c_[size_t(q)]) {
      if (!first) os << " + ";
      first = false;
      os << v.get_str();
      if (q) os << "*q^" << q;
      if (tu.first) os << "*t^" << tu.first;
      if (tu.second) os << "*u^" << tu.second;
    }
  }
  if (first) os << "0";
  return os.str();
}

void CycSeries::add(int qdeg, int tdeg, int udeg, const CycNum& v) {
  if (qdeg < 0 || qdeg > trunc_ || v.is_zero()) return;
  auto& slot = c_[size_t(qdeg)][{tdeg, udeg}];
  slot += v;
  if (slot.is_zero()) c_[size_t(qdeg)].erase({tdeg, udeg});
}

void CycSeries::add_series(const CycSeries& o) {
  int d = std::min(trunc_, o.trunc_);
  for (int q = 0; q <= d; ++q)
    for (const auto& [tu, v] : o.c_[size_t(q)]) add(q, tu.first, tu.second, v);
}

void CycSeries::mul_tu(const TUPolyC& f) {
  for (int q = 0; q <= trunc_; ++q) {
    TUPolyC next;
    for (const auto& [tu, v] : c_[size_t(q)])
      for (const auto& [ftu, fv] : f) {
        CycNum prod = v * fv;
        if (prod.is_zero()) continue;
        auto key = TU{tu.first + ftu.first, tu.second + ftu.second};
        auto& slot = next[key];
        slot += prod;
        if (slot.is_zero()) next.erase(key);
      }
    c_[size_t(q)] = std::move(next);
  }
}

void CycSeries::scale(const CycNum& s) {
  for (auto& layer : c_) {
    TUPolyC next;
    for (const auto& [tu, v] : layer) {
      CycNum prod = v * s;
      if (!prod.is_zero()) next.emplace(tu, std::move(prod));
    }
    layer = std::move(next);
  }
}

CycSeries CycSeries::inverse_of_qpoly(const std::vector<CycNum>& p, int trunc) {
  if (p.empty() || !(p[0] == CycNum::one()))
    throw Error(Errc::Internal, "series inversion requires unit constant term");
  std::vector<CycNum> b(size_t(trunc) + 1);
  b[0] = CycNum::one();
  for (int n = 1; n <= trunc; ++n) {
    CycNum acc;
    for (size_t k = 1; k < p.size() && k <= size_t(n); ++k) {
      if (p[k].is_zero()) continue;
      acc += p[k] * b[size_t(n) - k];
    }
    b[size_t(n)] = -acc;
  }
  CycSeries s(trunc);
  for (int n = 0; n <= trunc; ++n) s.add(n, 0, 0, b[size_t(n)]);
  return s;
}

GradedSeries CycSeries::to_graded() const {
  GradedSeries g(trunc_);
  for (int q = 0; q <= trunc_; ++q)
    for (const auto& [tu, v] : c_[size_t(q)]) {
      if (!v.is_integer())
        throw Error(Errc::NonIntegerCoefficient,
                    "series coefficient at q^" + std::to_string(q) + " is not an integer: " + v.str());
      g.add(q, tu.first, tu.second, v.integer());
    }
  return g;
}

QPolyZ series_quotient_to_polynomial(const GradedSeries& numer, const std::vector<long>& denom_exponents) {
  GradedSeries prod = numer;
  long maxd = 0;
  for (long d : denom_exponents) {
    maxd = std::max(maxd, d);
    GradedSeries factor(numer.trunc());
    factor.add(0, 0, 0, 1);
    factor.add(int(d), 0, 0, -1);
    prod = prod * factor;
  }
  int guard = int(numer.trunc() - maxd);
  QPolyZ out;
  for (int q = 0; q <= prod.trunc(); ++q) {
    if (prod.at(q).empty()) continue;
    if (q >= guard)
      throw Error(Errc::NotPolynomial,
                  "nonzero coefficient at q^" + std::to_string(q) +
                      " inside the guard band; module not free or truncation too small");
    out[q] = prod.at(q);
  }
  return out;
}

long qpoly_weighted_degree_sum(const QPolyZ& p) {
  Int acc = 0;
  for (const auto& [d, coef] : p)
    for (const auto& [tu, v] : coef) {
      if (tu.first != 0 || tu.second != 0)
        throw Error(Errc::Internal, "degree sum expects a pure q-polynomial");
      acc += Int(d) * v;
    }
  if (!acc.fits_slong_p()) throw Error(Errc::Internal, "degree sum overflow");
  return acc.get_si();
}

long qpoly_eval_at_one(const QPolyZ& p) {
  Int acc = 0;
  for (const auto& [d, coef] : p)
    for (const auto& [tu, v] : coef) acc += v;
  if (!acc.fits_slong_p()) throw Error(Errc::Internal, "evaluation overflow");
  return acc.get_si();
}

std::string qpoly_str(const QPolyZ& p) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [d, coef] : p)
    for (const auto& [tu, v] : coef) {
      if (!first) os << " + ";
      first = false;
      os << v.get_str();
      if (d) os << "*q^" << d;
      if (tu.first) os << "*t^" << tu.first;
      if (tu.second) os << "*u^" << tu.second;
    }
  if (first) os << "0";
  return os.str();
}

}  // namespace reflinv
