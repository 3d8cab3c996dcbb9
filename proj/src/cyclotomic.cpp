#include "cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace reflinv {

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> ds;
  for (unsigned d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      ds.push_back(d);
      if (d != n / d) ds.push_back(n / d);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

namespace {

// dense integer polynomials, low degree first
using ZPoly = std::vector<Int>;

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// exact division, both operands and quotient in Z[x]; divisor monic not required
ZPoly zdiv_exact(ZPoly num, const ZPoly& den) {
  ZPoly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Int(0));
  while (num.size() >= den.size() && !num.empty()) {
    Int c = num.back() / den.back();
    size_t shift = num.size() - den.size();
    q[shift] = c;
    for (size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    ztrim(num);
  }
  if (!num.empty()) throw Error(Errc::Internal, "inexact division in cyclotomic recursion");
  return q;
}

std::map<unsigned, ZPoly> g_cyclo;
std::mutex g_cyclo_mu;

const ZPoly& cyclo_locked(unsigned n) {
  auto it = g_cyclo.find(n);
  if (it != g_cyclo.end()) return it->second;
  ZPoly xn1(n + 1, Int(0));
  xn1[0] = -1;
  xn1[n] = 1;
  ZPoly acc = xn1;
  for (unsigned d : divisors(n)) {
    if (d == n) continue;
    acc = zdiv_exact(acc, cyclo_locked(d));
  }
  return g_cyclo.emplace(n, std::move(acc)).first->second;
}

// remainder of a rational polynomial modulo the (monic) integer polynomial m
std::vector<Rat> qrem(std::vector<Rat> num, const ZPoly& m) {
  while (!num.empty() && num.back() == 0) num.pop_back();
  while (num.size() >= m.size()) {
    Rat c = num.back();  // m is monic
    size_t shift = num.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) {
      num[shift + i] -= c * Rat(m[i]);
      num[shift + i].canonicalize();
    }
    while (!num.empty() && num.back() == 0) num.pop_back();
  }
  return num;
}

struct QPolyDense {
  std::vector<Rat> c;
  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool zero() const { return c.empty(); }
  size_t deg() const { return c.size() - 1; }
};

QPolyDense qmul(const QPolyDense& a, const QPolyDense& b) {
  if (a.zero() || b.zero()) return {};
  QPolyDense r;
  r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) {
      r.c[i + j] += a.c[i] * b.c[j];
      r.c[i + j].canonicalize();
    }
  r.trim();
  return r;
}

QPolyDense qsub(QPolyDense a, const QPolyDense& b) {
  if (a.c.size() < b.c.size()) a.c.resize(b.c.size(), Rat(0));
  for (size_t i = 0; i < b.c.size(); ++i) {
    a.c[i] -= b.c[i];
    a.c[i].canonicalize();
  }
  a.trim();
  return a;
}

// quotient of a by b over Q, b nonzero
std::pair<QPolyDense, QPolyDense> qdivrem(QPolyDense a, const QPolyDense& b) {
  QPolyDense q;
  if (a.c.size() >= b.c.size()) q.c.assign(a.c.size() - b.c.size() + 1, Rat(0));
  while (!a.zero() && a.c.size() >= b.c.size()) {
    Rat c = a.c.back() / b.c.back();
    c.canonicalize();
    size_t shift = a.c.size() - b.c.size();
    q.c[shift] = c;
    for (size_t i = 0; i < b.c.size(); ++i) {
      a.c[shift + i] -= c * b.c[i];
      a.c[shift + i].canonicalize();
    }
    a.trim();
  }
  q.trim();
  return {q, a};
}

}  // namespace

const std::vector<Int>& cyclotomic_poly(unsigned n) {
  std::lock_guard<std::mutex> lk(g_cyclo_mu);
  return cyclo_locked(n);
}

CycNum CycNum::zeta(unsigned n, long k) {
  if (n == 0) throw Error(Errc::BadSpec, "zeta order must be positive");
  long kk = ((k % long(n)) + long(n)) % long(n);
  std::vector<Rat> raw(size_t(kk) + 1, Rat(0));
  raw[size_t(kk)] = 1;
  return normalize(std::move(raw), n);
}

CycNum CycNum::normalize(std::vector<Rat> raw, unsigned n) {
  if (n == 0) throw Error(Errc::BadSpec, "cyclotomic order must be positive");
  for (auto& q : raw) q.canonicalize();
  // fold exponents >= n first (zeta_n^n = 1), then reduce modulo Phi_n
  if (raw.size() > n) {
    std::vector<Rat> folded(n, Rat(0));
    for (size_t i = 0; i < raw.size(); ++i) {
      folded[i % n] += raw[i];
      folded[i % n].canonicalize();
    }
    raw = std::move(folded);
  }
  auto rem = qrem(std::move(raw), cyclotomic_poly(n));
  CycNum r;
  r.order_ = n;
  r.c_.assign(euler_phi(n), Rat(0));
  for (size_t i = 0; i < rem.size(); ++i) r.c_[i] = rem[i];
  return r;
}

bool CycNum::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat CycNum::rational() const {
  if (!is_rational()) throw Error(Errc::Internal, "CycNum is not rational: " + str());
  return c_[0];
}

bool CycNum::is_integer() const {
  return is_rational() && c_[0].get_den() == 1;
}

Int CycNum::integer() const {
  if (!is_integer()) throw Error(Errc::Internal, "CycNum is not an integer: " + str());
  return c_[0].get_num();
}

CycNum CycNum::to_order(unsigned m) const {
  if (m == order_) return *this;
  if (m % order_ != 0) throw Error(Errc::Internal, "order coercion requires divisibility");
  unsigned stride = m / order_;
  std::vector<Rat> raw(size_t(order_ - 1) * stride + 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) raw[i * stride] = c_[i];
  return normalize(std::move(raw), m);
}

void CycNum::align(CycNum& a, CycNum& b) {
  if (a.order_ == b.order_) return;
  unsigned m = unsigned(std::lcm(a.order_, b.order_));
  a = a.to_order(m);
  b = b.to_order(m);
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

CycNum& CycNum::operator+=(const CycNum& o) {
  CycNum b = o;
  align(*this, b);
  for (size_t i = 0; i < c_.size(); ++i) {
    c_[i] += b.c_[i];
    c_[i].canonicalize();
  }
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) { return *this += -o; }

CycNum& CycNum::operator*=(const CycNum& o) {
  CycNum b = o;
  align(*this, b);
  if (is_zero() || b.is_zero()) {
    CycNum z;
    z.order_ = order_;
    z.c_.assign(c_.size(), Rat(0));
    *this = z;
    return *this;
  }
  std::vector<Rat> raw(2 * c_.size(), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j] == 0) continue;
      raw[i + j] += c_[i] * b.c_[j];
      raw[i + j].canonicalize();
    }
  }
  *this = normalize(std::move(raw), order_);
  return *this;
}

CycNum CycNum::inv() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero in Q(zeta)");
  // extended Euclid: u * this + v * Phi_n = gcd = const
  QPolyDense a;
  a.c.assign(c_.begin(), c_.end());
  a.trim();
  QPolyDense m;
  for (const Int& z : cyclotomic_poly(order_)) m.c.emplace_back(z);
  QPolyDense r0 = m, r1 = a;
  QPolyDense s0, s1;
  s0.c = {};           // coefficient of `a` in r0
  s1.c = {Rat(1)};     // coefficient of `a` in r1
  while (!r1.zero()) {
    auto [q, r2] = qdivrem(r0, r1);
    QPolyDense s2 = qsub(s0, qmul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.zero() || r0.deg() != 0)
    throw Error(Errc::Internal, "element not invertible modulo Phi_n");
  Rat lead = r0.c[0];
  std::vector<Rat> raw(s0.c.size());
  for (size_t i = 0; i < s0.c.size(); ++i) {
    raw[i] = s0.c[i] / lead;
    raw[i].canonicalize();
  }
  return normalize(std::move(raw), order_);
}

CycNum CycNum::conj() const {
  unsigned n = order_;
  std::vector<Rat> raw(n, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    raw[(n - i) % n] += c_[i];
  }
  return normalize(std::move(raw), n);
}

CycNum CycNum::pow(long k) const {
  if (k < 0) return inv().pow(-k);
  CycNum base = *this;
  CycNum acc = CycNum::one();
  unsigned long e = static_cast<unsigned long>(k);
  while (e) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

bool CycNum::operator==(const CycNum& o) const {
  CycNum a = *this, b = o;
  align(a, b);
  return a.c_ == b.c_;
}

std::string CycNum::key() const {
  std::ostringstream os;
  os << order_ << '|';
  for (const auto& q : c_) os << q.get_num().get_str(62) << '/' << q.get_den().get_str(62) << ';';
  return os.str();
}

std::string CycNum::str() const {
  if (is_rational()) return c_[0].get_str();
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    Rat q = c_[i];
    if (first) {
      if (q < 0) {
        os << '-';
        q = -q;
      }
    } else {
      os << (q < 0 ? " - " : " + ");
      if (q < 0) q = -q;
    }
    first = false;
    if (i == 0) {
      os << q.get_str();
    } else {
      if (q != 1) os << q.get_str() << '*';
      os << 'z' << order_;
      if (i > 1) os << '^' << i;
    }
  }
  if (first) os << '0';
  return os.str();
}

}  // namespace reflinv
