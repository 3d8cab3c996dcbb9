#include "poly.hpp"

#include <sstream>

namespace reflinv {

Poly Poly::constant(unsigned nvars, CycNum c) {
  Poly p(nvars);
  if (!c.is_zero()) p.terms_.emplace(Expo(nvars, 0), std::move(c));
  return p;
}

Poly Poly::variable(unsigned nvars, unsigned i) {
  Expo e(nvars, 0);
  e.at(i) = 1;
  return monomial(nvars, e, CycNum::one());
}

Poly Poly::monomial(unsigned nvars, Expo e, CycNum c) {
  Poly p(nvars);
  if (!c.is_zero()) p.terms_.emplace(std::move(e), std::move(c));
  return p;
}

long Poly::degree() const {
  if (terms_.empty()) return -1;
  return long(expo_total(terms_.begin()->first));
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = expo_total(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (expo_total(e) != d) return false;
  return true;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && expo_total(terms_.begin()->first) == 0);
}

CycNum Poly::constant_value() const {
  if (terms_.empty()) return CycNum::zero();
  if (!is_constant()) throw Error(Errc::Internal, "polynomial is not constant");
  return terms_.begin()->second;
}

CycNum Poly::coeff(const Expo& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? CycNum::zero() : it->second;
}

const Expo& Poly::lead_expo() const {
  if (terms_.empty()) throw Error(Errc::Internal, "zero polynomial has no leading term");
  return terms_.begin()->first;
}

const CycNum& Poly::lead_coeff() const {
  if (terms_.empty()) throw Error(Errc::Internal, "zero polynomial has no leading term");
  return terms_.begin()->second;
}

void Poly::add_term(const Expo& e, const CycNum& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r(a.nvars_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  Expo e(a.nvars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (unsigned i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

Poly Poly::scaled(const CycNum& s) const {
  Poly r(nvars_);
  if (s.is_zero()) return r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
  return r;
}

Poly Poly::partial(unsigned i) const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Expo de = e;
    de[i] -= 1;
    r.add_term(de, c * CycNum(long(e[i])));
  }
  return r;
}

CycNum Poly::eval(const std::vector<CycNum>& point) const {
  if (point.size() != nvars_) throw Error(Errc::Internal, "evaluation point has wrong arity");
  CycNum acc;
  for (const auto& [e, c] : terms_) {
    CycNum t = c;
    for (unsigned i = 0; i < nvars_; ++i)
      if (e[i]) t *= point[i].pow(long(e[i]));
    acc += t;
  }
  return acc;
}

Poly Poly::subst_linear(const std::vector<std::vector<CycNum>>& cols) const {
  if (cols.size() != nvars_) throw Error(Errc::Internal, "substitution has wrong arity");
  std::vector<Poly> lin(nvars_, Poly(nvars_));
  for (unsigned j = 0; j < nvars_; ++j) {
    Poly l(nvars_);
    for (unsigned i = 0; i < nvars_; ++i)
      if (!cols[j][i].is_zero()) l += Poly::variable(nvars_, i).scaled(cols[j][i]);
    lin[j] = std::move(l);
  }
  // cache powers of each substituted variable as needed
  std::vector<std::vector<Poly>> pows(nvars_);
  for (unsigned j = 0; j < nvars_; ++j) pows[j].push_back(Poly::constant(nvars_, 1));
  auto power = [&](unsigned j, unsigned k) -> const Poly& {
    auto& ps = pows[j];
    while (ps.size() <= k) ps.push_back(ps.back() * lin[j]);
    return ps[k];
  };
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) {
    Poly t = Poly::constant(nvars_, c);
    for (unsigned j = 0; j < nvars_; ++j)
      if (e[j]) t *= power(j, e[j]);
    r += t;
  }
  return r;
}

std::optional<Poly> Poly::exact_div(const Poly& d) const {
  if (d.is_zero()) return std::nullopt;
  Poly rem = *this;
  Poly quot(nvars_);
  const Expo& de = d.lead_expo();
  CycNum dinv = d.lead_coeff().inv();
  while (!rem.is_zero()) {
    const Expo& re = rem.lead_expo();
    Expo qe(nvars_);
    for (unsigned i = 0; i < nvars_; ++i) {
      if (re[i] < de[i]) return std::nullopt;
      qe[i] = re[i] - de[i];
    }
    CycNum qc = rem.lead_coeff() * dinv;
    Poly t = Poly::monomial(nvars_, qe, qc);
    quot += t;
    rem -= t * d;
  }
  return quot;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(lead_coeff().inv());
}

Poly poly_pow(const Poly& p, unsigned k) {
  Poly acc = Poly::constant(p.nvars(), 1);
  for (unsigned i = 0; i < k; ++i) acc *= p;
  return acc;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string cs = c.str();
    bool negated = false;
    if (c.is_rational() && c.rational() < 0) {
      cs = (-c).str();
      negated = true;
    }
    if (first) {
      if (negated) os << '-';
    } else {
      os << (negated ? " - " : " + ");
    }
    first = false;
    bool has_var = expo_total(e) > 0;
    bool unit_coeff = (cs == "1");
    bool simple = c.is_rational() || !has_var;
    if (!unit_coeff || !has_var) {
      if (simple)
        os << cs;
      else
        os << '(' << cs << ')';
      if (has_var) os << '*';
    }
    bool firstv = true;
    for (unsigned i = 0; i < nvars_; ++i) {
      if (!e[i]) continue;
      if (!firstv) os << '*';
      firstv = false;
      os << 'x' << (i + 1);
      if (e[i] > 1) os << '^' << e[i];
    }
  }
  return os.str();
}

std::string Poly::key() const {
  std::ostringstream os;
  for (const auto& [e, c] : terms_) {
    for (unsigned x : e) os << x << ',';
    os << ':' << c.key() << '!';
  }
  return os.str();
}

}  // namespace reflinv
