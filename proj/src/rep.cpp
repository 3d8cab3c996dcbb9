#include "rep.hpp"

#include <sstream>

namespace reflinv {

RepDescriptor RepDescriptor::v() {
  RepDescriptor d;
  d.kind = Kind::V;
  return d;
}

RepDescriptor RepDescriptor::vdual() {
  RepDescriptor d;
  d.kind = Kind::Vdual;
  return d;
}

RepDescriptor RepDescriptor::det(long k) {
  RepDescriptor d;
  d.kind = Kind::Det;
  d.det_power = k;
  return d;
}

RepDescriptor RepDescriptor::wedge(unsigned m, bool dual) {
  RepDescriptor d;
  d.kind = Kind::Wedge;
  d.wedge_m = m;
  d.wedge_dual = dual;
  return d;
}

RepDescriptor RepDescriptor::tensor(std::vector<RepDescriptor> fs) {
  if (fs.size() == 1) return fs[0];
  RepDescriptor d;
  d.kind = Kind::Tensor;
  d.factors = std::move(fs);
  return d;
}

namespace {
std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  size_t b = s.find_last_not_of(" \t");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

RepDescriptor parse_atom(const std::string& raw) {
  std::string s = strip(raw);
  if (s == "trivial" || s == "1") return RepDescriptor::trivial();
  if (s == "V") return RepDescriptor::v();
  if (s == "V*") return RepDescriptor::vdual();
  if (s.rfind("det", 0) == 0) {
    std::string rest = strip(s.substr(3));
    if (rest.empty()) return RepDescriptor::det(1);
    if (rest[0] != '^') throw Error(Errc::BadSpec, "bad representation: " + raw);
    return RepDescriptor::det(std::stol(rest.substr(1)));
  }
  if (s.rfind("wedge(", 0) == 0 && s.back() == ')') {
    std::string inner = s.substr(6, s.size() - 7);
    size_t comma = inner.find(',');
    if (comma == std::string::npos) throw Error(Errc::BadSpec, "bad representation: " + raw);
    unsigned m = unsigned(std::stoul(strip(inner.substr(0, comma))));
    std::string space = strip(inner.substr(comma + 1));
    if (space == "V*") return RepDescriptor::wedge(m, true);
    if (space == "V") return RepDescriptor::wedge(m, false);
    throw Error(Errc::BadSpec, "bad representation: " + raw);
  }
  throw Error(Errc::BadSpec, "bad representation: " + raw);
}
}  // namespace

RepDescriptor RepDescriptor::parse(const std::string& text) {
  std::vector<RepDescriptor> factors;
  size_t pos = 0;
  while (true) {
    size_t next = text.find("(x)", pos);
    std::string piece = next == std::string::npos ? text.substr(pos) : text.substr(pos, next - pos);
    factors.push_back(parse_atom(piece));
    if (next == std::string::npos) break;
    pos = next + 3;
  }
  return tensor(std::move(factors));
}

unsigned long long RepDescriptor::dim(unsigned ell) const {
  switch (kind) {
    case Kind::Trivial:
    case Kind::Det:
      return 1;
    case Kind::V:
    case Kind::Vdual:
      return ell;
    case Kind::Wedge:
      return binom(ell, wedge_m);
    case Kind::Tensor: {
      unsigned long long d = 1;
      for (const auto& f : factors) d *= f.dim(ell);
      return d;
    }
  }
  return 0;
}

std::string RepDescriptor::str() const {
  switch (kind) {
    case Kind::Trivial:
      return "trivial";
    case Kind::V:
      return "V";
    case Kind::Vdual:
      return "V*";
    case Kind::Det:
      return det_power == 1 ? "det" : "det^" + std::to_string(det_power);
    case Kind::Wedge:
      return "wedge(" + std::to_string(wedge_m) + "," + (wedge_dual ? "V*" : "V") + ")";
    case Kind::Tensor: {
      std::string s;
      for (size_t i = 0; i < factors.size(); ++i) {
        if (i) s += "(x)";
        s += factors[i].str();
      }
      return s;
    }
  }
  return "?";
}

namespace {
CycMat dual_matrix(const CycMat& w) {
  auto inv = w.inverse();
  if (!inv) throw Error(Errc::Internal, "group element is singular");
  return inv->transpose();
}
}  // namespace

CycNum rep_character(const CycMat& w, const RepDescriptor& u) {
  switch (u.kind) {
    case RepDescriptor::Kind::Trivial:
      return CycNum::one();
    case RepDescriptor::Kind::V:
      return w.trace();
    case RepDescriptor::Kind::Vdual:
      return dual_matrix(w).trace();
    case RepDescriptor::Kind::Det:
      return w.det().pow(u.det_power);
    case RepDescriptor::Kind::Wedge: {
      CycMat base = u.wedge_dual ? dual_matrix(w) : w;
      return base.compound(u.wedge_m).trace();
    }
    case RepDescriptor::Kind::Tensor: {
      CycNum c = CycNum::one();
      for (const auto& f : u.factors) c *= rep_character(w, f);
      return c;
    }
  }
  return CycNum::zero();
}

CycMat rep_matrix(const CycMat& w, const RepDescriptor& u) {
  switch (u.kind) {
    case RepDescriptor::Kind::Trivial: {
      CycMat m(1, 1);
      m.at(0, 0) = CycNum::one();
      return m;
    }
    case RepDescriptor::Kind::V:
      return w;
    case RepDescriptor::Kind::Vdual:
      return dual_matrix(w);
    case RepDescriptor::Kind::Det: {
      CycMat m(1, 1);
      m.at(0, 0) = w.det().pow(u.det_power);
      return m;
    }
    case RepDescriptor::Kind::Wedge: {
      CycMat base = u.wedge_dual ? dual_matrix(w) : w;
      return base.compound(u.wedge_m);
    }
    case RepDescriptor::Kind::Tensor: {
      CycMat m = rep_matrix(w, u.factors.at(0));
      for (size_t i = 1; i < u.factors.size(); ++i) m = m.kron(rep_matrix(w, u.factors[i]));
      return m;
    }
  }
  throw Error(Errc::Internal, "unreachable");
}

}  // namespace reflinv
