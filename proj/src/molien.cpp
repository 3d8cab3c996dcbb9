#include "molien.hpp"

#include <algorithm>

#include "parallel.hpp"

namespace reflinv {

int default_truncation(const ReflGroup& g) {
  return int(2 * (g.num_reflections() + g.num_hyperplanes()) + 10);
}

namespace {

// coefficients of det(1 - q w) in q
std::vector<CycNum> char_poly_coeffs(const CycMat& w) {
  std::vector<CycNum> c = w.det_identity_plus();
  for (size_t m = 1; m < c.size(); m += 2) c[m] = -c[m];
  return c;
}

// per-element Molien contribution: numer(t,u) / det(1 - qw)
CycSeries molien_term(const CycMat& w, const TUPolyC& numer, int trunc) {
  CycSeries s = CycSeries::inverse_of_qpoly(char_poly_coeffs(w), trunc);
  s.mul_tu(numer);
  return s;
}

GradedSeries molien_sum(const ReflGroup& g, int trunc,
                        const std::function<TUPolyC(size_t)>& numer_of) {
  CycSeries total = parallel_block_reduce<CycSeries>(
      g.order(), CycSeries(trunc),
      [&](CycSeries& acc, size_t i) {
        TUPolyC numer = numer_of(i);
        if (numer.empty()) return;
        acc.add_series(molien_term(g.element(i), numer, trunc));
      },
      [](CycSeries& acc, const CycSeries& part) { acc.add_series(part); });
  total.scale(CycNum(long(g.order())).inv());
  return total.to_graded();
}

}  // namespace

GradedSeries molien_series(const ReflGroup& g, const RepDescriptor& u, int trunc) {
  return molien_sum(g, trunc, [&](size_t i) {
    CycNum tr = character(g, g.inverse_index(i), u);
    TUPolyC numer;
    if (!tr.is_zero()) numer.emplace(TU{0, 0}, tr);
    return numer;
  });
}

GradedSeries molien_series_forms(const ReflGroup& g, const RepDescriptor& u, int trunc) {
  return molien_sum(g, trunc, [&](size_t i) {
    // sum_m t^m Tr_{wedge^m V*}(w^{-1}) = det(1 + t w), w acting on V
    std::vector<CycNum> tpoly = g.element(i).det_identity_plus();
    CycNum tr = character(g, g.inverse_index(i), u);
    TUPolyC numer;
    if (tr.is_zero()) return numer;
    for (size_t m = 0; m < tpoly.size(); ++m) {
      CycNum c = tpoly[m] * tr;
      if (!c.is_zero()) numer.emplace(TU{int(m), 0}, c);
    }
    return numer;
  });
}

std::vector<long> invariant_degrees(const ReflGroup& g, int trunc) {
  GradedSeries h = molien_series(g, RepDescriptor::trivial(), trunc);
  std::vector<long> degrees;
  GradedSeries p = h;
  for (unsigned k = 0; k < g.rank(); ++k) {
    long d = 0;
    for (int q = 1; q <= p.trunc(); ++q)
      if (p.coeff(q) != 0) {
        d = q;
        break;
      }
    if (d == 0)
      throw Error(Errc::Internal, "could not read invariant degrees off the Molien series");
    degrees.push_back(d);
    GradedSeries factor(trunc);
    factor.add(0, 0, 0, 1);
    factor.add(int(d), 0, 0, -1);
    p = p * factor;
  }
  long maxd = degrees.back();
  for (int q = 1; q <= p.trunc() - int(maxd); ++q)
    if (p.coeff(q) != 0)
      throw Error(Errc::Internal, "Hilb(S^W) is not a product of geometric series");
  // sanity: product of degrees equals |W|
  unsigned long long prod = 1;
  for (long d : degrees) prod *= (unsigned long long)(d);
  if (prod != g.order())
    throw Error(Errc::Internal, "invariant degrees do not multiply to the group order");
  return degrees;
}

QPolyZ generator_polynomial(const ReflGroup& g, const RepDescriptor& u,
                            const std::vector<long>& invariant_degs, int trunc) {
  GradedSeries numer = molien_series(g, u, trunc);
  return series_quotient_to_polynomial(numer, invariant_degs);
}

long degree_sum_molien(const ReflGroup& g, const RepDescriptor& u,
                       const std::vector<long>& invariant_degs, int trunc) {
  return qpoly_weighted_degree_sum(generator_polynomial(g, u, invariant_degs, trunc));
}

long degree_sum_opdam(const ReflGroup& g, const RepDescriptor& u) {
  long total = 0;
  for (size_t h = 0; h < g.num_hyperplanes(); ++h) {
    std::vector<long> mu = local_data(g, h, u);
    for (size_t j = 1; j < mu.size(); ++j) total += long(j) * mu[j];
  }
  return total;
}

long delta_formula(unsigned ell, unsigned m, long n_reflections, long n_hyperplanes) {
  if (m > ell) throw Error(Errc::BadSpec, "form degree exceeds rank");
  long t1 = 0;
  if (m >= 1) t1 = long(ell - 1) * long(binom(ell - 1, m - 1)) * n_reflections;
  long t2 = long(binom(ell - 1, m)) * n_hyperplanes;
  return t1 + t2;
}

HilbertConsequenceReport hilbert_consequence_check(const ReflGroup& g,
                                                   const std::vector<long>& exponents,
                                                   const std::vector<long>& coexponents,
                                                   bool is_duality, int trunc) {
  if (!is_duality)
    throw Error(Errc::NotDualityGroup, "Hilbert-series closed form asserted only for duality groups");
  HilbertConsequenceReport rep;
  rep.lhs = molien_series_forms(g, RepDescriptor::v(), trunc);

  GradedSeries rhs = GradedSeries::one(trunc);
  for (long e : exponents) rhs = rhs * GradedSeries::inv_one_minus_qpow(trunc, int(e + 1));
  GradedSeries qt(trunc);
  qt.add(1, 0, 0, 1);
  qt.add(0, 1, 0, 1);
  rhs = rhs * qt;
  for (size_t i = 0; i + 1 < exponents.size(); ++i) {
    GradedSeries f(trunc);
    f.add(0, 0, 0, 1);
    f.add(int(exponents[i]), 1, 0, 1);
    rhs = rhs * f;
  }
  GradedSeries co(trunc);
  for (long e : coexponents) co.add(int(e - 1), 0, 0, 1);
  rhs = rhs * co;
  rep.rhs = rhs;

  rep.mismatch_at = rep.lhs.first_mismatch(rep.rhs);
  rep.match = !rep.mismatch_at.has_value();
  return rep;
}

TauReport tau_series(const ReflGroup& g, int trunc, std::optional<long> chi_det_power) {
  TauReport rep;
  rep.tau = molien_sum(g, trunc, [&](size_t i) {
    const CycMat& w = g.element(i);
    std::vector<CycNum> tpoly = w.det_identity_plus();  // det(1 + t w)
    std::vector<CycNum> upoly = g.element(g.inverse_index(i)).det_identity_plus();  // det(1 + u w^{-1})
    CycNum twist = CycNum::one();
    if (chi_det_power) twist = g.det(i).pow(-*chi_det_power);
    TUPolyC numer;
    for (size_t a = 0; a < tpoly.size(); ++a) {
      if (tpoly[a].is_zero()) continue;
      for (size_t b = 0; b < upoly.size(); ++b) {
        CycNum c = tpoly[a] * upoly[b] * twist;
        if (!c.is_zero()) numer.emplace(TU{int(a), int(b)}, c);
      }
    }
    return numer;
  });

  int ell = int(g.rank());
  rep.swapped_holds = true;
  rep.literal_holds = true;
  for (int q = 0; q <= trunc && (rep.swapped_holds || rep.literal_holds); ++q) {
    for (int b = 0; b <= ell; ++b)
      for (int c = 0; c <= ell; ++c) {
        Int lhs = rep.tau.coeff(q, b, c);
        if (rep.literal_holds && lhs != rep.tau.coeff(q, ell - b, ell - c)) {
          rep.literal_holds = false;
          rep.literal_fail_at = std::make_tuple(q, b, c);
        }
        if (rep.swapped_holds && lhs != rep.tau.coeff(q, ell - c, ell - b)) {
          rep.swapped_holds = false;
          rep.swapped_fail_at = std::make_tuple(q, b, c);
        }
      }
  }
  return rep;
}

std::vector<long> graded_delta_via_opdam(const ReflGroup& g, const RepDescriptor& u) {
  // (1+t)^{l-1} sum_H D_H((1 + v^{e_H-1} t) sum_j mu_{H,j} v^j), coefficients in t
  unsigned ell = g.rank();
  std::vector<long> inner(ell + 1, 0);  // before the (1+t)^{l-1} factor: degrees t^0, t^1
  long c0 = 0, c1 = 0;
  for (size_t h = 0; h < g.num_hyperplanes(); ++h) {
    const auto& hp = g.hyperplanes()[h];
    std::vector<long> mu = local_data(g, h, u);
    unsigned e = hp.e_H;
    for (unsigned j = 0; j < e; ++j) {
      c0 += long(j) * mu[j];
      // v^{e_H-1} * v^j = v^{(j + e_H - 1) mod e_H}
      c1 += long((j + e - 1) % e) * mu[j];
    }
  }
  std::vector<long> out(ell + 1, 0);
  for (unsigned m = 0; m <= ell; ++m) {
    long v = 0;
    if (m <= ell - 1) v += long(binom(ell - 1, m)) * c0;
    if (m >= 1) v += long(binom(ell - 1, m - 1)) * c1;
    out[m] = v;
  }
  return out;
}

}  // namespace reflinv
