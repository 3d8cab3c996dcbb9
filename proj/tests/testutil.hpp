#ifndef REFLINV_TESTUTIL_HPP
#define REFLINV_TESTUTIL_HPP

#include <complex>
#include <random>

#include "cyclotomic.hpp"
#include "poly.hpp"

namespace reflinv::testutil {

// float oracle: numeric value of an exact cyclotomic number
inline std::complex<double> to_complex(const CycNum& c) {
  const double pi = 3.14159265358979323846;
  std::complex<double> zeta = std::polar(1.0, 2.0 * pi / double(c.order()));
  std::complex<double> acc = 0.0, pow = 1.0;
  for (const auto& q : c.coords()) {
    acc += q.get_d() * pow;
    pow *= zeta;
  }
  return acc;
}

inline CycNum random_cyc(std::mt19937_64& rng, unsigned order, int span = 6) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, 4);
  std::vector<Rat> raw(order);
  for (auto& q : raw) {
    q = Rat(num(rng), den(rng));
    q.canonicalize();
  }
  return CycNum::normalize(raw, order);
}

inline Poly random_poly(std::mt19937_64& rng, unsigned nvars, unsigned deg, unsigned terms,
                        unsigned order = 1) {
  Poly p(nvars);
  std::uniform_int_distribution<unsigned> d(0, deg);
  for (unsigned t = 0; t < terms; ++t) {
    Expo e(nvars);
    for (auto& x : e) x = d(rng) / 2;
    p.add_term(e, random_cyc(rng, order, 3));
  }
  return p;
}

// random homogeneous polynomial of exact degree deg
inline Poly random_homogeneous(std::mt19937_64& rng, unsigned nvars, unsigned deg, unsigned terms,
                               unsigned order = 1) {
  Poly p(nvars);
  std::uniform_int_distribution<unsigned> cut(0, deg);
  for (unsigned t = 0; t < terms; ++t) {
    Expo e(nvars, 0);
    unsigned left = deg;
    for (unsigned i = 0; i + 1 < nvars; ++i) {
      unsigned take = cut(rng) % (left + 1);
      e[i] = take;
      left -= take;
    }
    e[nvars - 1] = left;
    p.add_term(e, random_cyc(rng, order, 3));
  }
  return p;
}

}  // namespace reflinv::testutil

#endif
