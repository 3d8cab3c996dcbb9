#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "certify.hpp"
#include "testutil.hpp"

using namespace reflinv;

namespace {

struct Ctx {
  ReflGroup g;
  InvariantData inv;
};

Ctx make(GroupSpec spec) {
  Ctx c{build_group(spec), {}};
  c.inv = build_invariants(c.g);
  return c;
}

}  // namespace

TEST_CASE("candidate shapes match the theorem statements") {
  Ctx c5 = make(GroupSpec::cyclic(5));
  auto b0 = candidate_basis(c5.g, c5.inv, TheoremTag::Main, 0);
  CHECK(b0.label_strings() == std::vector<std::string>{"theta1"});
  auto b1 = candidate_basis(c5.g, c5.inv, TheoremTag::Main, 1);
  CHECK(b1.label_strings() == std::vector<std::string>{"dtheta1"});

  Ctx b2 = make(GroupSpec::monomial(2, 1, 2));
  auto m1 = candidate_basis(b2.g, b2.inv, TheoremTag::Main, 1);
  CHECK(m1.label_strings() ==
        std::vector<std::string>{"df{1}*theta1", "df{1}*theta2", "dtheta1", "dtheta2"});

  Ctx g422 = make(GroupSpec::monomial(4, 2, 2));
  auto mono1 = candidate_basis(g422.g, g422.inv, TheoremTag::Monomial, 1);
  CHECK(mono1.label_strings() ==
        std::vector<std::string>{"df{1}*theta1", "df{2}*theta1", "dtheta1", "dtheta2"});

  Ctx g332 = make(GroupSpec::monomial(3, 3, 2));
  auto rt2 = candidate_basis(g332.g, g332.inv, TheoremTag::RankTwo, 2);
  CHECK(rt2.label_strings() == std::vector<std::string>{"df{1}*dtheta1", "df{2}*dtheta1"});

  // cardinality l * C(l, m) for the monomial theorem
  Ctx g423 = make(GroupSpec::monomial(4, 2, 3));
  for (unsigned m = 0; m <= 3; ++m)
    CHECK(candidate_basis(g423.g, g423.inv, TheoremTag::Monomial, m).elements.size() ==
          3 * binom(3, m));
}

TEST_CASE("inapplicable theorems are refused") {
  Ctx c5 = make(GroupSpec::cyclic(5));
  CHECK_THROWS_AS(candidate_basis(c5.g, c5.inv, TheoremTag::RankTwo, 0), Error);
  Ctx g422 = make(GroupSpec::monomial(4, 2, 2));
  CHECK_THROWS_AS(candidate_basis(g422.g, g422.inv, TheoremTag::Main, 0), Error);
  Ctx g312 = make(GroupSpec::monomial(3, 1, 2));
  CHECK_THROWS_AS(candidate_basis(g312.g, g312.inv, TheoremTag::Monomial, 0), Error);
  try {
    candidate_basis(c5.g, c5.inv, TheoremTag::RankTwo, 0);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TheoremNotApplicable);
  }
}

TEST_CASE("every candidate element is exactly W-invariant") {
  for (auto spec : {GroupSpec::monomial(3, 1, 2), GroupSpec::monomial(4, 2, 2),
                    GroupSpec::monomial(3, 3, 2)}) {
    Ctx c = make(spec);
    TheoremTag tag = auto_theorem(c.g, c.inv);
    for (unsigned m = 0; m <= c.g.rank(); ++m) {
      auto b = candidate_basis(c.g, c.inv, tag, m);
      for (const auto& e : b.elements)
        for (size_t w = 0; w < c.g.order(); ++w) CHECK(act(c.g, w, e) == e);
    }
  }
}

TEST_CASE("cyclic certification") {
  Ctx c = make(GroupSpec::cyclic(7));
  auto b1 = candidate_basis(c.g, c.inv, TheoremTag::Main, 1);
  CertReport r = saito_certify(c.g, c.inv, b1);
  CHECK(r.verdict == Verdict::Certified);
  CHECK(r.degree_sum == 0);
  CHECK(r.target_delta == 0);
  CHECK(r.j_power == 0);
  CHECK(r.q_power == 0);
  REQUIRE(r.det.has_value());
  CHECK(*r.det == Poly::constant(1, 1));
  CHECK(r.scalar == CycNum::one());
}

TEST_CASE("rank-two determinant identities") {
  for (auto spec : {GroupSpec::monomial(3, 3, 2), GroupSpec::monomial(5, 5, 2),
                    GroupSpec::monomial(3, 1, 2)}) {
    CAPTURE(spec.str());
    Ctx c = make(spec);
    long e2 = c.inv.coexponents[1];

    auto b2 = candidate_basis(c.g, c.inv, TheoremTag::RankTwo, 2);
    CertReport r2 = saito_certify(c.g, c.inv, b2);
    CHECK(r2.verdict == Verdict::Certified);
    REQUIRE(r2.det.has_value());
    CHECK(*r2.det == c.inv.J);  // det Coef(B^(2)) = det Jac(f1,f2) = J on the nose

    auto b1 = candidate_basis(c.g, c.inv, TheoremTag::RankTwo, 1);
    CertReport r1 = saito_certify(c.g, c.inv, b1);
    CHECK(r1.verdict == Verdict::Certified);
    REQUIRE(r1.det.has_value());
    // det Coef(B^(1)) = +- e2* J det M(theta)
    Poly expected = (c.inv.J * c.inv.Q.scaled(c.inv.q_scalar)).scaled(CycNum(e2));
    bool matches = (*r1.det == expected) || (*r1.det == -expected);
    CHECK(matches);
  }
}

TEST_CASE("degree sums of duality candidates follow from the exponents") {
  for (auto spec : {GroupSpec::monomial(2, 1, 2), GroupSpec::monomial(3, 3, 3)}) {
    Ctx c = make(spec);
    unsigned ell = c.g.rank();
    for (unsigned m = 0; m <= ell; ++m) {
      auto b = candidate_basis(c.g, c.inv, TheoremTag::Main, m);
      // symbolic sum over the label sets
      long sum = 0;
      for (const auto& l : b.labels) {
        long d = c.inv.coexponents[l.k] - (l.use_d ? 1 : 0);
        for (unsigned i : l.I) d += c.inv.exponents[i];
        sum += d;
      }
      CHECK(sum == delta_formula(ell, m, c.inv.N, c.inv.Nstar));
      CertReport r = saito_certify(c.g, c.inv, b);
      CHECK(r.degree_sum == sum);
    }
  }
}

TEST_CASE("divisibility lemma") {
  Ctx c = make(GroupSpec::monomial(2, 1, 2));
  // a certified basis passes
  auto b = candidate_basis(c.g, c.inv, TheoremTag::Main, 1);
  CHECK(divisibility_check(c.g, c.inv, b.elements, 1));
  // a repeated element gives det = 0, vacuously divisible
  auto dup = b.elements;
  dup[3] = dup[2];
  CHECK(divisibility_check(c.g, c.inv, dup, 1));
  // random invariant families built by Reynolds projection
  auto u = RepDescriptor::parse("wedge(1,V*)(x)V");
  std::vector<DiffDeriv> fam;
  for (unsigned d = 2; d <= 3 && fam.size() < 4; ++d) {
    for (const auto& vec : reynolds_project(c.g, d, u)) {
      DiffDeriv e(2, 1);
      for (unsigned i = 0; i < 2; ++i)
        for (unsigned j = 0; j < 2; ++j)
          if (!vec[i * 2 + j].is_zero()) e.add_term({i}, j, vec[i * 2 + j]);
      fam.push_back(e);
      if (fam.size() == 4) break;
    }
  }
  REQUIRE(fam.size() == 4);
  CHECK(divisibility_check(c.g, c.inv, fam, 1));
}

TEST_CASE("negative controls are refuted with the right verdict") {
  std::mt19937_64 rng(99);
  for (auto spec : {GroupSpec::monomial(2, 1, 2), GroupSpec::monomial(4, 2, 2)}) {
    Ctx c = make(spec);
    TheoremTag tag = auto_theorem(c.g, c.inv);
    for (int trial = 0; trial < 50; ++trial) {
      unsigned m = 1 + unsigned(rng() % c.g.rank());
      auto b = candidate_basis(c.g, c.inv, tag, m);
      size_t n = b.elements.size();
      size_t i = rng() % n, j = rng() % n;
      while (j == i) j = rng() % n;
      int kind = int(rng() % 3);
      Verdict expect;
      if (kind == 0) {
        // duplicate element j over element i
        b.elements[i] = b.elements[j];
        expect = *b.elements[i].poly_degree() == *candidate_basis(c.g, c.inv, tag, m).elements[i].poly_degree()
                     ? Verdict::RefutedSingular
                     : Verdict::RefutedDegreeSum;
      } else if (kind == 1) {
        // wrong-degree substitute: scale an element by f_1
        b.elements[i] = b.elements[i].scaled(c.inv.f[0]);
        expect = Verdict::RefutedDegreeSum;
      } else {
        // drop element i, duplicate element j
        b.elements.erase(b.elements.begin() + long(i));
        size_t j2 = j > i ? j - 1 : j;
        b.elements.push_back(b.elements[j2]);
        b.labels.erase(b.labels.begin() + long(i));
        b.labels.push_back(b.labels[j2]);
        long sum = 0;
        for (const auto& e : b.elements) sum += *e.poly_degree();
        expect = sum == delta_formula(c.g.rank(), m, c.inv.N, c.inv.Nstar)
                     ? Verdict::RefutedSingular
                     : Verdict::RefutedDegreeSum;
      }
      CertReport r = saito_certify(c.g, c.inv, b);
      CHECK(r.verdict == expect);
    }
  }
}

TEST_CASE("probabilistic mode") {
  Ctx c = make(GroupSpec::monomial(2, 1, 3));
  auto b = candidate_basis(c.g, c.inv, TheoremTag::Main, 1);
  CertReport r1 = saito_certify(c.g, c.inv, b, CertMode::Probabilistic, 6, 12345);
  CHECK(r1.verdict == Verdict::ProbablyCertified);
  CHECK(r1.trials == 6);
  CHECK(r1.eval_points.size() == 6);
  CHECK_FALSE(r1.scalar.is_zero());
  // reproducible under the same seed
  CertReport r2 = saito_certify(c.g, c.inv, b, CertMode::Probabilistic, 6, 12345);
  CHECK(r1.eval_points == r2.eval_points);
  CHECK(r1.scalar == r2.scalar);
  // the probabilistic ratio agrees with the exact scalar
  CertReport rx = saito_certify(c.g, c.inv, b, CertMode::Exact);
  CHECK(rx.verdict == Verdict::Certified);
  CHECK(rx.scalar == r1.scalar);
  // a singular mutation is refuted in probabilistic mode too
  auto bad = b;
  bad.elements[0] = bad.elements[1];
  CertReport rb = saito_certify(c.g, c.inv, bad, CertMode::Probabilistic, 4, 7);
  CHECK(rb.verdict == Verdict::RefutedSingular);
}

TEST_CASE("verify_generation picks the right theorem") {
  auto g1 = make(GroupSpec::monomial(4, 2, 2));
  GenerationReport r1 = verify_generation(g1.g, g1.inv);
  CHECK(r1.theorem == TheoremTag::Monomial);
  CHECK(r1.all_certified);
  CHECK(r1.per_m.size() == 3);

  auto g2 = make(GroupSpec::monomial(3, 1, 2));
  GenerationReport r2 = verify_generation(g2.g, g2.inv);
  CHECK(r2.theorem == TheoremTag::Main);
  CHECK(r2.all_certified);

  auto g3 = make(GroupSpec::cyclic(5));
  GenerationReport r3 = verify_generation(g3.g, g3.inv);
  CHECK(r3.theorem == TheoremTag::Main);
  CHECK(r3.all_certified);
}

TEST_CASE("user-supplied labels reconstruct candidates") {
  Ctx c = make(GroupSpec::monomial(3, 1, 2));
  std::vector<BasisLabel> labels{{{0}, 0, false}, {{1}, 0, false}, {{}, 0, true}, {{}, 1, true}};
  CandidateBasis b = basis_from_labels(c.g, c.inv, 1, labels);
  CHECK(b.tag == TheoremTag::UserSupplied);
  CertReport r = saito_certify(c.g, c.inv, b);
  CHECK(r.verdict == Verdict::Certified);
}
