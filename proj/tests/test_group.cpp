#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "group.hpp"
#include "testutil.hpp"

using namespace reflinv;

TEST_CASE("cyclic groups") {
  ReflGroup g = build_group(GroupSpec::cyclic(5));
  CHECK(g.order() == 5);
  CHECK(g.num_reflections() == 4);
  CHECK(g.num_hyperplanes() == 1);
  CHECK(g.hyperplanes()[0].e_H == 5);
  // rank-1: every nonidentity element is a reflection
  ReflGroup c3 = build_group(GroupSpec::cyclic(3));
  CHECK(c3.num_reflections() == 2);
  std::set<std::string> dets;
  for (auto& r : enumerate_reflections(c3)) dets.insert(r.det.key());
  CHECK(dets.size() == 2);
}

TEST_CASE("G(2,1,2) against brute-force enumeration of signed permutations") {
  ReflGroup g = build_group(GroupSpec::monomial(2, 1, 2));
  CHECK(g.order() == 8);
  CHECK(g.num_reflections() == 4);
  CHECK(g.num_hyperplanes() == 4);

  // oracle: all 8 signed permutation matrices
  std::set<std::string> expect;
  for (int s1 : {1, -1})
    for (int s2 : {1, -1})
      for (int perm : {0, 1}) {
        CycMat m(2, 2);
        if (perm == 0) {
          m.at(0, 0) = CycNum(s1);
          m.at(1, 1) = CycNum(s2);
        } else {
          m.at(0, 1) = CycNum(s1);
          m.at(1, 0) = CycNum(s2);
        }
        expect.insert(m.key(2));
      }
  std::set<std::string> got;
  for (size_t i = 0; i < g.order(); ++i) got.insert(g.element(i).key(2));
  CHECK(got == expect);
}

TEST_CASE("monomial group orders, reflections and hyperplanes") {
  struct Row {
    unsigned r, p, l;
    size_t order, n, nstar;
  };
  // N = C(l,2) r + l (r/p - 1),  N* = C(l,2) r + l  (appendix formulas; for
  // p = r there are no diagonal reflections and no coordinate hyperplanes)
  std::vector<Row> rows{
      {2, 1, 2, 8, 4, 4},   {3, 1, 2, 18, 7, 5},  {4, 2, 3, 192, 15, 15},
      {3, 3, 3, 54, 9, 9},  {4, 2, 2, 16, 6, 6},  {6, 6, 2, 72, 6, 6},
  };
  for (const auto& row : rows) {
    CAPTURE(row.r);
    CAPTURE(row.p);
    CAPTURE(row.l);
    ReflGroup g = build_group(GroupSpec::monomial(row.r, row.p, row.l));
    CHECK(g.order() == row.order);
    CHECK(g.num_reflections() == row.n);
    CHECK(g.num_hyperplanes() == row.nstar);
    if (row.p < row.r) {
      size_t formula = (row.l * (row.l - 1) / 2) * row.r + row.l * (row.r / row.p - 1);
      CHECK(g.num_reflections() == formula);
      CHECK(g.num_hyperplanes() == (row.l * (row.l - 1) / 2) * row.r + row.l);
    }
  }
}

TEST_CASE("G(3,3,3) reflections all have order two") {
  ReflGroup g = build_group(GroupSpec::monomial(3, 3, 3));
  CHECK(g.num_reflections() == 9);
  for (size_t w : g.reflections()) {
    CycMat sq = g.element(w) * g.element(w);
    CHECK(sq == CycMat::identity(3).to_order(g.zeta_order()));
  }
}

TEST_CASE("closure idempotence") {
  ReflGroup g = build_group(GroupSpec::monomial(3, 1, 2));
  std::vector<CycMat> all;
  for (size_t i = 0; i < g.order(); ++i) all.push_back(g.element(i));
  ReflGroup g2 = build_group(GroupSpec::generic(g.zeta_order(), all));
  CHECK(g2.order() == g.order());
  std::set<std::string> k1, k2;
  for (size_t i = 0; i < g.order(); ++i) k1.insert(g.element(i).key(g.zeta_order()));
  for (size_t i = 0; i < g2.order(); ++i) k2.insert(g2.element(i).key(g.zeta_order()));
  CHECK(k1 == k2);
  CHECK(g2.num_reflections() == g.num_reflections());
  CHECK(g2.num_hyperplanes() == g.num_hyperplanes());
}

TEST_CASE("order cap") {
  GroupSpec s = GroupSpec::monomial(6, 1, 3);
  s.max_order = 100;
  CHECK_THROWS_AS(build_group(s), Error);
  try {
    build_group(s);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OrderCapExceeded);
  }
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(build_group(GroupSpec::monomial(4, 3, 2)), Error);  // p does not divide r
  GroupSpec bad = GroupSpec::generic(1, {});
  CHECK_THROWS_AS(build_group(bad), Error);
}

TEST_CASE("hyperplane stabilizers are cyclic") {
  for (auto spec : {GroupSpec::monomial(4, 2, 2), GroupSpec::monomial(3, 1, 2),
                    GroupSpec::cyclic(6)}) {
    ReflGroup g = build_group(spec);
    for (const auto& h : g.hyperplanes()) {
      CHECK(h.e_H == h.stabilizer.size());
      // some element's det powers exhaust the stabilizer's det values
      std::set<std::string> all_dets;
      for (size_t w : h.stabilizer) all_dets.insert(g.det(w).key());
      bool found = false;
      for (size_t w : h.stabilizer) {
        std::set<std::string> powers;
        for (unsigned k = 0; k < h.e_H; ++k) powers.insert(g.det(w).pow(k).key());
        if (powers == all_dets) {
          found = true;
          break;
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("characters") {
  ReflGroup g = build_group(GroupSpec::monomial(3, 1, 2));
  unsigned ell = 2;
  // identity in wedge(m,V*) (x) V has trace l * C(l,m)
  for (unsigned m = 0; m <= ell; ++m) {
    auto u = RepDescriptor::tensor({RepDescriptor::wedge(m), RepDescriptor::v()});
    CHECK(character(g, g.identity_index(), u) ==
          CycNum(long(ell) * long(binom(ell, m))));
  }
  // reflection with det lambda has V-character (l-1) + lambda
  for (const auto& info : enumerate_reflections(g))
    CHECK(character(g, info.elem, RepDescriptor::v()) == CycNum(long(ell - 1)) + info.det);
  // zeta-scalar in a cyclic group has V*-character zeta^{-1}
  ReflGroup c5 = build_group(GroupSpec::cyclic(5));
  for (size_t i = 0; i < c5.order(); ++i)
    CHECK(character(c5, i, RepDescriptor::vdual()) == c5.det(i).inv());
}

TEST_CASE("local data") {
  for (auto spec : {GroupSpec::monomial(2, 1, 2), GroupSpec::monomial(4, 2, 3),
                    GroupSpec::cyclic(4)}) {
    ReflGroup g = build_group(spec);
    unsigned ell = g.rank();
    for (size_t h = 0; h < g.num_hyperplanes(); ++h) {
      auto mu_triv = local_data(g, h, RepDescriptor::trivial());
      CHECK(mu_triv[0] == 1);
      for (size_t j = 1; j < mu_triv.size(); ++j) CHECK(mu_triv[j] == 0);

      auto mu_v = local_data(g, h, RepDescriptor::v());
      CHECK(mu_v[0] == long(ell - 1));
      CHECK(mu_v[1] == 1);
      for (size_t j = 2; j < mu_v.size(); ++j) CHECK(mu_v[j] == 0);

      auto mu_vd = local_data(g, h, RepDescriptor::vdual());
      CHECK(mu_vd[0] == long(ell - 1));
      CHECK(mu_vd[g.hyperplanes()[h].e_H - 1] == 1);

      // multiplicities sum to dim U
      for (auto u : {RepDescriptor::wedge(1), RepDescriptor::det(2),
                     RepDescriptor::tensor({RepDescriptor::wedge(1), RepDescriptor::v()})}) {
        auto mu = local_data(g, h, u);
        long sum = 0;
        for (long v : mu) sum += v;
        CHECK(sum == long(u.dim(ell)));
      }
    }
  }
}

TEST_CASE("representation descriptor parsing") {
  CHECK(RepDescriptor::parse("trivial").str() == "trivial");
  CHECK(RepDescriptor::parse("V*").str() == "V*");
  CHECK(RepDescriptor::parse("det^-2").str() == "det^-2");
  CHECK(RepDescriptor::parse("wedge(2,V*)").str() == "wedge(2,V*)");
  CHECK(RepDescriptor::parse("wedge(1,V*)(x)V").str() == "wedge(1,V*)(x)V");
  CHECK(RepDescriptor::parse("wedge(2,V*)").dim(3) == 3);
  CHECK_THROWS_AS(RepDescriptor::parse("junk"), Error);
}

TEST_CASE("act_on_poly is a left action fixing invariants") {
  ReflGroup g = build_group(GroupSpec::monomial(2, 1, 2));
  Poly sym = Poly::monomial(2, {2, 0}, CycNum::one()) + Poly::monomial(2, {0, 2}, CycNum::one());
  for (size_t i = 0; i < g.order(); ++i) CHECK(g.act_on_poly(i, sym) == sym);
  std::mt19937_64 rng(77);
  Poly f = testutil::random_poly(rng, 2, 3, 4, 2);
  for (size_t a = 0; a < g.order(); a += 3)
    for (size_t b = 0; b < g.order(); b += 2) {
      size_t ab = g.index_of(g.element(a) * g.element(b));
      CHECK(g.act_on_poly(ab, f) == g.act_on_poly(a, g.act_on_poly(b, f)));
    }
}
