#include "bianchi/finite_quot.hpp"
#include "bianchi/phi.hpp"
#include "bianchi/sampling.hpp"

#include <doctest.h>

using namespace bianchi;

TEST_CASE("finite ring arithmetic follows the omega law") {
  const FiniteRing r3(3, 2);
  // omega^2 = omega - 1, reduced mod 4.
  CHECK(r3.mul(r3.make(0, 1), r3.make(0, 1)) == r3.make(3, 1));
  const FiniteRing r1(1, 2);
  CHECK(r1.mul(r1.make(0, 1), r1.make(0, 1)) == r1.make(3, 0));
  CHECK(r1.add(r1.make(3, 2), r1.make(1, 2)) == r1.make(0, 0));
  CHECK(r1.neg(r1.make(1, 0)) == r1.make(3, 0));

  // Reduction of a QuadInt takes both coordinates mod 2^k.
  CHECK(r3.reduce(QuadInt(3, -1, 5)) == r3.make(3, 1));
  CHECK_THROWS_AS(r3.reduce(QuadInt::omega(7)), std::invalid_argument);
  CHECK_THROWS_AS(FiniteRing(3, 5), std::invalid_argument);
}

TEST_CASE("level-2 quotient orders match the ramified/inert/split table") {
  CHECK(enumerate_psl(1, 1).order() == 48);
  CHECK(enumerate_psl(2, 1).order() == 48);
  CHECK(enumerate_psl(5, 1).order() == 48);
  CHECK(enumerate_psl(3, 1).order() == 60);
  CHECK(enumerate_psl(11, 1).order() == 60);
  CHECK(enumerate_psl(7, 1).order() == 36);
  CHECK(enumerate_psl(15, 1).order() == 36);
  CHECK_THROWS_AS(enumerate_psl(3, 3), std::invalid_argument);
}

TEST_CASE("index formula against brute force at level 4") {
  for (std::int64_t m : {1, 2, 3, 5, 7}) {
    CAPTURE(m);
    CHECK(BigInt(enumerate_psl(m, 2).order()) == index_formula(m, IdealOver2::Four));
  }
}

TEST_CASE("index formula values and guards") {
  CHECK(index_formula(5, IdealOver2::Two) == 48);
  CHECK(index_formula(3, IdealOver2::Two) == 60);
  CHECK(index_formula(7, IdealOver2::Two) == 36);
  CHECK(index_formula(1, IdealOver2::RamifiedPrime) == 6);
  CHECK(index_formula(3, IdealOver2::Four) == 1920);
  CHECK(index_formula(1, IdealOver2::Four) == 1536);
  CHECK(index_formula(7, IdealOver2::Four) == 1152);
  CHECK_THROWS_AS(index_formula(3, IdealOver2::RamifiedPrime), std::invalid_argument);
}

TEST_CASE("splitting of 2") {
  CHECK(splitting_of_two(1) == TwoSplitting::Ramified);
  CHECK(splitting_of_two(2) == TwoSplitting::Ramified);
  CHECK(splitting_of_two(5) == TwoSplitting::Ramified);
  CHECK(splitting_of_two(3) == TwoSplitting::Inert);
  CHECK(splitting_of_two(11) == TwoSplitting::Inert);
  CHECK(splitting_of_two(7) == TwoSplitting::Split);
  CHECK(splitting_of_two(23) == TwoSplitting::Split);
}

TEST_CASE("subgroup closure basics") {
  const FinGroup g = enumerate_psl(3, 1);

  const FinGroup trivial = subgroup_closure(g, {});
  CHECK(trivial.order() == 1);

  std::vector<FinMat> all;
  for (std::uint32_t key : g.keys()) all.push_back(fmat_from_key(key));
  CHECK(subgroup_closure(g, all).order() == g.order());

  const FinMat t = freduce(g.ring(), gen_T(3));
  const FinMat w = freduce(g.ring(), gen_W(3));
  const FinGroup h1 = subgroup_closure(g, {t});
  const FinGroup h2 = subgroup_closure(g, {t, w});
  CHECK(h1.order() <= h2.order());
  for (std::uint32_t key : h1.keys()) CHECK(h2.contains(fmat_from_key(key)));

  // Idempotent: closing the closure adds nothing.
  std::vector<FinMat> h2_elems;
  for (std::uint32_t key : h2.keys()) h2_elems.push_back(fmat_from_key(key));
  CHECK(subgroup_closure(g, h2_elems).order() == h2.order());

  // det != 1 is outside the ambient group.
  FinMat bad;
  bad.e = {g.ring().one(), g.ring().one(), g.ring().one(), g.ring().one()};
  CHECK(fdet(g.ring(), bad) != g.ring().one());
  CHECK_THROWS_AS(subgroup_closure(g, {bad}), std::invalid_argument);
}

TEST_CASE("delta_image orders give the theorem indices") {
  CHECK(delta_index(1) == 48);
  CHECK(delta_index(2) == 48);
  CHECK(delta_index(3) == 120);
  CHECK(delta_index(7) == 72);
  CHECK(enumerate_psl(3, 2).order() == 1920);
  CHECK(delta_image(3).order() == 16);
  CHECK(delta_image(7).order() == 16);
  CHECK(delta_image(1).order() == 32);
}

TEST_CASE("Delta_m is the full preimage of its mod-4 image") {
  for (std::int64_t m : {1, 2, 3, 7, 11}) {
    CAPTURE(m);
    const FinGroup d = delta_image(m);
    WordSampler sampler(m, 2400 + static_cast<std::uint64_t>(m));
    for (int trial = 0; trial < 60; ++trial) {
      const Mat2O a = sampler.random_word(9).mat;
      CHECK(in_delta_m(a) == d.contains(freduce(d.ring(), a)));
    }
    for (int trial = 0; trial < 20; ++trial) {
      const Mat2O a = sampler.random_level2_word(8).mat;
      CHECK(in_delta_m(a) == d.contains(freduce(d.ring(), a)));
    }
  }
}

TEST_CASE("delta_image is closed under multiplication") {
  for (std::int64_t m : {3, 7}) {
    const FinGroup d = delta_image(m);
    const FiniteRing& ring = d.ring();
    for (std::uint32_t k1 : d.keys())
      for (std::uint32_t k2 : d.keys())
        CHECK(d.contains(fmul(ring, fmat_from_key(k1), fmat_from_key(k2))));
  }
}

TEST_CASE("reduction is a homomorphism detecting congruence level") {
  for (std::int64_t m : {1, 3, 7}) {
    for (int k : {1, 2}) {
      CAPTURE(m);
      CAPTURE(k);
      const FiniteRing ring(m, k);
      const FinMat id{{ring.one(), 0, 0, ring.one()}};
      WordSampler sampler(m, 42);
      for (int trial = 0; trial < 40; ++trial) {
        const Mat2O a = sampler.random_word(8).mat;
        const Mat2O b = sampler.random_word(8).mat;
        CHECK(freduce(ring, a * b) == fmul(ring, freduce(ring, a), freduce(ring, b)));
        const bool lvl = is_congruence_level(a, 1 << k);
        const bool red_id =
            psl_canonical(ring, freduce(ring, a)) == psl_canonical(ring, id);
        CHECK(lvl == red_id);
      }
    }
  }
}

TEST_CASE("figure-eight cover degree") {
  const Fig8Report rep = fig8_report();
  CHECK(rep.index == 20);
  CHECK(rep.g2_order == 1920);
  CHECK(rep.delta_image_order == 16);
  CHECK(rep.gamma8_image_order % rep.intersection_order == 0);
  CHECK(rep.gamma8_index_in_g2 == BigInt(rep.g2_order / rep.gamma8_image_order));
  CHECK(fig8_index() == 20);
}
