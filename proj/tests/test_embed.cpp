#include "bianchi/embed.hpp"
#include "bianchi/sampling.hpp"

#include <doctest.h>

#include <set>

using namespace bianchi;

namespace {

Mat2O alpha_counterexample() {
  return {QuadInt::integer(1, 1), QuadInt(1, 1, 1), QuadInt::integer(1, 0),
          QuadInt::integer(1, 1)};
}

// The 7x7 conjugate of [[1,1+i],[0,1]] at m = 1 with w = 1, x = y = z = 0.
QMat counterexample_witness() {
  return QMat::from_int({{2, 1, 1, 1, 0, 0, 0},
                         {-1, 0, -1, -1, 0, 0, 0},
                         {1, 1, 1, 0, 0, 0, 0},
                         {1, 1, 0, 1, 0, 0, 0},
                         {0, 0, 0, 0, 1, 0, 0},
                         {0, 0, 0, 0, 0, 1, 0},
                         {0, 0, 0, 0, 0, 0, 1}});
}

// Mod-2 residue predicted for a level-2 element with beta = b1 + c1 odd
// (m = 3 mod 4): identity plus the beta-pattern spread by the four-square.
QMat beta_pattern(const FourSquare& fs) {
  const long long w = static_cast<long long>(floor_mod(fs.w, 2));
  const long long x = static_cast<long long>(floor_mod(fs.x, 2));
  const long long y = static_cast<long long>(floor_mod(fs.y, 2));
  const long long z = static_cast<long long>(floor_mod(fs.z, 2));
  QMat p = QMat::identity(7);
  p.at(0, 2) = 1;
  p.at(1, 2) = 1;
  p.at(2, 0) = p.at(2, 1) = 1;
  const long long spread[4] = {w, x, y, z};
  for (std::size_t i = 0; i < 4; ++i) {
    p.at(0, 3 + i) = spread[i];
    p.at(1, 3 + i) = spread[i];
    p.at(3 + i, 0) = spread[i];
    p.at(3 + i, 1) = spread[i];
  }
  return p;
}

int beta_parity(const Mat2O& alpha) {
  return static_cast<int>(floor_mod((alpha.b.c1() + alpha.c.c1()) / 2, 2));
}

}  // namespace

TEST_CASE("extend_to_7 blocks") {
  CHECK(extend_to_7(QMat::identity(4)) == QMat::identity(7));
  CHECK_THROWS_AS(extend_to_7(QMat::identity(5)), std::invalid_argument);

  for (std::int64_t m : {2, 3}) {
    const EmbedContext ctx = make_embed_context(m);
    WordSampler sampler(m, 17);
    for (int trial = 0; trial < 20; ++trial) {
      const QMat phi = phi_m(sampler.random_word(8).mat);
      const QMat n = extend_to_7(phi);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(n.at(i, j) == phi.at(i, j));
      CHECK(n.transposed() * ctx.S_P.matrix * n == ctx.S_P.matrix);
    }
  }
}

TEST_CASE("certify_element: identity passes with witness I") {
  for (std::int64_t m : {1, 3, 7}) {
    const EmbedContext ctx = make_embed_context(m);
    const RacgVerdict v = certify_element(ctx, Mat2O::identity(m));
    CHECK(v.pass());
    CHECK(v.witness == QMat::identity(7));
  }
}

TEST_CASE("m = 1 counterexample: a prime over 2 is not enough") {
  const EmbedContext ctx = make_embed_context(1);
  REQUIRE((ctx.fs.w == 1 && ctx.fs.x == 0 && ctx.fs.y == 0 && ctx.fs.z == 0));

  const Mat2O alpha = alpha_counterexample();
  CHECK(!is_congruence_level(alpha, 2));
  CHECK(!in_delta_m(alpha));

  const RacgVerdict v = certify_element(ctx, alpha);
  CHECK(v.witness == counterexample_witness());
  CHECK(v.integral);
  CHECK(!v.congruent_identity_mod2);
  CHECK(v.preserves_F);
  CHECK(v.det_one);
  CHECK(v.positive_sheet);
  CHECK(!v.pass());

  // The opposite conjugation orientation does not reproduce the matrix;
  // it is not even integral here.
  const QMat other = ctx.A_inv * extend_to_7(phi_m(alpha)) * ctx.A;
  CHECK(other != counterexample_witness());
  CHECK(!other.is_integral());

  // The residue itself: off-diagonal ones, so not the identity.
  const QMat red = *reduce_mod(v.witness, 2);
  CHECK(red != QMat::identity(7));
  CHECK(red.at(0, 1) == 1);
  CHECK(red.at(2, 0) == 1);
}

TEST_CASE("sampled Delta_m elements certify for both residue classes") {
  for (std::int64_t m : {2, 3, 7}) {
    CAPTURE(m);
    const EmbedContext ctx = make_embed_context(m);
    WordSampler sampler(m, 500 + static_cast<std::uint64_t>(m));
    for (const WordSample& s : sampler.sample_delta(20)) {
      const RacgVerdict v = certify_element(ctx, s.mat);
      CAPTURE(s.word);
      CHECK(v.pass());
    }
  }
}

TEST_CASE("level-2 conjugates at m = 3 mod 4: integral, residue given by beta") {
  for (std::int64_t m : {3, 7, 11}) {
    CAPTURE(m);
    const EmbedContext ctx = make_embed_context(m);
    const QMat pattern = beta_pattern(ctx.fs);
    WordSampler sampler(m, 900 + static_cast<std::uint64_t>(m));
    int odd_seen = 0, even_seen = 0;
    for (int trial = 0; trial < 60; ++trial) {
      const Mat2O a = sampler.random_level2_word(9).mat;
      const RacgVerdict v = certify_element(ctx, a);
      CHECK(v.integral);
      CHECK(v.preserves_F);
      CHECK(v.det_one);
      const auto red = reduce_mod(v.witness, 2);
      REQUIRE(red.has_value());
      if (beta_parity(a) == 0) {
        ++even_seen;
        CHECK(*red == QMat::identity(7));
      } else {
        ++odd_seen;
        CHECK(*red == pattern);
      }
    }
    CHECK(odd_seen > 0);
    CHECK(even_seen > 0);
  }
}

TEST_CASE("verdict booleans do not depend on the four-square used") {
  const std::vector<FourSquare> variants = {
      {1, 1, 1, 0}, {1, 1, 0, 1}, {1, 0, 1, 1}, {0, 1, 1, 1}, {-1, 1, -1, 0}};
  std::vector<EmbedContext> ctxs;
  for (const auto& fs : variants) ctxs.push_back(make_embed_context(3, fs));

  WordSampler sampler(3, 33);
  std::vector<Mat2O> tests;
  for (const WordSample& s : sampler.sample_delta(5)) tests.push_back(s.mat);
  for (int trial = 0; trial < 5; ++trial)
    tests.push_back(sampler.random_level2_word(8).mat);
  tests.push_back(sampler.random_word(9).mat);

  for (const Mat2O& a : tests) {
    const RacgVerdict base = certify_element(ctxs[0], a);
    for (std::size_t i = 1; i < ctxs.size(); ++i) {
      const RacgVerdict v = certify_element(ctxs[i], a);
      CHECK(v.integral == base.integral);
      CHECK(v.congruent_identity_mod2 == base.congruent_identity_mod2);
      CHECK(v.preserves_F == base.preserves_F);
      CHECK(v.det_one == base.det_one);
      CHECK(v.positive_sheet == base.positive_sheet);
    }
  }
}

TEST_CASE("distinct sampled elements give distinct witnesses") {
  const EmbedContext ctx = make_embed_context(3);
  WordSampler sampler(3, 13);
  std::set<std::string> inputs, witnesses;
  for (const WordSample& s : sampler.sample_delta(30)) {
    const Mat2O canon = (s.mat.a.c0() < 0 || (s.mat.a.c0() == 0 && s.mat.a.c1() < 0))
                            ? -s.mat
                            : s.mat;
    inputs.insert(canon.str());
    witnesses.insert(certify_element(ctx, s.mat).witness.str());
  }
  CHECK(inputs.size() == witnesses.size());
}

TEST_CASE("theorem_index residue table") {
  CHECK(theorem_index(1) == 48);
  CHECK(theorem_index(2) == 48);
  CHECK(theorem_index(5) == 48);
  CHECK(theorem_index(6) == 48);
  CHECK(theorem_index(3) == 120);
  CHECK(theorem_index(11) == 120);
  CHECK(theorem_index(7) == 72);
  CHECK(theorem_index(15) == 72);
  CHECK_THROWS_AS(theorem_index(4), std::invalid_argument);
}

TEST_CASE("certify_family: pass, index, serialization, reverification") {
  const Certificate cert = certify_family(3, 8, 2026);
  CHECK(cert.pass);
  CHECK(cert.index == 120);
  CHECK(cert.claim == "embed-family");
  REQUIRE(cert.foursquare.size() == 4);

  // Lossless round trip and full recomputation from the serialized form.
  const nlohmann::json j = cert.to_json();
  const Certificate back = Certificate::from_json(j);
  CHECK(back.to_json() == j);
  CHECK(reverify(back));

  // Same seed, same bytes.
  const Certificate again = certify_family(3, 8, 2026);
  CHECK(again.dump() == cert.dump());

  // Different seed still passes but samples differ.
  const Certificate other = certify_family(3, 8, 1);
  CHECK(other.pass);
  CHECK(other.dump() != cert.dump());
}

TEST_CASE("certify_family rejects tampered certificates") {
  Certificate cert = certify_family(2, 4, 7);
  CHECK(reverify(cert));
  cert.index = 47;
  CHECK(!reverify(cert));
}
