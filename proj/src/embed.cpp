#include "bianchi/embed.hpp"

#include "bianchi/finite_quot.hpp"
#include "bianchi/sampling.hpp"

namespace bianchi {

std::map<std::string, bool> RacgVerdict::as_map() const {
  return {{"integral", integral},
          {"congruent_identity_mod2", congruent_identity_mod2},
          {"preserves_F", preserves_F},
          {"det_one", det_one},
          {"positive_sheet", positive_sheet},
          {"pass", pass()}};
}

EmbedContext make_embed_context(std::int64_t m) {
  return make_embed_context(m, four_square(m));
}

EmbedContext make_embed_context(std::int64_t m, const FourSquare& fs) {
  auto [a, ai] = build_A_m(m, fs);
  return {m, fs, build_Q_m(m), build_P_m(m), build_F(6), std::move(a), std::move(ai)};
}

QMat extend_to_7(const QMat& phi4) {
  if (phi4.rows() != 4 || phi4.cols() != 4)
    throw std::invalid_argument("extend_to_7: expected a 4x4 matrix");
  QMat n = QMat::identity(7);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) n.at(i, j) = phi4.at(i, j);
  return n;
}

RacgVerdict racg_checks(QMat witness, const SymmetricForm& S_F) {
  RacgVerdict v;
  v.integral = witness.is_integral();
  if (v.integral) {
    const auto red = reduce_mod(witness, 2);
    v.congruent_identity_mod2 = red && *red == QMat::identity(witness.rows());
  }
  v.preserves_F = witness.transposed() * S_F.matrix * witness == S_F.matrix;
  v.det_one = det(witness) == 1;
  v.positive_sheet = witness.at(0, 0) > 0;
  v.witness = std::move(witness);
  return v;
}

RacgVerdict certify_element(const EmbedContext& ctx, const Mat2O& alpha) {
  if (alpha.m() != ctx.m)
    throw std::invalid_argument("certify_element: m mismatch");
  return racg_checks(ctx.A * extend_to_7(phi_m(alpha)) * ctx.A_inv, ctx.S_F);
}

BigInt theorem_index(std::int64_t m) {
  switch (m_class(m)) {
    case MClass::OneTwo:
      return 48;
    case MClass::Three:
      return m % 8 == 3 ? 120 : 72;
  }
  throw std::logic_error("theorem_index: unreachable");
}

namespace {

Certificate::Check structural(std::string word, bool ok) {
  return {std::move(word), {{"ok", ok}}, std::nullopt};
}

bool p_block_matches_q(const EmbedContext& ctx) {
  const Rational half = make_rational(1, 2);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (ctx.S_P.matrix.at(i, j) != half * ctx.S_Q.matrix.at(i, j)) return false;
  return true;
}

bool det_a_matches(const EmbedContext& ctx) {
  const BigInt m2 = BigInt(ctx.m) * ctx.m;
  const Rational expect = m_class(ctx.m) == MClass::OneTwo
                              ? make_rational(m2, 2)
                              : -make_rational(m2, 4);
  return det(ctx.A) == expect;
}

}  // namespace

Certificate certify_family(std::int64_t m, int sample_budget, std::uint64_t seed) {
  const EmbedContext ctx = make_embed_context(m);

  Certificate cert;
  cert.claim = "embed-family";
  cert.m = m;
  cert.foursquare = {ctx.fs.w, ctx.fs.x, ctx.fs.y, ctx.fs.z};

  cert.checks.push_back(structural("#foursquare", ctx.fs.sum_of_squares() == m));
  cert.checks.push_back(structural("#A*Ainv=I", ctx.A * ctx.A_inv == QMat::identity(7)));
  Certificate::Check equiv = structural(
      "#At*S_F*A=S_P", check_equivalence(ctx.A, ctx.S_F, ctx.S_P));
  equiv.witness = ctx.A;
  cert.checks.push_back(std::move(equiv));
  cert.checks.push_back(structural("#S_P-extends-S_Q/2", p_block_matches_q(ctx)));
  cert.checks.push_back(structural("#det-A", det_a_matches(ctx)));

  WordSampler sampler(m, seed);
  for (const WordSample& s : sampler.sample_delta(sample_budget)) {
    RacgVerdict v = certify_element(ctx, s.mat);
    cert.checks.push_back({s.word, v.as_map(), std::move(v.witness)});
  }

  cert.index = delta_index(m);
  cert.checks.push_back(structural("#index", cert.index == theorem_index(m)));

  cert.pass = true;
  for (const auto& c : cert.checks)
    if (!c.ok()) cert.pass = false;
  return cert;
}

bool reverify_embed(const Certificate& cert) {
  if (cert.claim != "embed-family" || cert.foursquare.size() != 4) return false;
  const FourSquare fs{cert.foursquare[0], cert.foursquare[1], cert.foursquare[2],
                      cert.foursquare[3]};
  const EmbedContext ctx = make_embed_context(cert.m, fs);

  for (const auto& check : cert.checks) {
    bool recomputed = false;
    if (check.word == "#foursquare")
      recomputed = fs.sum_of_squares() == cert.m;
    else if (check.word == "#A*Ainv=I")
      recomputed = ctx.A * ctx.A_inv == QMat::identity(7);
    else if (check.word == "#At*S_F*A=S_P")
      recomputed = check_equivalence(ctx.A, ctx.S_F, ctx.S_P);
    else if (check.word == "#S_P-extends-S_Q/2")
      recomputed = p_block_matches_q(ctx);
    else if (check.word == "#det-A")
      recomputed = det_a_matches(ctx);
    else if (check.word == "#index")
      recomputed = delta_index(cert.m) == cert.index;
    else {
      // Sampled word: rebuild the 2x2, redo the conjugation, compare.
      RacgVerdict v = certify_element(ctx, eval_word(cert.m, check.word));
      if (check.witness && *check.witness != v.witness) return false;
      if (v.as_map() != check.verdict) return false;
      continue;
    }
    if (check.verdict != std::map<std::string, bool>{{"ok", recomputed}}) return false;
  }

  bool pass = true;
  for (const auto& c : cert.checks)
    if (!c.ok()) pass = false;
  return pass == cert.pass && cert.index == delta_index(cert.m);
}

}  // namespace bianchi
