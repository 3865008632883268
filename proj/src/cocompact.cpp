#include "bianchi/cocompact.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace bianchi {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

CocompactContext make_cocompact_context(std::int64_t m) {
  if (!is_prime(m) || m % 8 != 7)
    throw std::invalid_argument("cocompact: m must be a prime = 7 mod 8");
  const std::int64_t k = (m + 1) / 8;
  const Rational u(4 * k), v(4 * k - 1);

  SymmetricForm sq(QMat::diagonal({Rational(-m), 1, 1, 1}), "S_Q'_" + std::to_string(m));
  SymmetricForm sp(QMat::diagonal({Rational(-m), 1, 1, 1, Rational(m)}),
                   "S_P'_" + std::to_string(m));
  SymmetricForm sf(QMat::diagonal({-1, 1, 1, 1, 1}), "S_F_4");

  QMat a = QMat::identity(5), ai = QMat::identity(5);
  a.at(0, 0) = u;
  a.at(0, 4) = -v;
  a.at(4, 0) = -v;
  a.at(4, 4) = u;
  const Rational im = make_rational(1, m);
  ai.at(0, 0) = u * im;
  ai.at(0, 4) = v * im;
  ai.at(4, 0) = v * im;
  ai.at(4, 4) = u * im;

  if (a * ai != QMat::identity(5))
    throw std::logic_error("cocompact: closed-form inverse check failed");
  return {m, k, std::move(sq), std::move(sp), std::move(sf), std::move(a), std::move(ai)};
}

bool preserves_form(const QMat& n, const SymmetricForm& s) {
  if (!n.is_square() || n.rows() != s.dim())
    throw std::invalid_argument("preserves_form: dimension mismatch");
  return n.transposed() * s.matrix * n == s.matrix;
}

namespace {

void require_so_q_member(const QMat& n, std::int64_t m) {
  const SymmetricForm sq(QMat::diagonal({Rational(-m), 1, 1, 1}), "S_Q'");
  if (n.rows() != 4 || n.cols() != 4 || !n.is_integral() || !preserves_form(n, sq) ||
      det(n) != 1 || !(n.at(0, 0) > 0))
    throw std::invalid_argument("matrix is not in SO+(Q'_m; Z)");
}

}  // namespace

std::array<BigInt, 4> first_column_residue(const QMat& n, std::int64_t m) {
  require_so_q_member(n, m);
  std::array<BigInt, 4> r;
  for (std::size_t i = 0; i < 4; ++i)
    r[i] = floor_mod(BigInt(numerator(n.at(i, 0))), m);
  return r;
}

int sign_character(const QMat& n, std::int64_t m) {
  const auto col = first_column_residue(n, m);
  if (col[1] != 0 || col[2] != 0 || col[3] != 0)
    throw std::logic_error("sign_character: first column not (+-1, 0, 0, 0) mod m");
  if (col[0] == 1) return 1;
  if (col[0] == m - 1) return -1;
  throw std::logic_error("sign_character: corner not +-1 mod m");
}

namespace {

// 4x4 matrices over F_2 packed into 16 bits, row-major.
std::uint16_t pack_mod2(const QMat& m) {
  std::uint16_t bits = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (floor_mod(BigInt(numerator(m.at(i, j))), 2) == 1)
        bits |= static_cast<std::uint16_t>(1u << (i * 4 + j));
  return bits;
}

std::uint16_t mul_mod2(std::uint16_t a, std::uint16_t b) {
  std::uint16_t c = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      int bit = 0;
      for (int k = 0; k < 4; ++k)
        bit ^= ((a >> (i * 4 + k)) & 1) & ((b >> (k * 4 + j)) & 1);
      if (bit) c |= static_cast<std::uint16_t>(1u << (i * 4 + j));
    }
  return c;
}

}  // namespace

std::uint64_t mod2_closure_order(const std::vector<QMat>& gens) {
  std::vector<std::uint16_t> packed;
  for (const QMat& g : gens) {
    if (!g.is_integral() || g.rows() != 4 || g.cols() != 4)
      throw std::invalid_argument("mod2_closure_order: generators must be integral 4x4");
    packed.push_back(pack_mod2(g));
  }
  constexpr std::uint16_t id = 0x8421;  // bits (i,i)
  std::set<std::uint16_t> seen{id};
  std::vector<std::uint16_t> frontier{id};
  while (!frontier.empty()) {
    std::vector<std::uint16_t> next;
    for (std::uint16_t x : frontier)
      for (std::uint16_t g : packed) {
        const std::uint16_t p = mul_mod2(x, g);
        if (seen.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

const std::vector<QMat>& delta7_generators() {
  static const std::vector<QMat> gens = {
      QMat::from_int({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}}),
      QMat::from_int({{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}}),
      QMat::from_int({{8, 2, 2, 1}, {-14, -3, -4, -2}, {-14, -4, -3, -2}, {7, 2, 2, 0}}),
      QMat::from_int({{8, 0, 3, 0}, {0, 1, 0, 0}, {-21, 0, -8, 0}, {0, 0, 0, -1}})};
  return gens;
}

const std::vector<QMat>& so_q7_generators() {
  static const std::vector<QMat> gens = {
      QMat::from_int({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}}),
      QMat::from_int({{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}}),
      QMat::from_int({{6, 1, 2, 0}, {-7, -2, -2, 0}, {-14, -2, -5, 0}, {0, 0, 0, 1}})};
  return gens;
}

namespace {

QMat tetrahedral_second(const Rational& entry22) {
  QMat t = QMat::from_str({{"9/2", "1/2", "3/2", "1/2"},
                           {"-7/2", "1/2", "-3/2", "-1/2"},
                           {"-21/2", "-3/2", "0", "-3/2"},
                           {"7/2", "1/2", "3/2", "-1/2"}});
  t.at(2, 2) = entry22;
  return t;
}

}  // namespace

GammaEntryResolution resolve_gamma_entry() {
  const SymmetricForm sq(QMat::diagonal({Rational(-7), 1, 1, 1}), "S_Q'_7");
  GammaEntryResolution res;
  res.minus_seven_ok = preserves_form(tetrahedral_second(Rational(-7)), sq);
  res.minus_seven_half_ok = preserves_form(tetrahedral_second(make_rational(-7, 2)), sq);
  if (res.minus_seven_half_ok == res.minus_seven_ok)
    throw std::logic_error("gamma entry resolution is not unique");
  res.resolved = res.minus_seven_half_ok ? make_rational(-7, 2) : Rational(-7);
  return res;
}

std::vector<QMat> tetrahedral_generators() {
  return {QMat::from_int({{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, -1}}),
          tetrahedral_second(resolve_gamma_entry().resolved),
          QMat::from_int({{1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}, {0, -1, 0, 0}})};
}

QMat extend_to_5(const QMat& n4) {
  if (n4.rows() != 4 || n4.cols() != 4)
    throw std::invalid_argument("extend_to_5: expected a 4x4 matrix");
  QMat n = QMat::identity(5);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) n.at(i, j) = n4.at(i, j);
  return n;
}

QMat eval_cocompact_word(const std::string& word) {
  const auto& dg = delta7_generators();
  const auto& sg = so_q7_generators();
  QMat acc = QMat::identity(4);
  for (char ch : word) {
    switch (ch) {
      case 'a': acc = acc * dg[0]; break;
      case 'b': acc = acc * dg[1]; break;
      case 'c': acc = acc * dg[2]; break;
      case 'C': acc = acc * inverse(dg[2]); break;
      case 'd': acc = acc * dg[3]; break;
      case 'p': acc = acc * sg[0]; break;
      case 'q': acc = acc * sg[1]; break;
      case 'r': acc = acc * sg[2]; break;
      case 'R': acc = acc * inverse(sg[2]); break;
      default:
        throw std::invalid_argument(std::string("eval_cocompact_word: unknown letter '") +
                                    ch + "'");
    }
  }
  return acc;
}

namespace {

Certificate::Check structural(std::string word, bool ok) {
  return {std::move(word), {{"ok", ok}}, std::nullopt};
}

// The closed form of A' (I + 2M) A'^{-1} for a level-2 element of
// Delta^m viewed in SO^+(P'_m): entries linear in the coefficients of N.
// Returns false when N does not have the required divisibility pattern.
bool matches_conjugate_closed_form(const CocompactContext& ctx, const QMat& n4,
                                   const QMat& conj) {
  const Rational k(ctx.k);
  const BigInt two_m = 2 * BigInt(ctx.m);
  Rational a[4], b[4], c[4], d[4];
  for (std::size_t i = 0; i < 4; ++i) {
    a[i] = (n4.at(i, 0) - (i == 0 ? 1 : 0)) / Rational(two_m);
    b[i] = (n4.at(i, 1) - (i == 1 ? 1 : 0)) / 2;
    c[i] = (n4.at(i, 2) - (i == 2 ? 1 : 0)) / 2;
    d[i] = (n4.at(i, 3) - (i == 3 ? 1 : 0)) / 2;
    if (!is_integer(a[i]) || !is_integer(b[i]) || !is_integer(c[i]) || !is_integer(d[i]))
      return false;
  }
  QMat p(5, 5);
  p.at(0, 0) = 32 * a[0] * k * k + 1;
  p.at(0, 1) = 8 * k * b[0];
  p.at(0, 2) = 8 * k * c[0];
  p.at(0, 3) = 8 * k * d[0];
  p.at(0, 4) = 32 * k * k * a[0] - 8 * k * a[0];
  for (std::size_t i = 1; i < 4; ++i) {
    p.at(i, 0) = 8 * k * a[i];
    p.at(i, 1) = 2 * b[i] + (i == 1 ? 1 : 0);
    p.at(i, 2) = 2 * c[i] + (i == 2 ? 1 : 0);
    p.at(i, 3) = 2 * d[i] + (i == 3 ? 1 : 0);
    p.at(i, 4) = 8 * k * a[i] - 2 * a[i];
  }
  p.at(4, 0) = 8 * k * a[0] - 32 * k * k * a[0];
  p.at(4, 1) = 2 * b[0] - 8 * k * b[0];
  p.at(4, 2) = 2 * c[0] - 8 * k * c[0];
  p.at(4, 3) = 2 * d[0] - 8 * k * d[0];
  p.at(4, 4) = -32 * k * k * a[0] + 16 * k * a[0] - 2 * a[0] + 1;
  return p == conj;
}

}  // namespace

Certificate certify_cocompact(std::int64_t m, int sample_budget, std::uint64_t seed) {
  const CocompactContext ctx = make_cocompact_context(m);

  Certificate cert;
  cert.claim = "cocompact";
  cert.m = m;

  const BigInt u = 4 * BigInt(ctx.k), v = u - 1;
  cert.checks.push_back(structural("#m=(4k)^2-(4k-1)^2", u * u - v * v == m));
  cert.checks.push_back(structural("#A*Ainv=I", ctx.A * ctx.A_inv == QMat::identity(5)));
  Certificate::Check equiv = structural("#At*S_F*A=S_P",
                                        check_equivalence(ctx.A, ctx.S_F, ctx.S_P));
  equiv.witness = ctx.A;
  cert.checks.push_back(std::move(equiv));
  cert.checks.push_back(structural("#det-A=m", det(ctx.A) == m));

  if (m == 7) {
    bool so_ok = true;
    for (const QMat& g : so_q7_generators()) so_ok = so_ok && preserves_form(g, ctx.S_Q);
    cert.checks.push_back(structural("#so-gens-preserve-Q", so_ok));

    bool d_ok = true, d_sign_ok = true;
    for (const QMat& g : delta7_generators()) {
      d_ok = d_ok && preserves_form(g, ctx.S_Q);
      d_sign_ok = d_sign_ok && sign_character(g, m) == 1;
    }
    cert.checks.push_back(structural("#delta7-gens-preserve-Q", d_ok));
    cert.checks.push_back(structural("#delta7-gens-sign-character", d_sign_ok));

    const GammaEntryResolution res = resolve_gamma_entry();
    cert.checks.push_back(structural(
        "#gamma-entry(2,2)=" + res.resolved.str(),
        res.minus_seven_half_ok != res.minus_seven_ok));
    bool g_ok = true;
    for (const QMat& g : tetrahedral_generators()) g_ok = g_ok && preserves_form(g, ctx.S_Q);
    cert.checks.push_back(structural("#gamma-gens-preserve-Q", g_ok));

    const std::uint64_t order = mod2_closure_order(delta7_generators());
    cert.index = order;
    cert.checks.push_back(structural("#mod2-closure-order=24", order == 24));

    // Sampled words: Delta^7_(2) elements get the five 5x5 checks plus the
    // closed-form comparison; plain SO words get the first-column lemma;
    // pairs get the character multiplicativity.
    std::mt19937_64 rng(seed);
    const std::string delta_alpha = "abcCd";
    const std::string so_alpha = "pqrR";
    const auto random_word = [&](const std::string& alpha, int len) {
      std::string w;
      for (int i = 0; i < len; ++i) w.push_back(alpha[rng() % alpha.size()]);
      return w;
    };

    int found = 0;
    for (int attempt = 0; attempt < 20000 * sample_budget && found < sample_budget;
         ++attempt) {
      const std::string w = random_word(delta_alpha, 16);
      const QMat n4 = eval_cocompact_word(w);
      const auto red = reduce_mod(n4, 2);
      if (!red || *red != QMat::identity(4)) continue;
      ++found;
      const QMat conj = ctx.A * extend_to_5(n4) * ctx.A_inv;
      std::map<std::string, bool> verdict{
          {"integral", conj.is_integral()},
          {"congruent_identity_mod2",
           conj.is_integral() && reduce_mod(conj, 2) == QMat::identity(5)},
          {"preserves_F", preserves_form(conj, ctx.S_F)},
          {"det_one", det(conj) == 1},
          {"positive_sheet", conj.at(0, 0) > 0},
          {"closed_form_match", matches_conjugate_closed_form(ctx, n4, conj)}};
      cert.checks.push_back({w, std::move(verdict), conj});
    }
    if (found < sample_budget)
      throw std::runtime_error("certify_cocompact: sampling budget exhausted");

    for (int i = 0; i < std::max(sample_budget, 25); ++i) {
      const std::string w = random_word(so_alpha, 10);
      const QMat n = eval_cocompact_word(w);
      const auto col = first_column_residue(n, m);
      const bool lemma = (col[1] == 0 && col[2] == 0 && col[3] == 0) &&
                         (col[0] == 1 || col[0] == m - 1);
      cert.checks.push_back({w, {{"first_column_lemma", lemma}}, n});
    }

    for (int i = 0; i < std::max(4 * sample_budget, 100); ++i) {
      const std::string wu = random_word(so_alpha, 8), wv = random_word(so_alpha, 8);
      const QMat nu = eval_cocompact_word(wu), nv = eval_cocompact_word(wv);
      const bool mult =
          sign_character(nu * nv, m) == sign_character(nu, m) * sign_character(nv, m);
      cert.checks.push_back({wu + "|" + wv, {{"chi_multiplicative", mult}}, std::nullopt});
    }
  }

  cert.pass = true;
  for (const auto& c : cert.checks)
    if (!c.ok()) cert.pass = false;
  return cert;
}

bool reverify_cocompact(const Certificate& cert) {
  if (cert.claim != "cocompact") return false;
  const CocompactContext ctx = make_cocompact_context(cert.m);
  const BigInt u = 4 * BigInt(ctx.k), v = u - 1;

  for (const auto& check : cert.checks) {
    if (!check.word.empty() && check.word[0] == '#') {
      bool recomputed;
      if (check.word == "#m=(4k)^2-(4k-1)^2")
        recomputed = u * u - v * v == cert.m;
      else if (check.word == "#A*Ainv=I")
        recomputed = ctx.A * ctx.A_inv == QMat::identity(5);
      else if (check.word == "#At*S_F*A=S_P")
        recomputed = check_equivalence(ctx.A, ctx.S_F, ctx.S_P);
      else if (check.word == "#det-A=m")
        recomputed = det(ctx.A) == cert.m;
      else if (check.word == "#so-gens-preserve-Q") {
        recomputed = true;
        for (const QMat& g : so_q7_generators())
          recomputed = recomputed && preserves_form(g, ctx.S_Q);
      } else if (check.word == "#delta7-gens-preserve-Q") {
        recomputed = true;
        for (const QMat& g : delta7_generators())
          recomputed = recomputed && preserves_form(g, ctx.S_Q);
      } else if (check.word == "#delta7-gens-sign-character") {
        recomputed = true;
        for (const QMat& g : delta7_generators())
          recomputed = recomputed && sign_character(g, cert.m) == 1;
      } else if (check.word.rfind("#gamma-entry", 0) == 0) {
        const GammaEntryResolution res = resolve_gamma_entry();
        recomputed = res.minus_seven_half_ok != res.minus_seven_ok;
      } else if (check.word == "#gamma-gens-preserve-Q") {
        recomputed = true;
        for (const QMat& g : tetrahedral_generators())
          recomputed = recomputed && preserves_form(g, ctx.S_Q);
      } else if (check.word == "#mod2-closure-order=24") {
        recomputed = mod2_closure_order(delta7_generators()) == 24 &&
                     cert.index == 24;
      } else {
        return false;  // unknown structural check
      }
      if (check.verdict != std::map<std::string, bool>{{"ok", recomputed}}) return false;
      continue;
    }

    // Sampled entries. Pairs are separated by '|'.
    const auto bar = check.word.find('|');
    if (bar != std::string::npos) {
      const QMat nu = eval_cocompact_word(check.word.substr(0, bar));
      const QMat nv = eval_cocompact_word(check.word.substr(bar + 1));
      const bool mult = sign_character(nu * nv, cert.m) ==
                        sign_character(nu, cert.m) * sign_character(nv, cert.m);
      if (check.verdict != std::map<std::string, bool>{{"chi_multiplicative", mult}})
        return false;
      continue;
    }
    const QMat n = eval_cocompact_word(check.word);
    if (check.verdict.count("first_column_lemma")) {
      const auto col = first_column_residue(n, cert.m);
      const bool lemma = (col[1] == 0 && col[2] == 0 && col[3] == 0) &&
                         (col[0] == 1 || col[0] == cert.m - 1);
      if (check.witness && *check.witness != n) return false;
      if (check.verdict != std::map<std::string, bool>{{"first_column_lemma", lemma}})
        return false;
      continue;
    }
    const QMat conj = ctx.A * extend_to_5(n) * ctx.A_inv;
    if (check.witness && *check.witness != conj) return false;
    const std::map<std::string, bool> verdict{
        {"integral", conj.is_integral()},
        {"congruent_identity_mod2",
         conj.is_integral() && reduce_mod(conj, 2) == QMat::identity(5)},
        {"preserves_F", preserves_form(conj, ctx.S_F)},
        {"det_one", det(conj) == 1},
        {"positive_sheet", conj.at(0, 0) > 0},
        {"closed_form_match", matches_conjugate_closed_form(ctx, n, conj)}};
    if (verdict != check.verdict) return false;
  }

  bool pass = true;
  for (const auto& c : cert.checks)
    if (!c.ok()) pass = false;
  return pass == cert.pass;
}

}  // namespace bianchi
