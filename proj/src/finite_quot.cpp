#include "bianchi/finite_quot.hpp"

#include "bianchi/sampling.hpp"

#include <algorithm>
#include <stdexcept>

namespace bianchi {

FiniteRing::FiniteRing(std::int64_t m, int k) : m_(m), k_(k), mask_((1 << k) - 1) {
  if (k < 1 || k > 3) throw std::invalid_argument("FiniteRing: k must be 1..3");
  m_class(m);
  const int n = size();
  const int md = mod();
  // omega^2 reduced mod 2^k.
  int w0, w1;
  if (m_class(m) == MClass::OneTwo) {
    w0 = static_cast<int>(((-m) % md + md) % md);
    w1 = 0;
  } else {
    const std::int64_t kk = (m + 1) / 4;
    w0 = static_cast<int>(((-kk) % md + md) % md);
    w1 = 1;
  }
  mul_.resize(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int a0 = a & mask_, a1 = a >> k_;
      const int b0 = b & mask_, b1 = b >> k_;
      const int s = a1 * b1;
      const int r0 = (a0 * b0 + s * w0) & mask_;
      const int r1 = (a0 * b1 + a1 * b0 + s * w1) & mask_;
      mul_[static_cast<std::size_t>(a) * n + b] = static_cast<Elt>(r0 | (r1 << k_));
    }
}

FiniteRing::Elt FiniteRing::make(int a0, int a1) const {
  return static_cast<Elt>((a0 & mask_) | ((a1 & mask_) << k_));
}

FiniteRing::Elt FiniteRing::reduce(const QuadInt& q) const {
  if (q.m() != m_) throw std::invalid_argument("FiniteRing::reduce: wrong m");
  const BigInt md = mod();
  return make(static_cast<int>(floor_mod(q.c0(), md)),
              static_cast<int>(floor_mod(q.c1(), md)));
}

FiniteRing::Elt FiniteRing::add(Elt a, Elt b) const {
  const int r0 = (coord0(a) + coord0(b)) & mask_;
  const int r1 = (coord1(a) + coord1(b)) & mask_;
  return static_cast<Elt>(r0 | (r1 << k_));
}

FiniteRing::Elt FiniteRing::sub(Elt a, Elt b) const {
  const int r0 = (coord0(a) - coord0(b)) & mask_;
  const int r1 = (coord1(a) - coord1(b)) & mask_;
  return static_cast<Elt>(r0 | (r1 << k_));
}

FinMat fmul(const FiniteRing& r, const FinMat& x, const FinMat& y) {
  FinMat z;
  z.e[0] = r.add(r.mul(x.e[0], y.e[0]), r.mul(x.e[1], y.e[2]));
  z.e[1] = r.add(r.mul(x.e[0], y.e[1]), r.mul(x.e[1], y.e[3]));
  z.e[2] = r.add(r.mul(x.e[2], y.e[0]), r.mul(x.e[3], y.e[2]));
  z.e[3] = r.add(r.mul(x.e[2], y.e[1]), r.mul(x.e[3], y.e[3]));
  return z;
}

FiniteRing::Elt fdet(const FiniteRing& r, const FinMat& x) {
  return r.sub(r.mul(x.e[0], x.e[3]), r.mul(x.e[1], x.e[2]));
}

FinMat fneg(const FiniteRing& r, const FinMat& x) {
  FinMat z;
  for (int i = 0; i < 4; ++i) z.e[i] = r.neg(x.e[i]);
  return z;
}

FinMat psl_canonical(const FiniteRing& r, const FinMat& x) {
  const FinMat n = fneg(r, x);
  return n.e < x.e ? n : x;
}

std::uint32_t fkey(const FinMat& x) {
  return static_cast<std::uint32_t>(x.e[0]) | (static_cast<std::uint32_t>(x.e[1]) << 8) |
         (static_cast<std::uint32_t>(x.e[2]) << 16) |
         (static_cast<std::uint32_t>(x.e[3]) << 24);
}

FinMat fmat_from_key(std::uint32_t key) {
  FinMat x;
  x.e = {static_cast<std::uint8_t>(key & 0xff), static_cast<std::uint8_t>((key >> 8) & 0xff),
         static_cast<std::uint8_t>((key >> 16) & 0xff),
         static_cast<std::uint8_t>((key >> 24) & 0xff)};
  return x;
}

FinMat freduce(const FiniteRing& r, const Mat2O& alpha) {
  FinMat x;
  x.e[0] = r.reduce(alpha.a);
  x.e[1] = r.reduce(alpha.b);
  x.e[2] = r.reduce(alpha.c);
  x.e[3] = r.reduce(alpha.d);
  return x;
}

FinGroup::FinGroup(FiniteRing ring, std::vector<std::uint32_t> keys)
    : ring_(std::move(ring)), keys_(std::move(keys)) {
  std::sort(keys_.begin(), keys_.end());
  keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());
}

bool FinGroup::contains(const FinMat& x) const {
  const std::uint32_t key = fkey(psl_canonical(ring_, x));
  return std::binary_search(keys_.begin(), keys_.end(), key);
}

FinGroup enumerate_psl(std::int64_t m, int k) {
  if (k != 1 && k != 2)
    throw std::invalid_argument("enumerate_psl: k must be 1 or 2");
  FiniteRing ring(m, k);
  const int n = ring.size();
  std::vector<std::uint32_t> keys;
  FinMat x;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          x.e = {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                 static_cast<std::uint8_t>(c), static_cast<std::uint8_t>(d)};
          if (fdet(ring, x) != ring.one()) continue;
          keys.push_back(fkey(psl_canonical(ring, x)));
        }
  return {std::move(ring), std::move(keys)};
}

TwoSplitting splitting_of_two(std::int64_t m) {
  switch (m_class(m)) {
    case MClass::OneTwo:
      return TwoSplitting::Ramified;
    case MClass::Three:
      return m % 8 == 3 ? TwoSplitting::Inert : TwoSplitting::Split;
  }
  throw std::logic_error("splitting_of_two: unreachable");
}

BigInt index_formula(std::int64_t m, IdealOver2 ideal) {
  const TwoSplitting sp = splitting_of_two(m);
  // Norms of the primes over 2 and of the ideal itself.
  std::vector<BigInt> prime_norms;
  switch (sp) {
    case TwoSplitting::Ramified:
      prime_norms = {2};
      break;
    case TwoSplitting::Inert:
      prime_norms = {4};
      break;
    case TwoSplitting::Split:
      prime_norms = {2, 2};
      break;
  }

  BigInt norm;
  bool contains_two = false;
  switch (ideal) {
    case IdealOver2::RamifiedPrime:
      if (sp != TwoSplitting::Ramified)
        throw std::invalid_argument("index_formula: 2 is not ramified for this m");
      norm = 2;
      contains_two = false;
      break;
    case IdealOver2::Two:
      norm = 4;
      contains_two = true;
      break;
    case IdealOver2::Four:
      norm = 16;
      contains_two = false;
      break;
  }

  if (norm == 2) return 6;  // the degenerate small case

  Rational idx = Rational(norm * norm * norm);
  if (!contains_two) idx /= 2;
  for (const BigInt& np : prime_norms)
    idx *= Rational(1) - make_rational(1, np * np);
  if (!is_integer(idx)) throw std::logic_error("index_formula: non-integral index");
  return BigInt(numerator(idx));
}

FinGroup subgroup_closure(const FinGroup& ambient, const std::vector<FinMat>& gens) {
  const FiniteRing& ring = ambient.ring();
  for (const FinMat& g : gens)
    if (!ambient.contains(g))
      throw std::invalid_argument("subgroup_closure: generator outside ambient group");

  std::vector<std::uint32_t> sorted_keys{fkey(psl_canonical(ring, FinMat{{1, 0, 0, 1}}))};
  std::vector<std::uint32_t> frontier = sorted_keys;
  while (!frontier.empty()) {
    std::vector<std::uint32_t> next;
    for (std::uint32_t key : frontier) {
      const FinMat x = fmat_from_key(key);
      for (const FinMat& g : gens) {
        const std::uint32_t pk = fkey(psl_canonical(ring, fmul(ring, x, g)));
        if (!std::binary_search(sorted_keys.begin(), sorted_keys.end(), pk) &&
            std::find(next.begin(), next.end(), pk) == next.end())
          next.push_back(pk);
      }
    }
    sorted_keys.insert(sorted_keys.end(), next.begin(), next.end());
    std::sort(sorted_keys.begin(), sorted_keys.end());
    frontier = std::move(next);
  }
  return {ring, std::move(sorted_keys)};
}

namespace {

// The Delta_m congruences evaluated on one matrix over O_m/4.
bool delta_residue_one_sign(const FiniteRing& r, const FinMat& x) {
  const auto diag_ok = [&](FiniteRing::Elt e) {
    return r.coord0(e) % 2 == 1 && r.coord1(e) % 2 == 0;
  };
  const auto off_ok = [&](FiniteRing::Elt e) {
    return r.coord0(e) % 2 == 0 && r.coord1(e) % 2 == 0;
  };
  if (!diag_ok(x.e[0]) || !off_ok(x.e[1]) || !off_ok(x.e[2]) || !diag_ok(x.e[3]))
    return false;
  if (m_class(r.m()) == MClass::OneTwo) return true;
  return (r.coord1(x.e[1]) + r.coord1(x.e[2])) % 4 == 0;
}

bool delta_residue(const FiniteRing& r, const FinMat& x) {
  return delta_residue_one_sign(r, x) || delta_residue_one_sign(r, fneg(r, x));
}

}  // namespace

FinGroup delta_image(std::int64_t m) {
  FinGroup g = enumerate_psl(m, 2);
  std::vector<std::uint32_t> keys;
  for (std::uint32_t key : g.keys())
    if (delta_residue(g.ring(), fmat_from_key(key))) keys.push_back(key);
  return {g.ring(), std::move(keys)};
}

BigInt delta_index(std::int64_t m) {
  const FinGroup g = enumerate_psl(m, 2);
  const FinGroup d = delta_image(m);
  if (g.order() % d.order() != 0)
    throw std::logic_error("delta_index: image order does not divide group order");
  return BigInt(g.order() / d.order());
}

Fig8Report fig8_report() {
  constexpr std::int64_t m = 3;
  const FinGroup g2 = enumerate_psl(m, 2);
  const FiniteRing& ring = g2.ring();
  const std::vector<FinMat> gens = {freduce(ring, gen_T(m)), freduce(ring, gen_W(m))};
  const FinGroup h = subgroup_closure(g2, gens);
  const FinGroup d = delta_image(m);

  std::vector<std::uint32_t> inter;
  std::set_intersection(h.keys().begin(), h.keys().end(), d.keys().begin(),
                        d.keys().end(), std::back_inserter(inter));

  Fig8Report rep;
  rep.g2_order = g2.order();
  rep.gamma8_image_order = h.order();
  rep.delta_image_order = d.order();
  rep.intersection_order = inter.size();
  if (h.order() % inter.size() != 0 || g2.order() % h.order() != 0)
    throw std::logic_error("fig8_report: non-dividing subgroup orders");
  rep.gamma8_index_in_g2 = BigInt(g2.order() / h.order());
  rep.index = BigInt(h.order() / inter.size());
  return rep;
}

BigInt fig8_index() { return fig8_report().index; }

}  // namespace bianchi
