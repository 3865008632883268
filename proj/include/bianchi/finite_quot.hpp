#pragma once

#include "bianchi/quadint.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace bianchi {

// The quotient ring O_m / 2^k O_m. Elements are encoded in a byte as
// a0 | (a1 << k) with coordinates over {1, omega} reduced mod 2^k.
// Only k <= 3 is supported; everything here runs at k = 1 or 2.
class FiniteRing {
 public:
  using Elt = std::uint8_t;

  FiniteRing(std::int64_t m, int k);

  std::int64_t m() const { return m_; }
  int k() const { return k_; }
  int mod() const { return 1 << k_; }
  int size() const { return 1 << (2 * k_); }

  Elt make(int a0, int a1) const;
  Elt reduce(const QuadInt& q) const;
  int coord0(Elt e) const { return e & mask_; }
  int coord1(Elt e) const { return e >> k_; }

  Elt zero() const { return 0; }
  Elt one() const { return 1; }
  Elt add(Elt a, Elt b) const;
  Elt sub(Elt a, Elt b) const;
  Elt neg(Elt a) const { return sub(0, a); }
  Elt mul(Elt a, Elt b) const { return mul_[static_cast<std::size_t>(a) * size() + b]; }

  bool operator==(const FiniteRing& o) const { return m_ == o.m_ && k_ == o.k_; }

 private:
  std::int64_t m_;
  int k_, mask_;
  std::vector<Elt> mul_;
};

// 2x2 matrix over a FiniteRing, entries row-major (a, b, c, d).
struct FinMat {
  std::array<std::uint8_t, 4> e{};
  bool operator==(const FinMat&) const = default;
};

FinMat fmul(const FiniteRing& r, const FinMat& x, const FinMat& y);
FiniteRing::Elt fdet(const FiniteRing& r, const FinMat& x);
FinMat fneg(const FiniteRing& r, const FinMat& x);
// Lexicographically smaller of {x, -x} under the fixed entry ordering:
// the canonical representative of a PSL class.
FinMat psl_canonical(const FiniteRing& r, const FinMat& x);
std::uint32_t fkey(const FinMat& x);
FinMat fmat_from_key(std::uint32_t key);
FinMat freduce(const FiniteRing& r, const Mat2O& alpha);

// Finite matrix group given by its sorted list of canonical PSL keys.
class FinGroup {
 public:
  FinGroup(FiniteRing ring, std::vector<std::uint32_t> keys);

  const FiniteRing& ring() const { return ring_; }
  std::size_t order() const { return keys_.size(); }
  bool contains(const FinMat& x) const;
  const std::vector<std::uint32_t>& keys() const { return keys_; }

 private:
  FiniteRing ring_;
  std::vector<std::uint32_t> keys_;
};

// Full PSL(2, O_m/2^k) by brute force over all 4-tuples with det 1,
// modded by +-I. Guarded to k in {1, 2} (at most 65536 candidates).
FinGroup enumerate_psl(std::int64_t m, int k);

enum class TwoSplitting { Ramified, Inert, Split };
TwoSplitting splitting_of_two(std::int64_t m);

// Index of the principal congruence subgroup of PSL(2, O_m) at the given
// ideal over 2, by the classical index formula: N(I)^3 prod_{P|I}
// (1 - N(P)^-2), specialised to 6 when N(I) = 2 and halved when 2 is not
// in I (the +-I identification stays visible at level 4).
enum class IdealOver2 { RamifiedPrime, Two, Four };
BigInt index_formula(std::int64_t m, IdealOver2 ideal);

// Smallest subgroup of `ambient` containing `gens` (orbit closure).
FinGroup subgroup_closure(const FinGroup& ambient, const std::vector<FinMat>& gens);

// Image of Delta_m in PSL(2, O_m/4): the residue classes satisfying the
// defining congruences. Legitimate for index computations because Delta_m
// is the full preimage of this set.
FinGroup delta_image(std::int64_t m);
BigInt delta_index(std::int64_t m);  // [PSL(2, O_m/4)/± : delta_image]

// Figure-eight knot group data, all computed inside PSL(2, O_3/4).
struct Fig8Report {
  std::size_t g2_order = 0;            // |PSL(2, O_3/4)|
  std::size_t gamma8_image_order = 0;  // image of the two knot-group generators
  std::size_t delta_image_order = 0;
  std::size_t intersection_order = 0;
  BigInt gamma8_index_in_g2 = 0;       // recorded, not assumed
  BigInt index = 0;                    // [Gamma_8 : Gamma_8 n Delta_3]
};
Fig8Report fig8_report();
BigInt fig8_index();

}  // namespace bianchi
