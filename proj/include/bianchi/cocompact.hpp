#pragma once

#include "bianchi/certificate.hpp"
#include "bianchi/quadform.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace bianchi {

bool is_prime(std::int64_t n);

// Data for the cocompact family at a prime m = 8k - 1: the forms
// Q' = diag(-m,1,1,1), P' = diag(-m,1,1,1,m), F_4 = diag(-1,1,1,1,1) and
// the 5x5 conjugator built from m = (4k)^2 - (4k-1)^2.
struct CocompactContext {
  std::int64_t m, k;
  SymmetricForm S_Q, S_P, S_F;
  QMat A, A_inv;
};

CocompactContext make_cocompact_context(std::int64_t m);

// n^t S n == S, exactly.
bool preserves_form(const QMat& n, const SymmetricForm& s);

// First column of an element of SO^+(Q'_m; Z) reduced mod m. Validates
// membership (integral, form-preserving, positive corner, det 1) and
// returns the four residues; they land in {(1,0,0,0), (m-1,0,0,0)}.
std::array<BigInt, 4> first_column_residue(const QMat& n, std::int64_t m);

// The character SO^+(Q'_m; Z) -> {+-1} reading the (0,0) entry mod m.
int sign_character(const QMat& n, std::int64_t m);

// Order of the group generated by the mod-2 reductions of integral 4x4
// matrices (closure over the two-element field).
std::uint64_t mod2_closure_order(const std::vector<QMat>& gens);

// Printed generator sets for the m = 7 example.
const std::vector<QMat>& delta7_generators();
const std::vector<QMat>& so_q7_generators();

// The tetrahedral rotation group generators have one ambiguous entry in
// the second matrix; exactly one of the candidate readings preserves
// Q'_7, and the resolver records which.
struct GammaEntryResolution {
  Rational resolved;
  bool minus_seven_ok = false;
  bool minus_seven_half_ok = false;
};
GammaEntryResolution resolve_gamma_entry();
std::vector<QMat> tetrahedral_generators();

// diag(n, 1): a 4x4 form isometry viewed inside SO^+(P'_m).
QMat extend_to_5(const QMat& n4);

// Word evaluation over the m = 7 generator alphabets:
// a,b,c,d = the four Delta^7 generators, C = inverse of the third;
// p,q,r = the three SO^+(Q'_7;Z) generators, R = inverse of the third.
QMat eval_cocompact_word(const std::string& word);

// Sampled certification that Delta^m_(2) lands in SO^+(F_4; Z)_(2) after
// conjugation, plus the order-24 mod-2 computation and the generator
// form checks. Sampling requires the printed generators, so sample
// checks run for m = 7 only; other valid m get the structural checks.
Certificate certify_cocompact(std::int64_t m, int sample_budget, std::uint64_t seed);

bool reverify_cocompact(const Certificate& cert);

}  // namespace bianchi
