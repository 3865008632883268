#pragma once

#include "bianchi/certificate.hpp"
#include "bianchi/phi.hpp"
#include "bianchi/quadform.hpp"

#include <cstdint>

namespace bianchi {

// Outcome of the five membership checks for SO^+(F_n; Z)_(2): the witness
// matrix must be integral, congruent to I mod 2, preserve the form, have
// determinant 1, and fix the positive sheet (entry (0,0) > 0).
struct RacgVerdict {
  bool integral = false;
  bool congruent_identity_mod2 = false;
  bool preserves_F = false;
  bool det_one = false;
  bool positive_sheet = false;
  QMat witness;

  bool pass() const {
    return integral && congruent_identity_mod2 && preserves_F && det_one &&
           positive_sheet;
  }
  std::map<std::string, bool> as_map() const;
};

// Everything fixed once m (and a four-square decomposition) is chosen.
struct EmbedContext {
  std::int64_t m;
  FourSquare fs;
  SymmetricForm S_Q, S_P, S_F;
  QMat A, A_inv;
};

EmbedContext make_embed_context(std::int64_t m);
EmbedContext make_embed_context(std::int64_t m, const FourSquare& fs);

// Block diagonal (phi, I_3): the image of SO^+(Q_m) inside SO^+(P_m).
QMat extend_to_7(const QMat& phi4);

// Run the five checks on an already-conjugated witness.
RacgVerdict racg_checks(QMat witness, const SymmetricForm& S_F);

// Witness C = A * diag(phi_m(alpha), I_3) * A^{-1} plus its verdict.
// No precondition is enforced: for alpha outside Delta_m the verdict
// simply records which checks fail.
RacgVerdict certify_element(const EmbedContext& ctx, const Mat2O& alpha);

// [PSL(2, O_m) : Delta_m] as claimed: 48 / 120 / 72 by residue class.
BigInt theorem_index(std::int64_t m);

// Bundle for one m: form-equivalence and A_m identities, `sample_budget`
// seeded Delta_m samples with their verdicts, and the subgroup index
// computed through the mod-4 quotient.
Certificate certify_family(std::int64_t m, int sample_budget, std::uint64_t seed);

bool reverify_embed(const Certificate& cert);

}  // namespace bianchi
