#pragma once

#include "bianchi/matrix.hpp"

#include <cstdint>
#include <string>
#include <utility>

namespace bianchi {

// Integral/rational symmetric matrix with a descriptive tag. Symmetry is
// checked at construction so downstream code can take it for granted.
struct SymmetricForm {
  QMat matrix;
  std::string label;

  SymmetricForm(QMat m, std::string lbl);
  std::size_t dim() const { return matrix.rows(); }
};

struct FourSquare {
  BigInt w, x, y, z;
  BigInt sum_of_squares() const { return w * w + x * x + y * y + z * z; }
};

bool is_square_free(std::int64_t m);

// Residue class of a square-free positive m that governs the ring of
// integers of Q(sqrt(-m)) and every associated form.
enum class MClass { OneTwo, Three };
MClass m_class(std::int64_t m);

// Deterministic Lagrange decomposition m = w^2+x^2+y^2+z^2: the
// lexicographically smallest tuple with w >= x >= y >= z >= 0. Any
// decomposition works algebraically; fixing one keeps certificates
// reproducible.
FourSquare four_square(std::int64_t m);

// Symmetric matrix of the quaternary form attached to PSL(2, O_m):
// 2x0x1 + 2x2^2 + 2m x3^2, or 2x0x1 + 2x2^2 + 2x2x3 + (m+1)/2 x3^2.
SymmetricForm build_Q_m(std::int64_t m);

// diag(-1, 1, ..., 1) of size n+1, the standard signature-(n,1) form.
// Restricted to 2 <= n <= 7, the range where its level-2 integral
// orthogonal group is a reflection group of an all-right polytope.
SymmetricForm build_F(int n);

// 7x7 symmetric matrix of (1/2)(Q_m + 2m x4^2 + 2m x5^2 + 2m x6^2).
SymmetricForm build_P_m(std::int64_t m);

// The explicit rational 7x7 change of basis and its inverse, built from a
// four-square decomposition of m. Satisfies A^t S_F A = S_{P_m}.
std::pair<QMat, QMat> build_A_m(std::int64_t m, const FourSquare& fs);

// Witnessed equivalence test: a^t s1 a == s2, exactly.
bool check_equivalence(const QMat& a, const SymmetricForm& s1, const SymmetricForm& s2);

}  // namespace bianchi
