#include "bianchi/phi.hpp"

namespace bianchi {

QMat phi_m(const Mat2O& alpha) {
  const std::int64_t m = alpha.m();
  const QuadInt dt = det(alpha);
  if (!(dt == QuadInt::integer(m, 1) || dt == QuadInt::integer(m, -1)))
    throw std::invalid_argument("phi_m: determinant must be +1 or -1");

  const BigInt &a0 = alpha.a.c0(), &a1 = alpha.a.c1();
  const BigInt &b0 = alpha.b.c0(), &b1 = alpha.b.c1();
  const BigInt &c0 = alpha.c.c0(), &c1 = alpha.c.c1();
  const BigInt &d0 = alpha.d.c0(), &d1 = alpha.d.c1();

  BigInt e[4][4];
  if (m_class(m) == MClass::OneTwo) {
    e[0][0] = d0 * d0 + m * d1 * d1;
    e[0][1] = -c0 * c0 - m * c1 * c1;
    e[0][2] = 2 * (c0 * d0 + m * c1 * d1);
    e[0][3] = -2 * m * (c1 * d0 - c0 * d1);
    e[1][0] = -b0 * b0 - m * b1 * b1;
    e[1][1] = a0 * a0 + m * a1 * a1;
    e[1][2] = -2 * (a0 * b0 + m * a1 * b1);
    e[1][3] = 2 * m * (a1 * b0 - a0 * b1);
    e[2][0] = b0 * d0 + m * b1 * d1;
    e[2][1] = -a0 * c0 - m * a1 * c1;
    e[2][2] = b0 * c0 + m * b1 * c1 + a0 * d0 + m * a1 * d1;
    e[2][3] = m * (b1 * c0 - b0 * c1 - a1 * d0 + a0 * d1);
    e[3][0] = b1 * d0 - b0 * d1;
    e[3][1] = a0 * c1 - a1 * c0;
    e[3][2] = b1 * c0 - b0 * c1 + a1 * d0 - a0 * d1;
    e[3][3] = -b0 * c0 - m * b1 * c1 + a0 * d0 + m * a1 * d1;
  } else {
    const BigInt k = (m + 1) / 4;
    e[0][0] = d0 * d0 + d1 * d0 + k * d1 * d1;
    e[0][1] = -c0 * c0 - c1 * c0 - k * c1 * c1;
    e[0][2] = 2 * c0 * d0 + c1 * d0 + c0 * d1 + 2 * k * c1 * d1;
    e[0][3] = c0 * d0 + 2 * k * c1 * d0 - 2 * k * c0 * d1 + c0 * d1 + k * c1 * d1;
    e[1][0] = -b0 * b0 - b1 * b0 - k * b1 * b1;
    e[1][1] = a0 * a0 + a1 * a0 + k * a1 * a1;
    e[1][2] = -2 * a0 * b0 - a1 * b0 - a0 * b1 - 2 * k * a1 * b1;
    e[1][3] = -a0 * b0 - 2 * k * a1 * b0 + 2 * k * a0 * b1 - a0 * b1 - k * a1 * b1;
    e[2][0] = b0 * d0 + b1 * d0 + k * b1 * d1;
    e[2][1] = -a0 * c0 - a1 * c0 - k * a1 * c1;
    e[2][2] = b0 * c0 + b1 * c0 + k * b1 * c1 + a0 * d0 + a1 * d0 + k * a1 * d1;
    e[2][3] = b0 * c0 - k * b1 * c0 + b1 * c0 + k * b0 * c1 + k * b1 * c1 +
              k * a1 * d0 - k * a0 * d1;
    e[3][0] = b0 * d1 - b1 * d0;
    e[3][1] = a1 * c0 - a0 * c1;
    e[3][2] = -b1 * c0 + b0 * c1 - a1 * d0 + a0 * d1;
    e[3][3] = -b0 * c0 - b1 * c0 - k * b1 * c1 + a0 * d0 + a0 * d1 + k * a1 * d1;
  }

  const int sign = dt.c0() == 1 ? 1 : -1;
  QMat out(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out.at(i, j) = Rational(sign * e[i][j]);
  return out;
}

bool is_congruence_level(const Mat2O& alpha, int level) {
  if (level != 2 && level != 4)
    throw std::invalid_argument("is_congruence_level: level must be 2 or 4");
  const BigInt n = level;
  for (int sign : {1, -1}) {
    const QuadInt s = QuadInt::integer(alpha.m(), sign);
    if ((alpha.a - s).divisible_by(n) && alpha.b.divisible_by(n) &&
        alpha.c.divisible_by(n) && (alpha.d - s).divisible_by(n))
      return true;
  }
  return false;
}

bool in_delta_m(const Mat2O& alpha) {
  if (!is_congruence_level(alpha, 2)) return false;
  if (m_class(alpha.m()) == MClass::OneTwo) return true;
  // b1 + c1 parity; the omega coordinates are even by the level-2 check.
  return floor_mod(alpha.b.c1() + alpha.c.c1(), 4) == 0;
}

}  // namespace bianchi
