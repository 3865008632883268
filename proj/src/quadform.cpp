#include "bianchi/quadform.hpp"

#include <cmath>

namespace bianchi {

SymmetricForm::SymmetricForm(QMat m, std::string lbl)
    : matrix(std::move(m)), label(std::move(lbl)) {
  if (!matrix.is_symmetric())
    throw std::invalid_argument("SymmetricForm '" + label + "': matrix not symmetric");
}

bool is_square_free(std::int64_t m) {
  if (m < 1) return false;
  for (std::int64_t d = 2; d * d <= m; ++d)
    if (m % (d * d) == 0) return false;
  return true;
}

MClass m_class(std::int64_t m) {
  if (!is_square_free(m))
    throw std::invalid_argument("m = " + std::to_string(m) + " is not square-free positive");
  return m % 4 == 3 ? MClass::Three : MClass::OneTwo;
}

FourSquare four_square(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("four_square: m must be positive");
  // Scan (w, x, y) ascending with z forced; the first completion found is
  // the lexicographically smallest descending tuple.
  for (std::int64_t w = 0; w * w <= m; ++w) {
    const std::int64_t r1 = m - w * w;
    if (r1 > 3 * w * w) continue;
    for (std::int64_t x = 0; x <= w && x * x <= r1; ++x) {
      const std::int64_t r2 = r1 - x * x;
      if (r2 > 2 * x * x) continue;
      for (std::int64_t y = 0; y <= x && y * y <= r2; ++y) {
        const std::int64_t zz = r2 - y * y;
        if (zz > y * y) continue;
        const auto z = static_cast<std::int64_t>(std::sqrt(static_cast<double>(zz)));
        for (std::int64_t zc = z > 0 ? z - 1 : 0; zc <= z + 1; ++zc)
          if (zc * zc == zz && zc <= y) return {w, x, y, zc};
      }
    }
  }
  throw std::logic_error("four_square: no decomposition found");  // unreachable
}

SymmetricForm build_Q_m(std::int64_t m) {
  QMat s(4, 4);
  s.at(0, 1) = s.at(1, 0) = 1;
  s.at(2, 2) = 2;
  switch (m_class(m)) {
    case MClass::OneTwo:
      s.at(3, 3) = 2 * m;
      break;
    case MClass::Three:
      s.at(2, 3) = s.at(3, 2) = 1;
      s.at(3, 3) = make_rational((m + 1) / 2, 1);
      break;
  }
  return {std::move(s), "S_Q_" + std::to_string(m)};
}

SymmetricForm build_F(int n) {
  if (n < 2 || n > 7)
    throw std::invalid_argument("build_F: n must be between 2 and 7");
  std::vector<Rational> d(static_cast<std::size_t>(n) + 1, 1);
  d[0] = -1;
  return {QMat::diagonal(d), "S_F_" + std::to_string(n)};
}

SymmetricForm build_P_m(std::int64_t m) {
  QMat s(7, 7);
  s.at(0, 1) = s.at(1, 0) = make_rational(1, 2);
  s.at(2, 2) = 1;
  switch (m_class(m)) {
    case MClass::OneTwo:
      s.at(3, 3) = m;
      break;
    case MClass::Three:
      s.at(2, 3) = s.at(3, 2) = make_rational(1, 2);
      s.at(3, 3) = make_rational(m + 1, 4);
      break;
  }
  for (std::size_t i = 4; i < 7; ++i) s.at(i, i) = m;
  return {std::move(s), "S_P_" + std::to_string(m)};
}

std::pair<QMat, QMat> build_A_m(std::int64_t m, const FourSquare& fs) {
  if (fs.sum_of_squares() != m)
    throw std::invalid_argument("build_A_m: four-square does not sum to m");
  const MClass cls = m_class(m);
  const Rational half = make_rational(1, 2);
  const Rational w(fs.w), x(fs.x), y(fs.y), z(fs.z);
  const Rational im = make_rational(1, m);

  QMat a(7, 7), ai(7, 7);
  a.at(0, 0) = half;
  a.at(0, 1) = -half;
  a.at(1, 0) = half;
  a.at(1, 1) = half;
  a.at(2, 2) = 1;
  ai.at(0, 0) = 1;
  ai.at(0, 1) = 1;
  ai.at(1, 0) = -1;
  ai.at(1, 1) = 1;
  ai.at(2, 2) = 1;

  // Quaternion-style block: rows i -> (w,x,y,z) pattern with B^t B = m I.
  const Rational q[4][4] = {
      {w, -x, -y, -z}, {x, w, z, -y}, {y, -z, w, x}, {z, y, -x, w}};
  switch (cls) {
    case MClass::OneTwo:
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
          a.at(3 + i, 3 + j) = q[i][j];
          // Inverse block is the transpose over m.
          ai.at(3 + i, 3 + j) = q[j][i] * im;
        }
      break;
    case MClass::Three:
      a.at(2, 3) = half;
      for (std::size_t i = 0; i < 4; ++i) {
        a.at(3 + i, 3) = -q[i][0] * half;
        for (std::size_t j = 1; j < 4; ++j) a.at(3 + i, 3 + j) = q[i][j];
      }
      ai.at(2, 3) = w * im;
      ai.at(2, 4) = x * im;
      ai.at(2, 5) = y * im;
      ai.at(2, 6) = z * im;
      for (std::size_t j = 0; j < 4; ++j) ai.at(3, 3 + j) = Rational(-2) * q[j][0] * im;
      for (std::size_t i = 1; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) ai.at(3 + i, 3 + j) = q[j][i] * im;
      break;
  }

  if (a * ai != QMat::identity(7))
    throw std::logic_error("build_A_m: closed-form inverse check failed");
  return {std::move(a), std::move(ai)};
}

bool check_equivalence(const QMat& a, const SymmetricForm& s1, const SymmetricForm& s2) {
  if (!a.is_square() || a.rows() != s1.dim() || s1.dim() != s2.dim())
    throw std::invalid_argument("check_equivalence: dimension mismatch");
  return a.transposed() * s1.matrix * a == s2.matrix;
}

}  // namespace bianchi
