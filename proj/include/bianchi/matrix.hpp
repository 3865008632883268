#pragma once

#include "bianchi/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace bianchi {

// Dense matrix of exact rationals. Everything in this project is at most
// 7x7, so the representation is a flat vector and the algorithms favour
// exactness over asymptotics. Values are immutable in practice: operations
// return fresh matrices.
class QMat {
 public:
  QMat() = default;
  QMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static QMat identity(std::size_t n);
  static QMat from_int(std::initializer_list<std::initializer_list<long long>> rows);
  static QMat from_str(std::initializer_list<std::initializer_list<const char*>> rows);
  static QMat diagonal(const std::vector<Rational>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t i, std::size_t j);
  const Rational& at(std::size_t i, std::size_t j) const;

  bool operator==(const QMat&) const = default;

  QMat transposed() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_integral() const;
  bool is_symmetric() const;

  std::string str() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> e_;
};

QMat operator*(const QMat& a, const QMat& b);
QMat operator+(const QMat& a, const QMat& b);
QMat operator-(const QMat& a, const QMat& b);
QMat operator*(const Rational& s, const QMat& a);

// Exact determinant via fraction-free (Bareiss) elimination on the
// denominator-cleared integer matrix.
Rational det(const QMat& a);

// Exact inverse: adjugate for n <= 4, fraction-free Gauss-Jordan above.
// Throws std::domain_error on singular input.
QMat inverse(const QMat& a);

// Entrywise representatives in [0, n). A non-integral entry is not an
// error a caller should crash on: the certifiers treat it as the verdict
// "this matrix is not integral", hence the optional.
std::optional<QMat> reduce_mod(const QMat& a, const BigInt& n);

}  // namespace bianchi
