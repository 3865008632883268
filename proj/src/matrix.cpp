#include "bianchi/matrix.hpp"

#include <sstream>
#include <utility>

namespace bianchi {

namespace {

BigInt exact_div(const BigInt& num, const BigInt& den) {
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0)
    throw std::logic_error("fraction-free elimination produced an inexact division");
  return q;
}

// Split a = M / s with M integral and s the lcm of all denominators.
std::pair<std::vector<BigInt>, BigInt> clear_denominators(const QMat& a) {
  const std::size_t n = a.rows(), m = a.cols();
  BigInt s = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      s = boost::multiprecision::lcm(s, BigInt(denominator(a.at(i, j))));
  std::vector<BigInt> out(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const Rational& r = a.at(i, j);
      out[i * m + j] = BigInt(numerator(r)) * (s / BigInt(denominator(r)));
    }
  return {std::move(out), std::move(s)};
}

Rational det_minor(const QMat& a, std::size_t skip_row, std::size_t skip_col);

// Plain cofactor expansion; only used for n <= 4.
Rational det_small(const QMat& a) {
  const std::size_t n = a.rows();
  if (n == 1) return a.at(0, 0);
  if (n == 2) return a.at(0, 0) * a.at(1, 1) - a.at(0, 1) * a.at(1, 0);
  Rational acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    Rational term = a.at(0, j) * det_minor(a, 0, j);
    if (j % 2 == 0)
      acc += term;
    else
      acc -= term;
  }
  return acc;
}

Rational det_minor(const QMat& a, std::size_t skip_row, std::size_t skip_col) {
  const std::size_t n = a.rows();
  QMat m(n - 1, n - 1);
  std::size_t r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == skip_row) continue;
    std::size_t c = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == skip_col) continue;
      m.at(r, c) = a.at(i, j);
      ++c;
    }
    ++r;
  }
  return det_small(m);
}

}  // namespace

QMat QMat::identity(std::size_t n) {
  QMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMat QMat::from_int(std::initializer_list<std::initializer_list<long long>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  QMat m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("from_int: ragged rows");
    std::size_t j = 0;
    for (long long v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

QMat QMat::from_str(std::initializer_list<std::initializer_list<const char*>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  QMat m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("from_str: ragged rows");
    std::size_t j = 0;
    for (const char* v : row) m.at(i, j++) = parse_rational(v);
    ++i;
  }
  return m;
}

QMat QMat::diagonal(const std::vector<Rational>& d) {
  QMat m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

Rational& QMat::at(std::size_t i, std::size_t j) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("QMat::at");
  return e_[i * cols_ + j];
}

const Rational& QMat::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("QMat::at");
  return e_[i * cols_ + j];
}

QMat QMat::transposed() const {
  QMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool QMat::is_integral() const {
  for (const Rational& r : e_)
    if (!is_integer(r)) return false;
  return true;
}

bool QMat::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

std::string QMat::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << at(i, j).str();
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

QMat operator*(const QMat& a, const QMat& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("matrix product: dimension mismatch");
  QMat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c.at(i, j) += aik * b.at(k, j);
    }
  return c;
}

QMat operator+(const QMat& a, const QMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix sum: dimension mismatch");
  QMat c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) + b.at(i, j);
  return c;
}

QMat operator-(const QMat& a, const QMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix difference: dimension mismatch");
  QMat c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j) - b.at(i, j);
  return c;
}

QMat operator*(const Rational& s, const QMat& a) {
  QMat c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = s * a.at(i, j);
  return c;
}

Rational det(const QMat& a) {
  if (!a.is_square()) throw std::invalid_argument("det: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) throw std::invalid_argument("det: empty matrix");

  auto [m, s] = clear_denominators(a);
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p * n + k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[p * n + j], m[k * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i * n + j] =
            exact_div(m[k * n + k] * m[i * n + j] - m[i * n + k] * m[k * n + j], prev);
      m[i * n + k] = 0;
    }
    prev = m[k * n + k];
  }
  BigInt d = m[(n - 1) * n + (n - 1)];
  if (sign < 0) d = -d;
  return make_rational(d, int_pow(s, static_cast<unsigned>(n)));
}

QMat inverse(const QMat& a) {
  if (!a.is_square()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = a.rows();
  if (n == 0) throw std::invalid_argument("inverse: empty matrix");

  if (n <= 4) {
    Rational d = det_small(a);
    if (d == 0) throw std::domain_error("inverse: singular matrix");
    QMat inv(n, n);
    if (n == 1) {
      inv.at(0, 0) = Rational(1) / d;
      return inv;
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational cof = det_minor(a, j, i);
        if ((i + j) % 2 == 1) cof = -cof;
        inv.at(i, j) = cof / d;
      }
    return inv;
  }

  // Fraction-free Gauss-Jordan on [M | I] with M = s*a integral. After the
  // sweep the left block is diagonal and row i of the right block over the
  // diagonal entry is row i of M^{-1}.
  auto [m0, s] = clear_denominators(a);
  const std::size_t w = 2 * n;
  std::vector<BigInt> t(n * w);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i * w + j] = m0[i * n + j];
    t[i * w + n + i] = 1;
  }
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && t[p * w + k] == 0) ++p;
    if (p == n) throw std::domain_error("inverse: singular matrix");
    if (p != k)
      for (std::size_t j = 0; j < w; ++j) std::swap(t[p * w + j], t[k * w + j]);
    const BigInt pivot = t[k * w + k];
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const BigInt tik = t[i * w + k];
      for (std::size_t j = 0; j < w; ++j)
        t[i * w + j] = exact_div(pivot * t[i * w + j] - tik * t[k * w + j], prev);
    }
    prev = pivot;
  }
  QMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      inv.at(i, j) = make_rational(t[i * w + n + j] * s, t[i * w + i]);
  return inv;
}

std::optional<QMat> reduce_mod(const QMat& a, const BigInt& n) {
  if (n < 2) throw std::invalid_argument("reduce_mod: modulus must be >= 2");
  QMat r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Rational& e = a.at(i, j);
      if (!is_integer(e)) return std::nullopt;
      r.at(i, j) = Rational(floor_mod(BigInt(numerator(e)), n));
    }
  return r;
}

}  // namespace bianchi
