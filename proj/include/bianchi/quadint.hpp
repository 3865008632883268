#pragma once

#include "bianchi/quadform.hpp"
#include "bianchi/rational.hpp"

#include <cstdint>
#include <string>

namespace bianchi {

// Element of O_m, the ring of integers of Q(sqrt(-m)), stored as integer
// coordinates over the basis {1, omega}:
//   omega = sqrt(-m)        and omega^2 = -m          if m = 1,2 mod 4,
//   omega = (1+sqrt(-m))/2  and omega^2 = omega - k   if m = 3 mod 4,
// with k = (m+1)/4. Values never leave Z^2.
class QuadInt {
 public:
  QuadInt(std::int64_t m, BigInt a0, BigInt a1);
  static QuadInt integer(std::int64_t m, const BigInt& v) { return {m, v, 0}; }
  static QuadInt omega(std::int64_t m) { return {m, 0, 1}; }

  std::int64_t m() const { return m_; }
  const BigInt& c0() const { return a0_; }
  const BigInt& c1() const { return a1_; }
  bool is_zero() const { return a0_ == 0 && a1_ == 0; }

  QuadInt conjugate() const;
  BigInt norm() const;
  bool divisible_by(const BigInt& n) const { return a0_ % n == 0 && a1_ % n == 0; }

  bool operator==(const QuadInt&) const = default;
  QuadInt operator-() const { return {m_, -a0_, -a1_}; }

  std::string str() const;

 private:
  std::int64_t m_;
  BigInt a0_, a1_;
};

QuadInt operator+(const QuadInt& a, const QuadInt& b);
QuadInt operator-(const QuadInt& a, const QuadInt& b);
QuadInt operator*(const QuadInt& a, const QuadInt& b);

// 2x2 matrix over O_m; all four entries must carry the same m.
struct Mat2O {
  QuadInt a, b, c, d;

  Mat2O(QuadInt a_, QuadInt b_, QuadInt c_, QuadInt d_);
  static Mat2O identity(std::int64_t m);
  static Mat2O from_int(std::int64_t m, long long a, long long b, long long c, long long d);

  std::int64_t m() const { return a.m(); }
  Mat2O operator-() const { return {-a, -b, -c, -d}; }
  bool operator==(const Mat2O&) const = default;

  std::string str() const;
};

Mat2O operator*(const Mat2O& x, const Mat2O& y);
QuadInt det(const Mat2O& x);

// Inverse of a determinant-1 matrix: [[d,-b],[-c,a]].
Mat2O inverse_unimodular(const Mat2O& x);

// Equality in PSL: equal up to a global sign.
bool psl_equal(const Mat2O& x, const Mat2O& y);

}  // namespace bianchi
