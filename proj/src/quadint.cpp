#include "bianchi/quadint.hpp"

#include <sstream>

namespace bianchi {

namespace {

void require_same_m(std::int64_t ma, std::int64_t mb, const char* op) {
  if (ma != mb)
    throw std::invalid_argument(std::string(op) + ": operands live in different rings");
}

}  // namespace

QuadInt::QuadInt(std::int64_t m, BigInt a0, BigInt a1)
    : m_(m), a0_(std::move(a0)), a1_(std::move(a1)) {
  m_class(m);  // validates square-free positive
}

QuadInt QuadInt::conjugate() const {
  // omega-bar = -omega, resp. 1 - omega.
  if (m_class(m_) == MClass::OneTwo) return {m_, a0_, -a1_};
  return {m_, a0_ + a1_, -a1_};
}

BigInt QuadInt::norm() const {
  if (m_class(m_) == MClass::OneTwo) return a0_ * a0_ + m_ * a1_ * a1_;
  const BigInt k = (m_ + 1) / 4;
  return a0_ * a0_ + a0_ * a1_ + k * a1_ * a1_;
}

std::string QuadInt::str() const {
  std::ostringstream os;
  os << a0_.str();
  if (a1_ != 0) os << (a1_ > 0 ? "+" : "") << a1_.str() << "w";
  return os.str();
}

QuadInt operator+(const QuadInt& a, const QuadInt& b) {
  require_same_m(a.m(), b.m(), "QuadInt sum");
  return {a.m(), a.c0() + b.c0(), a.c1() + b.c1()};
}

QuadInt operator-(const QuadInt& a, const QuadInt& b) {
  require_same_m(a.m(), b.m(), "QuadInt difference");
  return {a.m(), a.c0() - b.c0(), a.c1() - b.c1()};
}

QuadInt operator*(const QuadInt& a, const QuadInt& b) {
  require_same_m(a.m(), b.m(), "QuadInt product");
  const BigInt t0 = a.c0() * b.c0();
  const BigInt t1 = a.c0() * b.c1() + a.c1() * b.c0();
  const BigInt s = a.c1() * b.c1();
  if (m_class(a.m()) == MClass::OneTwo) return {a.m(), t0 - a.m() * s, t1};
  const BigInt k = (a.m() + 1) / 4;
  return {a.m(), t0 - k * s, t1 + s};
}

Mat2O::Mat2O(QuadInt a_, QuadInt b_, QuadInt c_, QuadInt d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  require_same_m(a.m(), b.m(), "Mat2O");
  require_same_m(a.m(), c.m(), "Mat2O");
  require_same_m(a.m(), d.m(), "Mat2O");
}

Mat2O Mat2O::identity(std::int64_t m) {
  return {QuadInt::integer(m, 1), QuadInt::integer(m, 0), QuadInt::integer(m, 0),
          QuadInt::integer(m, 1)};
}

Mat2O Mat2O::from_int(std::int64_t m, long long a, long long b, long long c, long long d) {
  return {QuadInt::integer(m, a), QuadInt::integer(m, b), QuadInt::integer(m, c),
          QuadInt::integer(m, d)};
}

std::string Mat2O::str() const {
  return "[[" + a.str() + ", " + b.str() + "], [" + c.str() + ", " + d.str() + "]]";
}

Mat2O operator*(const Mat2O& x, const Mat2O& y) {
  require_same_m(x.m(), y.m(), "Mat2O product");
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

QuadInt det(const Mat2O& x) { return x.a * x.d - x.b * x.c; }

Mat2O inverse_unimodular(const Mat2O& x) {
  if (!(det(x) == QuadInt::integer(x.m(), 1)))
    throw std::invalid_argument("inverse_unimodular: determinant is not 1");
  return {x.d, -x.b, -x.c, x.a};
}

bool psl_equal(const Mat2O& x, const Mat2O& y) { return x == y || x == -y; }

}  // namespace bianchi
