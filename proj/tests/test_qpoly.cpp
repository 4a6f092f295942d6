#include <gtest/gtest.h>

#include <limits>
#include <random>

#include "oracles.hpp"
#include "pmdepth/qpoly.hpp"

using namespace pmdepth;

TEST(QInt, Examples) {
  EXPECT_EQ(q_int(1), (QPolynomial{1}));
  EXPECT_EQ(q_int(3), (QPolynomial{1, 1, 1}));
  EXPECT_EQ(q_int(5), (QPolynomial{1, 1, 1, 1, 1}));
  EXPECT_THROW(q_int(0), DomainError);
}

TEST(QDoubleFactorial, SmallCases) {
  EXPECT_EQ(q_double_factorial(0), (QPolynomial{1}));
  EXPECT_EQ(q_double_factorial(1), (QPolynomial{1}));
  EXPECT_EQ(q_double_factorial(2), (QPolynomial{1, 1, 1}));
  const auto p3 = q_double_factorial(3);
  EXPECT_EQ(p3, (QPolynomial{1, 2, 3, 3, 3, 2, 1}));
  EXPECT_EQ(p3.degree(), 6);
  EXPECT_EQ(p3.eval_at_one(), 15U);
  EXPECT_EQ(q_int(3) * q_int(5), p3);
  EXPECT_THROW(q_double_factorial(-1), DomainError);
}

TEST(QDoubleFactorial, DegreeValueAndPalindromeUpTo10) {
  for (long n = 0; n <= 10; ++n) {
    const auto p = q_double_factorial(n);
    // oracle: plain vector products
    std::vector<std::uint64_t> want{1};
    for (long i = 1; i <= n; ++i) want = oracle::poly_mul(want, std::vector<std::uint64_t>(2 * i - 1, 1));
    EXPECT_EQ(p.coeffs(), want);
    EXPECT_EQ(p.degree(), n * n - n);
    EXPECT_EQ(p.eval_at_one(), oracle::odd_double_factorial(static_cast<int>(n)));
    EXPECT_TRUE(is_palindromic(p));
  }
}

TEST(Shift, Examples) {
  EXPECT_EQ(shift(QPolynomial{1, 1, 1}, 3), (QPolynomial{0, 0, 0, 1, 1, 1}));
  EXPECT_EQ(shift(QPolynomial{4, 0, 2}, 0), (QPolynomial{4, 0, 2}));
  EXPECT_EQ(shift(QPolynomial{1}, 1), QPolynomial::monomial(1));
  EXPECT_EQ(shift(QPolynomial{}, 5), QPolynomial{});
}

TEST(Reverse, Examples) {
  EXPECT_EQ(reverse(QPolynomial{1, 2, 0, 1}), (QPolynomial{1, 0, 2, 1}));
  EXPECT_EQ(reverse(q_double_factorial(4)), q_double_factorial(4));
  EXPECT_EQ(reverse(QPolynomial{0, 1}), (QPolynomial{1}));
  EXPECT_THROW(reverse(QPolynomial{}), DomainError);
}

TEST(IsPalindromic, Examples) {
  EXPECT_TRUE(is_palindromic(q_double_factorial(4)));
  EXPECT_FALSE(is_palindromic(QPolynomial{1, 2}));
  EXPECT_TRUE(is_palindromic(QPolynomial{5}));
  EXPECT_THROW(is_palindromic(QPolynomial{}), DomainError);
}

TEST(Arithmetic, Examples) {
  EXPECT_EQ((QPolynomial{1, 1}) * (QPolynomial{1, 1}), (QPolynomial{1, 2, 1}));
  EXPECT_EQ((QPolynomial{3, 0, 1}) + QPolynomial{}, (QPolynomial{3, 0, 1}));
  EXPECT_EQ(QPolynomial{} * (QPolynomial{1, 2}), QPolynomial{});
  EXPECT_EQ((QPolynomial{0, 0, 0}), QPolynomial{});
  EXPECT_EQ(QPolynomial{}.degree(), -1);
}

TEST(Arithmetic, OverflowIsReported) {
  constexpr auto big = std::numeric_limits<std::uint64_t>::max();
  EXPECT_THROW((QPolynomial{big}) + (QPolynomial{1}), OverflowError);
  EXPECT_THROW((QPolynomial{big / 2 + 1}) * (QPolynomial{2}), OverflowError);
  EXPECT_THROW((QPolynomial{big / 2 + 1, big / 2 + 1}) * (QPolynomial{1, 1}), OverflowError);
  QPolynomial p{big};
  EXPECT_THROW(p.add_term(0), OverflowError);
  EXPECT_THROW((QPolynomial{big, 1}).eval_at_one(), OverflowError);
}

TEST(Arithmetic, RandomizedAlgebraicLaws) {
  std::mt19937_64 rng(2024);
  auto random_poly = [&] {
    std::vector<QPolynomial::Coeff> c(rng() % 7);
    for (auto& x : c) x = rng() % 50;
    return QPolynomial(c);
  };
  for (int t = 0; t < 300; ++t) {
    const auto a = random_poly(), b = random_poly(), c = random_poly();
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (!a.is_zero()) {
      std::size_t valuation = 0;
      while (a.coeff(valuation) == 0) ++valuation;
      EXPECT_EQ(shift(reverse(reverse(a)), valuation), a);
      // low zeros introduced by the shift become trimmed high zeros
      const std::size_t k = rng() % 5;
      EXPECT_EQ(reverse(shift(a, k)), reverse(a));
      EXPECT_EQ(reverse(a).degree() + static_cast<long>(valuation), a.degree());
    }
  }
}

TEST(ToString, Forms) {
  EXPECT_EQ(to_string(QPolynomial{1, 1, 1}), "1 + q + q^2");
  EXPECT_EQ(to_string(QPolynomial{1, 2, 0, 1}), "1 + 2q + q^3");
  EXPECT_EQ(to_string(shift(q_double_factorial(2), 3)), "q^3 + q^4 + q^5");
  EXPECT_EQ(to_string(QPolynomial{}), "0");
  EXPECT_EQ(to_string(QPolynomial{7}), "7");
}
