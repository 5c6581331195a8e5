#include <gtest/gtest.h>

#include "hsdisc/exact.hpp"
#include "support.hpp"

namespace hsdisc {
namespace {

using test::q;

TEST(ExactText, CanonicalEncoding) {
  EXPECT_EQ(to_text(q(6, -4)), "-3/2");
  EXPECT_EQ(to_text(q(4, 2)), "2");
  EXPECT_EQ(to_text(ExactInt(-17)), "-17");
}

TEST(ExactText, ParseCanonicalizes) {
  EXPECT_EQ(to_text(parse_scalar("6/4")), "3/2");
  EXPECT_EQ(to_text(parse_scalar("-0/7")), "0");
  EXPECT_EQ(parse_int("-123456789012345678901234567890"), ExactInt("-123456789012345678901234567890"));
}

TEST(ExactText, ParseErrors) {
  for (const char* bad : {"", "-", "1/", "/2", "1.5", "a", "1/-2", "+3", " 1"}) {
    try {
      parse_scalar(bad);
      ADD_FAILURE() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse) << bad;
    }
  }
  try {
    parse_scalar("3/0");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroDenominator);
  }
}

TEST(Det, Examples) {
  EXPECT_EQ(det(IntMatrix::identity(2)), 1);
  EXPECT_EQ(det(IntMatrix{{1, 2}, {2, 4}}), 0);
  EXPECT_EQ(det(IntMatrix{{2, 1}, {1, 3}}), 5);
}

TEST(Det, NeedsRowSwap) {
  EXPECT_EQ(det(IntMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(det(IntMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}), -1);
  EXPECT_EQ(det(IntMatrix{{0, 2, 3}, {0, 4, 5}, {6, 7, 8}}), 6 * (2 * 5 - 3 * 4));
}

TEST(Det, MatchesLeibnizOnRandomMatrices) {
  SplitMix64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const std::size_t d = 1 + rng.uniform(5);
    const IntMatrix m = test::random_int_matrix(rng, d, 1 + static_cast<long>(rng.uniform(10)));
    EXPECT_EQ(det(m), test::leibniz_det(m));
  }
}

TEST(Adjugate, Examples) {
  EXPECT_EQ(adjugate(IntMatrix::identity(3)), IntMatrix::identity(3));
  EXPECT_EQ(adjugate(IntMatrix{{2, 1}, {1, 3}}), (IntMatrix{{3, -1}, {-1, 2}}));
  EXPECT_EQ(adjugate(IntMatrix{{7}}), (IntMatrix{{1}}));
}

TEST(Adjugate, IdentityHoldsIncludingSingular) {
  SplitMix64 rng(12);
  for (int t = 0; t < 200; ++t) {
    const std::size_t d = 1 + rng.uniform(5);
    IntMatrix m = test::random_int_matrix(rng, d, 3);
    if (t % 5 == 0 && d > 1)
      for (std::size_t j = 0; j < d; ++j) m(1, j) = 2 * m(0, j);
    const IntMatrix adj = adjugate(m);
    EXPECT_EQ(adj, test::leibniz_adjugate(m));
    IntMatrix expect(d, d);
    const ExactInt dt = det(m);
    for (std::size_t i = 0; i < d; ++i) expect(i, i) = dt;
    EXPECT_EQ(multiply(m, adj), expect);
  }
}

TEST(Solve, Examples) {
  const RatVector v{q(3), q(-1, 2)};
  EXPECT_EQ(solve(RatMatrix::identity(2), v), v);
  EXPECT_EQ(solve(RatMatrix{{q(2), q(0)}, {q(0), q(4)}}, RatVector{q(1), q(1)}), (RatVector{q(1, 2), q(1, 4)}));
}

TEST(Solve, RoundTripRational3x3) {
  SplitMix64 rng(13);
  int solved = 0;
  for (int t = 0; t < 100; ++t) {
    RatMatrix m(3, 3);
    RatVector v(3);
    for (std::size_t i = 0; i < 3; ++i) {
      v[i] = q(rng.range(-9, 9), rng.range(1, 5));
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = q(rng.range(-9, 9), rng.range(1, 5));
    }
    try {
      EXPECT_EQ(multiply(m, solve(m, v)), v);
      ++solved;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kSingularMatrix);
    }
  }
  EXPECT_GT(solved, 90);
}

TEST(Solve, SingularThrows) {
  try {
    solve(RatMatrix{{q(1), q(2)}, {q(2), q(4)}}, RatVector{q(1), q(1)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingularMatrix);
  }
}

TEST(Hadamard, Examples) {
  EXPECT_TRUE(hadamard_check(IntMatrix::identity(2)));
  EXPECT_TRUE(hadamard_check(IntMatrix{{1, 1}, {1, -1}}));
  EXPECT_TRUE(hadamard_check(IntMatrix{{1, 2}, {2, 4}}));
}

TEST(Hadamard, NeverFailsOnRandomMatrices) {
  SplitMix64 rng(14);
  for (int t = 0; t < 500; ++t) {
    const std::size_t d = 1 + rng.uniform(5);
    EXPECT_TRUE(hadamard_check(test::random_int_matrix(rng, d, 1 + static_cast<long>(rng.uniform(10)))));
  }
}

TEST(ShermanMorrison, Examples) {
  const RatMatrix zero = sherman_morrison_remainder(IntMatrix{{2, 1}, {1, 3}}, RatVector{q(0), q(0)},
                                                    RatVector{q(5), q(-1)});
  EXPECT_EQ(zero, RatMatrix(2, 2));
  const RatMatrix r = sherman_morrison_remainder(IntMatrix::identity(2), RatVector{q(1), q(0)}, RatVector{q(1), q(0)});
  EXPECT_EQ(r, (RatMatrix{{q(1, 2), q(0)}, {q(0), q(0)}}));
}

TEST(ShermanMorrison, EqualsDifferenceOfInverses) {
  SplitMix64 rng(15);
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t d = 1 + rng.uniform(4);
    const IntMatrix m = test::random_int_matrix(rng, d, 5);
    if (test::leibniz_det(m) == 0) continue;
    RatVector u(d), v(d);
    for (std::size_t i = 0; i < d; ++i) {
      u[i] = q(rng.range(-4, 4), rng.range(1, 3));
      v[i] = q(rng.range(-4, 4), rng.range(1, 3));
    }
    RatMatrix updated = to_rational(m);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) updated(i, j) += u[i] * v[j];
    RatMatrix remainder;
    try {
      remainder = sherman_morrison_remainder(m, u, v);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kZeroDenominator);
      continue;
    }
    const RatMatrix inv = test::cramer_inverse(m);
    const RatMatrix inv_updated = inverse(updated);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) EXPECT_EQ(remainder(i, j), inv(i, j) - inv_updated(i, j));
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(ShermanMorrison, ZeroDenominator) {
  // 1 + v^T u = 0 for M = I.
  try {
    sherman_morrison_remainder(IntMatrix::identity(2), RatVector{q(1), q(0)}, RatVector{q(-1), q(0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroDenominator);
  }
  try {
    sherman_morrison_remainder(IntMatrix{{1, 1}, {1, 1}}, RatVector{q(1), q(0)}, RatVector{q(1), q(0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingularMatrix);
  }
}

TEST(HdetBound, Examples) {
  EXPECT_TRUE(hdet_bound_check(IntMatrix::identity(3), RatVector(3, q(1))));
  for (long n : {2L, 5L, 10L}) {
    IntMatrix m(3, 3);
    for (std::size_t i = 0; i < 3; ++i) m(i, i) = n;
    EXPECT_TRUE(hdet_bound_check(m, RatVector(3, q(1))));
  }
}

TEST(HdetBound, Errors) {
  try {
    hdet_bound_check(IntMatrix::identity(2), RatVector{q(3, 2), q(0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutOfRange);
  }
  try {
    hdet_bound_check(IntMatrix{{1, 2}, {2, 4}}, RatVector{q(1), q(0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSingularMatrix);
  }
}

TEST(HdetBound, HoldsOnRandomInvertibleMatrices) {
  SplitMix64 rng(16);
  for (int t = 0; t < 300; ++t) {
    const std::size_t d = 1 + rng.uniform(5);
    const IntMatrix m = test::random_int_matrix(rng, d, 1 + static_cast<long>(rng.uniform(10)));
    if (det(m) == 0) continue;
    RatVector lambda(d);
    for (auto& l : lambda) l = q(rng.range(-1000, 1000), 1000);
    EXPECT_TRUE(hdet_bound_check(m, lambda));
  }
}

TEST(Scalar, FieldLawsStayCanonical) {
  SplitMix64 rng(17);
  for (int t = 0; t < 200; ++t) {
    const ExactScalar a = q(rng.range(-50, 50), rng.range(1, 30));
    const ExactScalar b = q(rng.range(-50, 50), rng.range(1, 30));
    const ExactScalar c = q(rng.range(-50, 50), rng.range(1, 30));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    const ExactScalar s = a * b + c;
    EXPECT_EQ(parse_scalar(to_text(s)), s);
    EXPECT_GT(s.get_den(), 0);
  }
}

}  // namespace
}  // namespace hsdisc
