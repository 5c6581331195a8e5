#include <gtest/gtest.h>

#include <cmath>

#include "hsdisc/geometry.hpp"
#include "support.hpp"

namespace hsdisc {
namespace {

using test::pt;
using test::q;

ColoredInstance one_d(std::vector<long> red, std::vector<long> blue) {
  ColoredInstance inst;
  inst.dim = 1;
  for (long r : red) inst.red.push_back(pt({q(r)}));
  for (long b : blue) inst.blue.push_back(pt({q(b)}));
  return inst;
}

template <class F>
void expect_error(ErrorCode code, F&& f) {
  try {
    f();
    ADD_FAILURE() << "no error thrown";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code);
  }
}

TEST(Halfspace, CanonicalForm) {
  const Halfspace h(RatVector{q(-4), q(2)}, q(6));
  EXPECT_EQ(h.w(), (RatVector{q(-1), q(1, 2)}));
  EXPECT_EQ(h.xi(), q(3, 2));
  EXPECT_EQ(Halfspace(RatVector{q(2), q(0)}, q(4)), Halfspace(RatVector{q(1, 3), q(0)}, q(2, 3)));
  EXPECT_NE(Halfspace(RatVector{q(1)}, q(0)), Halfspace(RatVector{q(-1)}, q(0)));
  expect_error(ErrorCode::kInvalidArgument, [] { Halfspace(RatVector{q(0), q(0)}, q(1)); });
  expect_error(ErrorCode::kInvalidArgument, [] { Halfspace(RatVector{}, q(1)); });
}

TEST(SideOf, Examples) {
  QueryCounter qc;
  const Halfspace x1(RatVector{q(1), q(0)}, q(0));
  EXPECT_EQ(side_of(x1, pt({q(0), q(0)}), qc), 0);
  EXPECT_EQ(side_of(x1, pt({q(1), q(0)}), qc), 1);
  EXPECT_EQ(side_of(Halfspace(RatVector{q(1), q(1)}, q(2)), pt({q(1), q(1, 2)}), qc), -1);
  EXPECT_EQ(qc.count(), 3u);
  expect_error(ErrorCode::kDimensionMismatch, [&] { side_of(x1, pt({q(1)}), qc); });
}

TEST(SideOf, InvariantUnderPositiveScaling) {
  SplitMix64 rng(21);
  for (int t = 0; t < 100; ++t) {
    RatVector w{q(rng.range(-5, 5)), q(rng.range(-5, 5))};
    if (w[0] == 0 && w[1] == 0) w[0] = 1;
    const ExactScalar xi = q(rng.range(-5, 5), rng.range(1, 4));
    const ExactScalar s = q(rng.range(1, 20), rng.range(1, 20));
    const Point p = pt({q(rng.range(-5, 5)), q(rng.range(-5, 5))});
    RatVector ws = w;
    for (auto& c : ws) c *= s;
    EXPECT_EQ(side_of(Halfspace(w, xi), p), side_of(Halfspace(ws, xi * s), p));
    const Halfspace h(w, xi);
    EXPECT_EQ(Halfspace(h.w(), h.xi()), h);
  }
}

TEST(QueryCounter, MergeSums) {
  QueryCounter a, b;
  a.add(3);
  b.add();
  a.merge(b);
  EXPECT_EQ(a.count(), 4u);
}

TEST(Phi, Examples) {
  const Halfspace x_ge_0(RatVector{q(1)}, q(0));
  EXPECT_EQ(phi(one_d({1}, {-1}), x_ge_0), 1);
  EXPECT_EQ(phi(one_d({}, {}), x_ge_0), 0);
  ColoredInstance inst;
  inst.dim = 2;
  inst.red = {pt({q(1), q(0)})};
  inst.blue = {pt({q(0), q(1)}), pt({q(1), q(1)})};
  QueryCounter qc;
  EXPECT_EQ(phi(inst, Halfspace(RatVector{q(1), q(1)}, q(2)), qc), -1);
  EXPECT_EQ(qc.count(), 3u);
}

TEST(Phi, MultiplicityAndSwap) {
  const ColoredInstance inst = one_d({0, 0, 2}, {0});
  const Halfspace h(RatVector{q(1)}, q(0));
  EXPECT_EQ(phi(inst, h), 2);
  ColoredInstance swapped = inst;
  std::swap(swapped.red, swapped.blue);
  EXPECT_EQ(phi(swapped, h), -2);
}

TEST(Phi, AffineInvariance) {
  SplitMix64 rng(22);
  for (int t = 0; t < 50; ++t) {
    ColoredInstance inst;
    inst.dim = 2;
    for (int i = 0; i < 6; ++i)
      (i % 2 ? inst.red : inst.blue).push_back(pt({q(rng.range(-9, 9)), q(rng.range(-9, 9))}));
    const RatVector w{q(rng.range(-3, 3)), q(rng.range(1, 3))};
    const ExactScalar xi = q(rng.range(-5, 5));
    // x -> A x + b with A = [[1, 2], [0, 1]], b = (3, -1); w' = A^-T w, xi' = xi + <w', b>.
    auto map = [](const Point& p) { return pt({p[0] + 2 * p[1] + 3, p[1] - 1}); };
    ColoredInstance moved;
    moved.dim = 2;
    for (const auto& p : inst.red) moved.red.push_back(map(p));
    for (const auto& p : inst.blue) moved.blue.push_back(map(p));
    const RatVector w2{w[0], w[1] - 2 * w[0]};
    const ExactScalar xi2 = xi + w2[0] * 3 - w2[1];
    EXPECT_EQ(phi(inst, Halfspace(w, xi)), phi(moved, Halfspace(w2, xi2)));
    EXPECT_EQ(phi(inst, Halfspace(w, xi)), test::direct_phi(inst, w, xi));
  }
}

TEST(Psi, Examples) {
  const ColoredInstance inst = one_d({1}, {-1});
  EXPECT_EQ(psi(inst, Halfspace(RatVector{q(1)}, q(0))), q(0));
  EXPECT_EQ(psi(inst, Halfspace(RatVector{q(1)}, q(2))), q(1, 2));
  EXPECT_EQ(psi(one_d({}, {0}), Halfspace(RatVector{q(1)}, q(1))), q(0));
  expect_error(ErrorCode::kEmptyInstance, [] { psi(one_d({}, {}), Halfspace(RatVector{q(1)}, q(1))); });
}

TEST(Psi, IdentityWithPhi) {
  SplitMix64 rng(23);
  for (int t = 0; t < 100; ++t) {
    const ColoredInstance inst = one_d({rng.range(-5, 5), rng.range(-5, 5)}, {rng.range(-5, 5)});
    const Halfspace h(RatVector{q(rng.uniform(2) ? 1 : -1)}, q(rng.range(-6, 6)));
    const ExactScalar n = static_cast<long>(inst.size());
    EXPECT_EQ(psi(inst, h), 1 - ExactScalar(static_cast<long>(inst.blue.size())) / n - ExactScalar(phi(inst, h)) / n);
  }
}

TEST(PhiParallel, Examples) {
  const ColoredInstance inst = one_d({0, 2}, {1});
  EXPECT_EQ(phi_parallel(inst, Halfspace(RatVector{q(1)}, q(1))), q(1, 2));
  EXPECT_EQ(phi_parallel(inst, Halfspace(RatVector{q(1)}, q(-10))), q(0));
  expect_error(ErrorCode::kEmptyColorClass, [] { phi_parallel(one_d({1}, {}), Halfspace(RatVector{q(1)}, q(0))); });
}

TEST(PhiParallel, BalancedClassesIdentity) {
  SplitMix64 rng(24);
  for (int t = 0; t < 100; ++t) {
    const ColoredInstance inst =
        one_d({rng.range(-5, 5), rng.range(-5, 5), rng.range(-5, 5)}, {rng.range(-5, 5), rng.range(-5, 5), rng.range(-5, 5)});
    const Halfspace h(RatVector{q(rng.uniform(2) ? 1 : -1)}, q(rng.range(-6, 6)));
    EXPECT_EQ(phi_parallel(inst, h), q(1, 3) * abs(ExactScalar(phi(inst, h))));
  }
}

TEST(PhiAlpha, Examples) {
  const ColoredInstance inst = one_d({1}, {-1});
  const Halfspace all(RatVector{q(1)}, q(-5));
  const ColoredInstance two = one_d({1, 2}, {0});
  EXPECT_EQ(phi_alpha(two, all, q(1)), q(2));
  EXPECT_EQ(phi_alpha(two, all, q(0)), q(1));
  const Halfspace h(RatVector{q(1)}, q(0));
  EXPECT_EQ(phi_alpha(inst, h, q(1, 2)), q(1, 2));
  EXPECT_EQ(phi_alpha(inst, h, q(1, 2), AlphaForm::kSigned), q(1, 2));
  EXPECT_EQ(phi_alpha(inst, all, q(1, 2), AlphaForm::kSigned), q(0));
  expect_error(ErrorCode::kOutOfRange, [&] { phi_alpha(inst, h, q(3, 2)); });
  expect_error(ErrorCode::kOutOfRange, [&] { phi_alpha(inst, h, q(-1, 2)); });
}

TEST(PhiPoisson, Examples) {
  const PoissonValue same = bernoulli_kl(q(1, 3), q(1, 3));
  EXPECT_FALSE(same.infinite);
  EXPECT_LE(same.lower, 0);
  EXPECT_GE(same.upper, 0);
  EXPECT_TRUE(bernoulli_kl(q(1), q(0)).infinite);
  const PoissonValue v = bernoulli_kl(q(1, 2), q(1, 4));
  const double expect = 0.5 * std::log(2.0) + 0.5 * std::log(2.0 / 3.0);
  EXPECT_NEAR(v.approx, 0.1438, 1e-4);
  EXPECT_LE(v.lower, ExactScalar(expect + 1e-12));
  EXPECT_GE(v.upper, ExactScalar(expect - 1e-12));
  EXPECT_LT(v.upper - v.lower, ExactScalar(1, 1 << 20));
}

TEST(PhiPoisson, EnclosureTightensWithPrecision) {
  const PoissonValue lo = bernoulli_kl(q(2, 7), q(5, 9), 16);
  const PoissonValue hi = bernoulli_kl(q(2, 7), q(5, 9), 200);
  EXPECT_LE(lo.lower, hi.lower);
  EXPECT_GE(lo.upper, hi.upper);
  EXPECT_LT(hi.upper - hi.lower, ExactScalar(1, 1) / ExactScalar(ExactInt(1) << 150));
}

TEST(PhiPoisson, OnInstance) {
  const ColoredInstance inst = one_d({0, 2}, {1, 3, 5, 7});
  // mu_R = 1/2, mu_B = 1: the second term is (1/2) log((1/2) / 0).
  EXPECT_TRUE(phi_poisson(inst, Halfspace(RatVector{q(1)}, q(1))).infinite);
  const PoissonValue v = phi_poisson(inst, Halfspace(RatVector{q(1)}, q(4)));
  // mu_R = 0, mu_B = 1/2.
  EXPECT_NEAR(v.approx, std::log(2.0), 1e-12);
  expect_error(ErrorCode::kEmptyColorClass, [] { phi_poisson(one_d({1}, {}), Halfspace(RatVector{q(1)}, q(0))); });
}

TEST(HyperplaneThrough, Examples) {
  const Halfspace a = hyperplane_through({pt({q(0), q(0)}), pt({q(1), q(0)})});
  EXPECT_EQ(a.w(), (RatVector{q(0), q(1)}));
  EXPECT_EQ(a.xi(), q(0));
  const Halfspace b = hyperplane_through({pt({q(1), q(0)}), pt({q(0), q(1)})});
  EXPECT_EQ(b, Halfspace(RatVector{q(1), q(1)}, q(1)));
  const Halfspace c = hyperplane_through({pt({q(1), q(0), q(0)}), pt({q(0), q(1), q(0)}), pt({q(0), q(0), q(1)})});
  EXPECT_EQ(c, Halfspace(RatVector{q(1), q(1), q(1)}, q(1)));
  expect_error(ErrorCode::kAffinelyDependent, [] { hyperplane_through({pt({q(1), q(1)}), pt({q(1), q(1)})}); });
}

TEST(HyperplaneThrough, ContainsRandomPoints) {
  SplitMix64 rng(25);
  for (int t = 0; t < 100; ++t) {
    const std::size_t d = 2 + rng.uniform(3);
    std::vector<Point> pts(d, Point(d));
    for (auto& p : pts)
      for (auto& c : p) c = q(rng.range(-6, 6), rng.range(1, 3));
    try {
      const Halfspace h = hyperplane_through(pts);
      for (const auto& p : pts) EXPECT_EQ(side_of(h, p), 0);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kAffinelyDependent);
    }
  }
}

TEST(TrivialHalfspaces, ContainEverythingOrNothing) {
  const ColoredInstance inst = one_d({3, -8}, {5});
  EXPECT_EQ(phi(inst, all_space(inst)), 1);
  EXPECT_EQ(phi(inst, empty_space(inst)), 0);
  EXPECT_EQ(all_space(inst), Halfspace(RatVector{q(1)}, q(-9)));
  EXPECT_EQ(empty_space(one_d({}, {})), Halfspace(RatVector{q(1)}, q(1)));
}

}  // namespace
}  // namespace hsdisc
