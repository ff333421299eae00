#include <gtest/gtest.h>

#include <random>
#include <string>

#include "jprime/jprime.hpp"
#include "oracles.hpp"

using namespace jprime;

namespace {

BigFloat bf(const char* s, mpfr_prec_t bits = 256) { return BigFloat(std::string(s), bits); }

RationalPoly q2_symbolic(const Rational& nu) { return RationalPoly({-1 / (4 * nu * (nu + 1)), 0, Rational(1, 2)}); }

RationalPoly q3_symbolic(const Rational& nu) {
  return RationalPoly({0, -(3 * nu + 4) / (8 * nu * (nu + 1) * (nu + 2)), 0, Rational(1, 2)});
}

}  // namespace

TEST(QFamily, InitialTermsAndSmallCases) {
  auto f = build_q(1, 3);
  EXPECT_EQ(f.q[0], RationalPoly(1));
  EXPECT_EQ(f.q[1], RationalPoly({0, Rational(1, 2)}));
  EXPECT_EQ(f.q[2], RationalPoly({Rational(-1, 8), 0, Rational(1, 2)}));
  EXPECT_EQ(f.q[3], RationalPoly({0, Rational(-7, 48), 0, Rational(1, 2)}));
  EXPECT_EQ(f.q_star[0], RationalPoly());
  EXPECT_EQ(f.q_star[1], RationalPoly(1));
  EXPECT_EQ(f.q_star[2], RationalPoly::x());
}

TEST(QFamily, RecurrenceDegreeAndParity) {
  for (Rational nu : {Rational(1, 3), Rational(5, 2), Rational(-7, 4)}) {
    auto f = build_q(nu, 10);
    EXPECT_EQ(f.q[2], q2_symbolic(nu));
    EXPECT_EQ(f.q[3], q3_symbolic(nu));
    for (unsigned n = 1; n < 10; ++n) {
      Rational beta_n = 1 / (4 * (nu + n - 1) * (nu + n));
      EXPECT_EQ(RationalPoly::x() * f.q[n], f.q[n + 1] + f.q[n - 1] * beta_n);
      EXPECT_EQ(RationalPoly::x() * f.q_star[n], f.q_star[n + 1] + f.q_star[n - 1] * beta_n);
    }
    for (unsigned n = 1; n <= 10; ++n) {
      EXPECT_EQ(f.q[n].degree(), static_cast<int>(n));
      EXPECT_EQ(f.q[n].leading(), Rational(1, 2));
      EXPECT_EQ(f.q[n].reflect(), n % 2 ? RationalPoly(-f.q[n]) : f.q[n]);
    }
  }
}

TEST(QFamily, RejectsNonpositiveIntegerOrder) {
  try {
    build_q(-2, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NonadmissibleNu);
  }
}

TEST(QFamily, RootsInterlace) {
  for (Rational nu : {Rational(1, 2), Rational(2), Rational(9, 2)}) {
    auto f = build_q(nu, 13);
    for (unsigned n = 1; n <= 12; ++n) EXPECT_TRUE(oracle::strictly_interlace(f.q[n + 1], f.q[n])) << nu << " " << n;
  }
}

TEST(Lommel, FirstTermsAndRecurrence) {
  Rational nu(3, 2);
  EXPECT_EQ(lommel_R(nu, 0), RationalPoly(1));
  EXPECT_EQ(lommel_R(nu, 1), RationalPoly({0, 2 * nu}));
  EXPECT_EQ(lommel_R(nu, -1), RationalPoly());
  EXPECT_EQ(lommel_R(nu, -2), RationalPoly(-1));
  for (int n = 1; n < 8; ++n)
    EXPECT_EQ(lommel_R(nu, n + 1), RationalPoly::x() * lommel_R(nu, n) * (2 * (nu + n)) - lommel_R(nu, n - 1));
}

TEST(Lommel, BuildsTheQPolynomials) {
  for (Rational nu : {Rational(3, 2), Rational(1), Rational(-1, 3)}) {
    auto f = build_q(nu, 8);
    for (int n = 0; n <= 8; ++n) {
      Rational scale = pow(Rational(2), n + 1) * pochhammer(nu, n);
      EXPECT_EQ(f.q[n], (lommel_R(nu, n) - lommel_R(nu + 2, n - 2)) / scale) << n;
    }
  }
}

TEST(PFamily, TableEntriesAtOne) {
  auto pq = build_p_quotient(1, 3);
  EXPECT_EQ(pq.p[0], RationalPoly(1));
  EXPECT_EQ(pq.p[1], RationalPoly::x());
  EXPECT_EQ(pq.p[2], RationalPoly({Rational(-17, 72), 0, 1}));
  // orthogonality to x fixes the coefficient at mu_4 / mu_2 = 79/272
  EXPECT_EQ(pq.p[3], RationalPoly({0, Rational(-79, 272), 0, 1}));
  auto pr = build_p_recurrence(1, 3);
  EXPECT_EQ(pr.gamma_at(1), Rational(3, 4));
  EXPECT_EQ(pr.gamma_at(2), Rational(17, 72));
}

TEST(PFamily, QuotientAndRecurrenceAgree) {
  for (Rational nu : {Rational(1, 2), Rational(1), Rational(5, 2)}) {
    auto a = build_p_quotient(nu, 12);
    auto b = build_p_recurrence(nu, 12);
    for (unsigned n = 0; n <= 12; ++n) EXPECT_EQ(a.p[n], b.p[n]) << nu << " " << n;
    for (unsigned n = 1; n <= 12; ++n) EXPECT_EQ(a.gamma_at(n), b.gamma_at(n));
  }
}

TEST(PFamily, GammaFromHValuesMatchesDirectQForm) {
  for (Rational nu : {Rational(2, 3), Rational(4)}) {
    auto qf = build_q(nu, 12);
    auto pf = build_p_recurrence(nu, 10);
    for (unsigned n = 1; n <= 10; ++n) {
      EXPECT_EQ(pf.gamma_at(n), gamma_from_q(qf, n));
      EXPECT_NE(sgn(pf.gamma_at(n)), 0);
    }
  }
}

TEST(PFamily, GramSchmidtOnMomentsReproducesP) {
  for (Rational nu : {Rational(1), Rational(3, 2)}) {
    const MomentTable mu(nu, 16);
    auto gs = oracle::gram_schmidt(mu.moments(), 8);
    auto pf = build_p_recurrence(nu, 8);
    for (unsigned n = 0; n <= 8; ++n) EXPECT_EQ(gs[n], pf.p[n]) << nu << " " << n;
  }
}

TEST(PFamily, MonicWithParity) {
  auto f = build_p_recurrence(Rational(7, 3), 9);
  for (unsigned n = 0; n <= 9; ++n) {
    EXPECT_EQ(f.p[n].degree(), static_cast<int>(n));
    EXPECT_EQ(f.p[n].leading(), Rational(1));
    EXPECT_EQ(f.p[n].reflect(), n % 2 ? RationalPoly(-f.p[n]) : f.p[n]);
  }
}

TEST(PFamily, RequiresPositiveOrder) {
  EXPECT_THROW(build_p_quotient(Rational(-1, 2), 3), Error);
  EXPECT_THROW(build_p_recurrence(0, 3), Error);
}

TEST(HSequence, ValuesAndPolynomials) {
  auto h = build_h(1, 6);
  EXPECT_EQ(h.h(0), Rational(1));
  EXPECT_EQ(h.h(1), Rational(1));
  EXPECT_EQ(h.h(2), Rational(3));
  EXPECT_EQ(h.h(3), Rational(17));
  EXPECT_EQ(h.H(1), RationalPoly(1));
  EXPECT_EQ(h.H(2), RationalPoly({2, 1}));
  EXPECT_EQ(h.H(3), RationalPoly({8, 8, 1}));
  EXPECT_EQ(build_h(Rational(-5, 3), 2).h(2), (Rational(-5, 3) + 2) / Rational(-5, 3));
}

TEST(HSequence, HValuesAreScaledHPolynomials) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 10; ++t) {
    Rational nu = oracle::random_rational(rng, -6, 6);
    if (sgn(nu) == 0) continue;
    auto h = build_h(nu, 12);
    for (unsigned n = 1; n <= 12; ++n) {
      EXPECT_EQ(h.h(n) * pow(nu, n - 1), h.H(n)(nu));
      EXPECT_EQ(h.H(n).degree(), static_cast<int>(n) - 1);
      EXPECT_EQ(h.H(n).leading(), Rational(1));
    }
  }
  // h_n(nu) = 2^n (nu)_n q_n(1/nu)
  Rational nu(5, 7);
  auto qf = build_q(nu, 8);
  auto h = build_h(nu, 8);
  for (unsigned n = 0; n <= 8; ++n) EXPECT_EQ(h.h(n), pow(Rational(2), n) * pochhammer(nu, n) * qf.q[n](1 / nu));
  try {
    build_h(0, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ZeroNu);
  }
}

TEST(HSequence, AsymptoticsNearZeroAndAtInfinity) {
  Rational near_zero(-1, 1000000);
  auto h0 = build_h(near_zero, 7);
  for (unsigned n = 0; n <= 6; ++n) {
    Rational scaled = h0.h(n + 1) * pow(near_zero, n) / (pow(Rational(2), n) * oracle::factorial(n));
    EXPECT_NEAR(scaled.get_d(), 1.0, 0.01) << n;
  }
  auto hinf = build_h(Rational(-1000000), 6);
  for (unsigned n = 0; n <= 6; ++n) EXPECT_NEAR(hinf.h(n).get_d(), 1.0, 0.01);
}

TEST(RhoWeights, SingleNodeAndEmpty) {
  auto w = rho_weights(1, 1, bf("1e-30"));
  ASSERT_EQ(w.size(), 1u);
  EXPECT_TRUE(w[0].root.is_zero() || abs(w[0].root).to_double() < 1e-60);
  EXPECT_NEAR(w[0].weight.to_double(), 2.0, 1e-30);
  EXPECT_TRUE(rho_weights(1, 0, bf("1e-30")).empty());
}

TEST(RhoWeights, SymmetricPositiveAndSumToTwo) {
  auto w = rho_weights(2, 4, bf("1e-30"));
  ASSERT_EQ(w.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_GT(w[i].weight.sign(), 0);
    EXPECT_LT(abs(w[i].root + w[3 - i].root).to_double(), 1e-60);
    EXPECT_LT(abs(w[i].weight - w[3 - i].weight).to_double(), 1e-60);
  }
  auto w6 = rho_weights(Rational(3, 2), 6, bf("1e-30"));
  BigFloat s(0L, 256);
  for (const auto& e : w6) s += e.weight;
  EXPECT_LT(abs(s - BigFloat(2L, 256)).to_double(), 1e-60);
}

TEST(RhoWeights, NodesApproachReciprocalZeros) {
  // The largest root of q_n tends to 1/j'_{nu,1}.
  const Rational nu(2);
  auto w = rho_weights(nu, 30, bf("1e-30"));
  auto z = find_real_zeros(BigFloat(nu, 256), 1, bf("1e-40"));
  BigFloat target = BigFloat(1L, 256) / z[0];
  EXPECT_LT(abs(w.back().root - target).to_double(), 1e-15);
}

TEST(ChristoffelDarboux, ResidualVanishes) {
  EXPECT_EQ(cd_residual(1, 0, 1, 2), Rational(0));
  EXPECT_EQ(cd_residual(Rational(3, 2), 5, Rational(1, 3), Rational(-2, 7)), Rational(0));
  EXPECT_EQ(cd_confluent_residual(2, 4, Rational(1, 5)), Rational(0));
  EXPECT_EQ(cd_residual(Rational(-7, 3), 6, Rational(2), Rational(-1, 9)), Rational(0));
  try {
    cd_residual(1, 3, 1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CoincidentPoints);
  }
}

TEST(ChristoffelDarboux, LambdaIsProductOfBetas) {
  Rational nu(5, 3), prod = 1;
  for (unsigned n = 1; n <= 10; ++n) {
    prod *= beta(nu, n);
    EXPECT_EQ(lambda(nu, n), prod);
  }
  EXPECT_EQ(lambda(nu, 0), Rational(1));
}
