#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "polyberg/errors.hpp"
#include "polyberg/integration.hpp"
#include "polyberg/jacobi.hpp"
#include "polyberg/special_fn.hpp"

using namespace polyberg;

TEST(QCoeffs, Examples) {
  EXPECT_EQ(q_coeffs({3.5, 2.0, 0}), PolyCoeffs({1.0}));
  EXPECT_EQ(q_coeffs({0, 0, 1}), PolyCoeffs({-1.0, 2.0}));
  EXPECT_EQ(q_coeffs({0, 0, 2}), PolyCoeffs({1.0, -6.0, 6.0}));
  EXPECT_THROW(q_coeffs({0, 0, 65}), UnsupportedError);
  EXPECT_THROW(q_coeffs({-1, 0, 1}), DomainError);
}

TEST(QCoeffs, LeadingCoefficientNonzero) {
  for (double a : {0.0, 0.5, 2.5, 9.0}) {
    for (int b = 0; b <= 10; ++b) {
      for (int m = 0; m <= 30; ++m) {
        const auto c = q_coeffs({a, double(b), m});
        ASSERT_EQ(c.size(), std::size_t(m + 1));
        EXPECT_NE(c.back(), 0.0);
      }
    }
  }
}

TEST(QEval, Examples) {
  EXPECT_NEAR(q_eval({0, 0, 2}, 1.0), 1.0, 1e-15);
  EXPECT_NEAR(q_eval({0, 0, 1}, 0.5), 0.0, 1e-15);
  EXPECT_EQ(q_eval({5, 3, 0}, 0.77), 1.0);
}

TEST(QEval, AgreesWithRecurrence) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> ta(0.0, 10.0), tt(0.0, 1.0);
  for (int i = 0; i < 400; ++i) {
    const double a = ta(rng);
    const int b = static_cast<int>(tt(rng) * 8);
    const int m = static_cast<int>(tt(rng) * 30);
    const double t = tt(rng);
    const long double want = oracle::jacobi_q(m, a, b, t);
    const double got = q_eval({a, double(b), m}, t);
    // Relative error, measured against the size of the polynomial near t.
    const long double scale = std::max(std::fabs(want), 1e-6L * std::fabs(oracle::jacobi_q(m, a, b, 1.0L)));
    EXPECT_LE(std::fabs(got - want) / scale, 1e-10) << "a=" << a << " b=" << b << " m=" << m << " t=" << t;
  }
}

TEST(NormCoeff, Examples) {
  for (int m = 0; m < 10; ++m) EXPECT_NEAR(jac_norm_coeff({0, 0, m}), std::sqrt(2.0 * m + 1), 1e-13);
  EXPECT_NEAR(jac_norm_coeff({0, 2, 1}), std::sqrt(5.0), 1e-14);
  EXPECT_NEAR(jac_norm_coeff({1, 0, 0}), std::sqrt(2.0), 1e-14);
}

TEST(NormCoeff, BinomialFormMatchesGammaForm) {
  for (double a : {0.0, 0.5, 1.0, 2.5, 7.25}) {
    for (int b = 0; b <= 12; ++b) {
      for (int m = 0; m <= 20; ++m) {
        const double g = jac_norm_coeff({a, double(b), m});
        EXPECT_NEAR(jac_norm_coeff_binomial(a, b, m), g, 1e-12 * g);
        EXPECT_NEAR(g, static_cast<double>(oracle::norm_coeff(m, a, b)), 1e-12 * g);
      }
    }
  }
}

TEST(JacobiFunction, ClosedForms) {
  for (double a : {0.0, 0.5, 1.0, 2.5}) {
    for (double t : {0.0, 0.1, 0.37, 0.8, 0.999}) {
      const double w = std::pow(1 - t, a / 2);
      EXPECT_NEAR(jac_fn_eval({a, 0, 0}, t), std::sqrt(a + 1) * w, 1e-13);
      EXPECT_NEAR(jac_fn_eval({a, 0, 1}, t), std::sqrt(a + 3) * w * ((a + 2) * t - 1), 1e-13);
      EXPECT_NEAR(jac_fn_eval({a, 2, 0}, t), std::sqrt((a + 3) * (a + 2) * (a + 1) / 2) * w * t, 1e-13);
    }
  }
}

TEST(JacobiFunction, SingularEndpoints) {
  EXPECT_THROW(jac_fn_eval({-0.5, 0, 1}, 1.0), DomainError);
  EXPECT_THROW(jac_fn_eval({0.5, -0.5, 1}, 0.0), DomainError);
  EXPECT_NO_THROW(jac_fn_eval({-0.5, 0, 1}, 0.5));
}

TEST(JacobiFunction, UnweightedOrthonormality) {
  for (double a : {0.0, 1.0, 2.5}) {
    for (int b = 0; b <= 4; ++b) {
      for (int p = 0; p <= 4; ++p) {
        for (int q = 0; q <= 4; ++q) {
          const long double v = oracle::integrate(
              [&](long double t) {
                return static_cast<long double>(jac_fn_eval({a, double(b), p}, static_cast<double>(t))) *
                       jac_fn_eval({a, double(b), q}, static_cast<double>(t));
              },
              0, 1, 64, 24);
          EXPECT_NEAR(static_cast<double>(v), p == q ? 1.0 : 0.0, 1e-10);
        }
      }
    }
  }
}

TEST(SupBound, Examples) {
  EXPECT_NEAR(jac_sup_bound({1, 0, 0}, 0.5), 4.0, 1e-13);
  EXPECT_LT(jac_sup_bound({1, 20, 0}, 0.25), jac_sup_bound({1, 10, 0}, 0.25));
  EXPECT_THROW(jac_sup_bound({0.0, 0, 0}, 0.5), UnsupportedError);
  EXPECT_THROW(jac_sup_bound({-0.5, 0, 0}, 0.5), UnsupportedError);
}

TEST(SupBound, DominatesGridScan) {
  double grid_max = 0;
  for (int i = 0; i <= 10000; ++i) grid_max = std::max(grid_max, std::abs(jac_fn_eval({1, 8, 2}, 0.5 * i / 10000)));
  EXPECT_LE(grid_max, jac_sup_bound({1, 8, 2}, 0.5));

  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> ua(0.01, 10.0), ux(0.01, 0.99);
  std::uniform_int_distribution<int> ub(0, 40), um(0, 5);
  for (int i = 0; i < 50; ++i) {
    const JacobiParams p{ua(rng), double(ub(rng)), um(rng)};
    const double x = ux(rng);
    const double bound = jac_sup_bound(p, x);
    for (int g = 0; g <= 2000; ++g) EXPECT_LE(std::abs(jac_fn_eval(p, x * g / 2000)), bound);
  }
}

// Orthogonality and degree vanishing through the integration module, against
// closed-form norms.
TEST(Orthogonality, WeightedInnerProducts) {
  for (double a : {0.0, 0.5, 1.0, 2.5}) {
    for (int b = 0; b <= 6; ++b) {
      for (int p = 0; p <= 7; ++p) {
        for (int q = 0; q <= 7; ++q) {
          const double kk = jac_norm_coeff({a, double(b), p}) * jac_norm_coeff({a, double(b), q});
          const double got = beta_entry(Symbol::constant(1.0), a, b, p, q).real() / kk;
          const double want = p == q ? static_cast<double>(oracle::q_norm_sq(p, a, b)) : 0.0;
          EXPECT_NEAR(got, want, 1e-10);
        }
      }
    }
  }
}

TEST(Orthogonality, DegreeVanishing) {
  for (double a : {0.0, 0.5, 2.5}) {
    for (int b = 0; b <= 4; ++b) {
      for (int m = 1; m <= 8; ++m) {
        for (int d = 0; d <= m; ++d) {
          PolyCoeffs mono(d + 1, 0.0);
          mono[d] = 1.0;
          // beta_{t^d, a, b, 0, m} / (k_0 k_m) = integral of t^d Q_m w.
          const double kk = jac_norm_coeff({a, double(b), 0}) * jac_norm_coeff({a, double(b), m});
          const double v = beta_entry(Symbol::poly_t(mono), a, b, 0, m).real() / kk;
          if (d < m) {
            EXPECT_LT(std::abs(v), 1e-10);
          } else {
            EXPECT_GT(std::abs(v) / beta(b + m + 1.0, a + 1.0), 1e-12);
          }
        }
      }
    }
  }
}

TEST(Orthogonality, MomentIdentity) {
  for (double a : {0.0, 0.5, 1.0, 2.5}) {
    for (int b = 0; b <= 6; ++b) {
      for (int m = 0; m <= 7; ++m) {
        PolyCoeffs mono(m + 1, 0.0);
        mono[m] = 1.0;
        const double kk = jac_norm_coeff({a, double(b), 0}) * jac_norm_coeff({a, double(b), m});
        const double v = beta_entry(Symbol::poly_t(mono), a, b, 0, m).real() / kk;
        const double want = beta(b + m + 1.0, a + m + 1.0);
        EXPECT_NEAR(v, want, 1e-10 * want);
      }
    }
  }
}
