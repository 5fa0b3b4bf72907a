#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "polyberg/bergman_oracle.hpp"
#include "polyberg/errors.hpp"
#include "polyberg/integration.hpp"

using namespace polyberg;

TEST(DiskPoly, Examples) {
  for (double a : {0.0, 1.5}) EXPECT_NEAR(std::abs(disk_poly(0, 0, a, {0.3, 1.0}) - 1.0), 0.0, 1e-15);
  const DiskPoint pt{0.4, 0.9};
  EXPECT_NEAR(std::abs(disk_poly(1, 0, 0.0, pt) - std::sqrt(2.0) * std::polar(0.4, 0.9)), 0.0, 1e-15);
  for (double th : {0.0, 1.0, 2.0, 5.0}) {
    EXPECT_NEAR(std::abs(disk_poly(3, 1, 1.0, {0.6, th})), std::abs(disk_poly(3, 1, 1.0, {0.6, 0.0})), 1e-14);
  }
  EXPECT_THROW(disk_poly(0, 0, 0.0, {1.0, 0.0}), DomainError);
}

TEST(DiskPoly, TwoFormsAgree) {
  for (double a : {0.0, 0.5, 2.5}) {
    for (int p = 0; p <= 4; ++p) {
      for (int q = 0; q <= 4; ++q) {
        for (double r : {0.0, 0.2, 0.55, 0.9, 0.99}) {
          const DiskPoint pt{r, 0.7};
          EXPECT_NEAR(std::abs(disk_poly(p, q, a, pt) - disk_poly_via_jac(p, q, a, pt)), 0.0, 1e-12);
        }
      }
    }
  }
}

TEST(BasisIndex, Enumeration) {
  EXPECT_EQ(basis_index(2, 1), std::make_pair(3, 1));
  EXPECT_EQ(basis_index(-2, 1), std::make_pair(1, 3));
  EXPECT_EQ(basis_index(0, 4), std::make_pair(4, 4));
}

TEST(ToeplitzEntry, Examples) {
  // Integer alpha keeps the radial integrand polynomial, so Gauss-Legendre is exact.
  EXPECT_NEAR(std::abs(toeplitz_entry_2d(Symbol::constant(1.0), 1.0, 2, 1, 2, 1) - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(toeplitz_entry_2d(Symbol::constant(1.0), 1.0, 2, 1, 3, 2)), 0.0, 1e-12);
  // (1-t)^{1/2} is not smooth at t = 1; the graded tail panels recover full accuracy.
  EXPECT_NEAR(std::abs(toeplitz_entry_2d(Symbol::constant(1.0), 0.5, 2, 1, 2, 1) - 1.0), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(toeplitz_entry_2d(Symbol::constant(1.0), 0.5, 2, 1, 3, 2)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(toeplitz_entry_2d(Symbol::constant(1.0), -0.5, 1, 0, 1, 0) - 1.0), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(toeplitz_entry_2d(Symbol::constant(1.0), 0.5, 2, 1, 1, 2)), 0.0, 1e-12);
  EXPECT_NEAR(toeplitz_entry_2d(Symbol::indicator(0.5), 0.0, 1, 0, 1, 0).real(), 1.0 / 16, 1e-12);
  EXPECT_THROW(toeplitz_entry_2d(Symbol::constant(1.0), 0.0, 2, 0, 0, 2, 64, 5), DomainError);
}

TEST(ToeplitzEntry, FrequencySelection) {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> idx(0, 4);
  const std::vector<Symbol> syms{Symbol::indicator(0.4), make_gp(3, 1.0), Symbol::poly_t({0.2, 1.0, -0.5})};
  int checked = 0;
  while (checked < 50) {
    const int p = idx(rng), q = idx(rng), p2 = idx(rng), q2 = idx(rng);
    if (p - q == p2 - q2) continue;
    EXPECT_LT(std::abs(toeplitz_entry_2d(syms[checked % 3], 1.0, p, q, p2, q2, 64)), 1e-8);
    ++checked;
  }
}

TEST(ToeplitzEntry, MatchesBetaEntries) {
  for (int n = 1; n <= 3; ++n) {
    for (double a : {0.0, 1.0}) {
      for (const Symbol& s : {Symbol::indicator(0.5), make_gp(2, a)}) {
        for (int xi = std::max(-n + 1, -3); xi <= 3; ++xi) {
          const int d = std::min(n + xi, n);
          for (int j = 0; j < d; ++j) {
            for (int k = 0; k < d; ++k) {
              const auto [p, q] = basis_index(xi, j);
              const auto [p2, q2] = basis_index(xi, k);
              EXPECT_LT(std::abs(toeplitz_entry_2d(s, a, p, q, p2, q2) - beta_entry(s, a, xi, j, k)), 1e-6);
            }
          }
        }
      }
    }
  }
}
