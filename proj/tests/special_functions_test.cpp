// Copyright 2026 The reproq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "reproq/numeric/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include "gtest/gtest.h"
#include "oracles/t_oracle.hpp"

namespace reproq::numeric {
namespace {

// Frozen from tests/oracles/t_oracle.hpp (Simpson quadrature + bisection).
constexpr std::pair<int, double> kT975[] = {
    {1, 12.706204736}, {2, 4.302652730}, {3, 3.182446305},  {6, 2.446911851},
    {7, 2.364624252},  {30, 2.042272456}, {100, 1.983971519},
};

TEST(LogGammaTest, MatchesStdLgamma) {
  for (double x : {1e-6, 0.1, 0.5, 1.0, 1.5, 2.0, 3.5, 10.0, 57.3, 500.5, 1e5, 5e5}) {
    const double expected = std::lgamma(x);
    EXPECT_NEAR(log_gamma(x), expected, 1e-13 * std::max(1.0, std::fabs(expected))) << "x=" << x;
  }
}

TEST(LogGammaTest, KnownValues) {
  EXPECT_NEAR(log_gamma(0.5), 0.5 * std::log(std::numbers::pi), 1e-15);
  EXPECT_NEAR(log_gamma(1.0), 0.0, 1e-15);
  EXPECT_NEAR(log_gamma(2.0), 0.0, 1e-15);
  EXPECT_NEAR(log_gamma(5.0), std::log(24.0), 1e-14);
}

TEST(LogGammaTest, NonPositiveIsNan) {
  EXPECT_TRUE(std::isnan(log_gamma(0.0)));
  EXPECT_TRUE(std::isnan(log_gamma(-1.5)));
}

TEST(IncompleteBetaTest, ClosedForms) {
  for (double x : {0.0, 0.01, 0.3, 0.5, 0.77, 0.999, 1.0}) {
    EXPECT_NEAR(incomplete_beta(1.0, 1.0, x), x, 1e-14);
    EXPECT_NEAR(incomplete_beta(2.5, 1.0, x), std::pow(x, 2.5), 1e-13);
    EXPECT_NEAR(incomplete_beta(1.0, 3.0, x), 1.0 - std::pow(1.0 - x, 3.0), 1e-13);
  }
}

TEST(IncompleteBetaTest, Symmetry) {
  for (double a : {0.5, 2.0, 7.5}) {
    for (double b : {0.5, 1.5, 40.0}) {
      for (double x : {0.05, 0.4, 0.9}) {
        EXPECT_NEAR(incomplete_beta(a, b, x), 1.0 - incomplete_beta(b, a, 1.0 - x), 1e-13);
      }
    }
  }
}

TEST(IncompleteBetaTest, OutOfDomainIsNan) {
  EXPECT_TRUE(std::isnan(incomplete_beta(0.0, 1.0, 0.5)));
  EXPECT_TRUE(std::isnan(incomplete_beta(1.0, 1.0, 1.5)));
}

TEST(StudentTCdfTest, CauchyAndDf2ClosedForms) {
  for (double t : {-30.0, -2.0, -0.3, 0.0, 0.7, 4.0, 250.0}) {
    EXPECT_NEAR(student_t_cdf(t, 1.0), 0.5 + std::atan(t) / std::numbers::pi, 1e-14) << t;
    EXPECT_NEAR(student_t_cdf(t, 2.0), 0.5 + t / (2.0 * std::sqrt(2.0 + t * t)), 1e-14) << t;
  }
}

TEST(StudentTCdfTest, Infinities) {
  EXPECT_EQ(student_t_cdf(std::numeric_limits<double>::infinity(), 3.0), 1.0);
  EXPECT_EQ(student_t_cdf(-std::numeric_limits<double>::infinity(), 3.0), 0.0);
}

TEST(TQuantileTest, MatchesQuadratureOracle) {
  for (const auto& [df, expected] : kT975) {
    EXPECT_NEAR(t_quantile(df, 0.975), expected, 1e-8) << "df=" << df;
  }
}

TEST(TQuantileTest, OracleReproducesFrozenValues) {
  for (const auto& [df, expected] : kT975) {
    EXPECT_NEAR(testing::t_quantile_by_bisection(df, 0.975), expected, 1e-8) << "df=" << df;
  }
}

TEST(TQuantileTest, MedianIsZeroAndAntisymmetric) {
  for (int df : {1, 4, 19, 250}) {
    EXPECT_EQ(t_quantile(df, 0.5), 0.0);
    for (double p : {0.001, 0.1, 0.3, 0.45}) {
      EXPECT_NEAR(t_quantile(df, p), -t_quantile(df, 1.0 - p), 1e-9) << df << " " << p;
    }
  }
}

TEST(TQuantileTest, InvertsCdf) {
  for (int df : {1, 2, 5, 12, 60}) {
    for (double p : {0.6, 0.9, 0.975, 0.999, 0.999999}) {
      EXPECT_NEAR(student_t_cdf(t_quantile(df, p), double(df)), p, 1e-12) << df << " " << p;
    }
  }
}

TEST(TQuantileTest, RejectsBadArguments) {
  for (double p : {0.0, 1.0, -0.2, 1.5, std::nan("")}) {
    try {
      t_quantile(5, p);
      FAIL() << "p=" << p;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kBadProbability);
    }
  }
  EXPECT_THROW(t_quantile(0, 0.9), Error);
}

}  // namespace
}  // namespace reproq::numeric
