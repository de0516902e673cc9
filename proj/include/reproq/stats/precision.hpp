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

#pragma once

// Small-sample precision estimators: Bessel and c4-corrected standard
// deviations, the standard-error chain for s*, t-based confidence intervals,
// and the corrected coefficient of variation CV*.
//
// Every function takes a Sample, which holds its values sorted. Summation
// therefore runs in a fixed order and results are bit-identical under any
// permutation of the input.

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "reproq/error.hpp"
#include "reproq/notes.hpp"
#include "reproq/numeric/special_functions.hpp"

namespace reproq::stats {

template <std::floating_point T>
class Sample {
 public:
  Sample() = default;

  explicit Sample(std::span<const T> values) : values_(values.begin(), values.end()) {
    for (T v : values_) {
      if (!std::isfinite(v)) {
        throw Error(ErrorCode::kNonFiniteValue, "sample values must be finite");
      }
    }
    std::sort(values_.begin(), values_.end());
  }

  Sample(std::initializer_list<T> values) : Sample(std::span<const T>(values.begin(), values.size())) {}

  explicit Sample(const std::vector<T>& values) : Sample(std::span<const T>(values)) {}

  std::size_t size() const noexcept { return values_.size(); }
  bool empty() const noexcept { return values_.empty(); }
  std::span<const T> values() const noexcept { return values_; }

  /// True when every value is identical (exact comparison).
  bool constant() const noexcept { return !values_.empty() && values_.front() == values_.back(); }

 private:
  std::vector<T> values_;
};

template <std::floating_point T>
Sample(std::initializer_list<T>) -> Sample<T>;

namespace detail {

template <std::floating_point T>
void require_dispersion(const Sample<T>& sample) {
  if (sample.empty()) {
    throw Error(ErrorCode::kEmptySample, "sample is empty");
  }
  if (sample.size() < 2) {
    throw Error(ErrorCode::kInsufficientSample, "dispersion needs at least two values");
  }
}

}  // namespace detail

template <std::floating_point T>
T mean(const Sample<T>& sample) {
  if (sample.empty()) {
    throw Error(ErrorCode::kEmptySample, "mean of an empty sample");
  }
  if (sample.constant()) return sample.values().front();
  T sum = 0;
  for (T v : sample.values()) sum += v;
  return sum / static_cast<T>(sample.size());
}

/// Bessel-corrected standard deviation s.
template <std::floating_point T>
T sample_stddev(const Sample<T>& sample) {
  detail::require_dispersion(sample);
  if (sample.constant()) return T(0);
  const T m = mean(sample);
  T ss = 0;
  for (T v : sample.values()) ss += (v - m) * (v - m);
  return std::sqrt(ss / static_cast<T>(sample.size() - 1));
}

/// c4(n) = sqrt(2/(n-1)) Γ(n/2) / Γ((n-1)/2), evaluated in log space.
template <std::floating_point T = double>
T c4(std::size_t n) {
  if (n < 2) {
    throw Error(ErrorCode::kInsufficientSample, "c4 is defined for n >= 2");
  }
  const double nd = static_cast<double>(n);
  const double log_c4 = 0.5 * std::log(2.0 / (nd - 1.0)) + numeric::log_gamma(nd / 2.0) -
                        numeric::log_gamma((nd - 1.0) / 2.0);
  return static_cast<T>(std::exp(log_c4));
}

/// s* = s / c4(n), unbiased for σ under normality.
template <std::floating_point T>
T unbiased_stddev(const Sample<T>& sample) {
  return sample_stddev(sample) / c4<T>(sample.size());
}

/// se(s²) = sqrt(2 σ⁴ / (n-1)) with σ estimated by the Bessel-corrected s.
template <std::floating_point T>
T stderr_variance(const Sample<T>& sample) {
  const T s = sample_stddev(sample);
  return std::sqrt(T(2) * s * s * s * s / static_cast<T>(sample.size() - 1));
}

/// se(s*) ≈ se(s²) / (2σ), with σ estimated by s* and se(s²) using s.
/// Throws ZERO_DISPERSION for constant samples.
template <std::floating_point T>
T stderr_unbiased_stddev(const Sample<T>& sample) {
  const T s_star = unbiased_stddev(sample);
  if (s_star == T(0)) {
    throw Error(ErrorCode::kZeroDispersion, "standard error of s* undefined for zero dispersion");
  }
  return stderr_variance(sample) / (T(2) * s_star);
}

template <std::floating_point T>
T t_quantile(int df, T p) {
  return numeric::t_quantile(df, p);
}

template <std::floating_point T>
struct Interval {
  T low;
  T high;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Two-sided interval s* ± t(n-1, (1+level)/2) · se(s*). Bounds are not
/// clamped at zero. A constant sample yields [0, 0].
template <std::floating_point T>
Interval<T> stddev_ci(const Sample<T>& sample, T level) {
  if (!(level > T(0)) || !(level < T(1))) {
    throw Error(ErrorCode::kBadProbability, "confidence level must lie in (0, 1)");
  }
  detail::require_dispersion(sample);
  if (sample.constant()) return {T(0), T(0)};
  const T s_star = unbiased_stddev(sample);
  const T half_width = t_quantile(static_cast<int>(sample.size()) - 1, T(1) - (T(1) - level) / T(2)) *
                       stderr_unbiased_stddev(sample);
  return {s_star - half_width, s_star + half_width};
}

/// CV = 100 · s* / mean, in percent. Throws NONPOSITIVE_MEAN when mean <= 0.
template <std::floating_point T>
T cv(const Sample<T>& sample) {
  const T s_star = unbiased_stddev(sample);
  const T m = mean(sample);
  if (!(m > T(0))) {
    throw Error(ErrorCode::kNonPositiveMean, "coefficient of variation needs a positive mean");
  }
  return T(100) * s_star / m;
}

/// CV* = (1 + 1/(4n)) · CV.
template <std::floating_point T>
T cv_star(const Sample<T>& sample) {
  return (T(1) + T(1) / (T(4) * static_cast<T>(sample.size()))) * cv(sample);
}

/// Percentage of values v with |v - mean| <= k · s*. Constant samples give 100.
template <std::floating_point T>
T within_k_stddev(const Sample<T>& sample, T k) {
  detail::require_dispersion(sample);
  if (sample.constant()) return T(100);
  const T m = mean(sample);
  const T bound = k * unbiased_stddev(sample);
  std::size_t inside = 0;
  for (T v : sample.values()) {
    if (std::fabs(v - m) <= bound) ++inside;
  }
  return T(100) * static_cast<T>(inside) / static_cast<T>(sample.size());
}

/// Everything a precision assessment reports about one group of values.
/// cv and cv_star are empty when the mean is not positive.
struct PrecisionReport {
  std::size_t n = 0;
  double mean = 0;
  double sample_stddev = 0;
  double unbiased_stddev = 0;
  double stderr_variance = 0;
  double stderr_unbiased_stddev = 0;
  double ci_level = 0.95;
  double ci_low = 0;
  double ci_high = 0;
  std::optional<double> cv_percent;
  std::optional<double> cv_star_percent;
  double within_1sd_percent = 0;
  double within_2sd_percent = 0;
  std::vector<Note> warnings;

  friend bool operator==(const PrecisionReport&, const PrecisionReport&) = default;
};

inline PrecisionReport precision_report(const Sample<double>& sample, double level = 0.95) {
  detail::require_dispersion(sample);
  if (!(level > 0.0) || !(level < 1.0)) {
    throw Error(ErrorCode::kBadProbability, "confidence level must lie in (0, 1)");
  }
  PrecisionReport r;
  r.n = sample.size();
  r.mean = mean(sample);
  r.sample_stddev = sample_stddev(sample);
  r.unbiased_stddev = unbiased_stddev(sample);
  r.stderr_variance = stderr_variance(sample);
  r.ci_level = level;
  const Interval<double> ci = stddev_ci(sample, level);
  r.ci_low = ci.low;
  r.ci_high = ci.high;
  r.within_1sd_percent = within_k_stddev(sample, 1.0);
  r.within_2sd_percent = within_k_stddev(sample, 2.0);

  if (r.n < 3) {
    r.warnings.push_back({NoteCode::kSampleTooSmall,
                          "sample size below 3; CV* describes the sample but is a less reliable "
                          "estimate of the population CV"});
  }
  if (sample.constant()) {
    r.stderr_unbiased_stddev = 0;
    r.warnings.push_back({NoteCode::kZeroDispersion,
                          "all values identical; standard deviation is 0 and the interval is degenerate"});
  } else {
    r.stderr_unbiased_stddev = stderr_unbiased_stddev(sample);
  }
  if (r.ci_low < 0) {
    r.warnings.push_back({NoteCode::kNegativeCiLower,
                          "interval lower bound is negative, an artifact of the normal approximation "
                          "at small n"});
  }
  if (r.mean > 0) {
    r.cv_percent = cv(sample);
    r.cv_star_percent = cv_star(sample);
  } else {
    r.warnings.push_back({NoteCode::kNonPositiveMean,
                          "mean is not positive; CV and CV* are undefined"});
  }
  return r;
}

}  // namespace reproq::stats
