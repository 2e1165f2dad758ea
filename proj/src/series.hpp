#ifndef CRITSCALE_SERIES_HPP
#define CRITSCALE_SERIES_HPP

#include <cmath>
#include <cstdint>

namespace critscale {

// Partial geometric sum sum_{i=a}^{b} x^i, closed form, 0 for b < a.
inline double geom_sum(std::int64_t a, std::int64_t b, double x) {
  if (b < a) return 0.0;
  if (std::abs(x - 1.0) < 1e-12) return static_cast<double>(b - a + 1);
  return (std::pow(x, static_cast<double>(a)) - std::pow(x, static_cast<double>(b + 1))) / (1.0 - x);
}

// sum_{i=a}^{b} i x^{i-1}, closed form, 0 for b < a.
inline double geom_sum_deriv(std::int64_t a, std::int64_t b, double x) {
  if (b < a) return 0.0;
  if (std::abs(x - 1.0) < 1e-12)
    return static_cast<double>(b - a + 1) * static_cast<double>(a + b) / 2.0;
  const double t0 = a > 0 ? a * std::pow(x, static_cast<double>(a - 1)) : 0.0;
  return (t0 + (1.0 - a) * std::pow(x, static_cast<double>(a)) +
          b * std::pow(x, static_cast<double>(b + 1)) -
          (b + 1) * std::pow(x, static_cast<double>(b))) /
         ((1.0 - x) * (1.0 - x));
}

// Ratios 1/s_{0,k-1}(x) and s_{0,k-2}(x)/s_{0,k-1}(x), evaluated without
// forming x^k when x > 1 (x^{-k} underflowing to 0 lands exactly on the
// k -> infinity limits 0 and 1/x).
struct GeomRatios {
  double inv_s;         // 1 / s_{0,k-1}
  double prev_over_s;   // s_{0,k-2} / s_{0,k-1}
};

inline GeomRatios geom_ratios(double x, std::int64_t k) {
  GeomRatios r;
  if (std::abs(x - 1.0) < 1e-12) {
    r.inv_s = 1.0 / static_cast<double>(k);
    r.prev_over_s = static_cast<double>(k - 1) / static_cast<double>(k);
  } else if (x > 1.0) {
    const double t = std::pow(x, -static_cast<double>(k));
    r.inv_s = (x - 1.0) * t / (1.0 - t);
    r.prev_over_s = (1.0 / x - t) / (1.0 - t);
  } else {
    const double p = std::pow(x, static_cast<double>(k));
    r.inv_s = (1.0 - x) / (1.0 - p);
    r.prev_over_s = k >= 2 ? (1.0 - p / x) / (1.0 - p) : 0.0;
  }
  if (k == 1) r.prev_over_s = 0.0;
  return r;
}

// Odd/even power sums scaled by x^{-scale_pow}:
//   sum_{l odd,  0<=l<=K} x^{l - scale_pow}  and  sum_{l even, 0<=l<=K} x^{l - scale_pow}.
// Stable for x > 1 when scale_pow >= K (only non-positive exponents occur).
struct ParitySums {
  double odd = 0.0;
  double even = 0.0;
};

inline ParitySums parity_sums_scaled(double x, std::int64_t K, std::int64_t scale_pow) {
  ParitySums out;
  if (K < 0) return out;
  if (std::abs(x - 1.0) < 1e-12) {
    out.odd = static_cast<double>((K + 1) / 2);
    out.even = static_cast<double>(K / 2 + 1);
    return out;
  }
  const double x2 = x * x;
  if (x > 1.0) {
    const double t = 1.0 / x;
    const double t2 = t * t;
    if (K >= 1) {
      const std::int64_t Ko = (K % 2 == 1) ? K : K - 1;  // largest odd <= K
      const std::int64_t m = (K + 1) / 2;                // number of odd terms
      out.odd = std::pow(t, static_cast<double>(scale_pow - Ko)) *
                (1.0 - std::pow(t2, static_cast<double>(m))) / (1.0 - t2);
    }
    const std::int64_t Ke = (K % 2 == 0) ? K : K - 1;  // largest even <= K
    const std::int64_t me = K / 2 + 1;                 // number of even terms
    out.even = std::pow(t, static_cast<double>(scale_pow - Ke)) *
               (1.0 - std::pow(t2, static_cast<double>(me))) / (1.0 - t2);
    return out;
  }
  // x < 1: direct closed forms, then scale
  const std::int64_t m = (K + 1) / 2;
  const std::int64_t me = K / 2 + 1;
  const double scale = std::pow(x, -static_cast<double>(scale_pow));
  if (K >= 1) out.odd = scale * x * (1.0 - std::pow(x2, static_cast<double>(m))) / (1.0 - x2);
  out.even = scale * (1.0 - std::pow(x2, static_cast<double>(me))) / (1.0 - x2);
  return out;
}

}  // namespace critscale

#endif
