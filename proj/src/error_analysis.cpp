#include "qrm/error_analysis.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "qrm/css.hpp"
#include "qrm/errors.hpp"
#include "qrm/reed_muller.hpp"

namespace qrm {

namespace {

constexpr long kMaxBlockLength = 4096;

void check_tail_args(long n, long t, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("probability must lie in [0, 1]");
  if (n < 1 || n > kMaxBlockLength)
    throw DomainError("block length must lie in [1, " + std::to_string(kMaxBlockLength) + "]");
  if (t < 0 || t >= n) throw DomainError("threshold t must lie in [0, n)");
}

// log(i!) for i <= kMaxBlockLength, built once.
long double log_factorial(long i) {
  static const std::vector<long double> table = [] {
    std::vector<long double> t(kMaxBlockLength + 1, 0.0L);
    for (long j = 2; j <= kMaxBlockLength; ++j)
      t[static_cast<std::size_t>(j)] =
          t[static_cast<std::size_t>(j - 1)] + std::log(static_cast<long double>(j));
    return t;
  }();
  return table[static_cast<std::size_t>(i)];
}

// Sums term(j) for j in [lo, hi], visiting the peak term first and walking
// outward so compensated accumulation sees the big values before the tiny
// ones. term must be unimodal in j, which binomial terms are.
template <typename Term>
long double sum_outward(long lo, long hi, long peak, Term term) {
  if (peak < lo) peak = lo;
  if (peak > hi) peak = hi;
  long double sum = 0.0L;
  long double comp = 0.0L;
  auto add = [&](long double x) {
    // Neumaier variant of Kahan summation.
    long double t = sum + x;
    if (std::fabs(sum) >= std::fabs(x))
      comp += (sum - t) + x;
    else
      comp += (x - t) + sum;
    sum = t;
  };
  for (long j = peak; j <= hi; ++j) add(term(j));
  for (long j = peak - 1; j >= lo; --j) add(term(j));
  return sum + comp;
}

long peak_index(long n, double p) {
  // Mode of the binomial distribution.
  return static_cast<long>(std::floor((static_cast<long double>(n) + 1.0L) * p));
}

long double tail_exact64_impl(long n, long lo, long hi, double p) {
  // Pascal's triangle row n fits unsigned 64-bit arithmetic through n = 64.
  std::vector<unsigned long long> binom(static_cast<std::size_t>(n) + 1, 0);
  binom[0] = 1;
  for (long i = 1; i <= n; ++i)
    for (long j = i; j >= 1; --j)
      binom[static_cast<std::size_t>(j)] += binom[static_cast<std::size_t>(j - 1)];
  long double lp = static_cast<long double>(p);
  long double lq = 1.0L - lp;
  auto term = [&](long j) {
    return static_cast<long double>(binom[static_cast<std::size_t>(j)]) *
           std::pow(lp, static_cast<long double>(j)) *
           std::pow(lq, static_cast<long double>(n - j));
  };
  return sum_outward(lo, hi, peak_index(n, p), term);
}

long double tail_log_impl(long n, long lo, long hi, double p) {
  long double log_p = std::log(static_cast<long double>(p));
  long double log_q = std::log1p(-static_cast<long double>(p));
  long double lf_n = log_factorial(n);
  auto term = [&](long j) {
    long double log_term = lf_n - log_factorial(j) - log_factorial(n - j) +
                           static_cast<long double>(j) * log_p +
                           static_cast<long double>(n - j) * log_q;
    return std::exp(log_term);
  };
  return sum_outward(lo, hi, peak_index(n, p), term);
}

double tail_range(long n, long lo, long hi, double p) {
  if (lo > hi) return 0.0;
  if (p == 0.0) return lo == 0 ? 1.0 : 0.0;
  if (p == 1.0) return hi == n ? 1.0 : 0.0;
  long double value =
      n <= 64 ? tail_exact64_impl(n, lo, hi, p) : tail_log_impl(n, lo, hi, p);
  if (value < 0.0L) value = 0.0L;
  if (value > 1.0L) value = 1.0L;
  return static_cast<double>(value);
}

}  // namespace

double block_error_bound(long n, long t, double p) {
  check_tail_args(n, t, p);
  return tail_range(n, t + 1, n, p);
}

double binomial_head(long n, long t, double p) {
  check_tail_args(n, t, p);
  return tail_range(n, 0, t, p);
}

namespace detail {

double tail_exact64(long n, long t, double p) {
  check_tail_args(n, t, p);
  if (n > 64) throw DomainError("exact path is limited to n <= 64");
  if (p == 0.0) return 0.0;
  if (p == 1.0) return 1.0;
  return static_cast<double>(tail_exact64_impl(n, t + 1, n, p));
}

double tail_log_domain(long n, long t, double p) {
  check_tail_args(n, t, p);
  if (p == 0.0) return 0.0;
  if (p == 1.0) return 1.0;
  return static_cast<double>(tail_log_impl(n, t + 1, n, p));
}

}  // namespace detail

double qubit_error_rate(double pe, long n) {
  if (!(pe >= 0.0 && pe <= 1.0)) throw DomainError("block error rate must lie in [0, 1]");
  if (n < 1) throw DomainError("block length must be positive");
  if (pe == 0.0) return 0.0;
  if (pe == 1.0) return 1.0;
  long double log_keep = std::log1p(-static_cast<long double>(pe));
  return static_cast<double>(-std::expm1(log_keep / static_cast<long double>(n)));
}

CodePoint rm_curve_code(int r, int m) {
  CssCode code = css_from_rm(r, m);
  return {code.n, code.t,
          "[[" + std::to_string(code.n) + "," + std::to_string(code.k) + "," +
              std::to_string(code.d) + "]]"};
}

CodePoint repetition_curve_code(long n, long d) {
  if (n < 1 || d < 1 || d > n) throw DomainError("repetition code needs 1 <= d <= n");
  return {n, (d - 1) / 2, "[[" + std::to_string(n) + ",1," + std::to_string(d) + "]]"};
}

std::vector<CodePoint> default_comparison_codes() {
  return {repetition_curve_code(5, 3), repetition_curve_code(13, 5),
          repetition_curve_code(29, 11), rm_curve_code(5, 10)};
}

std::vector<CodeCurve> performance_curves(const std::vector<CodePoint>& codes, double p_min,
                                          double p_max, int points, GridSpacing spacing) {
  if (!(p_min >= 0.0 && p_min < p_max && p_max <= 0.5))
    throw DomainError("probability range must satisfy 0 <= p_min < p_max <= 0.5");
  if (points < 2) throw DomainError("grid needs at least two points");
  if (spacing == GridSpacing::kLog && p_min <= 0.0)
    throw DomainError("log spacing needs p_min > 0");

  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    double f = static_cast<double>(i) / (points - 1);
    if (spacing == GridSpacing::kLinear)
      grid.push_back(p_min + f * (p_max - p_min));
    else
      grid.push_back(std::exp(std::log(p_min) + f * (std::log(p_max) - std::log(p_min))));
  }
  // Guard against round-off drifting the endpoints.
  grid.front() = p_min;
  grid.back() = p_max;

  std::vector<CodeCurve> curves;
  for (const CodePoint& code : codes) {
    CodeCurve curve;
    curve.code = code;
    for (double p : grid) {
      double pe = block_error_bound(code.n, code.t, p);
      curve.points.push_back({p, pe, qubit_error_rate(pe, code.n)});
    }
    curves.push_back(std::move(curve));
  }
  return curves;
}

void write_curve_csv(std::ostream& out, const std::vector<CodeCurve>& curves) {
  out << "label,p,pe,pq\n";
  char buf[128];
  for (const CodeCurve& curve : curves) {
    for (const CurvePoint& pt : curve.points) {
      std::snprintf(buf, sizeof buf, "%.9e,%.9e,%.9e", pt.p, pt.pe, pt.pq);
      out << curve.code.label << ',' << buf << '\n';
    }
  }
}

}  // namespace qrm
