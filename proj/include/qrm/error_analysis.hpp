#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qrm {

// Probability that more than t of n independent bits flip, each with
// probability p: the tail sum_{j=t+1}^{n} C(n,j) p^j (1-p)^(n-j). This upper
// bounds the block error rate of a t-error-correcting code. Computed with
// exact integer coefficients for n <= 64 and in the log domain above that;
// terms are accumulated from the largest outward with compensated summation,
// giving ~1e-9 relative accuracy or better across the supported range
// (n <= 4096). Throws DomainError on p outside [0, 1], t outside [0, n), or
// unsupported n.
double block_error_bound(long n, long t, double p);

// Complementary head sum_{j=0}^{t}, same machinery (bound + head = 1).
double binomial_head(long n, long t, double p);

namespace detail {
// Both evaluation strategies, exposed for cross-checking: the exact
// plain-arithmetic path requires n <= 64, the log-domain path works for all
// supported n.
double tail_exact64(long n, long t, double p);
double tail_log_domain(long n, long t, double p);
}  // namespace detail

// Per-qubit error rate equivalent to a block error rate pe over n qubits:
// 1 - (1 - pe)^(1/n), evaluated via expm1/log1p so tiny rates keep full
// relative precision (pe -> pe/n as pe -> 0).
double qubit_error_rate(double pe, long n);

enum class GridSpacing { kLinear, kLog };

// A code's error-correction summary for curve generation.
struct CodePoint {
  long n = 0;
  long t = 0;
  std::string label;
};

CodePoint rm_curve_code(int r, int m);          // label [[n,k,d]]
CodePoint repetition_curve_code(long n, long d);  // label [[n,1,d]]

// The four-code comparison set: repetition codes of distance 3, 5, 11 and
// the [[1024, 252, 32]] code.
std::vector<CodePoint> default_comparison_codes();

struct CurvePoint {
  double p = 0;
  double pe = 0;
  double pq = 0;
};

struct CodeCurve {
  CodePoint code;
  std::vector<CurvePoint> points;
};

// Evaluates pe and pq for every code over a shared grid of physical error
// rates, 0 <= p_min < p_max <= 0.5 with points >= 2. Log spacing needs
// p_min > 0.
std::vector<CodeCurve> performance_curves(const std::vector<CodePoint>& codes, double p_min,
                                          double p_max, int points, GridSpacing spacing);

// CSV rows "label,p,pe,pq" with values in %.9e form, codes in input order,
// each swept in ascending p.
void write_curve_csv(std::ostream& out, const std::vector<CodeCurve>& curves);

}  // namespace qrm
