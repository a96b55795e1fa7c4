#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ramanujan/numtheory.hpp"

namespace ramanujan::rs {

using nt::Natural;

inline constexpr Natural kPropertyLimit = 200;
inline constexpr std::size_t kTauLimit = 5000;
inline constexpr std::size_t kExactLimit = 144;
inline constexpr double kTrigTolerance = 1e-9;

/// c_q(n) = sum_{d | (q, n)} mu(q/d) d. Only |n| matters. Throws on q = 0.
long ramanujan_sum(Natural q, long n);

/// sum_{1<=k<=q, (k,q)=1} cos(2 pi k n / q) in double precision.
double ramanujan_sum_trig(Natural q, long n);

/// c_q(0), ..., c_q(q-1).
std::vector<long> ramanujan_sum_row(Natural q);

struct SumViolation {
    std::string property;
    std::string detail;
};

/// Partial averages (1/x) sum_{n=1}^{x} c_r(n) c_s(n+h) against their limit
/// (c_r(h) when r = s, else 0).
struct CorrelationTrend {
    Natural r = 0;
    Natural s = 0;
    Natural h = 0;
    long limit = 0;
    double error_small = 0;  // at x = 10^3
    double error_large = 0;  // at x = 10^4
    /// Incomplete-period envelope 2 lcm(r,s) phi(r) phi(s) / x; both errors
    /// must sit inside it.
    double envelope_small = 0;
    double envelope_large = 0;
};

struct SumPropertyReport {
    Natural q_max = 0;
    Natural n_max = 0;
    std::size_t checks = 0;
    std::vector<SumViolation> violations;
    /// sum_{n<q} c_q(n)^2 for q = 1..q_max (the equal-modulus orthogonality case).
    std::vector<long> self_products;
    std::vector<CorrelationTrend> trends;

    bool ok() const { return violations.empty(); }
};

/// Exhaustive property sweep for q <= q_max:
///   periodicity c_q(n + q) = c_q(n) for 0 <= n < n_max
///   trigonometric agreement for 0 <= n < q
///   explicit formula mu(q/g) phi(q) / phi(q/g), g = (q, n)
///   multiplicativity over coprime pairs: the full period 0 <= n < q1 q2
///     when both moduli are <= 30, 0 <= n < n_max otherwise
///   orthogonality over one lcm period for q1 != q2
///   shifted correlations for r, s <= min(q_max, 12), h <= 2
/// Requires q_max, n_max <= 200.
SumPropertyReport check_sum_properties(Natural q_max, Natural n_max);

/// Multiplicativity over full periods for coprime q1, q2 <= q_max <= 30.
std::vector<SumViolation> check_multiplicativity(Natural q_max);

/// Orthogonality on its own for q1 != q2 <= q_max.
std::vector<SumViolation> check_orthogonality(Natural q_max);

enum class ArithmeticFunction { divisor_d, sigma };

/// Q-term Ramanujan-Fourier partial sums:
///   d(n)     = -sum_{q>=1} log(q)/q c_q(n)
///   sigma(n) = (pi^2 n / 6) sum_{q>=1} c_q(n)/q^2
/// Requires n >= 1, Q >= 1.
double rf_partial_sum(ArithmeticFunction f, Natural n, Natural Q);

/// tau(1..n_max) from q prod (1 - q^m)^24, exact. Requires n_max <= 5000.
std::vector<mpz_class> tau_coefficients(std::size_t n_max);

struct TauBoundReport {
    Natural p_max = 0;
    std::size_t primes_checked = 0;
    bool holds = true;
    double max_ratio = 0;  // max |tau(p)| / (2 p^5.5)
    Natural argmax = 0;
};

/// |tau(p)| <= 2 p^{11/2} for all primes p <= p_max <= 5000.
TauBoundReport check_tau_bound(Natural p_max);

/// B_q with B(j, k) = c_q((j - k) mod q); rank checked exactly.
struct RamanujanBasis {
    Natural q = 0;
    std::vector<std::vector<long>> B;
    std::size_t rank = 0;
    std::size_t dimension = 0;  // phi(q)

    /// Column k of B_q repeated out to `length` samples.
    std::vector<long> column(std::size_t k, std::size_t length) const;
};

RamanujanBasis ramanujan_basis(Natural q);

/// Rank of an integer matrix by fraction-free elimination over Q.
std::size_t exact_rank(const std::vector<std::vector<long>>& rows);

using Sample = std::complex<double>;

struct Signal {
    std::vector<Sample> samples;

    std::size_t size() const { return samples.size(); }
    bool is_real() const;
    static Signal real(const std::vector<double>& values);
};

struct FirComponent {
    Natural q = 0;
    std::vector<Sample> samples;
    double energy = 0;  // squared 2-norm
};

struct FirDecomposition {
    std::size_t N = 0;
    std::vector<FirComponent> components;  // one per divisor of N, ascending q
    double residual_norm = 0;              // max-norm of input minus the component sum
    bool exact = false;

    const FirComponent& at(Natural q) const;
};

/// Solves the square dictionary of the first phi(q) columns of B_q over all
/// q | N. Exact rational elimination for N <= 144, dense least squares
/// beyond. A singular dictionary is an InternalError.
FirDecomposition fir_decompose(const Signal& x);

struct PeriodEstimate {
    Natural q = 0;
    double energy_fraction = 0;
};

/// Divisor components ranked by energy (ties by ascending q), top_k kept.
/// Fractions are relative to the total component energy; all zero for a zero signal.
std::vector<PeriodEstimate> estimate_periods(const Signal& x, std::size_t top_k);

/// Smallest P with x(n + P) = x(n) for all n, treating x as N-periodic.
std::size_t minimal_period(const std::vector<long>& x);

/// One sample per line, "re" or "re,im"; blank lines and '#' comments skipped.
Signal read_signal_text(std::istream& in);
/// Comma-separated rows of one (re) or two (re,im) columns; a non-numeric
/// first row is a header.
Signal read_signal_csv(std::istream& in);
/// Picks the CSV reader for a .csv extension, the text reader otherwise.
Signal read_signal_file(const std::string& path);

}  // namespace ramanujan::rs
