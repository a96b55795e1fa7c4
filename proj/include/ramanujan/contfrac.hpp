#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "ramanujan/bigdecimal.hpp"

namespace ramanujan::cf {

inline constexpr std::size_t kMaxPolynomialDegree = 6;
inline constexpr std::size_t kDepthCap = 1000000;

/// Integer polynomial in n; coefficients stored lowest degree first.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<mpz_class> ascending);
    /// "3,7,4" -> 3n^2 + 7n + 4.
    static Polynomial parse_highest_first(std::string_view text);
    static Polynomial constant(long c) { return Polynomial({mpz_class(c)}); }

    mpz_class operator()(unsigned long n) const;
    const std::vector<mpz_class>& coefficients() const { return coeffs_; }
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    /// Highest degree first, comma separated.
    std::string to_string() const;

private:
    std::vector<mpz_class> coeffs_;
};

/// Term n (1-based) is prefix[n-1] while the prefix lasts, then tail(n).
/// Without a tail the sequence ends with its prefix.
struct TermSequence {
    std::vector<mpz_class> prefix;
    std::optional<Polynomial> tail;

    static TermSequence list(std::vector<mpz_class> values) { return {std::move(values), std::nullopt}; }
    static TermSequence polynomial(Polynomial p) { return {{}, std::move(p)}; }

    mpz_class at(std::size_t n) const;
    /// Number of available terms; SIZE_MAX with a tail.
    std::size_t available() const;
};

/// a0 + b1/(a1 + b2/(a2 + ...)) truncated after `depth` levels.
struct CFSpec {
    mpz_class a0 = 0;
    TermSequence a;  // partial denominators
    TermSequence b;  // partial numerators
    std::size_t depth = 0;

    /// [t0; t1, t2, ...] with every b = 1.
    static CFSpec simple(const std::vector<mpz_class>& terms);
};

struct CFValue {
    BigDecimal value;
    /// |h_d/k_d - h_{d-1}/k_{d-1}|, zero at depth 0.
    BigDecimal error_estimate;
    std::size_t depth = 0;
};

/// Forward convergent recurrence h_n = a_n h_{n-1} + b_n h_{n-2}, likewise k_n,
/// rescaling both by a common power of ten to bound operand size. Throws
/// DomainError on a zero final denominator.
CFValue eval_cf(const CFSpec& spec, std::size_t digits);

/// Evaluates at depths 16, 32, ... (capped at 10^6) until two successive
/// checkpoints agree to digits+5 places; `depth` in the spec is ignored.
struct ConvergedValue {
    CFValue result;
    bool converged = false;
};
ConvergedValue eval_cf_converged(const CFSpec& spec, std::size_t digits);

/// Exact value h_depth / k_depth.
mpq_class eval_cf_exact(const CFSpec& spec);

/// The exact convergents h_n/k_n for n = 0..depth.
std::vector<mpq_class> convergents(const CFSpec& spec);

/// Incremental convergent recurrence for increasing depths.
class ConvergentStream {
public:
    ConvergentStream(const CFSpec& spec, std::size_t digits);
    void advance_to(std::size_t depth);
    std::size_t depth() const { return depth_; }
    BigDecimal value() const;
    BigDecimal previous_value() const;

private:
    void rescale();

    CFSpec spec_;
    std::size_t scale_;
    std::size_t depth_ = 0;
    mpz_class h_prev_ = 1, h_ = 0, k_prev_ = 0, k_ = 1;
    std::size_t budget_bits_;
};

struct SimpleExpansion {
    std::vector<mpz_class> terms;
    bool truncated = false;  // precision ran out before max_terms
};

/// Exact floor/reciprocal expansion; terminates for rationals.
SimpleExpansion simple_cf_expand(const mpq_class& x, std::size_t max_terms);
/// Expansion of a decimal approximation; stops once fewer than 10 trustworthy
/// digits remain (tail error grows like the squared convergent denominator).
SimpleExpansion simple_cf_expand(const BigDecimal& x, std::size_t max_terms);

inline constexpr std::size_t kReferenceDigitLimit = 500;

/// pi, e, log2, catalan, zeta3, sqrt5 truncated to `digits` fraction digits.
BigDecimal reference_constant(std::string_view name, std::size_t digits);
bool is_reference_constant(std::string_view name);

/// lhs = (alpha c + beta) / (gamma c + delta) of a reference constant c.
struct Transform {
    long alpha = 1, beta = 0, gamma = 0, delta = 1;
    BigDecimal apply(const BigDecimal& c) const;
    std::string describe(std::string_view constant) const;
};

struct ConjectureRecord {
    std::string name;
    std::string constant;  // reference_constant name
    Transform transform;
    CFSpec cf;             // depth ignored; verify picks its own
    std::string status;  // proved, unproved or unstated
    /// printed: generators as printed; fitted: inferred from printed terms;
    /// relabelled: printed a/b roles swapped to match the printed terms.
    std::string origin;
    std::size_t default_digits = 30;
};

struct Verification {
    bool match = false;
    BigDecimal abs_error;
    std::size_t depth_used = 0;
    bool converged = false;  // successive convergents agreed to digits+5
};

/// Geometric depth schedule from 16, doubling to the 10^6 cap, stopping once
/// two successive checkpoints agree to digits+5 places.
Verification verify_conjecture(const ConjectureRecord& record, std::size_t digits);

/// Registry file: a "ramanujan-conjectures <version>" header, then one
/// whitespace-separated key=value record per line; '#' starts a comment.
std::vector<ConjectureRecord> parse_registry(std::istream& in);
std::vector<ConjectureRecord> builtin_registry();
const ConjectureRecord& find_record(const std::vector<ConjectureRecord>& registry, std::string_view name);

/// 1/(1 + q/(1 + q^2/(1 + ...))) truncated after `depth` levels.
BigDecimal rogers_ramanujan_cf(const BigDecimal& q, std::size_t digits, std::size_t depth);
/// R(q) = q^(1/5) times the fraction above.
BigDecimal rogers_ramanujan_R(const BigDecimal& q, std::size_t digits, std::size_t depth);
/// q^(1/5) H(q)/G(q) with both series truncated after `terms` terms.
BigDecimal rogers_ramanujan_series(const BigDecimal& q, std::size_t digits, std::size_t terms);

inline constexpr std::size_t kGammaDigitLimit = 400;

/// Spouge approximation for x > 0.
BigDecimal gamma(const BigDecimal& x, std::size_t digits);

struct GammaRatioCheck {
    BigDecimal lhs;
    BigDecimal rhs;
    BigDecimal abs_error;
};

/// {Gamma((x+1)/4) / Gamma((x+3)/4)}^2 against 4/(x + 1^2/(2x + 3^2/(2x + ...))).
GammaRatioCheck gamma_ratio_cf_check(const BigDecimal& x, std::size_t digits, std::size_t depth = 100000);

}  // namespace ramanujan::cf
