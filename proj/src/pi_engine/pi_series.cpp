#include "ramanujan/pi_engine.hpp"

#include <cmath>
#include <string>

#include "ramanujan/error.hpp"

namespace ramanujan::pi {

namespace {

constexpr long kChudnovskyA = 13591409;
constexpr long kChudnovskyB = 545140134;
// 640320^3
const mpz_class kChudnovskyX("-262537412640768000");
// 640320^3 / 24
const mpz_class kChudnovskyQ("10939058860032000");

void require_digits(std::size_t digits)
{
    if (digits == 0) throw DomainError("pi: digits must be >= 1");
}

// atan(1/x) * 10^scale as a fixed-point integer. Returns the number of
// series terms consumed through `terms`.
mpz_class arctan_inverse(long x, std::size_t scale, std::size_t& terms)
{
    const mpz_class x2 = mpz_class(x) * x;
    mpz_class power = pow10(scale) / x;
    mpz_class sum = power;
    terms = 1;
    for (long k = 1;; ++k) {
        power /= x2;
        const mpz_class term = power / (2 * k + 1);
        if (term == 0) break;
        if (k % 2 == 1) sum -= term;
        else sum += term;
        ++terms;
    }
    return sum;
}

struct SplitTerms {
    mpz_class P;
    mpz_class Q;
    mpz_class R;
};

// Terms a..b-1 of the Chudnovsky series (a >= 1), standard P/Q/R splitting.
SplitTerms binary_split(std::uint64_t a, std::uint64_t b)
{
    if (b == a + 1) {
        const mpz_class ma(static_cast<unsigned long>(a));
        SplitTerms t;
        t.P = -(6 * ma - 5) * (2 * ma - 1) * (6 * ma - 1);
        t.Q = kChudnovskyQ * ma * ma * ma;
        t.R = t.P * (kChudnovskyB * ma + kChudnovskyA);
        return t;
    }
    const std::uint64_t m = (a + b) / 2;
    const SplitTerms left = binary_split(a, m);
    const SplitTerms right = binary_split(m, b);
    return {left.P * right.P, left.Q * right.Q, right.Q * left.R + left.P * right.R};
}

BigDecimal chudnovsky_constant(std::size_t scale)
{
    return sqrt(BigDecimal::from_integer(10005L, scale)) * 426880L;
}

std::size_t chudnovsky_terms_for(std::size_t digits)
{
    return (digits + 13) / 14 + 1;
}

BigDecimal chudnovsky_split_estimate(std::size_t terms, std::size_t scale)
{
    const BigDecimal c = chudnovsky_constant(scale);
    if (terms <= 1) {
        return c / BigDecimal::from_integer(kChudnovskyA, scale);
    }
    const SplitTerms t = binary_split(1, terms);
    const mpz_class denominator = kChudnovskyA * t.Q + t.R;
    return BigDecimal(c.mantissa() * t.Q, scale) / BigDecimal::from_integer(denominator, scale);
}

}  // namespace

std::string_view method_name(Method m)
{
    switch (m) {
    case Method::madhava: return "madhava";
    case Method::machin: return "machin";
    case Method::ramanujan: return "ramanujan";
    case Method::chudnovsky: return "chudnovsky";
    }
    return "unknown";
}

std::optional<Method> parse_method(std::string_view name)
{
    if (name == "madhava") return Method::madhava;
    if (name == "machin") return Method::machin;
    if (name == "ramanujan") return Method::ramanujan;
    if (name == "chudnovsky") return Method::chudnovsky;
    return std::nullopt;
}

std::size_t guard_digits(std::size_t terms)
{
    std::size_t log_terms = 0;
    for (std::size_t p = 1; p < terms; p *= 10) ++log_terms;
    return 10 + log_terms;
}

BigDecimal madhava_estimate(std::size_t terms, std::size_t scale)
{
    mpz_class power = pow10(scale);
    mpz_class sum = 0;
    for (std::size_t k = 0; k < terms; ++k) {
        const mpz_class term = power / static_cast<unsigned long>(2 * k + 1);
        if (k % 2 == 0) sum += term;
        else sum -= term;
        power /= 3;
    }
    return sqrt(BigDecimal::from_integer(12L, scale)) * BigDecimal(sum, scale);
}

BigDecimal pi_madhava(std::size_t terms, std::size_t digits)
{
    require_digits(digits);
    if (terms == 0) throw DomainError("pi_madhava: terms must be >= 1");
    return madhava_estimate(terms, digits + guard_digits(terms)).rounded(digits);
}

BigDecimal pi_machin(std::size_t digits)
{
    require_digits(digits);
    // atan(1/5) gains ~1.4 digits per term.
    const std::size_t estimated_terms = digits * 10 / 14 + 2;
    const std::size_t scale = digits + guard_digits(estimated_terms);
    std::size_t terms5 = 0;
    std::size_t terms239 = 0;
    const mpz_class a = arctan_inverse(5, scale, terms5);
    const mpz_class b = arctan_inverse(239, scale, terms239);
    return BigDecimal(16 * a - 4 * b, scale).rounded(digits);
}

BigDecimal ramanujan_estimate(std::size_t terms, std::size_t scale)
{
    mpz_class multinomial = 1;  // (4k)!/(k!)^4
    mpz_class denominator = 1;  // 396^(4k)
    const mpz_class step = mpz_class(396) * 396 * 396 * 396;
    mpz_class sum = 0;
    const mpz_class unit = pow10(scale);
    for (std::size_t k = 0; k < terms; ++k) {
        const mpz_class linear = 26390 * mpz_class(static_cast<unsigned long>(k)) + 1103;
        sum += multinomial * linear * unit / denominator;
        const mpz_class k1(static_cast<unsigned long>(k + 1));
        const mpz_class k4(static_cast<unsigned long>(4 * k));
        multinomial = multinomial * (k4 + 1) * (k4 + 2) * (k4 + 3) * (k4 + 4) / (k1 * k1 * k1 * k1);
        denominator *= step;
    }
    const BigDecimal series(sum, scale);
    const BigDecimal root2 = sqrt(BigDecimal::from_integer(2L, scale));
    return BigDecimal::from_integer(9801L, scale) / (root2 * 2L * series);
}

namespace {

std::size_t ramanujan_terms_for(std::size_t scale)
{
    // Terms needed until the term magnitude drops below 10^-scale.
    mpz_class multinomial = 1;
    mpz_class denominator = 1;
    const mpz_class step = mpz_class(396) * 396 * 396 * 396;
    const mpz_class unit = pow10(scale);
    std::size_t k = 0;
    while (true) {
        const mpz_class linear = 26390 * mpz_class(static_cast<unsigned long>(k)) + 1103;
        if (multinomial * linear * unit / denominator == 0) return k;
        const mpz_class k1(static_cast<unsigned long>(k + 1));
        const mpz_class k4(static_cast<unsigned long>(4 * k));
        multinomial = multinomial * (k4 + 1) * (k4 + 2) * (k4 + 3) * (k4 + 4) / (k1 * k1 * k1 * k1);
        denominator *= step;
        ++k;
    }
}

}  // namespace

BigDecimal pi_ramanujan(std::size_t digits)
{
    require_digits(digits);
    const std::size_t estimated = digits / 7 + 2;
    const std::size_t scale = digits + guard_digits(estimated);
    return ramanujan_estimate(ramanujan_terms_for(scale), scale).rounded(digits);
}

ChudnovskyState chudnovsky_step(const ChudnovskyState& s)
{
    ChudnovskyState next;
    next.q = s.q + 1;
    next.L = s.L + kChudnovskyB;
    next.X = s.X * kChudnovskyX;
    next.K = s.K + 12;
    const mpz_class numerator = s.M * (s.K * s.K * s.K - 16 * s.K);
    const mpz_class q1(static_cast<unsigned long>(next.q));
    const mpz_class denominator = q1 * q1 * q1;
    if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t()))
        throw InternalError("chudnovsky_step: M recurrence division is not exact at q=" + std::to_string(s.q));
    mpz_divexact(next.M.get_mpz_t(), numerator.get_mpz_t(), denominator.get_mpz_t());
    return next;
}

BigDecimal chudnovsky_estimate(std::size_t terms, std::size_t scale)
{
    const BigDecimal c = chudnovsky_constant(scale);
    if (terms == 0) return c / BigDecimal::from_integer(kChudnovskyA, scale);
    const mpz_class unit = pow10(scale);
    mpz_class sum = 0;
    ChudnovskyState state = ChudnovskyState::initial();
    for (std::size_t i = 0; i < terms; ++i) {
        if (i > 0) state = chudnovsky_step(state);
        mpz_class term;
        const mpz_class numerator = state.M * state.L * unit;
        mpz_tdiv_q(term.get_mpz_t(), numerator.get_mpz_t(), state.X.get_mpz_t());
        sum += term;
    }
    return c / BigDecimal(sum, scale);
}

BigDecimal pi_chudnovsky(std::size_t digits)
{
    return pi_chudnovsky(digits, ChudnovskyAlgorithm::automatic);
}

BigDecimal pi_chudnovsky(std::size_t digits, ChudnovskyAlgorithm algorithm)
{
    require_digits(digits);
    const std::size_t terms = chudnovsky_terms_for(digits);
    const std::size_t scale = digits + guard_digits(terms);
    if (algorithm == ChudnovskyAlgorithm::automatic)
        algorithm = digits > 10000 ? ChudnovskyAlgorithm::binary_splitting : ChudnovskyAlgorithm::recurrence;
    if (algorithm == ChudnovskyAlgorithm::binary_splitting) return chudnovsky_split_estimate(terms, scale).rounded(digits);
    return chudnovsky_estimate(terms, scale).rounded(digits);
}

PiComputation compute(Method method, std::size_t digits, std::optional<std::size_t> terms)
{
    require_digits(digits);
    if (terms && *terms == 0 && method != Method::chudnovsky) throw DomainError("pi: terms must be >= 1");
    switch (method) {
    case Method::madhava: {
        // Without an explicit count, sum until the next term is below 10^-(digits+1).
        const std::size_t n = terms ? *terms
                                    : static_cast<std::size_t>(std::ceil((digits + 2) / std::log10(3.0))) + 1;
        return {pi_madhava(n, digits), n};
    }
    case Method::machin: {
        if (terms) {
            // Fixed truncation of both arctangent series.
            const std::size_t scale = digits + guard_digits(*terms);
            const mpz_class x2a = 25;
            const mpz_class x2b = 239 * 239;
            auto partial = [&](long x, const mpz_class& x2) {
                mpz_class power = pow10(scale) / x;
                mpz_class sum = power;
                for (std::size_t k = 1; k < *terms; ++k) {
                    power /= x2;
                    const mpz_class term = power / static_cast<unsigned long>(2 * k + 1);
                    if (k % 2 == 1) sum -= term;
                    else sum += term;
                }
                return sum;
            };
            return {BigDecimal(16 * partial(5, x2a) - 4 * partial(239, x2b), scale).rounded(digits), *terms};
        }
        const std::size_t estimated_terms = digits * 10 / 14 + 2;
        const std::size_t scale = digits + guard_digits(estimated_terms);
        std::size_t t5 = 0;
        std::size_t t239 = 0;
        const mpz_class a = arctan_inverse(5, scale, t5);
        const mpz_class b = arctan_inverse(239, scale, t239);
        return {BigDecimal(16 * a - 4 * b, scale).rounded(digits), t5 + t239};
    }
    case Method::ramanujan: {
        if (terms) {
            const std::size_t scale = digits + guard_digits(*terms);
            return {ramanujan_estimate(*terms, scale).rounded(digits), *terms};
        }
        const std::size_t estimated = digits / 7 + 2;
        const std::size_t scale = digits + guard_digits(estimated);
        const std::size_t n = ramanujan_terms_for(scale);
        return {ramanujan_estimate(n, scale).rounded(digits), n};
    }
    case Method::chudnovsky: {
        if (terms) {
            const std::size_t scale = digits + guard_digits(*terms);
            return {chudnovsky_estimate(*terms, scale).rounded(digits), *terms};
        }
        return {pi_chudnovsky(digits), chudnovsky_terms_for(digits)};
    }
    }
    throw DomainError("pi: unknown method");
}

double digits_per_term(SeriesMethod method, std::size_t terms)
{
    if (terms < 2) throw DomainError("digits_per_term: terms must be >= 2");
    constexpr std::size_t kReferenceDigits = 2000;
    const std::size_t scale = kReferenceDigits + 20;
    const BigDecimal reference = chudnovsky_split_estimate(chudnovsky_terms_for(scale), scale);
    auto estimate = [&](std::size_t t) {
        return method == SeriesMethod::ramanujan ? ramanujan_estimate(t, scale) : chudnovsky_estimate(t, scale);
    };
    const double first = decimal_error_exponent(estimate(1), reference);
    const double last = decimal_error_exponent(estimate(terms), reference);
    if (last > static_cast<double>(kReferenceDigits) - 10)
        throw DomainError("digits_per_term: too many terms for the 2000-digit reference");
    return (last - first) / static_cast<double>(terms - 1);
}

}  // namespace ramanujan::pi
