#include <cmath>
#include <string>
#include <vector>

#include "ramanujan/contfrac.hpp"
#include "ramanujan/error.hpp"
#include "ramanujan/pi_engine.hpp"

namespace ramanujan::cf {

namespace {

constexpr std::size_t kGuard = 15;

BigDecimal one(std::size_t scale) { return BigDecimal::from_integer(1L, scale); }

// e = sum 1/k!
BigDecimal euler_e(std::size_t scale)
{
    const mpz_class unit = pow10(scale);
    mpz_class term = unit;
    mpz_class sum = 0;
    for (unsigned long k = 1; term != 0; ++k) {
        sum += term;
        term /= k;
    }
    return BigDecimal(sum, scale);
}

// G = (pi/8) log(2 + sqrt 3) + (3/8) sum_{k>=0} 1 / ((2k+1)^2 binom(2k,k))
BigDecimal catalan(std::size_t scale)
{
    const mpz_class unit = pow10(scale);
    mpz_class central = 1;  // binom(2k, k)
    mpz_class sum = 0;
    for (unsigned long k = 0;; ++k) {
        const mpz_class odd = 2 * k + 1;
        const mpz_class term = unit / (odd * odd * central);
        if (term == 0) break;
        sum += term;
        central = central * (2 * k + 1) * (2 * k + 2) / ((k + 1) * (k + 1));
    }
    const BigDecimal series(sum, scale);
    const BigDecimal pi = pi::pi_chudnovsky(scale + 5).with_scale(scale);
    const BigDecimal log_term = log(BigDecimal::from_integer(2L, scale) + sqrt(BigDecimal::from_integer(3L, scale)));
    return pi * log_term / 8L + series * 3L / 8L;
}

// zeta(3) = (5/2) sum_{k>=1} (-1)^(k+1) / (k^3 binom(2k,k))
BigDecimal zeta3(std::size_t scale)
{
    const mpz_class unit = pow10(scale);
    mpz_class central = 2;  // binom(2, 1)
    mpz_class sum = 0;
    for (unsigned long k = 1;; ++k) {
        const mpz_class kk = k;
        const mpz_class term = unit / (kk * kk * kk * central);
        if (term == 0) break;
        sum += (k % 2 == 1) ? term : mpz_class(-term);
        central = central * (2 * k + 1) * (2 * k + 2) / ((k + 1) * (k + 1));
    }
    return BigDecimal(sum, scale) * 5L / 2L;
}

}  // namespace

bool is_reference_constant(std::string_view name)
{
    return name == "pi" || name == "e" || name == "log2" || name == "catalan" || name == "zeta3" || name == "sqrt5";
}

BigDecimal reference_constant(std::string_view name, std::size_t digits)
{
    if (digits > kReferenceDigitLimit)
        throw DomainError("reference constants are limited to " + std::to_string(kReferenceDigitLimit) + " digits");
    const std::size_t scale = digits + kGuard;
    BigDecimal v;
    if (name == "pi") {
        v = pi::pi_chudnovsky(scale);
    } else if (name == "e") {
        v = euler_e(scale);
    } else if (name == "log2") {
        v = log(BigDecimal::from_integer(2L, scale));
    } else if (name == "catalan") {
        v = catalan(scale);
    } else if (name == "zeta3") {
        v = zeta3(scale);
    } else if (name == "sqrt5") {
        v = sqrt(BigDecimal::from_integer(5L, scale));
    } else {
        throw DomainError("unknown constant '" + std::string(name) + "'");
    }
    return v.with_scale(digits);
}

BigDecimal rogers_ramanujan_cf(const BigDecimal& q, std::size_t digits, std::size_t depth)
{
    const std::size_t w = digits + kGuard;
    const BigDecimal x = q.with_scale(std::max(q.scale(), w));
    if (x.sign() <= 0 || x >= one(w)) throw DomainError("Rogers-Ramanujan fraction needs 0 < q < 1");
    if (depth > kDepthCap) throw DomainError("depth exceeds the cap of " + std::to_string(kDepthCap));

    std::vector<BigDecimal> powers{x.with_scale(w)};
    while (powers.size() < depth && !powers.back().is_zero()) powers.push_back(powers.back() * x.with_scale(w));
    BigDecimal tail = BigDecimal::from_integer(0L, w);
    for (std::size_t n = powers.size(); n >= 1; --n) tail = powers[n - 1] / (one(w) + tail);
    return (one(w) / (one(w) + tail)).rounded(digits);
}

BigDecimal rogers_ramanujan_R(const BigDecimal& q, std::size_t digits, std::size_t depth)
{
    const std::size_t w = digits + kGuard;
    const BigDecimal fraction = rogers_ramanujan_cf(q, w, depth);
    return (nth_root(q.with_scale(std::max(q.scale(), w)), 5).with_scale(w) * fraction).rounded(digits);
}

BigDecimal rogers_ramanujan_series(const BigDecimal& q, std::size_t digits, std::size_t terms)
{
    const std::size_t w = digits + kGuard;
    const BigDecimal x = q.with_scale(std::max(q.scale(), w)).with_scale(w);
    if (x.sign() <= 0 || x >= one(w)) throw DomainError("Rogers-Ramanujan series need 0 < q < 1");

    BigDecimal g = one(w), h = one(w);
    BigDecimal q_n = one(w);        // q^n
    BigDecimal q_square = one(w);   // q^(n^2)
    BigDecimal product = one(w);    // (1-q)...(1-q^n)
    for (std::size_t n = 1; n < terms; ++n) {
        q_square = q_square * q_n * q_n * x;  // q^(n^2) = q^((n-1)^2) q^(2n-1)
        q_n = q_n * x;
        product = product * (one(w) - q_n);
        if (q_square.is_zero()) break;
        g += q_square / product;
        h += q_square * q_n / product;
    }
    return (nth_root(x, 5) * h / g).rounded(digits);
}

BigDecimal gamma(const BigDecimal& x, std::size_t digits)
{
    if (x.sign() <= 0) throw DomainError("gamma needs x > 0");
    if (digits > kGammaDigitLimit)
        throw DomainError("gamma precision budget is limited to " + std::to_string(kGammaDigitLimit) + " digits");
    const std::size_t budget = digits + 10;
    const std::size_t w0 = std::max(x.scale(), budget);
    if (x.with_scale(w0) < one(w0)) {
        const BigDecimal shifted = gamma(x.with_scale(w0 + 5) + one(w0 + 5), digits + 5);
        return (shifted.with_scale(w0 + 5) / x.with_scale(w0 + 5)).rounded(digits);
    }

    // Spouge: Gamma(z+1) = (z+a)^(z+1/2) e^-(z+a) [c0 + sum_{k<a} c_k/(z+k)],
    // relative error below a^-1/2 (2 pi)^-(a+1/2).
    const auto a = static_cast<unsigned long>(
        std::ceil(static_cast<double>(budget) * std::log(10.0) / std::log(2.0 * 3.141592653589793)));
    const std::size_t w = budget + a + 20;
    const BigDecimal z = x.with_scale(w) - one(w);

    const BigDecimal e = exp(one(w));
    BigDecimal e_power = e;  // e^(a-k), starting from k = a-1
    std::vector<BigDecimal> e_powers(a);
    for (unsigned long k = a - 1; k >= 1; --k) {
        e_powers[k] = e_power;
        e_power = e_power * e;
    }

    const BigDecimal two_pi = pi::pi_chudnovsky(w + 5).with_scale(w) * 2L;
    BigDecimal sum = sqrt(two_pi);
    mpz_class factorial = 1;  // (k-1)!
    for (unsigned long k = 1; k < a; ++k) {
        if (k > 1) factorial *= k - 1;
        const mpz_class base = a - k;
        mpz_class power;
        mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), k - 1);
        BigDecimal c = BigDecimal::from_integer(power, w) * sqrt(BigDecimal::from_integer(base, w)) * e_powers[k] /
                       BigDecimal::from_integer(factorial, w);
        if (k % 2 == 0) c = -c;
        sum += c / (z + BigDecimal::from_integer(static_cast<long>(k), w));
    }
    const BigDecimal za = z + BigDecimal::from_integer(static_cast<long>(a), w);
    const BigDecimal half = BigDecimal::from_ratio(1, 2, w);
    const BigDecimal prefactor = exp((z + half) * log(za) - za);
    return (prefactor * sum).rounded(digits);
}

GammaRatioCheck gamma_ratio_cf_check(const BigDecimal& x, std::size_t digits, std::size_t depth)
{
    if (x.sign() <= 0) throw DomainError("gamma ratio check needs x > 0");
    if (depth == 0) throw DomainError("depth must be >= 1");
    const std::size_t w = digits + 5;
    const BigDecimal xw = x.with_scale(std::max(x.scale(), w));
    const BigDecimal one_w = one(xw.scale());
    const BigDecimal ratio = gamma((xw + one_w) / 4L, w) / gamma((xw + one_w * 3L) / 4L, w);

    // x = p/q; scaling every level by q keeps the terms integral:
    // a = p, 2p, 2p, ...   b = 4q, q^2 1^2, q^2 3^2, ...
    mpq_class r = x.to_rational();
    r.canonicalize();
    const mpz_class p = r.get_num();
    const mpz_class q = r.get_den();
    CFSpec spec;
    spec.a0 = 0;
    spec.a = {{p}, Polynomial({2 * p})};
    const mpz_class q2 = q * q;
    spec.b = {{4 * q}, Polynomial({9 * q2, -12 * q2, 4 * q2})};
    spec.depth = depth;

    const BigDecimal lhs = ratio * ratio;
    const BigDecimal rhs = eval_cf(spec, w).value;
    GammaRatioCheck out;
    out.lhs = lhs.rounded(digits);
    out.rhs = rhs.rounded(digits);
    out.abs_error = (lhs - rhs).abs().rounded(w);
    return out;
}

}  // namespace ramanujan::cf
