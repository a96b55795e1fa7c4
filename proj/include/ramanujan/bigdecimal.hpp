#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ramanujan {

/// Signed fixed-point decimal: value = mantissa * 10^-scale.
///
/// The scale doubles as the working precision budget. Binary operations
/// produce a result at the larger of the two operand scales and truncate
/// toward zero; rounding (half-even) happens only in `rounded()` and
/// `to_string(digits)`, i.e. on final output.
class BigDecimal {
public:
    BigDecimal() = default;
    BigDecimal(mpz_class mantissa, std::size_t scale);

    static BigDecimal from_integer(const mpz_class& value, std::size_t scale);
    static BigDecimal from_integer(long value, std::size_t scale);
    /// num/den truncated toward zero at the given scale.
    static BigDecimal from_ratio(const mpz_class& num, const mpz_class& den, std::size_t scale);
    static BigDecimal from_rational(const mpq_class& value, std::size_t scale);
    /// Parses "[-]digits[.digits]". The scale is the number of fraction
    /// digits written, so parsing is exact.
    static BigDecimal parse(std::string_view text);
    /// 10^-digits at the given scale (or scale == digits when omitted).
    static BigDecimal epsilon(std::size_t digits, std::size_t scale);

    const mpz_class& mantissa() const { return mantissa_; }
    std::size_t scale() const { return scale_; }
    int sign() const { return sgn(mantissa_); }
    bool is_zero() const { return mantissa_ == 0; }

    /// Same value at a new scale; truncates toward zero when shrinking.
    BigDecimal with_scale(std::size_t scale) const;
    /// Round-half-even to `digits` fraction digits.
    BigDecimal rounded(std::size_t digits) const;

    /// Exactly `scale()` fraction digits.
    std::string to_string() const;
    /// Round-half-even to `digits` fraction digits.
    std::string to_string(std::size_t digits) const;

    double to_double() const;
    mpq_class to_rational() const;
    /// Floor of the value as an integer.
    mpz_class floor() const;

    BigDecimal operator-() const;
    BigDecimal abs() const;

    friend BigDecimal operator+(const BigDecimal& a, const BigDecimal& b);
    friend BigDecimal operator-(const BigDecimal& a, const BigDecimal& b);
    friend BigDecimal operator*(const BigDecimal& a, const BigDecimal& b);
    /// Throws DomainError on division by zero.
    friend BigDecimal operator/(const BigDecimal& a, const BigDecimal& b);
    friend BigDecimal operator*(const BigDecimal& a, long k);
    friend BigDecimal operator/(const BigDecimal& a, long k);

    BigDecimal& operator+=(const BigDecimal& o) { return *this = *this + o; }
    BigDecimal& operator-=(const BigDecimal& o) { return *this = *this - o; }
    BigDecimal& operator*=(const BigDecimal& o) { return *this = *this * o; }
    BigDecimal& operator/=(const BigDecimal& o) { return *this = *this / o; }

    friend std::strong_ordering operator<=>(const BigDecimal& a, const BigDecimal& b);
    friend bool operator==(const BigDecimal& a, const BigDecimal& b);

private:
    mpz_class mantissa_{0};
    std::size_t scale_{0};
};

mpz_class pow10(std::size_t k);

/// floor(sqrt(n)) by integer Newton iteration; n >= 0.
mpz_class isqrt_newton(const mpz_class& n);
/// floor(n^(1/k)) by integer Newton iteration; n >= 0, k >= 1.
mpz_class iroot_newton(const mpz_class& n, unsigned k);

/// Square root at the argument's scale (truncated). Throws on negatives.
BigDecimal sqrt(const BigDecimal& x);
/// k-th root of a nonnegative value at the argument's scale.
BigDecimal nth_root(const BigDecimal& x, unsigned k);

/// e^x at x.scale(); internally carries guard digits.
BigDecimal exp(const BigDecimal& x);
/// Natural log of x > 0 at x.scale().
BigDecimal log(const BigDecimal& x);
/// atanh(x) for |x| < 1 by its odd power series.
BigDecimal atanh(const BigDecimal& x);
/// x^y = exp(y log x) for x > 0.
BigDecimal pow(const BigDecimal& x, const BigDecimal& y);

/// Number of leading fraction digits at which a and b agree:
/// floor(-log10|a - b|), capped at the smaller scale.
std::size_t agreeing_digits(const BigDecimal& a, const BigDecimal& b);

/// -log10|a - b| as a double (returns the common scale if a == b).
double decimal_error_exponent(const BigDecimal& a, const BigDecimal& b);

}  // namespace ramanujan
