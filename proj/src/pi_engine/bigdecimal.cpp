#include "ramanujan/bigdecimal.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <utility>

#include "ramanujan/error.hpp"

namespace ramanujan {

namespace {

mpz_class scaled_mantissa(const BigDecimal& x, std::size_t scale)
{
    if (scale == x.scale()) return x.mantissa();
    if (scale > x.scale()) return x.mantissa() * pow10(scale - x.scale());
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), x.mantissa().get_mpz_t(), pow10(x.scale() - scale).get_mpz_t());
    return q;
}

std::size_t exact_decimal_length(const mpz_class& d)
{
    // d > 0
    std::size_t len = mpz_sizeinbase(d.get_mpz_t(), 10);
    if (len > 1 && d < pow10(len - 1)) --len;
    return len;
}

}  // namespace

mpz_class pow10(std::size_t k)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, k);
    return r;
}

BigDecimal::BigDecimal(mpz_class mantissa, std::size_t scale) : mantissa_(std::move(mantissa)), scale_(scale) {}

BigDecimal BigDecimal::from_integer(const mpz_class& value, std::size_t scale)
{
    return BigDecimal(value * pow10(scale), scale);
}

BigDecimal BigDecimal::from_integer(long value, std::size_t scale)
{
    return from_integer(mpz_class(value), scale);
}

BigDecimal BigDecimal::from_ratio(const mpz_class& num, const mpz_class& den, std::size_t scale)
{
    if (den == 0) throw DomainError("BigDecimal: division by zero");
    mpz_class q;
    mpz_class scaled = num * pow10(scale);
    mpz_tdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    return BigDecimal(q, scale);
}

BigDecimal BigDecimal::from_rational(const mpq_class& value, std::size_t scale)
{
    return from_ratio(value.get_num(), value.get_den(), scale);
}

BigDecimal BigDecimal::parse(std::string_view text)
{
    auto fail = [&]() -> BigDecimal { throw DomainError("BigDecimal: cannot parse '" + std::string(text) + "'"); };
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    std::string digits;
    std::size_t fraction_digits = 0;
    bool seen_point = false;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (c == '.' && !seen_point) {
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            digits.push_back(c);
            if (seen_point) ++fraction_digits;
        } else {
            return fail();
        }
    }
    if (digits.empty()) return fail();
    mpz_class mantissa(digits, 10);
    if (negative) mantissa = -mantissa;
    return BigDecimal(mantissa, fraction_digits);
}

BigDecimal BigDecimal::epsilon(std::size_t digits, std::size_t scale)
{
    if (digits > scale) return BigDecimal(0, scale);
    return BigDecimal(pow10(scale - digits), scale);
}

BigDecimal BigDecimal::with_scale(std::size_t scale) const
{
    return BigDecimal(scaled_mantissa(*this, scale), scale);
}

BigDecimal BigDecimal::rounded(std::size_t digits) const
{
    if (digits >= scale_) return with_scale(digits);
    const mpz_class divisor = pow10(scale_ - digits);
    mpz_class q;
    mpz_class r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), mantissa_.get_mpz_t(), divisor.get_mpz_t());
    const mpz_class twice = 2 * ::abs(r);
    const int cmp_half = cmp(twice, divisor);
    if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(q.get_mpz_t()) != 0)) q += sign() < 0 ? -1 : 1;
    return BigDecimal(q, digits);
}

std::string BigDecimal::to_string() const
{
    mpz_class a = ::abs(mantissa_);
    std::string digits = a.get_str(10);
    if (digits.size() <= scale_) digits.insert(0, scale_ + 1 - digits.size(), '0');
    std::string out;
    if (mantissa_ < 0) out.push_back('-');
    out += digits.substr(0, digits.size() - scale_);
    if (scale_ > 0) {
        out.push_back('.');
        out += digits.substr(digits.size() - scale_);
    }
    return out;
}

std::string BigDecimal::to_string(std::size_t digits) const
{
    return rounded(digits).to_string();
}

double BigDecimal::to_double() const
{
    return to_rational().get_d();
}

mpq_class BigDecimal::to_rational() const
{
    mpq_class q(mantissa_, pow10(scale_));
    q.canonicalize();
    return q;
}

mpz_class BigDecimal::floor() const
{
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), mantissa_.get_mpz_t(), pow10(scale_).get_mpz_t());
    return q;
}

BigDecimal BigDecimal::operator-() const
{
    return BigDecimal(-mantissa_, scale_);
}

BigDecimal BigDecimal::abs() const
{
    return BigDecimal(::abs(mantissa_), scale_);
}

BigDecimal operator+(const BigDecimal& a, const BigDecimal& b)
{
    const std::size_t s = std::max(a.scale_, b.scale_);
    return BigDecimal(scaled_mantissa(a, s) + scaled_mantissa(b, s), s);
}

BigDecimal operator-(const BigDecimal& a, const BigDecimal& b)
{
    const std::size_t s = std::max(a.scale_, b.scale_);
    return BigDecimal(scaled_mantissa(a, s) - scaled_mantissa(b, s), s);
}

BigDecimal operator*(const BigDecimal& a, const BigDecimal& b)
{
    const std::size_t s = std::max(a.scale_, b.scale_);
    const mpz_class product = a.mantissa_ * b.mantissa_;
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), product.get_mpz_t(), pow10(std::min(a.scale_, b.scale_)).get_mpz_t());
    return BigDecimal(q, s);
}

BigDecimal operator/(const BigDecimal& a, const BigDecimal& b)
{
    if (b.is_zero()) throw DomainError("BigDecimal: division by zero");
    const std::size_t s = std::max(a.scale_, b.scale_);
    const mpz_class num = a.mantissa_ * pow10(s + b.scale_ - a.scale_);
    mpz_class q;
    mpz_tdiv_q(q.get_mpz_t(), num.get_mpz_t(), b.mantissa_.get_mpz_t());
    return BigDecimal(q, s);
}

BigDecimal operator*(const BigDecimal& a, long k)
{
    return BigDecimal(a.mantissa_ * k, a.scale_);
}

BigDecimal operator/(const BigDecimal& a, long k)
{
    if (k == 0) throw DomainError("BigDecimal: division by zero");
    mpz_class q;
    const mpz_class den(k);
    mpz_tdiv_q(q.get_mpz_t(), a.mantissa_.get_mpz_t(), den.get_mpz_t());
    return BigDecimal(q, a.scale_);
}

std::strong_ordering operator<=>(const BigDecimal& a, const BigDecimal& b)
{
    const std::size_t s = std::max(a.scale_, b.scale_);
    const int c = cmp(scaled_mantissa(a, s), scaled_mantissa(b, s));
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool operator==(const BigDecimal& a, const BigDecimal& b)
{
    return (a <=> b) == std::strong_ordering::equal;
}

mpz_class isqrt_newton(const mpz_class& n)
{
    if (n < 0) throw DomainError("isqrt: negative argument");
    if (n < 2) return n;
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    mpz_class x;
    mpz_setbit(x.get_mpz_t(), (bits + 1) / 2);  // x >= sqrt(n)
    while (true) {
        mpz_class y = (x + n / x) / 2;
        if (y >= x) return x;
        x = std::move(y);
    }
}

mpz_class iroot_newton(const mpz_class& n, unsigned k)
{
    if (n < 0) throw DomainError("iroot: negative argument");
    if (k == 0) throw DomainError("iroot: zero-th root");
    if (k == 1 || n < 2) return n;
    const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
    mpz_class x;
    mpz_setbit(x.get_mpz_t(), (bits + k - 1) / k);  // x >= n^(1/k)
    while (true) {
        mpz_class xk1;
        mpz_pow_ui(xk1.get_mpz_t(), x.get_mpz_t(), k - 1);
        mpz_class y = ((k - 1) * x + n / xk1) / k;
        if (y >= x) return x;
        x = std::move(y);
    }
}

BigDecimal sqrt(const BigDecimal& x)
{
    if (x.sign() < 0) throw DomainError("sqrt: negative argument");
    return BigDecimal(isqrt_newton(x.mantissa() * pow10(x.scale())), x.scale());
}

BigDecimal nth_root(const BigDecimal& x, unsigned k)
{
    if (x.sign() < 0) throw DomainError("nth_root: negative argument");
    if (k == 0) throw DomainError("nth_root: zero-th root");
    return BigDecimal(iroot_newton(x.mantissa() * pow10(x.scale() * (k - 1)), k), x.scale());
}

BigDecimal atanh(const BigDecimal& x)
{
    const BigDecimal one = BigDecimal::from_integer(1L, x.scale());
    if (x.abs() >= one) throw DomainError("atanh: |x| must be < 1");
    const BigDecimal x2 = x * x;
    BigDecimal power = x;
    BigDecimal sum = x;
    for (long k = 1; !power.is_zero(); ++k) {
        power = power * x2;
        sum += power / (2 * k + 1);
    }
    return sum;
}

namespace {

BigDecimal ln2(std::size_t scale)
{
    const BigDecimal third = BigDecimal::from_ratio(1, 3, scale);
    return atanh(third) * 2;
}

std::size_t digits_of(std::size_t v)
{
    std::size_t d = 1;
    while (v >= 10) {
        v /= 10;
        ++d;
    }
    return d;
}

}  // namespace

BigDecimal exp(const BigDecimal& x)
{
    const std::size_t s = x.scale();
    if (x.sign() < 0) {
        const std::size_t magnitude = static_cast<std::size_t>(std::ceil(std::fabs(x.to_double()) * 0.4343)) + 1;
        const BigDecimal positive = exp((-x).with_scale(s + 10 + magnitude));
        return (BigDecimal::from_integer(1L, positive.scale()) / positive).with_scale(s);
    }
    const double approx = x.to_double();
    // Halve until the Taylor argument is below 2^-8.
    unsigned halvings = 8;
    if (approx > 1.0) halvings += static_cast<unsigned>(std::ceil(std::log2(approx)));
    const std::size_t integer_digits = static_cast<std::size_t>(approx * 0.4343) + 1;
    const std::size_t w = s + 15 + integer_digits + halvings / 3;

    const BigDecimal r = x.with_scale(w) / BigDecimal::from_integer(mpz_class(1) << halvings, w);

    BigDecimal term = BigDecimal::from_integer(1L, w);
    BigDecimal sum = term;
    for (long k = 1; !term.is_zero(); ++k) {
        term = (term * r) / k;
        sum += term;
    }
    for (unsigned i = 0; i < halvings; ++i) sum = sum * sum;
    return sum.with_scale(s);
}

BigDecimal log(const BigDecimal& x)
{
    if (x.sign() <= 0) throw DomainError("log: argument must be positive");
    const std::size_t s = x.scale();
    // x = m * 2^j with m in [1/2, 1).
    long j = static_cast<long>(mpz_sizeinbase(x.mantissa().get_mpz_t(), 2)) -
             static_cast<long>(std::floor(static_cast<double>(s) * 3.321928094887362));
    const std::size_t w = s + 15 + digits_of(static_cast<std::size_t>(std::labs(j) + 1)) + s / 20;
    const BigDecimal xw = x.with_scale(w);
    auto scaled = [&](long shift) {
        if (shift >= 0) return BigDecimal(xw.mantissa(), w) / BigDecimal::from_integer(mpz_class(1) << shift, w);
        return BigDecimal(xw.mantissa() << static_cast<unsigned long>(-shift), w);
    };
    const BigDecimal one = BigDecimal::from_integer(1L, w);
    const BigDecimal half = BigDecimal::from_ratio(1, 2, w);
    BigDecimal m = scaled(j);
    while (m >= one) {
        ++j;
        m = scaled(j);
    }
    while (m < half) {
        --j;
        m = scaled(j);
    }
    const BigDecimal y = (m - one) / (m + one);
    BigDecimal result = atanh(y) * 2 + ln2(w) * j;
    return result.with_scale(s);
}

BigDecimal pow(const BigDecimal& x, const BigDecimal& y)
{
    const std::size_t s = std::max(x.scale(), y.scale());
    const double magnitude = std::fabs(y.to_double() * std::log10(std::max(x.to_double(), 1e-300)));
    const std::size_t w = s + 10 + static_cast<std::size_t>(magnitude);
    return exp(y.with_scale(w) * log(x.with_scale(w))).with_scale(s);
}

std::size_t agreeing_digits(const BigDecimal& a, const BigDecimal& b)
{
    const std::size_t s = std::min(a.scale(), b.scale());
    const mpz_class diff = abs((a - b).with_scale(std::max(a.scale(), b.scale())).mantissa());
    const std::size_t full = std::max(a.scale(), b.scale());
    if (diff == 0) return s;
    const std::size_t len = exact_decimal_length(diff);
    const bool power_of_ten = diff == pow10(len - 1);
    const long digits = static_cast<long>(full) - static_cast<long>(len) + (power_of_ten ? 1 : 0);
    if (digits <= 0) return 0;
    return std::min(static_cast<std::size_t>(digits), s);
}

double decimal_error_exponent(const BigDecimal& a, const BigDecimal& b)
{
    const std::size_t full = std::max(a.scale(), b.scale());
    const mpz_class diff = abs((a - b).with_scale(full).mantissa());
    if (diff == 0) return static_cast<double>(full);
    long exponent = 0;
    const double mant = mpz_get_d_2exp(&exponent, diff.get_mpz_t());
    const double log10_diff = std::log10(mant) + static_cast<double>(exponent) * std::log10(2.0);
    return static_cast<double>(full) - log10_diff;
}

}  // namespace ramanujan
