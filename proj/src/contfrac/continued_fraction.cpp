#include <charconv>
#include <limits>
#include <string>

#include "ramanujan/contfrac.hpp"
#include "ramanujan/error.hpp"

namespace ramanujan::cf {

namespace {

// Digits of headroom kept in the convergent denominators after rescaling.
constexpr std::size_t kRescaleHeadroom = 30;

std::size_t decimal_digits(const mpz_class& v) { return mpz_sizeinbase(v.get_mpz_t(), 10); }

}  // namespace

Polynomial::Polynomial(std::vector<mpz_class> ascending) : coeffs_(std::move(ascending))
{
    while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
    if (coeffs_.size() > kMaxPolynomialDegree + 1)
        throw DomainError("polynomial degree exceeds " + std::to_string(kMaxPolynomialDegree));
}

Polynomial Polynomial::parse_highest_first(std::string_view text)
{
    std::vector<mpz_class> coeffs;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find(',', start), text.size());
        std::string item(text.substr(start, end - start));
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        mpz_class value;
        if (item.empty() || value.set_str(item[0] == '+' ? item.substr(1) : item, 10) != 0)
            throw DomainError("bad polynomial coefficient '" + item + "'");
        coeffs.push_back(value);
        start = end + 1;
    }
    return Polynomial({coeffs.rbegin(), coeffs.rend()});
}

mpz_class Polynomial::operator()(unsigned long n) const
{
    mpz_class v = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * n + *it;
    return v;
}

std::string Polynomial::to_string() const
{
    std::string out;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        if (!out.empty()) out += ',';
        out += it->get_str();
    }
    return out.empty() ? "0" : out;
}

mpz_class TermSequence::at(std::size_t n) const
{
    if (n >= 1 && n <= prefix.size()) return prefix[n - 1];
    if (n >= 1 && tail) return (*tail)(n);
    throw DomainError("continued fraction term " + std::to_string(n) + " is not defined");
}

std::size_t TermSequence::available() const
{
    return tail ? std::numeric_limits<std::size_t>::max() : prefix.size();
}

CFSpec CFSpec::simple(const std::vector<mpz_class>& terms)
{
    if (terms.empty()) throw DomainError("simple continued fraction needs at least one term");
    CFSpec spec;
    spec.a0 = terms[0];
    spec.a = TermSequence::list({terms.begin() + 1, terms.end()});
    spec.b = TermSequence::polynomial(Polynomial::constant(1));
    spec.depth = terms.size() - 1;
    return spec;
}

namespace {

void require_depth(const CFSpec& spec, std::size_t depth)
{
    if (depth > kDepthCap) throw DomainError("depth exceeds the cap of " + std::to_string(kDepthCap));
    if (depth > spec.a.available() || depth > spec.b.available())
        throw DomainError("depth " + std::to_string(depth) + " exceeds the supplied terms");
}

}  // namespace

ConvergentStream::ConvergentStream(const CFSpec& spec, std::size_t digits)
    : spec_(spec), scale_(digits + 10), h_(spec.a0), budget_bits_(0)
{
    budget_bits_ = static_cast<std::size_t>(2.0 * 3.33 * static_cast<double>(scale_ + kRescaleHeadroom)) + 64;
}

void ConvergentStream::advance_to(std::size_t depth)
{
    require_depth(spec_, depth);
    while (depth_ < depth) {
        ++depth_;
        const mpz_class a = spec_.a.at(depth_);
        const mpz_class b = spec_.b.at(depth_);
        mpz_class h = a * h_ + b * h_prev_;
        mpz_class k = a * k_ + b * k_prev_;
        h_prev_.swap(h_);
        h_.swap(h);
        k_prev_.swap(k_);
        k_.swap(k);
        if ((depth_ & 15U) == 0) rescale();
    }
}

void ConvergentStream::rescale()
{
    const std::size_t bits = std::min(mpz_sizeinbase(k_.get_mpz_t(), 2), mpz_sizeinbase(k_prev_.get_mpz_t(), 2));
    if (k_ == 0 || k_prev_ == 0 || bits <= budget_bits_) return;
    const std::size_t keep = scale_ + kRescaleHeadroom;
    const std::size_t have = std::min(decimal_digits(k_), decimal_digits(k_prev_));
    if (have <= 2 * keep) return;
    const mpz_class divisor = pow10(have - 2 * keep);
    for (mpz_class* v : {&h_, &h_prev_, &k_, &k_prev_}) mpz_tdiv_q(v->get_mpz_t(), v->get_mpz_t(), divisor.get_mpz_t());
}

BigDecimal ConvergentStream::value() const
{
    if (k_ == 0) throw DomainError("zero convergent denominator at depth " + std::to_string(depth_));
    return BigDecimal::from_ratio(h_, k_, scale_);
}

BigDecimal ConvergentStream::previous_value() const
{
    if (depth_ == 0) return value();
    if (k_prev_ == 0) throw DomainError("zero convergent denominator at depth " + std::to_string(depth_ - 1));
    return BigDecimal::from_ratio(h_prev_, k_prev_, scale_);
}

CFValue eval_cf(const CFSpec& spec, std::size_t digits)
{
    ConvergentStream stream(spec, digits);
    stream.advance_to(spec.depth);
    const BigDecimal value = stream.value();
    CFValue out;
    out.depth = spec.depth;
    out.error_estimate = spec.depth == 0 ? BigDecimal::from_integer(0L, digits)
                                         : (value - stream.previous_value()).abs().rounded(digits);
    out.value = value.rounded(digits);
    return out;
}

ConvergedValue eval_cf_converged(const CFSpec& spec, std::size_t digits)
{
    ConvergentStream stream(spec, digits + 5);
    const BigDecimal tolerance = BigDecimal::epsilon(digits + 5, digits + 15);
    std::size_t depth = 16;
    stream.advance_to(depth);
    BigDecimal last = stream.value();
    ConvergedValue out;
    while (depth < kDepthCap) {
        depth = std::min(depth * 2, kDepthCap);
        stream.advance_to(depth);
        const BigDecimal current = stream.value();
        const bool agree = (current - last).abs() < tolerance;
        last = current;
        if (agree) {
            out.converged = true;
            break;
        }
    }
    out.result.value = last.rounded(digits + 5);
    out.result.error_estimate = (last - stream.previous_value()).abs().rounded(digits + 5);
    out.result.depth = depth;
    return out;
}

std::vector<mpq_class> convergents(const CFSpec& spec)
{
    require_depth(spec, spec.depth);
    std::vector<mpq_class> out;
    mpz_class h_prev = 1, h = spec.a0, k_prev = 0, k = 1;
    out.emplace_back(h, k);
    for (std::size_t n = 1; n <= spec.depth; ++n) {
        const mpz_class a = spec.a.at(n);
        const mpz_class b = spec.b.at(n);
        mpz_class h_next = a * h + b * h_prev;
        mpz_class k_next = a * k + b * k_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
        if (k == 0) throw DomainError("zero convergent denominator at depth " + std::to_string(n));
        mpq_class q(h, k);
        q.canonicalize();
        out.push_back(q);
    }
    return out;
}

mpq_class eval_cf_exact(const CFSpec& spec) { return convergents(spec).back(); }

SimpleExpansion simple_cf_expand(const mpq_class& x, std::size_t max_terms)
{
    SimpleExpansion out;
    mpz_class num = x.get_num();
    mpz_class den = x.get_den();
    while (out.terms.size() < max_terms && den != 0) {
        mpz_class a;
        mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        out.terms.push_back(a);
        mpz_class rem = num - a * den;
        num = den;
        den = rem;
    }
    return out;
}

SimpleExpansion simple_cf_expand(const BigDecimal& x, std::size_t max_terms)
{
    // x = m / 10^s is known to about 10^-s. A term is emitted only while
    // k_{n-1}^2 * 10^10 <= 10^s, k being the convergent denominators.
    SimpleExpansion out;
    mpz_class num = x.mantissa();
    mpz_class den = pow10(x.scale());
    const mpz_class limit = pow10(x.scale() >= 10 ? x.scale() - 10 : 0);
    mpz_class k_prev = 0, k = 1;
    while (out.terms.size() < max_terms && den != 0) {
        if (!out.terms.empty() && (x.scale() < 10 || k * k > limit)) {
            out.truncated = true;
            break;
        }
        mpz_class a;
        mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        out.terms.push_back(a);
        if (out.terms.size() > 1) {
            mpz_class k_next = a * k + k_prev;
            k_prev = k;
            k = k_next;
        }
        mpz_class rem = num - a * den;
        num = den;
        den = rem;
    }
    return out;
}

}  // namespace ramanujan::cf
