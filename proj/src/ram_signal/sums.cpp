#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "ramanujan/error.hpp"
#include "ramanujan/pi_engine.hpp"
#include "ramanujan/ram_signal.hpp"

namespace ramanujan::rs {

namespace {

constexpr Natural kMultiplicativeFullPeriod = 30;
constexpr Natural kTrendModulusLimit = 12;
constexpr Natural kTrendShiftLimit = 2;
constexpr long kTrendSmall = 1000;
constexpr long kTrendLarge = 10000;

void require_modulus(Natural q)
{
    if (q == 0) throw DomainError("Ramanujan sum modulus must be >= 1");
}

void require_property_range(Natural q_max, Natural n_max)
{
    if (q_max < 1 || q_max > kPropertyLimit || n_max > kPropertyLimit)
        throw DomainError("property sweep limits must satisfy 1 <= q_max <= 200 and n_max <= 200");
}

std::string describe(std::initializer_list<std::pair<const char*, long>> fields)
{
    std::string out;
    for (const auto& [name, value] : fields) {
        if (!out.empty()) out += ' ';
        out += name;
        out += '=';
        out += std::to_string(value);
    }
    return out;
}

// Rows c_q(0..q-1) for q = 1..q_max, indexed by q.
std::vector<std::vector<long>> row_table(Natural q_max)
{
    std::vector<std::vector<long>> rows(q_max + 1);
    for (Natural q = 1; q <= q_max; ++q) rows[q] = ramanujan_sum_row(q);
    return rows;
}

long lookup(const std::vector<std::vector<long>>& rows, Natural q, long n)
{
    return rows[q][static_cast<std::size_t>(std::labs(n) % static_cast<long>(q))];
}

void sweep_multiplicativity(const std::vector<std::vector<long>>& rows, Natural q_max, Natural n_max,
                            std::vector<SumViolation>& out, std::size_t& checks)
{
    for (Natural q1 = 1; q1 <= q_max; ++q1) {
        for (Natural q2 = q1 + 1; q2 <= q_max; ++q2) {
            if (nt::gcd(q1, q2) != 1) continue;
            const bool full = q2 <= kMultiplicativeFullPeriod;
            const long end = static_cast<long>(full ? q1 * q2 : n_max);
            const std::vector<long> product = full ? ramanujan_sum_row(q1 * q2) : std::vector<long>{};
            for (long n = 0; n < end; ++n) {
                const long lhs = full ? product[static_cast<std::size_t>(n)] : ramanujan_sum(q1 * q2, n);
                ++checks;
                if (lhs != lookup(rows, q1, n) * lookup(rows, q2, n))
                    out.push_back({"multiplicativity", describe({{"q1", static_cast<long>(q1)},
                                                                 {"q2", static_cast<long>(q2)},
                                                                 {"n", n}})});
            }
        }
    }
}

void sweep_orthogonality(const std::vector<std::vector<long>>& rows, Natural q_max,
                         std::vector<SumViolation>& out, std::size_t& checks)
{
    for (Natural q1 = 1; q1 <= q_max; ++q1) {
        for (Natural q2 = q1 + 1; q2 <= q_max; ++q2) {
            const long l = static_cast<long>(nt::lcm(q1, q2));
            long sum = 0;
            for (long n = 0; n < l; ++n) sum += lookup(rows, q1, n) * lookup(rows, q2, n);
            ++checks;
            if (sum != 0)
                out.push_back({"orthogonality", describe({{"q1", static_cast<long>(q1)},
                                                          {"q2", static_cast<long>(q2)},
                                                          {"sum", sum}})});
        }
    }
}

double correlation_average(const std::vector<std::vector<long>>& rows, Natural r, Natural s, Natural h, long x)
{
    long sum = 0;
    for (long n = 1; n <= x; ++n) sum += lookup(rows, r, n) * lookup(rows, s, n + static_cast<long>(h));
    return static_cast<double>(sum) / static_cast<double>(x);
}

}  // namespace

long ramanujan_sum(Natural q, long n)
{
    require_modulus(q);
    const Natural g = nt::gcd(q, static_cast<Natural>(std::labs(n)));
    long sum = 0;
    for (Natural d : nt::divisors(g)) sum += nt::mobius(q / d) * static_cast<long>(d);
    return sum;
}

double ramanujan_sum_trig(Natural q, long n)
{
    require_modulus(q);
    const double two_pi = 2.0 * std::acos(-1.0);
    const long r = std::labs(n) % static_cast<long>(q);
    double sum = 0;
    for (Natural k = 1; k <= q; ++k) {
        if (nt::gcd(k, q) != 1) continue;
        // Reduce k n mod q before scaling so the angle stays in [0, 2 pi).
        const long kn = static_cast<long>(k % q) * r % static_cast<long>(q);
        sum += std::cos(two_pi * static_cast<double>(kn) / static_cast<double>(q));
    }
    return sum;
}

std::vector<long> ramanujan_sum_row(Natural q)
{
    require_modulus(q);
    std::vector<long> row(q);
    for (Natural n = 0; n < q; ++n) row[n] = ramanujan_sum(q, static_cast<long>(n));
    return row;
}

SumPropertyReport check_sum_properties(Natural q_max, Natural n_max)
{
    require_property_range(q_max, n_max);
    SumPropertyReport report;
    report.q_max = q_max;
    report.n_max = n_max;
    const auto rows = row_table(q_max);

    for (Natural q = 1; q <= q_max; ++q) {
        const Natural phi = nt::totient(q);
        for (long n = 0; n < static_cast<long>(n_max); ++n) {
            ++report.checks;
            if (ramanujan_sum(q, n + static_cast<long>(q)) != ramanujan_sum(q, n))
                report.violations.push_back({"periodicity", describe({{"q", static_cast<long>(q)}, {"n", n}})});
        }
        for (long n = 0; n < static_cast<long>(q); ++n) {
            const long exact = rows[q][static_cast<std::size_t>(n)];
            const double trig = ramanujan_sum_trig(q, n);
            report.checks += 2;
            if (std::fabs(trig - static_cast<double>(exact)) >= kTrigTolerance)
                report.violations.push_back({"integrality", describe({{"q", static_cast<long>(q)}, {"n", n}})});
            const Natural g = nt::gcd(q, static_cast<Natural>(n));
            const long formula =
                nt::mobius(q / g) * static_cast<long>(phi) / static_cast<long>(nt::totient(q / g));
            if (formula != exact)
                report.violations.push_back({"explicit formula", describe({{"q", static_cast<long>(q)}, {"n", n}})});
        }
        long self = 0;
        for (long v : rows[q]) self += v * v;
        report.self_products.push_back(self);
    }

    sweep_multiplicativity(rows, q_max, n_max, report.violations, report.checks);
    sweep_orthogonality(rows, q_max, report.violations, report.checks);

    const Natural trend_max = std::min(q_max, kTrendModulusLimit);
    for (Natural r = 1; r <= trend_max; ++r) {
        for (Natural s = 1; s <= trend_max; ++s) {
            for (Natural h = 0; h <= kTrendShiftLimit; ++h) {
                CorrelationTrend t{r, s, h, r == s ? lookup(rows, r, static_cast<long>(h)) : 0, 0, 0, 0, 0};
                const double limit = static_cast<double>(t.limit);
                t.error_small = std::fabs(correlation_average(rows, r, s, h, kTrendSmall) - limit);
                t.error_large = std::fabs(correlation_average(rows, r, s, h, kTrendLarge) - limit);
                const double c = 2.0 * static_cast<double>(nt::lcm(r, s) * nt::totient(r) * nt::totient(s));
                t.envelope_small = c / static_cast<double>(kTrendSmall);
                t.envelope_large = c / static_cast<double>(kTrendLarge);
                ++report.checks;
                if (t.error_small > t.envelope_small || t.error_large > t.envelope_large)
                    report.violations.push_back({"shifted correlation", describe({{"r", static_cast<long>(r)},
                                                                                  {"s", static_cast<long>(s)},
                                                                                  {"h", static_cast<long>(h)}})});
                report.trends.push_back(t);
            }
        }
    }
    return report;
}

std::vector<SumViolation> check_multiplicativity(Natural q_max)
{
    if (q_max < 1 || q_max > kMultiplicativeFullPeriod)
        throw DomainError("multiplicativity sweep requires 1 <= q_max <= 30");
    std::vector<SumViolation> out;
    std::size_t checks = 0;
    sweep_multiplicativity(row_table(q_max), q_max, 0, out, checks);
    return out;
}

std::vector<SumViolation> check_orthogonality(Natural q_max)
{
    require_property_range(q_max, 0);
    std::vector<SumViolation> out;
    std::size_t checks = 0;
    sweep_orthogonality(row_table(q_max), q_max, out, checks);
    return out;
}

double rf_partial_sum(ArithmeticFunction f, Natural n, Natural Q)
{
    if (n < 1 || Q < 1) throw DomainError("rf_partial_sum requires n >= 1 and Q >= 1");
    double sum = 0;
    const long m = static_cast<long>(n);
    if (f == ArithmeticFunction::divisor_d) {
        for (Natural q = 2; q <= Q; ++q) {
            const long c = ramanujan_sum(q, m);
            if (c != 0) sum -= std::log(static_cast<double>(q)) / static_cast<double>(q) * static_cast<double>(c);
        }
        return sum;
    }
    for (Natural q = Q; q >= 1; --q) {  // smallest terms first
        const long c = ramanujan_sum(q, m);
        if (c != 0) sum += static_cast<double>(c) / (static_cast<double>(q) * static_cast<double>(q));
    }
    static const double pi_squared = [] {
        const double pi = std::stod(pi::pi_chudnovsky(30).to_string());
        return pi * pi;
    }();
    return pi_squared * static_cast<double>(n) / 6.0 * sum;
}

}  // namespace ramanujan::rs
