#include <cmath>
#include <vector>

#include "ramanujan/error.hpp"
#include "ramanujan/ram_signal.hpp"

namespace ramanujan::rs {

namespace {

// prod_{m=1}^{len-1} (1 - q^m) truncated below degree len.
std::vector<mpz_class> euler_product(std::size_t len)
{
    std::vector<mpz_class> e(len, 0);
    e[0] = 1;
    for (std::size_t m = 1; m < len; ++m)
        for (std::size_t i = len - 1; i >= m; --i) e[i] -= e[i - m];
    return e;
}

}  // namespace

std::vector<mpz_class> tau_coefficients(std::size_t n_max)
{
    if (n_max > kTauLimit) throw DomainError("tau_coefficients requires n_max <= 5000");
    if (n_max == 0) return {};
    // tau(n) is the coefficient of q^{n-1} in E(q)^24.
    const std::size_t len = n_max;
    const std::vector<mpz_class> e = euler_product(len);
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < len; ++i)
        if (e[i] != 0) support.push_back(i);

    std::vector<mpz_class> power(len, 0);
    power[0] = 1;
    std::vector<mpz_class> next(len);
    for (int round = 0; round < 24; ++round) {
        for (auto& v : next) v = 0;
        for (std::size_t i = 0; i < len; ++i) {
            if (power[i] == 0) continue;
            for (std::size_t j : support) {
                if (i + j >= len) break;
                next[i + j] += power[i] * e[j];
            }
        }
        power.swap(next);
    }
    return power;
}

TauBoundReport check_tau_bound(Natural p_max)
{
    if (p_max > kTauLimit) throw DomainError("check_tau_bound requires p_max <= 5000");
    TauBoundReport report;
    report.p_max = p_max;
    const std::vector<mpz_class> tau = tau_coefficients(p_max);
    for (Natural p = 2; p <= p_max; ++p) {
        if (!nt::is_prime(p)) continue;
        ++report.primes_checked;
        const double value = std::fabs(tau[p - 1].get_d());
        const double bound = 2.0 * std::pow(static_cast<double>(p), 5.5);
        const double ratio = value / bound;
        if (ratio > report.max_ratio) {
            report.max_ratio = ratio;
            report.argmax = p;
        }
        // Exact form of the bound: tau(p)^2 <= 4 p^11.
        mpz_class p11;
        mpz_ui_pow_ui(p11.get_mpz_t(), p, 11);
        if (tau[p - 1] * tau[p - 1] > 4 * p11) report.holds = false;
    }
    return report;
}

}  // namespace ramanujan::rs
