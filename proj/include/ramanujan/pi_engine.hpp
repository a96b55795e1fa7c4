#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include <gmpxx.h>

#include "ramanujan/bigdecimal.hpp"

namespace ramanujan::pi {

enum class Method { madhava, machin, ramanujan, chudnovsky };

std::string_view method_name(Method m);
std::optional<Method> parse_method(std::string_view name);

/// Working-digit surplus for a series of `terms` terms: 10 + ceil(log10(terms)).
std::size_t guard_digits(std::size_t terms);

struct PiComputation {
    BigDecimal value;  // rounded half-even to the requested digits
    std::size_t terms_used = 0;
};

/// Dispatches to one of the series. With `terms` set, exactly that many
/// series terms are summed; otherwise each method picks enough terms for
/// the requested digits.
PiComputation compute(Method method, std::size_t digits, std::optional<std::size_t> terms = std::nullopt);

/// sqrt(12) * sum_{k<terms} (-3)^-k / (2k+1), rounded to `digits`.
BigDecimal pi_madhava(std::size_t terms, std::size_t digits);

/// 16 atan(1/5) - 4 atan(1/239).
BigDecimal pi_machin(std::size_t digits);

/// 1/pi = (2 sqrt 2 / 9801) sum (4k)!/(k!)^4 (26390k + 1103) / 396^(4k).
BigDecimal pi_ramanujan(std::size_t digits);

/// Sequential-recurrence Chudnovsky sum; switches to binary splitting above
/// 10^4 digits unless an algorithm is forced.
BigDecimal pi_chudnovsky(std::size_t digits);

enum class ChudnovskyAlgorithm { automatic, recurrence, binary_splitting };
BigDecimal pi_chudnovsky(std::size_t digits, ChudnovskyAlgorithm algorithm);

/// Unrounded pi estimates from a fixed number of series terms, carried at
/// `scale` fraction digits. A zero-term Chudnovsky estimate is C/13591409.
BigDecimal madhava_estimate(std::size_t terms, std::size_t scale);
BigDecimal ramanujan_estimate(std::size_t terms, std::size_t scale);
BigDecimal chudnovsky_estimate(std::size_t terms, std::size_t scale);

/// The big-integer terms of the Chudnovsky series at index q.
///   L = 545140134 q + 13591409
///   X = (-262537412640768000)^q
///   K = 12 q + 6
///   M = (6q)! / ((3q)! (q!)^3)
struct ChudnovskyState {
    std::uint64_t q = 0;
    mpz_class L{13591409};
    mpz_class X{1};
    mpz_class M{1};
    mpz_class K{6};

    static ChudnovskyState initial() { return {}; }
};

/// Advances every term by one index. M uses the K form
/// M' = M (K^3 - 16K) / (q+1)^3; a non-exact division throws InternalError.
ChudnovskyState chudnovsky_step(const ChudnovskyState& state);

enum class SeriesMethod { ramanujan, chudnovsky };

/// Marginal correct digits gained per added term,
/// (D(terms) - D(1)) / (terms - 1), where D(t) = -log10|estimate_t - pi|
/// against a 2000-digit reference. Requires terms >= 2.
double digits_per_term(SeriesMethod method, std::size_t terms);

}  // namespace ramanujan::pi
