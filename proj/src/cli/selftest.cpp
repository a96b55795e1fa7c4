#include <cmath>
#include <cstdio>
#include <exception>
#include <set>
#include <string>
#include <vector>

#include "ramanujan/cli.hpp"
#include "ramanujan/contfrac.hpp"
#include "ramanujan/lps_graphs.hpp"
#include "ramanujan/numtheory.hpp"
#include "ramanujan/pi_engine.hpp"
#include "ramanujan/ram_signal.hpp"

namespace ramanujan::cli {

namespace {

const char* const kPi42 = "3.141592653589793238462643383279502884197169";

std::string format_double(double v, int precision = 12)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

class Recorder {
public:
    explicit Recorder(std::vector<Check>& out) : out_(out) {}

    // Runs `body`, which returns pass/fail and may fill `detail`; an exception
    // is a failure carrying its message.
    template <typename Body>
    void operator()(std::string name, std::string anchor, Body body)
    {
        Check c{std::move(name), std::move(anchor), false, {}};
        try {
            c.passed = body(c.detail);
        } catch (const std::exception& e) {
            c.passed = false;
            c.detail = std::string("exception: ") + e.what();
        }
        out_.push_back(std::move(c));
    }

private:
    std::vector<Check>& out_;
};

std::set<lps::ProjMatrix> canonical_set(const std::vector<std::array<nt::Natural, 4>>& raw, nt::Natural q,
                                        lps::GroupKind kind)
{
    std::set<lps::ProjMatrix> out;
    for (const auto& m : raw) out.insert(lps::canonicalize(m[0], m[1], m[2], m[3], q, kind));
    return out;
}

void number_theory_checks(Recorder& check)
{
    check("29 is prime", "p = 5, q = 29 example", [](std::string&) { return nt::is_prime(29); });
    check("phi(6) = 2", "dimension of S_6", [](std::string&) { return nt::totient(6) == 2; });
    check("mu(1) = 1", "Mobius function definition", [](std::string&) { return nt::mobius(1) == 1; });
    check("divisors(6)", "sigma(6) = 1 + 2 + 3 + 6",
          [](std::string&) { return nt::divisors(6) == std::vector<nt::Natural>{1, 2, 3, 6}; });
    check("quadratic residues", "11^2 = 5 mod 29; residues mod 11", [](std::string&) {
        return nt::legendre_is_qr(5, 29) && nt::legendre_is_qr(3, 11) && !nt::legendre_is_qr(2, 11);
    });
    check("square roots mod 29", "12^2 = -1 and 11^2 = 5 mod 29",
          [](std::string&) { return nt::sqrt_mod(28, 29) == 12 && nt::sqrt_mod(5, 29) == 11; });
    check("inverse of 11 mod 29", "PSL rescaling by 1/11", [](std::string&) { return nt::mod_inverse(11, 29) == 8; });
}

void pi_checks(Recorder& check)
{
    check("Madhava 21 terms", "correct to 11 decimal places", [](std::string& detail) {
        const BigDecimal estimate = pi::madhava_estimate(21, 40);
        const BigDecimal reference = pi::pi_chudnovsky(40);
        const double err = std::pow(10.0, -decimal_error_exponent(estimate, reference));
        detail = "|error| = " + format_double(err, 4) + ", limit 5e-12";
        return err < 5e-12;
    });
    for (pi::Method m : {pi::Method::madhava, pi::Method::machin, pi::Method::ramanujan, pi::Method::chudnovsky}) {
        check("pi 42 digits (" + std::string(pi::method_name(m)) + ")", "all the digits of pi we will ever need",
              [m](std::string&) { return pi::compute(m, 42).value.to_string() == kPi42; });
    }
}

void graph_checks(Recorder& check, bool full)
{
    using lps::GroupKind;
    check("four squares of 5", "(1,+-2,0,0), (1,0,+-2,0), (1,0,0,+-2)", [](std::string&) {
        const auto s = lps::four_square_solutions(5);
        return s.size() == 6 && s.front() == lps::FourSquares{1, -2, 0, 0} && s.back() == lps::FourSquares{1, 2, 0, 0};
    });
    check("generating set S", "the six PGL matrices for (5, 29)", [](std::string&) {
        const auto gens = lps::generating_set(5, 29, GroupKind::PGL);
        return std::set<lps::ProjMatrix>(gens.begin(), gens.end()) ==
               canonical_set({{25, 0, 0, 6}, {6, 0, 0, 25}, {1, 2, 27, 1}, {1, 27, 2, 1}, {1, 24, 24, 1}, {1, 5, 5, 1}},
                             29, GroupKind::PGL);
    });
    check("generating set S'", "the six PSL matrices for (5, 29)", [](std::string&) {
        const auto gens = lps::generating_set(5, 29);
        return std::set<lps::ProjMatrix>(gens.begin(), gens.end()) ==
               canonical_set({{26, 0, 0, 19}, {19, 0, 0, 26}, {8, 16, 13, 8}, {8, 13, 16, 8}, {8, 18, 18, 8},
                              {8, 11, 11, 8}},
                             29, GroupKind::PSL);
    });
    check("|PSL(2,29)| = 12180", "q(q^2 - 1)/2 = 12180",
          [](std::string&) { return lps::enumerate_group(29, GroupKind::PSL).size() == 12180; });
    check("Cayley graphs of Z_6", "6-cycle and two triangles", [](std::string&) {
        const lps::CyclicGroup z6(6);
        const lps::Graph cycle = lps::cayley_graph(z6, {z6.element(-1), z6.element(1)});
        const lps::Graph triangles = lps::cayley_graph(z6, {z6.element(-2), z6.element(2)});
        return cycle.is_regular(2) && lps::is_connected(cycle) && triangles.is_regular(2) &&
               !lps::is_connected(triangles) && triangles.edge_count() == 6;
    });
    check("X^{5,29} construction", "6-regular graph with 12180 vertices", [](std::string& detail) {
        const lps::ProjectiveGroup group(29, GroupKind::PSL);
        const lps::Graph g = lps::cayley_graph(group, lps::generating_set(5, 29));
        detail = std::to_string(g.n) + " vertices";
        return g.n == 12180 && g.is_regular(6) && lps::is_connected(g);
    });
    if (!full) return;
    check("X^{5,29}: lambda <= 4.899", "X^{p,q} is a Ramanujan graph", [](std::string& detail) {
        const lps::LpsGraph x = lps::build_lps(5, 29, lps::Solver::lanczos);
        detail = "lambda = " + format_double(x.report.lambda) + ", 2 sqrt(5) = " + format_double(x.report.bound);
        return x.metadata.vertices == 12180 && x.report.lambda <= 2.0 * std::sqrt(6.0) + 1e-6;
    });
}

cf::CFSpec golden_spec()
{
    cf::CFSpec s;
    s.a0 = 1;
    s.a = cf::TermSequence::polynomial(cf::Polynomial::constant(1));
    s.b = cf::TermSequence::polynomial(cf::Polynomial::constant(1));
    s.depth = 60;
    return s;
}

cf::CFSpec brouncker_spec()
{
    cf::CFSpec s;
    s.a0 = 0;
    s.a = {{mpz_class(1)}, cf::Polynomial::constant(2)};
    s.b = {{mpz_class(4)}, cf::Polynomial({mpz_class(9), mpz_class(-12), mpz_class(4)})};  // (2n-3)^2
    s.depth = 10000;
    return s;
}

std::vector<mpz_class> ints(std::initializer_list<long> values)
{
    return {values.begin(), values.end()};
}

void continued_fraction_checks(Recorder& check)
{
    check("5000/127 expansion", "100/2.54 = 39 + 1/(2 + ...)", [](std::string&) {
        const auto e = cf::simple_cf_expand(mpq_class(5000, 127), 20);
        const mpq_class back = cf::eval_cf_exact(cf::CFSpec::simple(e.terms));
        return e.terms == ints({39, 2, 1, 2, 2, 1, 4}) && back == mpq_class(5000, 127);
    });
    check("golden ratio", "continued fraction of phi", [](std::string&) {
        const BigDecimal phi = (sqrt(BigDecimal::from_integer(5L, 40)) + BigDecimal::from_integer(1L, 40)) / 2L;
        return agreeing_digits(cf::eval_cf(golden_spec(), 30).value, phi) >= 12;
    });
    check("Brouncker's fraction", "pi = 4/(1 + 1^2/(2 + 3^2/(2 + ...)))", [](std::string&) {
        return agreeing_digits(cf::eval_cf(brouncker_spec(), 20).value, pi::pi_chudnovsky(20)) >= 3;
    });
    check("pi expansion", "7, 15, 1, 292, 1, ... have no obvious pattern", [](std::string&) {
        const auto e = cf::simple_cf_expand(cf::reference_constant("pi", 200), 11);
        return e.terms == ints({3, 7, 15, 1, 292, 1, 1, 1, 2, 1, 3});
    });
    check("e expansion", "Euler's pattern 2, 1, 2, 1, 1, 4, ...", [](std::string&) {
        const auto e = cf::simple_cf_expand(cf::reference_constant("e", 200), 9);
        return e.terms == ints({2, 1, 2, 1, 1, 4, 1, 1, 6});
    });
    const auto registry = cf::builtin_registry();
    for (const cf::ConjectureRecord& record : registry) {
        check("conjecture " + record.name, "Ramanujan Machine record", [&record](std::string& detail) {
            const cf::Verification v = cf::verify_conjecture(record, record.default_digits);
            detail = std::to_string(record.default_digits) + " digits, depth " + std::to_string(v.depth_used) +
                     ", |error| = " + format_double(std::stod(v.abs_error.to_string()), 4);
            return v.match;
        });
    }
    check("Rogers-Ramanujan at e^(-2 pi)", "closed form with e^(2 pi/5)", [](std::string&) {
        const std::size_t w = 45;
        const BigDecimal two_pi = pi::pi_chudnovsky(w + 5).with_scale(w) * 2L;
        const BigDecimal q = exp(-two_pi);
        const BigDecimal root5 = sqrt(BigDecimal::from_integer(5L, w));
        const BigDecimal one = BigDecimal::from_integer(1L, w);
        const BigDecimal closed =
            sqrt((BigDecimal::from_integer(5L, w) + root5) / 2L) - (root5 + one) / 2L;
        const BigDecimal bare = closed * exp(two_pi / 5L);
        return agreeing_digits(cf::rogers_ramanujan_cf(q, 30, 200), bare) >= 25 &&
               agreeing_digits(cf::rogers_ramanujan_R(q, 30, 200), closed) >= 25;
    });
}

void sum_checks(Recorder& check, const SelftestHooks& hooks, bool full)
{
    const auto c = hooks.ramanujan_sum ? hooks.ramanujan_sum
                                       : std::function<long(nt::Natural, long)>(rs::ramanujan_sum);
    check("Table c_6", "values of c_6(n) for n = 0..11", [&c](std::string& detail) {
        const std::vector<long> expected{2, 1, -1, -2, -1, 1, 2, 1, -1, -2, -1, 1};
        for (long n = 0; n < 12; ++n) {
            if (c(6, n) != expected[static_cast<std::size_t>(n)]) {
                detail = "mismatch at n = " + std::to_string(n);
                return false;
            }
        }
        return true;
    });
    const nt::Natural terms = full ? 10000 : 1000;
    for (auto [n, sigma] : {std::pair<nt::Natural, double>{6, 12.0}, {7, 8.0}}) {
        check("sigma(" + std::to_string(n) + ") series, Q = " + std::to_string(terms),
              "sigma(n) = (pi^2 n/6) sum c_q(n)/q^2", [n = n, sigma = sigma, terms](std::string& detail) {
                  const double v = rs::rf_partial_sum(rs::ArithmeticFunction::sigma, n, terms);
                  detail = format_double(v);
                  return std::fabs(v - sigma) < 0.01 * sigma;
              });
    }
    if (full) {
        check("d(6) series trend", "d(n) = -sum log(q)/q c_q(n)", [](std::string& detail) {
            const double early = std::fabs(rs::rf_partial_sum(rs::ArithmeticFunction::divisor_d, 6, 100) - 4.0);
            const double late = std::fabs(rs::rf_partial_sum(rs::ArithmeticFunction::divisor_d, 6, 100000) - 4.0);
            detail = "error " + format_double(early, 4) + " at Q = 10^2, " + format_double(late, 4) + " at Q = 10^5";
            return late < early;
        });
    }
    check("tau(1..5)", "q - 24q^2 + 252q^3 - 1472q^4 + 4830q^5", [](std::string&) {
        const auto tau = rs::tau_coefficients(5);
        return tau == std::vector<mpz_class>{1, -24, 252, -1472, 4830};
    });
    check("tau(4) recurrence", "tau(p^{j+1}) = tau(p) tau(p^j) - p^11 tau(p^{j-1})", [](std::string&) {
        const auto tau = rs::tau_coefficients(4);
        return tau[3] == tau[1] * tau[1] - 2048 * tau[0];
    });
    check("tau bound at 2 and 3", "|tau(p)| <= 2 p^{11/2}", [](std::string&) { return rs::check_tau_bound(3).holds; });
    check("B_6 and its rank", "phi(6) = 2 independent columns", [](std::string&) {
        const rs::RamanujanBasis b = rs::ramanujan_basis(6);
        return b.B[0] == std::vector<long>{2, 1, -1, -2, -1, 1} && b.rank == 2;
    });
}

}  // namespace

std::vector<Check> run_selftest(SelftestLevel level, const SelftestHooks& hooks)
{
    const bool full = level == SelftestLevel::full;
    std::vector<Check> checks;
    Recorder check(checks);
    number_theory_checks(check);
    pi_checks(check);
    graph_checks(check, full);
    continued_fraction_checks(check);
    sum_checks(check, hooks, full);
    return checks;
}

}  // namespace ramanujan::cli
