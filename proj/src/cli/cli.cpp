#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ramanujan/cli.hpp"
#include "ramanujan/contfrac.hpp"
#include "ramanujan/error.hpp"
#include "ramanujan/lps_graphs.hpp"
#include "ramanujan/pi_engine.hpp"
#include "ramanujan/ram_signal.hpp"

namespace ramanujan::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string format_double(double v, int precision = 12)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

// BigDecimal error magnitudes as doubles for reports.
double to_double(const BigDecimal& x)
{
    return std::stod(x.to_string());
}

void emit(std::ostream& out, const Json& j)
{
    out << j.dump(2) << '\n';
}

struct Options {
    // pi
    std::string method = "chudnovsky";
    std::size_t digits = 0;
    std::optional<std::size_t> terms;
    bool report_convergence = false;
    // graph
    nt::Natural p = 0, q = 0;
    std::string out_path, in_path, solver = "auto";
    std::size_t degree = 0;
    // cf
    std::string a_poly, b_poly = "1", a0 = "0", constant, rational, name, registry;
    std::optional<std::size_t> depth;
    // sums / signal
    nt::Natural sum_q = 0, sum_n = 0, tau_max = 0;
    bool check_bound = false;
    std::size_t top = 3;
    // selftest
    std::string level = "quick";
    bool json = false;
};

lps::Solver parse_solver(const std::string& s)
{
    if (s == "dense") return lps::Solver::dense;
    if (s == "lanczos") return lps::Solver::lanczos;
    return lps::Solver::automatic;
}

Json report_json(const lps::SpectralReport& r)
{
    return Json{{"lambda", r.lambda},
                {"bound", r.bound},
                {"is_ramanujan", r.is_ramanujan},
                {"lambda1", r.lambda1},
                {"bipartite", r.bipartite},
                {"lambda_nontrivial", r.lambda_nontrivial},
                {"is_ramanujan_nontrivial", r.is_ramanujan_nontrivial},
                {"lps_bound", r.lps_bound},
                {"solver", r.solver}};
}

int cmd_pi(const Options& o, std::ostream& out, std::ostream& err)
{
    const auto method = pi::parse_method(o.method);
    if (!method) throw DomainError("unknown method '" + o.method + "'");
    const pi::PiComputation c = pi::compute(*method, o.digits, o.terms);
    const std::string value = c.value.to_string();

    Json convergence;
    if (o.report_convergence) {
        const BigDecimal reference = pi::pi_chudnovsky(o.digits + 10);
        convergence["correct_digits"] = agreeing_digits(c.value, reference);
        if ((*method == pi::Method::ramanujan || *method == pi::Method::chudnovsky) && c.terms_used >= 2) {
            const auto series =
                *method == pi::Method::ramanujan ? pi::SeriesMethod::ramanujan : pi::SeriesMethod::chudnovsky;
            convergence["digits_per_term"] = pi::digits_per_term(series, c.terms_used);
        }
    }
    if (o.json) {
        Json j{{"method", o.method}, {"digits", o.digits}, {"terms_used", c.terms_used}, {"value", value}};
        if (o.report_convergence) j.update(convergence);
        emit(out, j);
    } else {
        out << value << '\n';
        if (o.report_convergence) {
            err << "terms_used " << c.terms_used << ", correct_digits " << convergence["correct_digits"].get<std::size_t>();
            if (convergence.contains("digits_per_term"))
                err << ", digits_per_term " << format_double(convergence["digits_per_term"].get<double>(), 6);
            err << '\n';
        }
    }
    return kExitOk;
}

int cmd_graph_build(const Options& o, std::ostream& out)
{
    const lps::LpsGraph g = lps::build_lps(o.p, o.q, parse_solver(o.solver));
    Json meta{{"p", g.metadata.p},
              {"q", g.metadata.q},
              {"branch", std::string(lps::group_kind_name(g.metadata.branch))},
              {"vertices", g.metadata.vertices},
              {"degree", g.metadata.degree}};
    meta.update(report_json(g.report));

    if (!o.out_path.empty()) {
        std::ofstream edges(o.out_path);
        if (!edges) throw DomainError("cannot write " + o.out_path);
        lps::write_edge_list(edges, g.graph);
        std::ofstream sidecar(o.out_path + ".json");
        if (!sidecar) throw DomainError("cannot write " + o.out_path + ".json");
        emit(sidecar, meta);
        if (o.json) {
            emit(out, meta);
        } else {
            out << "wrote " << o.out_path << " (" << g.metadata.vertices << " vertices, lambda "
                << format_double(g.report.lambda) << ")\n";
        }
        return kExitOk;
    }
    if (o.json) {
        Json edges = Json::array();
        for (std::size_t u = 0; u < g.graph.n; ++u)
            for (std::uint32_t v : g.graph.adjacency[u])
                if (u <= v) edges.push_back({u, v});
        // A self-loop occupies one slot, other edges appear from both ends.
        meta["edges"] = std::move(edges);
        emit(out, meta);
    } else {
        lps::write_edge_list(out, g.graph);
    }
    return kExitOk;
}

int cmd_graph_check(const Options& o, std::ostream& out)
{
    std::ifstream in(o.in_path);
    if (!in) throw DomainError("cannot open " + o.in_path);
    const lps::Graph g = lps::read_edge_list(in);
    const bool regular = g.is_regular(o.degree);
    const bool connected = g.n > 0 && lps::is_connected(g);
    Json j{{"vertices", g.n}, {"degree", o.degree}, {"regular", regular}, {"connected", connected}};
    if (regular && connected) {
        j.update(report_json(lps::spectral_report(g, o.degree, parse_solver(o.solver))));
    }
    const bool ok = regular && connected;
    j["ok"] = ok;
    if (o.json) {
        emit(out, j);
    } else {
        for (const auto& item : j.items()) {
            const Json& v = item.value();
            out << item.key() << ": " << (v.is_number_float() ? format_double(v.get<double>()) : v.dump()) << '\n';
        }
    }
    return ok ? kExitOk : kExitDomain;
}

int cmd_cf_eval(const Options& o, std::ostream& out)
{
    if (o.a_poly.empty()) throw DomainError("--a-poly is required");
    cf::CFSpec spec;
    spec.a0 = mpz_class(o.a0);
    spec.a = cf::TermSequence::polynomial(cf::Polynomial::parse_highest_first(o.a_poly));
    spec.b = cf::TermSequence::polynomial(cf::Polynomial::parse_highest_first(o.b_poly));
    cf::CFValue v;
    bool converged = true;
    if (o.depth) {
        spec.depth = *o.depth;
        v = cf::eval_cf(spec, o.digits);
    } else {
        const cf::ConvergedValue c = cf::eval_cf_converged(spec, o.digits);
        v = c.result;
        converged = c.converged;
    }
    if (o.json) {
        emit(out, Json{{"value", v.value.to_string(o.digits)},
                       {"digits", o.digits},
                       {"depth", v.depth},
                       {"error_estimate", to_double(v.error_estimate)},
                       {"converged", converged}});
    } else {
        out << v.value.to_string(o.digits) << '\n';
    }
    return kExitOk;
}

int cmd_cf_expand(const Options& o, std::ostream& out)
{
    if (o.constant.empty() == o.rational.empty()) throw DomainError("give exactly one of --constant and --rational");
    cf::SimpleExpansion e;
    std::string source;
    if (!o.rational.empty()) {
        mpq_class x;
        if (x.set_str(o.rational, 10) != 0) throw DomainError("cannot parse rational '" + o.rational + "'");
        x.canonicalize();
        e = cf::simple_cf_expand(x, o.terms.value_or(64));
        source = x.get_str();
    } else {
        const std::size_t digits = o.digits ? o.digits : 200;
        e = cf::simple_cf_expand(cf::reference_constant(o.constant, digits), o.terms.value_or(20));
        source = o.constant;
    }
    if (o.json) {
        Json terms = Json::array();
        for (const mpz_class& t : e.terms) terms.push_back(t.get_str());
        emit(out, Json{{"source", source}, {"terms", terms}, {"truncated", e.truncated}});
    } else {
        out << '[';
        for (std::size_t i = 0; i < e.terms.size(); ++i) out << (i ? "," : "") << e.terms[i].get_str();
        out << "]\n";
    }
    return kExitOk;
}

int cmd_cf_verify(const Options& o, std::ostream& out)
{
    std::vector<cf::ConjectureRecord> registry;
    if (o.registry.empty()) {
        registry = cf::builtin_registry();
    } else {
        std::ifstream in(o.registry);
        if (!in) throw DomainError("cannot open " + o.registry);
        registry = cf::parse_registry(in);
    }
    const cf::ConjectureRecord& record = cf::find_record(registry, o.name);
    const std::size_t digits = o.digits ? o.digits : record.default_digits;
    const cf::Verification v = cf::verify_conjecture(record, digits);
    if (o.json) {
        emit(out, Json{{"name", record.name},
                       {"status", record.status},
                       {"digits", digits},
                       {"abs_error", to_double(v.abs_error)},
                       {"depth_used", v.depth_used},
                       {"match", v.match},
                       {"converged", v.converged},
                       {"identity", record.transform.describe(record.constant)}});
    } else {
        out << record.name << ' ' << (v.match ? "match" : "mismatch") << " digits=" << digits
            << " abs_error=" << format_double(to_double(v.abs_error), 4) << " depth=" << v.depth_used << '\n';
    }
    return kExitOk;
}

int cmd_sums_table(const Options& o, std::ostream& out)
{
    std::vector<long> values;
    for (nt::Natural n = 0; n < o.sum_n; ++n) values.push_back(rs::ramanujan_sum(o.sum_q, static_cast<long>(n)));
    if (o.json) {
        emit(out, Json{{"q", o.sum_q}, {"n", o.sum_n}, {"values", values}});
    } else {
        for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << values[i];
        out << '\n';
    }
    return kExitOk;
}

int cmd_sums_tau(const Options& o, std::ostream& out)
{
    const auto tau = rs::tau_coefficients(o.tau_max);
    std::optional<rs::TauBoundReport> bound;
    if (o.check_bound) bound = rs::check_tau_bound(o.tau_max);
    if (o.json) {
        Json values = Json::array();
        for (const mpz_class& t : tau) values.push_back(t.get_str());
        Json j{{"max", o.tau_max}, {"tau", values}};
        if (bound)
            j["bound"] = Json{{"holds", bound->holds},
                              {"primes_checked", bound->primes_checked},
                              {"max_ratio", bound->max_ratio},
                              {"argmax", bound->argmax}};
        emit(out, j);
    } else {
        for (std::size_t n = 1; n <= tau.size(); ++n) out << n << ' ' << tau[n - 1].get_str() << '\n';
        if (bound)
            out << "bound " << (bound->holds ? "holds" : "fails") << " primes=" << bound->primes_checked
                << " max_ratio=" << format_double(bound->max_ratio, 6) << " at p=" << bound->argmax << '\n';
    }
    return bound && !bound->holds ? kExitDomain : kExitOk;
}

Json samples_json(const std::vector<rs::Sample>& samples, bool real)
{
    Json out = Json::array();
    for (const rs::Sample& s : samples) {
        if (real)
            out.push_back(s.real());
        else
            out.push_back({s.real(), s.imag()});
    }
    return out;
}

int cmd_signal_decompose(const Options& o, std::ostream& out)
{
    const rs::Signal x = rs::read_signal_file(o.in_path);
    const rs::FirDecomposition d = rs::fir_decompose(x);
    double total = 0;
    for (const rs::FirComponent& c : d.components) total += c.energy;
    const bool real = x.is_real();
    if (o.json) {
        Json components = Json::array();
        for (const rs::FirComponent& c : d.components)
            components.push_back(Json{{"q", c.q},
                                      {"energy_fraction", total > 0 ? c.energy / total : 0.0},
                                      {"samples", samples_json(c.samples, real)}});
        emit(out, Json{{"N", d.N}, {"components", components}, {"residual", d.residual_norm}, {"exact", d.exact}});
    } else {
        for (const rs::FirComponent& c : d.components)
            out << "q=" << c.q << " energy_fraction=" << format_double(total > 0 ? c.energy / total : 0.0, 6) << '\n';
        out << "residual=" << format_double(d.residual_norm, 6) << '\n';
    }
    return kExitOk;
}

int cmd_signal_periods(const Options& o, std::ostream& out)
{
    const rs::Signal x = rs::read_signal_file(o.in_path);
    const auto periods = rs::estimate_periods(x, o.top);
    if (o.json) {
        Json list = Json::array();
        for (const rs::PeriodEstimate& p : periods) list.push_back(Json{{"q", p.q}, {"energy_fraction", p.energy_fraction}});
        emit(out, Json{{"N", x.size()}, {"periods", list}});
    } else {
        for (const rs::PeriodEstimate& p : periods) out << p.q << ' ' << format_double(p.energy_fraction, 6) << '\n';
    }
    return kExitOk;
}

int cmd_selftest(const Options& o, std::ostream& out, const SelftestHooks& hooks)
{
    const auto level = o.level == "full" ? SelftestLevel::full : SelftestLevel::quick;
    const std::vector<Check> checks = run_selftest(level, hooks);
    const auto failures =
        static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
    if (o.json) {
        Json list = Json::array();
        for (const Check& c : checks)
            list.push_back(Json{{"name", c.name}, {"anchor", c.anchor}, {"passed", c.passed}, {"detail", c.detail}});
        emit(out, Json{{"level", o.level}, {"passed", failures == 0}, {"failures", failures}, {"checks", list}});
    } else {
        for (const Check& c : checks) {
            out << (c.passed ? "PASS " : "FAIL ") << c.name << " [" << c.anchor << "]";
            if (!c.detail.empty()) out << ": " << c.detail;
            out << '\n';
        }
        out << (checks.size() - failures) << '/' << checks.size() << " checks passed\n";
    }
    return failures == 0 ? kExitOk : kExitDomain;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const SelftestHooks& hooks)
{
    CLI::App app{"Ramanujan toolkit: pi series, LPS graphs, continued fractions, Ramanujan sums"};
    app.name("ramanujan");
    app.require_subcommand(1);
    Options o;

    auto* pi_cmd = app.add_subcommand("pi", "Compute pi by a classical series");
    pi_cmd->add_option("--method", o.method, "madhava | machin | ramanujan | chudnovsky")
        ->check(CLI::IsMember({"madhava", "machin", "ramanujan", "chudnovsky"}));
    pi_cmd->add_option("--digits", o.digits, "Fraction digits")->required();
    pi_cmd->add_option("--terms", o.terms, "Exact number of series terms");
    pi_cmd->add_flag("--report-convergence", o.report_convergence, "Report correct digits and digits per term");
    pi_cmd->add_flag("--json", o.json);

    auto* graph_cmd = app.add_subcommand("graph", "LPS Ramanujan graphs");
    graph_cmd->require_subcommand(1);
    auto* build_cmd = graph_cmd->add_subcommand("build", "Build X^{p,q}");
    build_cmd->add_option("--p", o.p)->required();
    build_cmd->add_option("--q", o.q)->required();
    build_cmd->add_option("--out", o.out_path, "Edge-list file; metadata goes to FILE.json");
    build_cmd->add_option("--solver", o.solver)->check(CLI::IsMember({"auto", "dense", "lanczos"}));
    build_cmd->add_flag("--json", o.json);
    auto* check_cmd = graph_cmd->add_subcommand("check", "Re-verify an edge-list graph");
    check_cmd->add_option("--in", o.in_path)->required();
    check_cmd->add_option("--degree", o.degree)->required();
    check_cmd->add_option("--solver", o.solver)->check(CLI::IsMember({"auto", "dense", "lanczos"}));
    check_cmd->add_flag("--json", o.json);

    auto* cf_cmd = app.add_subcommand("cf", "Continued fractions");
    cf_cmd->require_subcommand(1);
    auto* eval_cmd = cf_cmd->add_subcommand("eval", "Evaluate a0 + b(1)/(a(1) + b(2)/(a(2) + ...))");
    eval_cmd->add_option("--a-poly", o.a_poly, "a(n) coefficients, highest degree first")->required();
    eval_cmd->add_option("--b-poly", o.b_poly, "b(n) coefficients, highest degree first");
    eval_cmd->add_option("--a0", o.a0);
    eval_cmd->add_option("--digits", o.digits)->required();
    eval_cmd->add_option("--depth", o.depth, "Fixed depth; default runs to convergence");
    eval_cmd->add_flag("--json", o.json);
    auto* expand_cmd = cf_cmd->add_subcommand("expand", "Simple continued fraction terms");
    expand_cmd->add_option("--constant", o.constant, "pi | e | log2 | catalan | zeta3 | sqrt5");
    expand_cmd->add_option("--rational", o.rational, "p/q");
    expand_cmd->add_option("--terms", o.terms);
    expand_cmd->add_option("--digits", o.digits, "Digits of the constant (default 200)");
    expand_cmd->add_flag("--json", o.json);
    auto* verify_cmd = cf_cmd->add_subcommand("verify", "Verify a registry conjecture");
    verify_cmd->add_option("--name", o.name)->required();
    verify_cmd->add_option("--digits", o.digits);
    verify_cmd->add_option("--registry", o.registry, "Registry file (default: built-in)");
    verify_cmd->add_flag("--json", o.json);

    auto* sums_cmd = app.add_subcommand("sums", "Ramanujan sums and the tau function");
    sums_cmd->require_subcommand(1);
    auto* table_cmd = sums_cmd->add_subcommand("table", "c_q(n) for n = 0..N-1");
    table_cmd->add_option("--q", o.sum_q)->required();
    table_cmd->add_option("--n", o.sum_n)->required();
    table_cmd->add_flag("--json", o.json);
    auto* tau_cmd = sums_cmd->add_subcommand("tau", "tau(1..max)");
    tau_cmd->add_option("--max", o.tau_max)->required();
    tau_cmd->add_flag("--check-bound", o.check_bound);
    tau_cmd->add_flag("--json", o.json);

    auto* signal_cmd = app.add_subcommand("signal", "Ramanujan FIR decomposition");
    signal_cmd->require_subcommand(1);
    auto* decompose_cmd = signal_cmd->add_subcommand("decompose", "Split a signal over the divisors of N");
    decompose_cmd->add_option("--in", o.in_path)->required();
    decompose_cmd->add_flag("--json", o.json);
    auto* periods_cmd = signal_cmd->add_subcommand("periods", "Rank hidden periods by energy");
    periods_cmd->add_option("--in", o.in_path)->required();
    periods_cmd->add_option("--top", o.top);
    periods_cmd->add_flag("--json", o.json);

    auto* selftest_cmd = app.add_subcommand("selftest", "Run the built-in checks");
    selftest_cmd->add_option("--level", o.level)->check(CLI::IsMember({"quick", "full"}));
    selftest_cmd->add_flag("--json", o.json);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (pi_cmd->parsed()) return cmd_pi(o, out, err);
        if (build_cmd->parsed()) return cmd_graph_build(o, out);
        if (check_cmd->parsed()) return cmd_graph_check(o, out);
        if (eval_cmd->parsed()) return cmd_cf_eval(o, out);
        if (expand_cmd->parsed()) return cmd_cf_expand(o, out);
        if (verify_cmd->parsed()) return cmd_cf_verify(o, out);
        if (table_cmd->parsed()) return cmd_sums_table(o, out);
        if (tau_cmd->parsed()) return cmd_sums_tau(o, out);
        if (decompose_cmd->parsed()) return cmd_signal_decompose(o, out);
        if (periods_cmd->parsed()) return cmd_signal_periods(o, out);
        if (selftest_cmd->parsed()) return cmd_selftest(o, out, hooks);
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitDomain;
    }
    err << "usage error: no command\n";
    return kExitUsage;
}

}  // namespace ramanujan::cli
