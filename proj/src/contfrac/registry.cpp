#include <istream>
#include <map>
#include <sstream>
#include <string>

#include "ramanujan/contfrac.hpp"
#include "ramanujan/error.hpp"

namespace ramanujan::cf {

// Generated from data/conjectures.txt at configure time.
extern const char* const kBuiltinRegistry;

namespace {

std::vector<long> parse_longs(const std::string& text, const std::string& field)
{
    std::vector<long> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != item.size() || item.empty()) throw DomainError("registry: bad integer in " + field + ": '" + item + "'");
        out.push_back(v);
    }
    return out;
}

ConjectureRecord parse_record(const std::string& line, std::size_t line_no)
{
    std::map<std::string, std::string> fields;
    std::stringstream in(line);
    std::string token;
    while (in >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos || eq == 0)
            throw DomainError("registry line " + std::to_string(line_no) + ": expected key=value, got '" + token + "'");
        fields[token.substr(0, eq)] = token.substr(eq + 1);
    }
    auto take = [&](const std::string& key) {
        const auto it = fields.find(key);
        if (it == fields.end()) throw DomainError("registry line " + std::to_string(line_no) + ": missing '" + key + "'");
        std::string v = it->second;
        fields.erase(it);
        return v;
    };

    ConjectureRecord r;
    r.name = take("name");
    r.constant = take("constant");
    if (!is_reference_constant(r.constant)) throw DomainError("registry: unknown constant '" + r.constant + "'");
    const auto t = parse_longs(take("transform"), "transform");
    if (t.size() != 4) throw DomainError("registry: transform needs four integers");
    r.transform = {t[0], t[1], t[2], t[3]};
    r.cf.a0 = parse_longs(take("a0"), "a0").at(0);
    r.cf.a = TermSequence::polynomial(Polynomial::parse_highest_first(take("a")));
    r.cf.b = TermSequence::polynomial(Polynomial::parse_highest_first(take("b")));
    r.status = take("status");
    if (r.status != "proved" && r.status != "unproved" && r.status != "unstated")
        throw DomainError("registry: bad status '" + r.status + "'");
    r.origin = take("origin");
    if (r.origin != "printed" && r.origin != "fitted" && r.origin != "relabelled")
        throw DomainError("registry: bad origin '" + r.origin + "'");
    r.default_digits = static_cast<std::size_t>(parse_longs(take("digits"), "digits").at(0));

    for (const char* key : {"printed_a", "printed_b"}) {
        const auto it = fields.find(key);
        if (it == fields.end()) continue;
        const TermSequence& seq = key[8] == 'a' ? r.cf.a : r.cf.b;
        const auto printed = parse_longs(it->second, key);
        for (std::size_t n = 1; n <= printed.size(); ++n)
            if (seq.at(n) != printed[n - 1])
                throw DomainError("registry: record '" + r.name + "' term " + std::to_string(n) +
                                  " disagrees with " + key);
        fields.erase(it);
    }
    if (!fields.empty()) throw DomainError("registry: unknown field '" + fields.begin()->first + "'");
    return r;
}

}  // namespace

BigDecimal Transform::apply(const BigDecimal& c) const
{
    const BigDecimal den = c * gamma + BigDecimal::from_integer(delta, c.scale());
    if (den.is_zero()) throw DomainError("transform denominator vanishes");
    return (c * alpha + BigDecimal::from_integer(beta, c.scale())) / den;
}

std::string Transform::describe(std::string_view constant) const
{
    auto affine = [&](long k, long m) {
        std::string s;
        if (k != 0) s = (k == 1 ? "" : k == -1 ? "-" : std::to_string(k) + "*") + std::string(constant);
        if (m != 0 || s.empty()) s += (s.empty() ? std::to_string(m) : (m < 0 ? "-" : "+") + std::to_string(m < 0 ? -m : m));
        return s;
    };
    if (gamma == 0 && delta == 1) return affine(alpha, beta);
    return "(" + affine(alpha, beta) + ")/(" + affine(gamma, delta) + ")";
}

std::vector<ConjectureRecord> parse_registry(std::istream& in)
{
    std::string line;
    std::size_t line_no = 0;
    bool header = false;
    std::vector<ConjectureRecord> out;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        if (!header) {
            std::stringstream h(line);
            std::string magic;
            int version = 0;
            if (!(h >> magic >> version) || magic != "ramanujan-conjectures")
                throw DomainError("registry: missing 'ramanujan-conjectures <version>' header");
            if (version != 1) throw DomainError("registry: unsupported version " + std::to_string(version));
            header = true;
            continue;
        }
        out.push_back(parse_record(line, line_no));
    }
    if (!header) throw DomainError("registry: empty file");
    return out;
}

std::vector<ConjectureRecord> builtin_registry()
{
    std::istringstream in(kBuiltinRegistry);
    return parse_registry(in);
}

const ConjectureRecord& find_record(const std::vector<ConjectureRecord>& registry, std::string_view name)
{
    for (const auto& r : registry)
        if (r.name == name) return r;
    throw DomainError("no conjecture named '" + std::string(name) + "'");
}

Verification verify_conjecture(const ConjectureRecord& record, std::size_t digits)
{
    if (digits == 0 || digits > 200) throw DomainError("verify_conjecture supports 1..200 digits");
    const ConvergedValue cf = eval_cf_converged(record.cf, digits);
    const BigDecimal lhs = record.transform.apply(reference_constant(record.constant, digits + 20));

    Verification v;
    v.depth_used = cf.result.depth;
    v.converged = cf.converged;
    v.abs_error = (cf.result.value.with_scale(digits + 20) - lhs).abs().rounded(digits + 5);
    v.match = v.abs_error < BigDecimal::epsilon(digits, digits + 5);
    return v;
}

}  // namespace ramanujan::cf
