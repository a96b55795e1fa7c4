#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramanujan/error.hpp"
#include "ramanujan/ram_signal.hpp"

namespace ramanujan::rs {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::optional<double> parse_number(std::string_view s)
{
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double v = 0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size() || s.empty()) return std::nullopt;
    return v;
}

// "re" or "re,im"; nullopt if any field is not a number.
std::optional<Sample> parse_sample(std::string_view line)
{
    const auto comma = line.find(',');
    const auto re = parse_number(line.substr(0, comma));
    if (!re) return std::nullopt;
    if (comma == std::string_view::npos) return Sample(*re, 0.0);
    const auto im = parse_number(line.substr(comma + 1));
    if (!im) return std::nullopt;
    return Sample(*re, *im);
}

Signal finish(Signal s)
{
    if (s.samples.empty()) throw DomainError("signal has no samples");
    return s;
}

}  // namespace

Signal read_signal_text(std::istream& in)
{
    Signal s;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        const std::string_view body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        const auto sample = parse_sample(body);
        if (!sample) throw DomainError("line " + std::to_string(number) + ": expected 're' or 're,im'");
        s.samples.push_back(*sample);
    }
    return finish(std::move(s));
}

Signal read_signal_csv(std::istream& in)
{
    Signal s;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        const std::string_view body = trim(line);
        if (body.empty()) continue;
        const auto sample = parse_sample(body);
        if (!sample) {
            if (number == 1) continue;  // header
            throw DomainError("row " + std::to_string(number) + ": expected one or two numeric columns");
        }
        s.samples.push_back(*sample);
    }
    return finish(std::move(s));
}

Signal read_signal_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open " + path);
    const bool csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
    return csv ? read_signal_csv(in) : read_signal_text(in);
}

}  // namespace ramanujan::rs
