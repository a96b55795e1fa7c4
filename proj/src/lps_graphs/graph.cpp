#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <string>

#include "ramanujan/lps_graphs.hpp"

namespace ramanujan::lps {

bool Graph::is_regular(std::size_t k) const
{
    return std::all_of(adjacency.begin(), adjacency.end(), [k](const auto& row) { return row.size() == k; });
}

bool Graph::is_symmetric() const
{
    for (std::size_t v = 0; v < n; ++v) {
        const auto& row = adjacency[v];
        for (auto it = row.begin(); it != row.end();) {
            const std::uint32_t u = *it;
            const auto run_end = std::upper_bound(it, row.end(), u);
            if (u >= n) return false;
            const auto& back = adjacency[u];
            const auto range = std::equal_range(back.begin(), back.end(), static_cast<std::uint32_t>(v));
            if (range.second - range.first != run_end - it) return false;
            it = run_end;
        }
    }
    return true;
}

std::size_t Graph::edge_count() const
{
    std::size_t ends = 0;
    std::size_t loops = 0;
    for (std::size_t v = 0; v < n; ++v)
        for (std::uint32_t u : adjacency[v]) (u == v ? loops : ends) += 1;
    return ends / 2 + loops;
}

CyclicGroup::CyclicGroup(std::size_t n) : n_(n)
{
    if (n == 0) throw DomainError("cyclic group order must be >= 1");
}

std::size_t CyclicGroup::element(long value) const
{
    const long m = static_cast<long>(n_);
    return static_cast<std::size_t>(((value % m) + m) % m);
}

Graph cayley_graph(const FiniteGroup& group, const std::vector<std::size_t>& generators)
{
    const std::size_t n = group.size();
    for (std::size_t s : generators)
        if (s >= n) throw DomainError("generator is not a group element");

    std::vector<std::size_t> forward = generators;
    std::vector<std::size_t> inverted;
    inverted.reserve(generators.size());
    for (std::size_t s : generators) inverted.push_back(group.inverse(s));
    std::sort(forward.begin(), forward.end());
    std::sort(inverted.begin(), inverted.end());
    if (forward != inverted) throw DomainError("generator set is not closed under inversion");

    Graph g;
    g.n = n;
    g.adjacency.assign(n, {});
    for (std::size_t v = 0; v < n; ++v) {
        auto& row = g.adjacency[v];
        row.reserve(generators.size());
        for (std::size_t s : generators) row.push_back(static_cast<std::uint32_t>(group.multiply(v, s)));
        std::sort(row.begin(), row.end());
    }
    return g;
}

Graph cayley_graph(const ProjectiveGroup& group, const std::vector<ProjMatrix>& generators)
{
    std::vector<std::size_t> indices;
    indices.reserve(generators.size());
    for (const ProjMatrix& s : generators) indices.push_back(group.index_of(s));
    return cayley_graph(static_cast<const FiniteGroup&>(group), indices);
}

bool is_connected(const Graph& g)
{
    if (g.n == 0) throw DomainError("is_connected: empty graph");
    std::vector<char> seen(g.n, 0);
    std::queue<std::uint32_t> frontier;
    frontier.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    while (!frontier.empty()) {
        const std::uint32_t v = frontier.front();
        frontier.pop();
        for (std::uint32_t u : g.adjacency[v])
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                frontier.push(u);
            }
    }
    return reached == g.n;
}

bool is_bipartite(const Graph& g)
{
    std::vector<int> colour(g.n, -1);
    for (std::size_t start = 0; start < g.n; ++start) {
        if (colour[start] >= 0) continue;
        colour[start] = 0;
        std::queue<std::uint32_t> frontier;
        frontier.push(static_cast<std::uint32_t>(start));
        while (!frontier.empty()) {
            const std::uint32_t v = frontier.front();
            frontier.pop();
            for (std::uint32_t u : g.adjacency[v]) {
                if (colour[u] < 0) {
                    colour[u] = 1 - colour[v];
                    frontier.push(u);
                } else if (colour[u] == colour[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

mpq_class expansion_constant(const Graph& g)
{
    if (g.n > kExpansionLimit)
        throw DomainError("expansion_constant: " + std::to_string(g.n) + " vertices exceeds the exhaustive limit of " +
                          std::to_string(kExpansionLimit));
    if (g.n < 2) throw DomainError("expansion_constant: needs at least two vertices");

    // |dF| and min(|F|,|V-F|) are invariant under complement, so F ranges over
    // subsets avoiding the last vertex, visited in Gray-code order.
    const std::size_t free_vertices = g.n - 1;
    std::vector<char> inside(g.n, 0);
    long boundary = 0;
    std::size_t size = 0;
    long best_num = -1;
    long best_den = 1;
    for (std::uint64_t step = 1; step < (std::uint64_t{1} << free_vertices); ++step) {
        const auto v = static_cast<std::size_t>(__builtin_ctzll(step));
        long toward_inside = 0;
        long toward_outside = 0;
        for (std::uint32_t u : g.adjacency[v]) {
            if (u == v) continue;
            (inside[u] ? toward_inside : toward_outside) += 1;
        }
        if (inside[v]) {
            boundary += toward_inside - toward_outside;
            inside[v] = 0;
            --size;
        } else {
            boundary += toward_outside - toward_inside;
            inside[v] = 1;
            ++size;
        }
        const long den = static_cast<long>(std::min(size, g.n - size));
        if (den == 0) continue;
        if (best_num < 0 || boundary * best_den < best_num * den) {
            best_num = boundary;
            best_den = den;
        }
    }
    mpq_class h(best_num, best_den);
    h.canonicalize();
    return h;
}

void write_edge_list(std::ostream& out, const Graph& g)
{
    out << g.n << ' ' << g.edge_count() << '\n';
    for (std::size_t v = 0; v < g.n; ++v)
        for (std::uint32_t u : g.adjacency[v])
            if (u >= v) out << v << ' ' << u << '\n';
}

Graph read_edge_list(std::istream& in)
{
    long long n = -1;
    long long m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0) throw DomainError("edge list: malformed 'n m' header");
    Graph g;
    g.n = static_cast<std::size_t>(n);
    g.adjacency.assign(g.n, {});
    for (long long e = 0; e < m; ++e) {
        long long u = -1;
        long long v = -1;
        if (!(in >> u >> v)) throw DomainError("edge list: expected " + std::to_string(m) + " edges");
        if (u < 0 || v < 0 || u >= n || v >= n) throw DomainError("edge list: vertex index out of range");
        g.adjacency[u].push_back(static_cast<std::uint32_t>(v));
        if (u != v) g.adjacency[v].push_back(static_cast<std::uint32_t>(u));
    }
    std::string trailing;
    if (in >> trailing) throw DomainError("edge list: unexpected data after " + std::to_string(m) + " edges");
    for (auto& row : g.adjacency) std::sort(row.begin(), row.end());
    return g;
}

}  // namespace ramanujan::lps
