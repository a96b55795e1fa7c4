#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "ramanujan/error.hpp"
#include "ramanujan/numtheory.hpp"

namespace ramanujan::lps {

using nt::Natural;

enum class GroupKind { PGL, PSL };

std::string_view group_kind_name(GroupKind kind);

/// A 2x2 matrix over F_q up to scalars, stored in canonical form.
/// PGL: first nonzero of (a,b,c,d) is 1.
/// PSL: determinant 1 and first nonzero in [1, (q-1)/2].
struct ProjMatrix {
    Natural a = 0, b = 0, c = 0, d = 0;
    GroupKind kind = GroupKind::PGL;

    auto operator<=>(const ProjMatrix&) const = default;
};

/// Canonical representative of the class of [[a,b],[c,d]] mod q. PSL requires
/// a square determinant. Throws DomainError on a singular matrix.
ProjMatrix canonicalize(Natural a, Natural b, Natural c, Natural d, Natural q, GroupKind kind);
ProjMatrix canonicalize(const ProjMatrix& m, Natural q);
ProjMatrix multiply(const ProjMatrix& x, const ProjMatrix& y, Natural q);
ProjMatrix inverse(const ProjMatrix& m, Natural q);
Natural determinant(const ProjMatrix& m, Natural q);

struct FourSquares {
    long a0 = 0, a1 = 0, a2 = 0, a3 = 0;

    auto operator<=>(const FourSquares&) const = default;
};

/// Solutions of a0^2+a1^2+a2^2+a3^2 = p with a0 > 0 odd and a1,a2,a3 even,
/// in lexicographic order. Requires p prime, p = 1 mod 4.
std::vector<FourSquares> four_square_solutions(Natural p);

/// The branch selected for (p, q): PSL when p is a square mod q.
GroupKind lps_branch(Natural p, Natural q);

/// The p+1 generators [[a0+i a1, a2+i a3], [-a2+i a3, a0-i a1]] with i^2 = -1
/// mod q. PSL form rescales by the inverse of sqrt(p) mod q.
std::vector<ProjMatrix> generating_set(Natural p, Natural q);
std::vector<ProjMatrix> generating_set(Natural p, Natural q, GroupKind kind);

/// All canonical elements in lexicographic (a,b,c,d) order.
std::vector<ProjMatrix> enumerate_group(Natural q, GroupKind kind);

/// Undirected multigraph as sorted neighbour lists. A self-loop occupies one
/// slot in its vertex's list.
struct Graph {
    std::size_t n = 0;
    std::vector<std::vector<std::uint32_t>> adjacency;

    std::size_t degree(std::size_t v) const { return adjacency[v].size(); }
    bool is_regular(std::size_t k) const;
    bool is_symmetric() const;
    std::size_t edge_count() const;
};

/// Finite group with dense element indices. Cayley construction only needs
/// `size`, `multiply` on indices and `inverse`.
class FiniteGroup {
public:
    virtual ~FiniteGroup() = default;
    virtual std::size_t size() const = 0;
    virtual std::size_t multiply(std::size_t x, std::size_t y) const = 0;
    virtual std::size_t inverse(std::size_t x) const = 0;
};

/// Z_n under addition; element index is the residue.
class CyclicGroup final : public FiniteGroup {
public:
    explicit CyclicGroup(std::size_t n);
    std::size_t size() const override { return n_; }
    std::size_t multiply(std::size_t x, std::size_t y) const override { return (x + y) % n_; }
    std::size_t inverse(std::size_t x) const override { return (n_ - x) % n_; }
    /// Residue of a signed integer, e.g. -1 -> n-1.
    std::size_t element(long value) const;

private:
    std::size_t n_;
};

/// PGL(2,q) or PSL(2,q); element index is the position in enumerate_group.
class ProjectiveGroup final : public FiniteGroup {
public:
    ProjectiveGroup(Natural q, GroupKind kind);
    std::size_t size() const override { return elements_.size(); }
    std::size_t multiply(std::size_t x, std::size_t y) const override;
    std::size_t inverse(std::size_t x) const override;
    /// Index of a canonical element of this group; throws DomainError otherwise.
    std::size_t index_of(const ProjMatrix& m) const;
    const std::vector<ProjMatrix>& elements() const { return elements_; }
    Natural modulus() const { return q_; }
    GroupKind kind() const { return kind_; }

private:
    std::uint64_t key(const ProjMatrix& m) const;

    Natural q_;
    GroupKind kind_;
    std::vector<ProjMatrix> elements_;
    std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// Edge (g, g s) for every element g and generator s. Generators must form a
/// multiset closed under inversion.
Graph cayley_graph(const FiniteGroup& group, const std::vector<std::size_t>& generators);
Graph cayley_graph(const ProjectiveGroup& group, const std::vector<ProjMatrix>& generators);

bool is_connected(const Graph& g);
/// True when the graph admits a proper 2-colouring.
bool is_bipartite(const Graph& g);

inline constexpr double kEigenTolerance = 1e-8;
inline constexpr double kVerdictTolerance = 1e-6;
inline constexpr std::size_t kDenseLimit = 2000;

struct SpectralReport {
    std::size_t k = 0;
    double lambda1 = 0.0;
    /// Second-largest absolute eigenvalue, counting -k of a bipartite graph.
    double lambda = 0.0;
    double bound = 0.0;  // 2 sqrt(k-1)
    bool is_ramanujan = false;
    bool bipartite = false;
    /// Largest |eigenvalue| once the trivial +k (and -k if bipartite) are removed.
    double lambda_nontrivial = 0.0;
    bool is_ramanujan_nontrivial = false;
    double lps_bound = 0.0;  // 2 sqrt(k)
    std::string solver;      // "dense" or "lanczos"
};

enum class Solver { automatic, dense, lanczos };

/// Spectrum summary of a connected k-regular graph. Automatic solver choice is
/// dense up to kDenseLimit vertices and Lanczos beyond.
SpectralReport spectral_report(const Graph& g, std::size_t k, Solver solver = Solver::automatic);

/// All adjacency eigenvalues in ascending order (dense solve).
std::vector<double> dense_spectrum(const Graph& g);

inline constexpr std::size_t kExpansionLimit = 24;

/// Exact isoperimetric constant min |dF| / min(|F|, |V-F|) by exhaustive search.
mpq_class expansion_constant(const Graph& g);

struct LpsMetadata {
    Natural p = 0;
    Natural q = 0;
    GroupKind branch = GroupKind::PGL;
    std::size_t vertices = 0;
    std::size_t degree = 0;
};

struct LpsGraph {
    Graph graph;
    SpectralReport report;
    LpsMetadata metadata;
};

/// Validates (p, q): distinct primes, both 1 mod 4, q > 2 sqrt(p).
void require_lps_parameters(Natural p, Natural q);

LpsGraph build_lps(Natural p, Natural q, Solver solver = Solver::automatic);

/// "n m" header, then one "u v" line per edge (u <= v, with multiplicity).
void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);

}  // namespace ramanujan::lps
