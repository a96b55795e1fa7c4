#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>

#include "ramanujan/kernels.hpp"
#include "ramanujan/lps_graphs.hpp"

namespace ramanujan::lps {

namespace {

struct CsrMatrix {
    std::vector<std::uint32_t> row_start{0};
    std::vector<std::uint32_t> column;
    std::vector<double> weight;

    explicit CsrMatrix(const Graph& g)
    {
        for (const auto& row : g.adjacency) {
            for (std::size_t i = 0; i < row.size();) {
                std::size_t j = i;
                while (j < row.size() && row[j] == row[i]) ++j;
                column.push_back(row[i]);
                weight.push_back(static_cast<double>(j - i));
                i = j;
            }
            row_start.push_back(static_cast<std::uint32_t>(column.size()));
        }
    }

    kernels::CsrView view() const { return {row_start.size() - 1, row_start.data(), column.data(), weight.data()}; }
};

std::vector<double> bipartition_sign(const Graph& g)
{
    std::vector<double> sign(g.n, 0.0);
    std::vector<std::uint32_t> stack{0};
    sign[0] = 1.0;
    while (!stack.empty()) {
        const std::uint32_t v = stack.back();
        stack.pop_back();
        for (std::uint32_t u : g.adjacency[v])
            if (sign[u] == 0.0) {
                sign[u] = -sign[v];
                stack.push_back(u);
            }
    }
    return sign;
}

void normalize(std::vector<double>& v)
{
    const double norm = std::sqrt(kernels::dot(v.data(), v.data(), v.size()));
    for (double& x : v) x /= norm;
}

struct ExtremeRitz {
    double low = 0.0;
    double high = 0.0;
};

// Lanczos with full reorthogonalization, restricted to the orthogonal
// complement of `deflate` (orthonormal rows). Iterates until both extreme
// Ritz residuals fall below the eigen tolerance or the Krylov space is exhausted.
ExtremeRitz lanczos_extremes(const Graph& g, const std::vector<std::vector<double>>& deflate)
{
    const std::size_t n = g.n;
    const CsrMatrix csr(g);
    const std::size_t limit = n - deflate.size();
    if (limit == 0) return {};

    std::vector<double> basis;
    basis.reserve((deflate.size() + std::min<std::size_t>(limit, 64)) * n);
    for (const auto& d : deflate) basis.insert(basis.end(), d.begin(), d.end());

    std::mt19937_64 rng(0x5eed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = dist(rng);
    kernels::reorthogonalize(basis.data(), deflate.size(), n, v.data());
    kernels::reorthogonalize(basis.data(), deflate.size(), n, v.data());
    normalize(v);

    std::vector<double> alpha;
    std::vector<double> beta;
    std::vector<double> w(n);
    std::size_t next_check = 20;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;

    for (std::size_t j = 0;; ++j) {
        basis.insert(basis.end(), v.begin(), v.end());
        const std::size_t rows = deflate.size() + j + 1;
        const double* current = basis.data() + (rows - 1) * n;

        kernels::spmv(csr.view(), current, w.data());
        const double a = kernels::dot(w.data(), current, n);
        alpha.push_back(a);
        kernels::axpy(-a, current, w.data(), n);
        if (j > 0) kernels::axpy(-beta.back(), current - n, w.data(), n);
        kernels::reorthogonalize(basis.data(), rows, n, w.data());
        kernels::reorthogonalize(basis.data(), rows, n, w.data());
        const double b = std::sqrt(kernels::dot(w.data(), w.data(), n));

        const std::size_t m = j + 1;
        const bool exhausted = m == limit || b < 1e-12 * (1.0 + std::abs(a));
        if (exhausted || m >= next_check) {
            Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(alpha.data(), static_cast<Eigen::Index>(m));
            Eigen::VectorXd sub =
                Eigen::Map<const Eigen::VectorXd>(beta.data(), static_cast<Eigen::Index>(m - 1));
            tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
            const auto& theta = tri.eigenvalues();
            const auto& s = tri.eigenvectors();
            const Eigen::Index last = static_cast<Eigen::Index>(m - 1);
            const double residual_low = b * std::abs(s(last, 0));
            const double residual_high = b * std::abs(s(last, last));
            if (exhausted || (residual_low < kEigenTolerance && residual_high < kEigenTolerance))
                return {theta(0), theta(last)};
            next_check = m + std::max<std::size_t>(10, m / 2);
        }
        beta.push_back(b);
        for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / b;
    }
}

}  // namespace

std::vector<double> dense_spectrum(const Graph& g)
{
    const auto n = static_cast<Eigen::Index>(g.n);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t v = 0; v < g.n; ++v)
        for (std::uint32_t u : g.adjacency[v]) a(static_cast<Eigen::Index>(v), u) += 1.0;
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    const auto& values = solver.eigenvalues();
    return {values.data(), values.data() + values.size()};
}

SpectralReport spectral_report(const Graph& g, std::size_t k, Solver solver)
{
    if (g.n == 0) throw DomainError("spectral_report: empty graph");
    if (!g.is_regular(k)) throw DomainError("spectral_report: graph is not " + std::to_string(k) + "-regular");
    if (!g.is_symmetric()) throw DomainError("spectral_report: adjacency is not symmetric");
    if (!is_connected(g)) throw DomainError("spectral_report: graph is not connected");

    SpectralReport r;
    r.k = k;
    const double kd = static_cast<double>(k);
    r.bound = 2.0 * std::sqrt(kd - 1.0);
    r.lps_bound = 2.0 * std::sqrt(kd);
    r.bipartite = is_bipartite(g);

    if (solver == Solver::automatic) solver = g.n <= kDenseLimit ? Solver::dense : Solver::lanczos;
    if (solver == Solver::dense) {
        r.solver = "dense";
        std::vector<double> values = dense_spectrum(g);
        r.lambda1 = values.back();
        std::vector<double> magnitudes;
        for (double x : values) magnitudes.push_back(std::abs(x));
        std::sort(magnitudes.rbegin(), magnitudes.rend());
        r.lambda = magnitudes.size() > 1 ? magnitudes[1] : 0.0;

        // Drop the trivial eigenvalue k and, for a bipartite graph, -k.
        values.pop_back();
        if (r.bipartite && !values.empty()) values.erase(values.begin());
        for (double x : values) r.lambda_nontrivial = std::max(r.lambda_nontrivial, std::abs(x));
    } else {
        r.solver = "lanczos";
        std::vector<std::vector<double>> deflate;
        deflate.emplace_back(g.n, 1.0 / std::sqrt(static_cast<double>(g.n)));
        if (r.bipartite) {
            deflate.push_back(bipartition_sign(g));
            normalize(deflate.back());
        }
        const ExtremeRitz ritz = lanczos_extremes(g, deflate);
        r.lambda1 = kd;  // A 1 = k 1 exactly for a k-regular graph.
        r.lambda_nontrivial = g.n > deflate.size() ? std::max(std::abs(ritz.low), std::abs(ritz.high)) : 0.0;
        r.lambda = r.bipartite ? kd : r.lambda_nontrivial;
    }
    r.is_ramanujan = r.lambda <= r.bound + kVerdictTolerance;
    r.is_ramanujan_nontrivial = r.lambda_nontrivial <= r.bound + kVerdictTolerance;
    return r;
}

LpsGraph build_lps(Natural p, Natural q, Solver solver)
{
    const GroupKind kind = lps_branch(p, q);
    const ProjectiveGroup group(q, kind);
    LpsGraph out;
    out.graph = cayley_graph(group, generating_set(p, q, kind));
    out.metadata = {p, q, kind, out.graph.n, static_cast<std::size_t>(p + 1)};
    out.report = spectral_report(out.graph, out.metadata.degree, solver);
    return out;
}

}  // namespace ramanujan::lps
