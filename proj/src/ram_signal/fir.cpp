#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/Dense>

#include "ramanujan/error.hpp"
#include "ramanujan/ram_signal.hpp"

namespace ramanujan::rs {

namespace {

using Dictionary = std::vector<std::vector<long>>;  // row-major N x N

struct Block {
    Natural q;
    std::size_t first_column;
    std::size_t width;
};

// Column blocks ordered by ascending divisor; block q holds the first phi(q)
// columns of B_q repeated out to length N.
Dictionary dictionary(std::size_t N, std::vector<Block>& blocks)
{
    Dictionary d(N, std::vector<long>(N, 0));
    std::size_t column = 0;
    for (Natural q : nt::divisors(N)) {
        const std::vector<long> row = ramanujan_sum_row(q);
        const std::size_t width = nt::totient(q);
        blocks.push_back({q, column, width});
        for (std::size_t k = 0; k < width; ++k, ++column)
            for (std::size_t j = 0; j < N; ++j) d[j][column] = row[(j + q - k % q) % q];
    }
    if (column != N) throw InternalError("dictionary is not square");
    return d;
}

// Coefficients for the real and imaginary parts of x, exact over Q.
std::vector<std::vector<mpq_class>> solve_exact(const Dictionary& d, const std::vector<Sample>& x)
{
    const std::size_t n = d.size();
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 2));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = d[i][j];
        a[i][n] = mpq_class(x[i].real());
        a[i][n + 1] = mpq_class(x[i].imag());
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw InternalError("Ramanujan dictionary is singular");
        std::swap(a[col], a[pivot]);
        const mpq_class inv = 1 / a[col][col];
        for (std::size_t j = col; j < n + 2; ++j) a[col][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            const mpq_class f = a[i][col];
            for (std::size_t j = col; j < n + 2; ++j)
                if (a[col][j] != 0) a[i][j] -= f * a[col][j];
        }
    }
    std::vector<std::vector<mpq_class>> coeffs(2, std::vector<mpq_class>(n));
    for (std::size_t i = 0; i < n; ++i) {
        coeffs[0][i] = a[i][n];
        coeffs[1][i] = a[i][n + 1];
    }
    return coeffs;
}

std::vector<std::vector<double>> solve_floating(const Dictionary& d, const std::vector<Sample>& x)
{
    const auto n = static_cast<Eigen::Index>(d.size());
    Eigen::MatrixXd a(n, n);
    Eigen::MatrixXd rhs(n, 2);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) a(i, j) = static_cast<double>(d[i][j]);
        rhs(i, 0) = x[i].real();
        rhs(i, 1) = x[i].imag();
    }
    const Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
    if (qr.rank() < n) throw InternalError("Ramanujan dictionary is singular");
    const Eigen::MatrixXd c = qr.solve(rhs);
    std::vector<std::vector<double>> coeffs(2, std::vector<double>(d.size()));
    for (Eigen::Index i = 0; i < n; ++i) {
        coeffs[0][i] = c(i, 0);
        coeffs[1][i] = c(i, 1);
    }
    return coeffs;
}

template <typename T>
std::vector<T> block_sum(const Dictionary& d, const std::vector<T>& c, const Block& b)
{
    std::vector<T> out(d.size(), T(0));
    for (std::size_t j = 0; j < d.size(); ++j)
        for (std::size_t k = b.first_column; k < b.first_column + b.width; ++k)
            if (c[k] != 0) out[j] += d[j][k] * c[k];
    return out;
}

double energy(const std::vector<Sample>& v)
{
    double e = 0;
    for (const Sample& s : v) e += std::norm(s);
    return e;
}

}  // namespace

std::vector<long> RamanujanBasis::column(std::size_t k, std::size_t length) const
{
    std::vector<long> out(length);
    for (std::size_t j = 0; j < length; ++j) out[j] = B[j % q][k];
    return out;
}

std::size_t exact_rank(const std::vector<std::vector<long>>& rows)
{
    if (rows.empty()) return 0;
    std::vector<std::vector<mpz_class>> a;
    for (const auto& r : rows) a.emplace_back(r.begin(), r.end());
    const std::size_t m = a.size();
    const std::size_t n = a[0].size();
    // Bareiss fraction-free elimination: every division below is exact.
    std::size_t rank = 0;
    mpz_class previous = 1;
    for (std::size_t col = 0; col < n && rank < m; ++col) {
        std::size_t pivot = rank;
        while (pivot < m && a[pivot][col] == 0) ++pivot;
        if (pivot == m) continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t i = rank + 1; i < m; ++i) {
            for (std::size_t j = col + 1; j < n; ++j) {
                a[i][j] = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), previous.get_mpz_t());
            }
            a[i][col] = 0;
        }
        previous = a[rank][col];
        ++rank;
    }
    return rank;
}

RamanujanBasis ramanujan_basis(Natural q)
{
    if (q == 0) throw DomainError("ramanujan_basis requires q >= 1");
    RamanujanBasis basis;
    basis.q = q;
    const std::vector<long> row = ramanujan_sum_row(q);
    basis.B.assign(q, std::vector<long>(q));
    for (Natural j = 0; j < q; ++j)
        for (Natural k = 0; k < q; ++k) basis.B[j][k] = row[(j + q - k) % q];
    basis.rank = exact_rank(basis.B);
    basis.dimension = nt::totient(q);
    if (basis.rank != basis.dimension) throw InternalError("rank of B_q differs from phi(q)");
    return basis;
}

bool Signal::is_real() const
{
    return std::all_of(samples.begin(), samples.end(), [](const Sample& s) { return s.imag() == 0; });
}

Signal Signal::real(const std::vector<double>& values)
{
    Signal s;
    for (double v : values) s.samples.emplace_back(v, 0.0);
    return s;
}

const FirComponent& FirDecomposition::at(Natural q) const
{
    for (const FirComponent& c : components)
        if (c.q == q) return c;
    throw DomainError("no component for q = " + std::to_string(q));
}

FirDecomposition fir_decompose(const Signal& x)
{
    const std::size_t N = x.size();
    if (N == 0) throw DomainError("signal must have at least one sample");
    for (const Sample& s : x.samples)
        if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) throw DomainError("signal samples must be finite");

    std::vector<Block> blocks;
    const Dictionary d = dictionary(N, blocks);
    FirDecomposition out;
    out.N = N;
    std::vector<Sample> total(N, Sample(0, 0));

    if (N <= kExactLimit) {
        out.exact = true;
        const auto c = solve_exact(d, x.samples);
        std::vector<mpq_class> re_total(N, 0), im_total(N, 0);
        for (const Block& b : blocks) {
            const std::vector<mpq_class> re = block_sum(d, c[0], b);
            const std::vector<mpq_class> im = block_sum(d, c[1], b);
            FirComponent comp{b.q, std::vector<Sample>(N), 0};
            for (std::size_t j = 0; j < N; ++j) {
                comp.samples[j] = Sample(re[j].get_d(), im[j].get_d());
                re_total[j] += re[j];
                im_total[j] += im[j];
            }
            comp.energy = energy(comp.samples);
            out.components.push_back(std::move(comp));
        }
        mpq_class worst = 0;
        for (std::size_t j = 0; j < N; ++j) {
            worst = std::max(worst, mpq_class(abs(re_total[j] - mpq_class(x.samples[j].real()))));
            worst = std::max(worst, mpq_class(abs(im_total[j] - mpq_class(x.samples[j].imag()))));
        }
        out.residual_norm = worst.get_d();
        return out;
    }

    const auto c = solve_floating(d, x.samples);
    for (const Block& b : blocks) {
        const std::vector<double> re = block_sum(d, c[0], b);
        const std::vector<double> im = block_sum(d, c[1], b);
        FirComponent comp{b.q, std::vector<Sample>(N), 0};
        for (std::size_t j = 0; j < N; ++j) {
            comp.samples[j] = Sample(re[j], im[j]);
            total[j] += comp.samples[j];
        }
        comp.energy = energy(comp.samples);
        out.components.push_back(std::move(comp));
    }
    for (std::size_t j = 0; j < N; ++j)
        out.residual_norm = std::max(out.residual_norm, std::abs(total[j] - x.samples[j]));
    return out;
}

std::vector<PeriodEstimate> estimate_periods(const Signal& x, std::size_t top_k)
{
    if (top_k == 0) throw DomainError("top_k must be >= 1");
    const FirDecomposition fir = fir_decompose(x);
    double total = 0;
    for (const FirComponent& c : fir.components) total += c.energy;
    std::vector<PeriodEstimate> ranked;
    for (const FirComponent& c : fir.components) ranked.push_back({c.q, total > 0 ? c.energy / total : 0.0});
    std::stable_sort(ranked.begin(), ranked.end(), [](const PeriodEstimate& a, const PeriodEstimate& b) {
        return a.energy_fraction > b.energy_fraction;
    });
    if (ranked.size() > top_k) ranked.resize(top_k);
    return ranked;
}

std::size_t minimal_period(const std::vector<long>& x)
{
    const std::size_t n = x.size();
    if (n == 0) throw DomainError("minimal_period of an empty sequence");
    for (Natural p : nt::divisors(n)) {
        bool periodic = true;
        for (std::size_t i = 0; i < n && periodic; ++i) periodic = x[i] == x[(i + p) % n];
        if (periodic) return p;
    }
    return n;
}

}  // namespace ramanujan::rs
