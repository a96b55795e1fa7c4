#include "ramanujan/kernels.hpp"

namespace ramanujan::kernels::scalar {

double dot(const double* x, const double* y, std::size_t n)
{
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += x[i] * y[i];
    return sum;
}

void axpy(double a, const double* x, double* y, std::size_t n)
{
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void spmv(const CsrView& m, const double* x, double* y)
{
    for (std::size_t r = 0; r < m.n; ++r) {
        double sum = 0.0;
        for (std::uint32_t e = m.row_start[r]; e < m.row_start[r + 1]; ++e) sum += m.weight[e] * x[m.column[e]];
        y[r] = sum;
    }
}

void reorthogonalize(const double* basis, std::size_t count, std::size_t n, double* v)
{
    for (std::size_t j = 0; j < count; ++j) {
        const double* b = basis + j * n;
        axpy(-dot(b, v, n), b, v, n);
    }
}

}  // namespace ramanujan::kernels::scalar
