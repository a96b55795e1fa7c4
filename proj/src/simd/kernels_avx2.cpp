#include "ramanujan/kernels.hpp"

#if defined(__AVX2__) && defined(__FMA__)

#include <immintrin.h>

namespace ramanujan::kernels::avx2 {

namespace {

double horizontal_sum(__m256d v)
{
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d pair = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

}  // namespace

double dot(const double* x, const double* y, std::size_t n)
{
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
    }
    if (i + 4 <= n) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
        i += 4;
    }
    double sum = horizontal_sum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) sum += x[i] * y[i];
    return sum;
}

void axpy(double a, const double* x, double* y, std::size_t n)
{
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    for (; i < n; ++i) y[i] += a * x[i];
}

void spmv(const CsrView& m, const double* x, double* y)
{
    for (std::size_t r = 0; r < m.n; ++r) {
        std::uint32_t e = m.row_start[r];
        const std::uint32_t end = m.row_start[r + 1];
        __m256d acc = _mm256_setzero_pd();
        for (; e + 4 <= end; e += 4) {
            const __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(m.column + e));
            const __m256d gathered = _mm256_i32gather_pd(x, idx, 8);
            acc = _mm256_fmadd_pd(_mm256_loadu_pd(m.weight + e), gathered, acc);
        }
        double sum = horizontal_sum(acc);
        for (; e < end; ++e) sum += m.weight[e] * x[m.column[e]];
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

}  // namespace ramanujan::kernels::avx2

#else

// Non-x86 builds: the avx2 entry points alias the scalar kernels and
// avx2_supported() reports false, so dispatch never selects them.
namespace ramanujan::kernels::avx2 {

double dot(const double* x, const double* y, std::size_t n) { return scalar::dot(x, y, n); }
void axpy(double a, const double* x, double* y, std::size_t n) { scalar::axpy(a, x, y, n); }
void spmv(const CsrView& m, const double* x, double* y) { scalar::spmv(m, x, y); }
void reorthogonalize(const double* basis, std::size_t count, std::size_t n, double* v)
{
    scalar::reorthogonalize(basis, count, n, v);
}

}  // namespace ramanujan::kernels::avx2

#endif
