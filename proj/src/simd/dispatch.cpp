#include <atomic>

#include "ramanujan/error.hpp"
#include "ramanujan/kernels.hpp"

namespace ramanujan::kernels {

namespace {

struct Table {
    double (*dot)(const double*, const double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);
    void (*spmv)(const CsrView&, const double*, double*);
    void (*reorthogonalize)(const double*, std::size_t, std::size_t, double*);
};

constexpr Table scalar_table{scalar::dot, scalar::axpy, scalar::spmv, scalar::reorthogonalize};
constexpr Table avx2_table{avx2::dot, avx2::axpy, avx2::spmv, avx2::reorthogonalize};

Isa detected_isa() { return avx2_supported() ? Isa::avx2 : Isa::scalar; }

std::atomic<Isa>& selected()
{
    static std::atomic<Isa> isa{detected_isa()};
    return isa;
}

const Table& table() { return selected().load(std::memory_order_relaxed) == Isa::avx2 ? avx2_table : scalar_table; }

}  // namespace

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool avx2_supported()
{
#if defined(__x86_64__) || defined(__i386__)
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Isa active_isa() { return selected().load(std::memory_order_relaxed); }

void force_isa(std::optional<Isa> isa)
{
    const Isa target = isa.value_or(detected_isa());
    if (target == Isa::avx2 && !avx2_supported()) throw DomainError("force_isa: CPU lacks AVX2/FMA");
    selected().store(target, std::memory_order_relaxed);
}

double dot(const double* x, const double* y, std::size_t n) { return table().dot(x, y, n); }
void axpy(double a, const double* x, double* y, std::size_t n) { table().axpy(a, x, y, n); }
void spmv(const CsrView& m, const double* x, double* y) { table().spmv(m, x, y); }
void reorthogonalize(const double* basis, std::size_t count, std::size_t n, double* v)
{
    table().reorthogonalize(basis, count, n, v);
}

}  // namespace ramanujan::kernels
