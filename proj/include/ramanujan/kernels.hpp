#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace ramanujan::kernels {

/// Compressed sparse rows; `weight` carries edge multiplicity.
struct CsrView {
    std::size_t n = 0;
    const std::uint32_t* row_start = nullptr;  // n + 1 offsets
    const std::uint32_t* column = nullptr;
    const double* weight = nullptr;
};

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// True when the CPU reports both AVX2 and FMA.
bool avx2_supported();

/// The instruction set used by the dispatching entry points below.
Isa active_isa();

/// Pins dispatch to `isa` (nullopt restores detection). Requesting avx2 on a
/// CPU without it throws DomainError.
void force_isa(std::optional<Isa> isa);

double dot(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);  // y += a x
void spmv(const CsrView& m, const double* x, double* y);          // y = M x
/// Removes from v its components along the `count` orthonormal rows of
/// `basis` (row-major, stride n), one row at a time.
void reorthogonalize(const double* basis, std::size_t count, std::size_t n, double* v);

namespace scalar {
double dot(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void spmv(const CsrView& m, const double* x, double* y);
void reorthogonalize(const double* basis, std::size_t count, std::size_t n, double* v);
}  // namespace scalar

namespace avx2 {
double dot(const double* x, const double* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void spmv(const CsrView& m, const double* x, double* y);
void reorthogonalize(const double* basis, std::size_t count, std::size_t n, double* v);
}  // namespace avx2

}  // namespace ramanujan::kernels
