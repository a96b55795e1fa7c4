#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "ramanujan/kernels.hpp"

namespace k = ramanujan::kernels;

namespace {

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = dist(rng);
    return v;
}

struct Csr {
    std::vector<std::uint32_t> row_start{0};
    std::vector<std::uint32_t> column;
    std::vector<double> weight;
    k::CsrView view() const
    {
        return {row_start.size() - 1, row_start.data(), column.data(), weight.data()};
    }
};

Csr random_csr(std::mt19937_64& rng, std::size_t n)
{
    Csr m;
    for (std::size_t r = 0; r < n; ++r) {
        const std::size_t len = rng() % 12;
        for (std::size_t j = 0; j < len; ++j) {
            m.column.push_back(static_cast<std::uint32_t>(rng() % n));
            m.weight.push_back(static_cast<double>(1 + rng() % 3));
        }
        m.row_start.push_back(static_cast<std::uint32_t>(m.column.size()));
    }
    return m;
}

bool near(double a, double b) { return std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a) + std::abs(b)); }

}  // namespace

TEST_CASE("dispatch selection")
{
    CHECK((k::isa_name(k::active_isa()) == "avx2" || k::isa_name(k::active_isa()) == "scalar"));
    k::force_isa(k::Isa::scalar);
    CHECK(k::active_isa() == k::Isa::scalar);
    k::force_isa(std::nullopt);
    CHECK(k::active_isa() == (k::avx2_supported() ? k::Isa::avx2 : k::Isa::scalar));
}

TEST_CASE("avx2 kernels match the scalar reference")
{
    if (!k::avx2_supported()) {
        MESSAGE("AVX2 unavailable; equivalence skipped");
        return;
    }
    std::mt19937_64 rng(2024);
    for (std::size_t n = 0; n <= 67; ++n) {
        const auto x = random_vector(rng, n);
        const auto y = random_vector(rng, n);
        REQUIRE(near(k::scalar::dot(x.data(), y.data(), n), k::avx2::dot(x.data(), y.data(), n)));

        auto ys = y;
        auto yv = y;
        k::scalar::axpy(-0.75, x.data(), ys.data(), n);
        k::avx2::axpy(-0.75, x.data(), yv.data(), n);
        for (std::size_t i = 0; i < n; ++i) REQUIRE(near(ys[i], yv[i]));
    }
    for (std::size_t n : {1UL, 5UL, 64UL, 301UL}) {
        const Csr m = random_csr(rng, n);
        const auto x = random_vector(rng, n);
        std::vector<double> ys(n), yv(n);
        k::scalar::spmv(m.view(), x.data(), ys.data());
        k::avx2::spmv(m.view(), x.data(), yv.data());
        for (std::size_t i = 0; i < n; ++i) REQUIRE(near(ys[i], yv[i]));
    }
}

TEST_CASE("reorthogonalize removes basis components on both paths")
{
    std::mt19937_64 rng(5);
    const std::size_t n = 103;
    const std::size_t count = 9;
    // Orthonormal rows by Gram-Schmidt through the scalar reference.
    std::vector<double> basis;
    for (std::size_t j = 0; j < count; ++j) {
        auto v = random_vector(rng, n);
        k::scalar::reorthogonalize(basis.data(), j, n, v.data());
        const double norm = std::sqrt(k::scalar::dot(v.data(), v.data(), n));
        for (double& x : v) x /= norm;
        basis.insert(basis.end(), v.begin(), v.end());
    }
    const auto v0 = random_vector(rng, n);
    auto vs = v0;
    k::scalar::reorthogonalize(basis.data(), count, n, vs.data());
    for (std::size_t j = 0; j < count; ++j) CHECK(std::abs(k::scalar::dot(basis.data() + j * n, vs.data(), n)) < 1e-13);

    if (k::avx2_supported()) {
        auto vv = v0;
        k::avx2::reorthogonalize(basis.data(), count, n, vv.data());
        for (std::size_t i = 0; i < n; ++i) REQUIRE(near(vs[i], vv[i]));
    }
}
