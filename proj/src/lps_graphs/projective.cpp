#include <string>

#include "ramanujan/lps_graphs.hpp"

namespace ramanujan::lps {

namespace {

Natural reduce(long long value, Natural q)
{
    const long long m = static_cast<long long>(q);
    const long long r = value % m;
    return static_cast<Natural>(r < 0 ? r + m : r);
}

void require_odd_prime_modulus(Natural q)
{
    if (q < 3 || !nt::is_prime(q)) throw DomainError("modulus " + std::to_string(q) + " is not an odd prime");
}

ProjMatrix scaled(const ProjMatrix& m, Natural s, Natural q)
{
    return {nt::mul_mod(m.a, s, q), nt::mul_mod(m.b, s, q), nt::mul_mod(m.c, s, q), nt::mul_mod(m.d, s, q), m.kind};
}

Natural first_nonzero(const ProjMatrix& m)
{
    if (m.a != 0) return m.a;
    if (m.b != 0) return m.b;
    if (m.c != 0) return m.c;
    return m.d;
}

}  // namespace

std::string_view group_kind_name(GroupKind kind) { return kind == GroupKind::PSL ? "PSL" : "PGL"; }

Natural determinant(const ProjMatrix& m, Natural q)
{
    return (nt::mul_mod(m.a, m.d, q) + q - nt::mul_mod(m.b, m.c, q)) % q;
}

ProjMatrix canonicalize(Natural a, Natural b, Natural c, Natural d, Natural q, GroupKind kind)
{
    ProjMatrix m{a % q, b % q, c % q, d % q, kind};
    const Natural det = determinant(m, q);
    if (det == 0) throw DomainError("singular matrix mod " + std::to_string(q));
    if (kind == GroupKind::PGL) return scaled(m, nt::mod_inverse(first_nonzero(m), q), q);

    if (!nt::legendre_is_qr(det, q))
        throw DomainError("determinant " + std::to_string(det) + " is not a square mod " + std::to_string(q));
    m = scaled(m, nt::mod_inverse(nt::sqrt_mod(det, q), q), q);
    if (first_nonzero(m) > (q - 1) / 2) m = scaled(m, q - 1, q);
    return m;
}

ProjMatrix canonicalize(const ProjMatrix& m, Natural q) { return canonicalize(m.a, m.b, m.c, m.d, q, m.kind); }

ProjMatrix multiply(const ProjMatrix& x, const ProjMatrix& y, Natural q)
{
    auto dot2 = [q](Natural p1, Natural p2, Natural p3, Natural p4) {
        return (nt::mul_mod(p1, p2, q) + nt::mul_mod(p3, p4, q)) % q;
    };
    return canonicalize(dot2(x.a, y.a, x.b, y.c), dot2(x.a, y.b, x.b, y.d), dot2(x.c, y.a, x.d, y.c),
                        dot2(x.c, y.b, x.d, y.d), q, x.kind);
}

ProjMatrix inverse(const ProjMatrix& m, Natural q)
{
    return canonicalize(m.d, (q - m.b) % q, (q - m.c) % q, m.a, q, m.kind);
}

std::vector<FourSquares> four_square_solutions(Natural p)
{
    if (!nt::is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    if (p % 4 != 1) throw DomainError(std::to_string(p) + " is not 1 mod 4");
    const long limit = static_cast<long>(nt::isqrt(p));
    const long target = static_cast<long>(p);
    const long even_limit = limit - (limit % 2);

    std::vector<FourSquares> out;
    for (long a0 = 1; a0 <= limit; a0 += 2)
        for (long a1 = -even_limit; a1 <= even_limit; a1 += 2)
            for (long a2 = -even_limit; a2 <= even_limit; a2 += 2)
                for (long a3 = -even_limit; a3 <= even_limit; a3 += 2)
                    if (a0 * a0 + a1 * a1 + a2 * a2 + a3 * a3 == target) out.push_back({a0, a1, a2, a3});
    if (out.size() != p + 1) throw InternalError("four_square_solutions: expected p+1 solutions");
    return out;
}

void require_lps_parameters(Natural p, Natural q)
{
    for (Natural x : {p, q}) {
        if (!nt::is_prime(x)) throw DomainError(std::to_string(x) + " is not prime");
        if (x % 4 != 1) throw DomainError(std::to_string(x) + " is not 1 mod 4");
    }
    if (p == q) throw DomainError("p and q must be distinct");
    if (q * q <= 4 * p) throw DomainError("q must exceed 2 sqrt(p)");
}

GroupKind lps_branch(Natural p, Natural q)
{
    require_lps_parameters(p, q);
    return nt::legendre_is_qr(p, q) ? GroupKind::PSL : GroupKind::PGL;
}

std::vector<ProjMatrix> generating_set(Natural p, Natural q) { return generating_set(p, q, lps_branch(p, q)); }

std::vector<ProjMatrix> generating_set(Natural p, Natural q, GroupKind kind)
{
    require_lps_parameters(p, q);
    if (kind == GroupKind::PSL && !nt::legendre_is_qr(p, q))
        throw DomainError("PSL generators need p to be a square mod q");
    const long long i = static_cast<long long>(nt::sqrt_mod(q - 1, q));

    std::vector<ProjMatrix> out;
    for (const FourSquares& s : four_square_solutions(p)) {
        const Natural a = reduce(s.a0 + i * s.a1, q);
        const Natural b = reduce(s.a2 + i * s.a3, q);
        const Natural c = reduce(-s.a2 + i * s.a3, q);
        const Natural d = reduce(s.a0 - i * s.a1, q);
        out.push_back(canonicalize(a, b, c, d, q, kind));
    }
    return out;
}

std::vector<ProjMatrix> enumerate_group(Natural q, GroupKind kind)
{
    require_odd_prime_modulus(q);
    std::vector<ProjMatrix> out;
    if (kind == GroupKind::PGL) {
        out.reserve(q * (q * q - 1));
        for (Natural c = 1; c < q; ++c)
            for (Natural d = 0; d < q; ++d) out.push_back({0, 1, c, d, kind});
        for (Natural b = 0; b < q; ++b)
            for (Natural c = 0; c < q; ++c)
                for (Natural d = 0; d < q; ++d)
                    if (d != nt::mul_mod(b, c, q)) out.push_back({1, b, c, d, kind});
        return out;
    }
    const Natural half = (q - 1) / 2;
    out.reserve(q * (q * q - 1) / 2);
    for (Natural b = 1; b <= half; ++b) {
        const Natural c = q - nt::mod_inverse(b, q);
        for (Natural d = 0; d < q; ++d) out.push_back({0, b, c, d, kind});
    }
    for (Natural a = 1; a <= half; ++a) {
        const Natural a_inv = nt::mod_inverse(a, q);
        for (Natural b = 0; b < q; ++b)
            for (Natural c = 0; c < q; ++c)
                out.push_back({a, b, c, nt::mul_mod((1 + nt::mul_mod(b, c, q)) % q, a_inv, q), kind});
    }
    return out;
}

ProjectiveGroup::ProjectiveGroup(Natural q, GroupKind kind) : q_(q), kind_(kind), elements_(enumerate_group(q, kind))
{
    index_.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(key(elements_[i]), i);
}

std::uint64_t ProjectiveGroup::key(const ProjMatrix& m) const { return ((m.a * q_ + m.b) * q_ + m.c) * q_ + m.d; }

std::size_t ProjectiveGroup::index_of(const ProjMatrix& m) const
{
    if (m.kind != kind_ || m.a >= q_ || m.b >= q_ || m.c >= q_ || m.d >= q_)
        throw DomainError("matrix is not an element of this group");
    const auto it = index_.find(key(m));
    if (it == index_.end()) throw DomainError("matrix is not a canonical element of this group");
    return it->second;
}

std::size_t ProjectiveGroup::multiply(std::size_t x, std::size_t y) const
{
    return index_of(lps::multiply(elements_[x], elements_[y], q_));
}

std::size_t ProjectiveGroup::inverse(std::size_t x) const { return index_of(lps::inverse(elements_[x], q_)); }

}  // namespace ramanujan::lps
