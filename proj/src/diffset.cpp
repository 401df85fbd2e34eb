#include "triweb/diffset.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "triweb/error.hpp"

namespace triweb::diffset {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t N) {
    std::int64_t r = x % N;
    return r < 0 ? r + N : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t N) {
    std::int64_t r0 = mod(a, N), r1 = N, s0 = 1, s1 = 0;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1, s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw ValidationError("mod_inverse: not coprime");
    return mod(s0, N);
}

std::vector<std::int64_t> sorted_residues(std::int64_t N, const std::vector<std::int64_t>& D) {
    std::vector<std::int64_t> out;
    out.reserve(D.size());
    for (auto d : D) out.push_back(mod(d, N));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

DiffsetReport verify_planar_difference_set(std::int64_t N, const std::vector<std::int64_t>& D) {
    DiffsetReport rep;
    if (N < 3) return rep;
    std::vector<std::int64_t> hits(static_cast<std::size_t>(N), 0);
    for (auto d1 : D)
        for (auto d2 : D) {
            if (d1 == d2) continue;
            ++hits[static_cast<std::size_t>(mod(d1 - d2, N))];
        }
    rep.ok = true;
    for (std::int64_t r = 1; r < N; ++r)
        if (hits[static_cast<std::size_t>(r)] != 1) {
            rep.ok = false;
            rep.collisions.push_back({r, hits[static_cast<std::size_t>(r)]});
        }
    if (hits[0] != 0) { // repeated members of D
        rep.ok = false;
        rep.collisions.push_back({0, hits[0]});
    }
    return rep;
}

DifferenceSet standardize(std::int64_t N, std::int64_t q, const std::vector<std::int64_t>& D) {
    if (N != q * q + q + 1)
        throw ValidationError("standardize: N must equal q^2+q+1 (got N=" + std::to_string(N) +
                              ", q=" + std::to_string(q) + ")");
    if (static_cast<std::int64_t>(D.size()) != q + 1)
        throw ValidationError("standardize: |D| must be q+1");
    if (!verify_planar_difference_set(N, D).ok)
        throw ValidationError("standardize: input is not a planar difference set");
    std::int64_t c = 0;
    for (auto d : D) c = mod(c + d, N);
    const std::int64_t s0 = mod(-mod_inverse(q + 1, N) * c, N);
    DifferenceSet out{N, q, {}};
    for (auto d : D) out.D.push_back(mod(d + s0, N));
    std::sort(out.D.begin(), out.D.end());
    return out;
}

bool is_standard(std::int64_t N, std::int64_t p, const std::vector<std::int64_t>& D) {
    auto base = sorted_residues(N, D);
    std::vector<std::int64_t> mult;
    std::int64_t sum = 0;
    for (auto d : base) {
        mult.push_back(mod(p * d, N));
        sum = mod(sum + d, N);
    }
    std::sort(mult.begin(), mult.end());
    return mult == base && sum == 0;
}

std::optional<std::pair<std::int64_t, int>> prime_power_split(std::int64_t q) {
    if (q < 2) return std::nullopt;
    for (std::int64_t p = 2; p <= q; ++p) {
        if (q % p != 0) continue;
        // p is the smallest prime factor
        std::int64_t r = q;
        int m = 0;
        while (r % p == 0) {
            r /= p;
            ++m;
        }
        if (r == 1) return std::make_pair(p, m);
        return std::nullopt;
    }
    return std::nullopt;
}

DifferenceSet singer_difference_set(std::int64_t q, std::optional<gf::Poly> modulus) {
    auto split = prime_power_split(q);
    if (!split) throw ValidationError("singer_difference_set: q = " + std::to_string(q) + " is not a prime power");
    const auto [p, m] = *split;
    const std::int64_t N = q * q + q + 1;

    gf::GaloisField F(p, 3 * m, std::move(modulus)); // GF(q^3)
    const auto g = F.primitive_element();

    // Pi_1 = classes of g^i modulo the subfield's multiplicative group,
    // indexed by i mod N; trace zero is well defined per class.
    std::vector<std::int64_t> raw;
    auto x = F.one();
    for (std::int64_t i = 0; i < N; ++i) {
        if (F.is_zero(gf::trace_over_subfield(F, x))) raw.push_back(i);
        x = F.mul(x, g);
    }
    if (static_cast<std::int64_t>(raw.size()) != q + 1)
        throw Error("singer_difference_set: trace-zero class count " + std::to_string(raw.size()) +
                    " != q+1");
    auto out = standardize(N, q, raw);
    if (!is_standard(N, p, out.D)) throw Error("singer_difference_set: standardized set is not p-invariant");
    return out;
}

presentation::TrianglePresentation presentation_from_difference_set(std::int64_t N, std::int64_t q,
                                                                    const std::vector<std::int64_t>& D) {
    auto split = prime_power_split(q);
    if (!split) throw ValidationError("presentation_from_difference_set: q is not a prime power");
    if (!verify_planar_difference_set(N, D).ok)
        throw ValidationError("presentation_from_difference_set: invalid difference set");
    if (!is_standard(N, split->first, D))
        throw ValidationError("presentation_from_difference_set: difference set is not standard "
                              "(the triple set would violate cyclic invariance)");

    auto geom = geometry::plane_from_difference_set(N, D);
    std::vector<int> sigma(static_cast<std::size_t>(2 * N));
    for (std::int64_t mpt = 0; mpt < N; ++mpt) {
        sigma[static_cast<std::size_t>(mpt)] = static_cast<int>(N + mpt); // sigma(m) = m + D
        sigma[static_cast<std::size_t>(N + mpt)] = static_cast<int>(mpt);
    }

    std::vector<presentation::Triple> triples;
    for (std::int64_t mpt = 0; mpt < N; ++mpt)
        for (auto d : D) {
            int u = static_cast<int>(mpt);
            int v = static_cast<int>(mod(mpt + d, N));
            int w = static_cast<int>(mod(mpt + (q + 1) * d, N));
            triples.push_back({u, v, w});
        }
    std::vector<presentation::Triple> mirrored;
    for (const auto& t : triples)
        mirrored.push_back({sigma[static_cast<std::size_t>(t.w)], sigma[static_cast<std::size_t>(t.v)],
                            sigma[static_cast<std::size_t>(t.u)]});
    triples.insert(triples.end(), mirrored.begin(), mirrored.end());

    return presentation::build(std::move(geom), std::move(sigma), std::move(triples));
}

} // namespace triweb::diffset
