#include "triweb/geometry.hpp"

#include <algorithm>
#include <bit>

#include "triweb/error.hpp"

namespace triweb::geometry {

Int q_binomial(int n, int k, std::int64_t q) {
    if (q < 1) throw ValidationError("q_binomial: order q must be >= 1");
    if (k < 0 || k > n) return 0;
    if (q == 1) return generalized_binomial(Int(n), k);
    // [m]_q = (q^m - 1)/(q - 1); the quotient of the factorial products is
    // exact because the result is an integer.
    auto bracket = [&](int m) -> Int {
        return (boost::multiprecision::pow(Int(q), static_cast<unsigned>(m)) - 1) / (q - 1);
    };
    Int num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= bracket(n - i);
        den *= bracket(k - i);
    }
    return num / den;
}

Int generalized_binomial(Int x, int t) {
    if (t < 0) throw ValidationError("generalized_binomial: lower argument must be >= 0");
    Int num = 1;
    for (int i = 0; i < t; ++i) num *= x - i;
    Int den = 1;
    for (int i = 2; i <= t; ++i) den *= i;
    return num / den;
}

Int count_subspaces(int n, int k, std::int64_t q) {
    if (!(0 <= k && k <= n)) throw ValidationError("count_subspaces: need 0 <= k <= n");
    return q_binomial(n, k, q);
}

Int count_containing(int n, int k, int m, std::int64_t q) {
    if (!(0 <= m && m <= k && k <= n)) throw ValidationError("count_containing: need 0 <= m <= k <= n");
    return q_binomial(n - m, k - m, q);
}

std::vector<int> IncidenceGeometry::of_dim(int k) const {
    std::vector<int> out;
    for (const auto& e : elements)
        if (e.dim == k) out.push_back(e.id);
    return out;
}

void IncidenceGeometry::set_incident(int u, int v) {
    if (dim(u) == dim(v)) throw ValidationError("incidence must relate elements of distinct dimensions");
    incidence_[idx(u, v)] = true;
    incidence_[idx(v, u)] = true;
}

std::vector<std::pair<int, int>> IncidenceGeometry::incidence_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < size(); ++u)
        for (int v = u + 1; v < size(); ++v)
            if (incident(u, v)) out.emplace_back(u, v);
    return out;
}

IncidenceGeometry plane_from_difference_set(std::int64_t N, const std::vector<std::int64_t>& D) {
    {
        std::vector<int> hits(static_cast<std::size_t>(N), 0);
        for (auto d1 : D)
            for (auto d2 : D)
                if (d1 != d2) ++hits[static_cast<std::size_t>(((d1 - d2) % N + N) % N)];
        for (std::int64_t r = 1; r < N; ++r)
            if (hits[static_cast<std::size_t>(r)] != 1)
                throw ValidationError("plane_from_difference_set: not a planar difference set (residue " +
                                      std::to_string(r) + " hit " + std::to_string(hits[static_cast<std::size_t>(r)]) +
                                      " times)");
    }
    IncidenceGeometry g;
    g.n = 3;
    g.q = static_cast<std::int64_t>(D.size()) - 1;
    std::vector<bool> in_d(static_cast<std::size_t>(N), false);
    for (auto d : D) {
        std::int64_t r = ((d % N) + N) % N;
        in_d[static_cast<std::size_t>(r)] = true;
    }
    for (std::int64_t m = 0; m < N; ++m)
        g.elements.push_back({static_cast<int>(m), 1, std::to_string(m)});
    for (std::int64_t s = 0; s < N; ++s)
        g.elements.push_back({static_cast<int>(N + s), 2, "D+" + std::to_string(s)});
    g.init_incidence();
    for (std::int64_t m = 0; m < N; ++m)
        for (std::int64_t s = 0; s < N; ++s)
            if (in_d[static_cast<std::size_t>(((m - s) % N + N) % N)])
                g.set_incident(static_cast<int>(m), static_cast<int>(N + s));
    return g;
}

std::vector<std::uint32_t> powerset_masks(int N) {
    std::vector<std::uint32_t> masks;
    const std::uint32_t full = (1u << N) - 1;
    for (std::uint32_t m = 1; m < full; ++m) masks.push_back(m);
    std::sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return masks;
}

std::string subset_name(std::uint32_t mask) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < 32; ++i)
        if (mask & (1u << i)) {
            if (!first) s += ",";
            s += std::to_string(i);
            first = false;
        }
    return s + "}";
}

IncidenceGeometry powerset_geometry(int N) {
    if (N < 3) throw ValidationError("powerset_geometry: ground-set size must be >= 3");
    IncidenceGeometry g;
    g.q = 1;
    g.n = N;
    auto masks = powerset_masks(N);
    for (std::size_t i = 0; i < masks.size(); ++i)
        g.elements.push_back({static_cast<int>(i), std::popcount(masks[i]), subset_name(masks[i])});
    g.init_incidence();
    for (std::size_t i = 0; i < masks.size(); ++i)
        for (std::size_t j = 0; j < masks.size(); ++j) {
            if (std::popcount(masks[i]) >= std::popcount(masks[j])) continue;
            if ((masks[i] & masks[j]) == masks[i]) g.set_incident(static_cast<int>(i), static_cast<int>(j));
        }
    return g;
}

PlaneAxiomReport verify_plane_axioms(const IncidenceGeometry& g, bool allow_degenerate) {
    for (const auto& e : g.elements)
        if (e.dim != 1 && e.dim != 2)
            throw ValidationError("verify_plane_axioms: unsupported rank (element of dimension " +
                                  std::to_string(e.dim) + ")");
    if (g.q == 1 && !allow_degenerate)
        throw ValidationError("verify_plane_axioms: degenerate geometry requires allow_degenerate");

    auto points = g.of_dim(1);
    auto lines = g.of_dim(2);
    PlaneAxiomReport rep;
    auto add = [&](std::string name, bool pass, std::string witness) {
        rep.all_pass = rep.all_pass && pass;
        rep.axioms.push_back({std::move(name), pass, pass ? "" : std::move(witness)});
    };

    {
        bool pass = true;
        std::string w;
        for (std::size_t i = 0; i < points.size() && pass; ++i)
            for (std::size_t j = i + 1; j < points.size() && pass; ++j) {
                int count = 0;
                for (int l : lines)
                    if (g.incident(points[i], l) && g.incident(points[j], l)) ++count;
                if (count != 1) {
                    pass = false;
                    w = "points (" + g.name(points[i]) + ", " + g.name(points[j]) + ") lie on " +
                        std::to_string(count) + " common lines";
                }
            }
        add("unique line through two distinct points", pass, std::move(w));
    }
    {
        bool pass = true;
        std::string w;
        for (std::size_t i = 0; i < lines.size() && pass; ++i)
            for (std::size_t j = i + 1; j < lines.size() && pass; ++j) {
                int count = 0;
                for (int p : points)
                    if (g.incident(p, lines[i]) && g.incident(p, lines[j])) ++count;
                if (count > 1) {
                    pass = false;
                    w = "lines (" + g.name(lines[i]) + ", " + g.name(lines[j]) + ") share " + std::to_string(count) +
                        " points";
                }
            }
        add("two distinct lines meet in at most one point", pass, std::move(w));
    }
    {
        bool pass = true;
        std::string w;
        for (int l : lines) {
            int count = 0;
            for (int p : points)
                if (g.incident(p, l)) ++count;
            if (count < 3) {
                pass = false;
                w = "line " + g.name(l) + " has only " + std::to_string(count) + " points";
                break;
            }
        }
        add("every line has at least 3 points", pass, std::move(w));
    }
    {
        bool found = false;
        for (std::size_t i = 0; i < points.size() && !found; ++i)
            for (std::size_t j = i + 1; j < points.size() && !found; ++j)
                for (std::size_t k = j + 1; k < points.size() && !found; ++k) {
                    bool collinear = false;
                    for (int l : lines)
                        if (g.incident(points[i], l) && g.incident(points[j], l) && g.incident(points[k], l))
                            collinear = true;
                    if (!collinear) found = true;
                }
        add("three non-collinear points exist", found, "all point triples are collinear");
    }
    return rep;
}

} // namespace triweb::geometry
