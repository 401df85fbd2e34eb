#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "triweb/field.hpp"

namespace triweb::geometry {

using Int = boost::multiprecision::cpp_int;

/// Gaussian binomial [n choose k]_q at an integer q >= 1, exact.
/// Out-of-range k (k < 0 or k > n) returns 0 by convention.
Int q_binomial(int n, int k, std::int64_t q);

/// Ordinary binomial with possibly negative upper argument:
/// x(x-1)...(x-t+1)/t!, exact.
Int generalized_binomial(Int x, int t);

/// Number of subspaces of algebraic dimension k in a geometry of order q,
/// algebraic dimension n. Requires 0 <= k <= n.
Int count_subspaces(int n, int k, std::int64_t q);

/// Number of dimension-k subspaces containing a fixed dimension-m subspace.
/// Requires 0 <= m <= k <= n.
Int count_containing(int n, int k, int m, std::int64_t q);

/// Abstract incidence geometry: graded elements with a symmetric incidence
/// relation between elements of distinct dimensions (containment in the
/// concrete models). Immutable after construction.
struct IncidenceGeometry {
    struct Element {
        int id;
        int dim;
        std::string name;
        bool operator==(const Element&) const = default;
    };

    std::int64_t q = 1; // order (1 for the degenerate powerset model)
    int n = 3;          // algebraic dimension; element dims lie in [1, n-1]
    std::vector<Element> elements;

    bool incident(int u, int v) const { return incidence_[idx(u, v)]; }
    int dim(int id) const { return elements[static_cast<std::size_t>(id)].dim; }
    const std::string& name(int id) const { return elements[static_cast<std::size_t>(id)].name; }
    int size() const { return static_cast<int>(elements.size()); }
    std::vector<int> of_dim(int k) const;

    void set_incident(int u, int v);
    void init_incidence() { incidence_.assign(elements.size() * elements.size(), false); }
    std::vector<std::pair<int, int>> incidence_pairs() const; // u < v, sorted

    bool operator==(const IncidenceGeometry&) const = default;

private:
    std::size_t idx(int u, int v) const {
        return static_cast<std::size_t>(u) * elements.size() + static_cast<std::size_t>(v);
    }
    std::vector<bool> incidence_;
};

/// Projective plane of a cyclic planar difference set: points are Z/N, lines
/// are the translates s + D, and m is incident with s + D iff m - s lies in D.
/// Point m has id m; line s + D has id N + s.
IncidenceGeometry plane_from_difference_set(std::int64_t N, const std::vector<std::int64_t>& D);

/// Masks of the nonempty proper subsets of {0..N-1}, sorted by (size, mask).
std::vector<std::uint32_t> powerset_masks(int N);

/// Degenerate (order 1) geometry: nonempty proper subsets of an N-set with
/// inclusion as incidence. Requires N >= 3.
IncidenceGeometry powerset_geometry(int N);

std::string subset_name(std::uint32_t mask);

struct PlaneAxiomReport {
    struct Axiom {
        std::string name;
        bool pass;
        std::string witness; // empty on pass
    };
    std::vector<Axiom> axioms;
    bool all_pass = true;
};

/// Veblen-Young style checks for rank-3 geometries: unique joining line,
/// lines meet in at most one point, every line has >= 3 points, three
/// non-collinear points exist. Degenerate (q = 1) input requires
/// allow_degenerate; non-plane input raises "unsupported rank".
PlaneAxiomReport verify_plane_axioms(const IncidenceGeometry& g, bool allow_degenerate = false);

} // namespace triweb::geometry
