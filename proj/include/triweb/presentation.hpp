#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "triweb/geometry.hpp"

namespace triweb::presentation {

struct Triple {
    int u, v, w;
    auto operator<=>(const Triple&) const = default;
};

/// A triangle presentation: a graded element set with involution sigma, an
/// incidence relation, and an indexed set of ordered triples. Construction
/// and axiom verification are separate so that deliberately broken
/// presentations remain constructible for negative tests.
class TrianglePresentation {
public:
    geometry::IncidenceGeometry geom;
    std::vector<int> sigma;
    std::vector<Triple> triples; // sorted, unique
    bool char_zero_only = false;

    int n() const { return geom.n; }
    std::int64_t q() const { return geom.q; }
    int size() const { return geom.size(); }
    int dim(int id) const { return geom.dim(id); }
    const std::string& name(int id) const { return geom.name(id); }
    bool incident(int u, int v) const { return geom.incident(u, v); }
    std::vector<int> pi(int k) const { return geom.of_dim(k); }

    bool has_triple(int u, int v, int w) const;
    /// All w with (u, v, w) in T (a multimap until condition 4 is verified).
    std::span<const Triple> with_first_two(int u, int v) const;
    std::span<const Triple> with_first(int u) const;
    /// All (u, v) with (u, v, w) in T.
    const std::vector<std::pair<int, int>>& with_third(int w) const;

    void rebuild_indexes();

    bool operator==(const TrianglePresentation& o) const {
        return geom == o.geom && sigma == o.sigma && triples == o.triples && char_zero_only == o.char_zero_only;
    }

private:
    std::vector<std::vector<std::pair<int, int>>> by_third_;
};

/// Indexes the structure; does not verify the axioms. Throws if sigma is not
/// a dimension-swapping involution or ids are out of range. Duplicate triples
/// are dropped with a warning.
TrianglePresentation build(geometry::IncidenceGeometry geom, std::vector<int> sigma, std::vector<Triple> triples,
                           bool char_zero_only = false, std::vector<std::string>* warnings = nullptr);

struct AxiomReport {
    struct Condition {
        int number;
        bool pass;
        std::string witness; // empty on pass
    };
    std::vector<Condition> conditions;
    bool all_pass = true;
    bool pass(int number) const;
};

AxiomReport verify_axioms(const TrianglePresentation& tp);

struct SixVariants {
    bool c6, c6_prime, c6_double_prime;
};

/// The equivalence of condition 6 with 6' and 6'' holds only given
/// conditions 1-5; refuses (throws) when those fail.
SixVariants verify_condition_6_variants(const TrianglePresentation& tp);

/// Reconstructs point-line incidence from the Pi_1 triples: the line
/// sigma(u) is the set of points occurring immediately after u in a triple.
/// point ids are 0..n_points-1, line ids n_points..2*n_points-1.
/// Throws, naming the offending line, if some line does not get exactly q+1
/// points or the reconstructed plane fails the plane axioms.
std::vector<std::pair<int, int>> lines_from_triples(int n_points, const std::vector<int>& sigma,
                                                    const std::vector<Triple>& point_triples, std::int64_t q);

/// The exotic order-3 presentation known under label 15.1: 13 points,
/// 13 lines, 104 triples.
TrianglePresentation builtin_exotic_15_1();

/// Degenerate presentation on the powerset of an N-set (N >= 3): sigma is
/// complementation and the triples are the ordered partitions of the ground
/// set into three nonempty blocks, plus their mirrors. Supports the functor
/// in characteristic 0 only.
TrianglePresentation degenerate(int N);

nlohmann::ordered_json export_json(const TrianglePresentation& tp);
TrianglePresentation import_json(const nlohmann::json& j, std::vector<std::string>* warnings = nullptr);

} // namespace triweb::presentation
