#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "triweb/gf.hpp"
#include "triweb/presentation.hpp"

namespace triweb::diffset {

/// Cyclic planar difference set: D in Z/N with N = q^2+q+1, |D| = q+1, and
/// every nonzero residue a unique difference of members. D kept sorted;
/// equality is set equality.
struct DifferenceSet {
    std::int64_t N = 0;
    std::int64_t q = 0;
    std::vector<std::int64_t> D;

    bool operator==(const DifferenceSet&) const = default;
};

struct DiffsetReport {
    bool ok = false;
    /// Residues hit zero times or more than once by the difference map.
    struct Collision {
        std::int64_t residue;
        std::int64_t count;
    };
    std::vector<Collision> collisions;
};

DiffsetReport verify_planar_difference_set(std::int64_t N, const std::vector<std::int64_t>& D);

/// The canonical zero-sum translate D + s0 with s0 = -(q+1)^{-1} * sum(D).
/// For q a prime power the result is invariant under multiplication by p.
DifferenceSet standardize(std::int64_t N, std::int64_t q, const std::vector<std::int64_t>& D);

/// True iff p*D = D as sets and sum(D) = 0 mod N.
bool is_standard(std::int64_t N, std::int64_t p, const std::vector<std::int64_t>& D);

/// Trace-zero construction: points of the plane over GF(q^3) are indexed by
/// exponent classes of a deterministic primitive element, and D collects the
/// classes of trace zero. Returned standardized.
DifferenceSet singer_difference_set(std::int64_t q, std::optional<gf::Poly> modulus = std::nullopt);

/// Splits a prime power as p^m; nullopt when q is not a prime power.
std::optional<std::pair<std::int64_t, int>> prime_power_split(std::int64_t q);

/// The order-q triangle presentation of a standard difference set:
/// T' = {(m, m+d, m+(q+1)d)} plus the sigma-mirrored line triples.
presentation::TrianglePresentation presentation_from_difference_set(std::int64_t N, std::int64_t q,
                                                                    const std::vector<std::int64_t>& D);

} // namespace triweb::diffset
