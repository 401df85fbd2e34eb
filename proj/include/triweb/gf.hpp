#pragma once

// Small Galois fields GF(p^k) as polynomial residues over F_p. Fields at the
// scale used here (at most a few thousand elements) need nothing beyond
// schoolbook polynomial arithmetic; selection of the modulus and of the
// primitive element is deterministic so that derived data is reproducible.

#include <cstdint>
#include <optional>
#include <vector>

#include "triweb/field.hpp"

namespace triweb::gf {

/// Polynomial over F_p, constant coefficient first. Trailing zeros trimmed.
using Poly = std::vector<std::int64_t>;

class GaloisField {
public:
    /// Element: coefficient vector of length degree(), canonical mod p.
    using Elem = std::vector<std::int64_t>;

    /// Modulus omitted: the lexicographically smallest irreducible monic
    /// polynomial of degree k (ordered by the base-p value of its
    /// non-leading coefficients, constant term least significant).
    GaloisField(std::int64_t p, int k, std::optional<Poly> modulus = std::nullopt);

    std::int64_t p() const { return p_; }
    int degree() const { return k_; }
    std::int64_t order() const { return order_; }
    const Poly& modulus() const { return modulus_; }

    Elem zero() const { return Elem(static_cast<std::size_t>(k_), 0); }
    Elem one() const;
    bool is_zero(const Elem& a) const;

    /// Bijection between elements and [0, p^k) via base-p digits.
    Elem from_code(std::int64_t code) const;
    std::int64_t code(const Elem& a) const;

    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem pow(const Elem& a, std::int64_t e) const;
    Elem inv(const Elem& a) const;

    std::int64_t multiplicative_order(const Elem& a) const;

    /// Smallest element (in code order) of multiplicative order p^k - 1.
    Elem primitive_element() const;

    bool in_subfield(const Elem& a, int subfield_degree) const;

private:
    std::int64_t p_;
    int k_;
    std::int64_t order_;
    Poly modulus_;
    Fp base_;
};

inline GaloisField gf_new(std::int64_t p, int k, std::optional<Poly> modulus = std::nullopt) {
    return GaloisField(p, k, std::move(modulus));
}

/// Trace down to the cubic subfield: for F = GF(q^3) with q = p^(k/3),
/// Tr(x) = x + x^q + x^(q^2), an F_q-linear map onto F_q.
GaloisField::Elem trace_over_subfield(const GaloisField& f, const GaloisField::Elem& x);

/// True iff the monic polynomial is irreducible over F_p (trial division by
/// all monic polynomials of degree <= deg/2).
bool poly_irreducible(std::int64_t p, const Poly& poly);

} // namespace triweb::gf
