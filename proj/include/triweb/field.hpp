#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "triweb/error.hpp"

namespace triweb::gf {

using BigInt = boost::multiprecision::cpp_int;

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// Prime field F_p. Elements are canonical residues in [0, p).
class Fp {
public:
    using Elem = std::int64_t;

    explicit Fp(std::int64_t p) : p_(p) {
        if (!is_prime(p)) throw ValidationError("Fp: characteristic " + std::to_string(p) + " is not prime");
    }

    std::int64_t characteristic() const { return p_; }

    Elem reduce(std::int64_t x) const {
        Elem r = x % p_;
        return r < 0 ? r + p_ : r;
    }
    Elem from_int(std::int64_t x) const { return reduce(x); }
    Elem from_bigint(const BigInt& x) const {
        BigInt r = x % p_;
        if (r < 0) r += p_;
        return static_cast<Elem>(r);
    }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(Elem a) const { return a == 0; }
    Elem canon(Elem a) const { return reduce(a); }

    Elem add(Elem a, Elem b) const { return (a + b) % p_; }
    Elem sub(Elem a, Elem b) const { return reduce(a - b); }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }

    Elem inv(Elem a) const {
        if (a % p_ == 0) throw ValidationError("Fp: non-invertible element 0 mod " + std::to_string(p_));
        // extended Euclid on (a, p)
        std::int64_t r0 = reduce(a), r1 = p_, s0 = 1, s1 = 0;
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            std::int64_t r2 = r0 - q * r1;
            std::int64_t s2 = s0 - q * s1;
            r0 = r1; r1 = r2;
            s0 = s1; s1 = s2;
        }
        return reduce(s0);
    }

    static std::string to_string(Elem a) { return std::to_string(a); }

    bool operator==(const Fp&) const = default;

private:
    std::int64_t p_;
};

/// Exact rational scalars; the characteristic-0 field used by degenerate functors.
class Rationals {
public:
    using Elem = boost::multiprecision::cpp_rational;

    std::int64_t characteristic() const { return 0; }

    Elem reduce(std::int64_t x) const { return Elem(x); }
    Elem from_int(std::int64_t x) const { return Elem(x); }
    Elem from_bigint(const BigInt& x) const { return Elem(x); }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem canon(Elem a) const { return a; } // cpp_rational is always reduced

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }

    Elem inv(const Elem& a) const {
        if (a == 0) throw ValidationError("Rationals: non-invertible element 0");
        return 1 / a;
    }

    static std::string to_string(const Elem& a) { return a.str(); }

    bool operator==(const Rationals&) const { return true; }
};

} // namespace triweb::gf
