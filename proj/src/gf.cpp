#include "triweb/gf.hpp"

#include <algorithm>

namespace triweb::gf {

namespace {

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; } // -1 for zero

Poly poly_mod(const Fp& fp, Poly a, const Poly& m) {
    trim(a);
    while (deg(a) >= deg(m)) {
        // m is monic, so the quotient digit is just the leading coefficient
        std::int64_t c = a.back();
        int shift = deg(a) - deg(m);
        for (int i = 0; i <= deg(m); ++i)
            a[static_cast<std::size_t>(i + shift)] =
                fp.sub(a[static_cast<std::size_t>(i + shift)], fp.mul(c, m[static_cast<std::size_t>(i)]));
        trim(a);
    }
    return a;
}

Poly poly_mul_mod(const Fp& fp, const Poly& a, const Poly& b, const Poly& m) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            prod[i + j] = fp.add(prod[i + j], fp.mul(a[i], b[j]));
    }
    return poly_mod(fp, std::move(prod), m);
}

Poly nth_monic(std::int64_t p, int degree, std::int64_t code) {
    Poly poly(static_cast<std::size_t>(degree) + 1, 0);
    poly[static_cast<std::size_t>(degree)] = 1;
    for (int i = 0; i < degree; ++i) {
        poly[static_cast<std::size_t>(i)] = code % p;
        code /= p;
    }
    return poly;
}

std::int64_t ipow(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> fs;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) fs.push_back(n);
    return fs;
}

} // namespace

bool poly_irreducible(std::int64_t p, const Poly& poly) {
    Fp fp(p);
    int d = deg(poly);
    if (d <= 0) return false;
    if (d == 1) return true;
    for (int dd = 1; dd <= d / 2; ++dd) {
        for (std::int64_t code = 0; code < ipow(p, dd); ++code) {
            Poly divisor = nth_monic(p, dd, code);
            if (poly_mod(fp, poly, divisor).empty()) return false;
        }
    }
    return true;
}

GaloisField::GaloisField(std::int64_t p, int k, std::optional<Poly> modulus)
    : p_(p), k_(k), order_(ipow(p, k)), base_(p) {
    if (k < 1) throw ValidationError("GaloisField: extension degree must be >= 1");
    if (modulus) {
        Poly m = *modulus;
        trim(m);
        if (deg(m) != k || m.back() != 1)
            throw ValidationError("GaloisField: modulus must be monic of degree " + std::to_string(k));
        for (auto& c : m) c = base_.reduce(c);
        if (!poly_irreducible(p, m))
            throw ValidationError("GaloisField: modulus is reducible over F_" + std::to_string(p));
        modulus_ = std::move(m);
    } else {
        for (std::int64_t code = 0;; ++code) {
            Poly cand = nth_monic(p, k, code);
            if (poly_irreducible(p, cand)) {
                modulus_ = std::move(cand);
                break;
            }
        }
    }
}

GaloisField::Elem GaloisField::one() const {
    Elem e = zero();
    e[0] = 1;
    return e;
}

bool GaloisField::is_zero(const Elem& a) const {
    return std::all_of(a.begin(), a.end(), [](std::int64_t c) { return c == 0; });
}

GaloisField::Elem GaloisField::from_code(std::int64_t code) const {
    Elem e = zero();
    for (int i = 0; i < k_; ++i) {
        e[static_cast<std::size_t>(i)] = code % p_;
        code /= p_;
    }
    return e;
}

std::int64_t GaloisField::code(const Elem& a) const {
    std::int64_t c = 0;
    for (int i = k_ - 1; i >= 0; --i) c = c * p_ + a[static_cast<std::size_t>(i)];
    return c;
}

GaloisField::Elem GaloisField::add(const Elem& a, const Elem& b) const {
    Elem e = zero();
    for (int i = 0; i < k_; ++i)
        e[static_cast<std::size_t>(i)] = base_.add(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]);
    return e;
}

GaloisField::Elem GaloisField::sub(const Elem& a, const Elem& b) const {
    Elem e = zero();
    for (int i = 0; i < k_; ++i)
        e[static_cast<std::size_t>(i)] = base_.sub(a[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]);
    return e;
}

GaloisField::Elem GaloisField::neg(const Elem& a) const { return sub(zero(), a); }

GaloisField::Elem GaloisField::mul(const Elem& a, const Elem& b) const {
    Poly r = poly_mul_mod(base_, a, b, modulus_);
    r.resize(static_cast<std::size_t>(k_), 0);
    return r;
}

GaloisField::Elem GaloisField::pow(const Elem& a, std::int64_t e) const {
    if (e < 0) return pow(inv(a), -e);
    Elem acc = one(), base = a;
    while (e > 0) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

GaloisField::Elem GaloisField::inv(const Elem& a) const {
    if (is_zero(a)) throw ValidationError("GaloisField: non-invertible element 0");
    return pow(a, order_ - 2);
}

std::int64_t GaloisField::multiplicative_order(const Elem& a) const {
    if (is_zero(a)) throw ValidationError("GaloisField: order of 0 undefined");
    std::int64_t n = order_ - 1;
    std::int64_t ord = n;
    for (std::int64_t r : prime_factors(n))
        while (ord % r == 0 && is_zero(sub(pow(a, ord / r), one()))) ord /= r;
    return ord;
}

GaloisField::Elem GaloisField::primitive_element() const {
    for (std::int64_t c = 1; c < order_; ++c) {
        Elem cand = from_code(c);
        if (multiplicative_order(cand) == order_ - 1) return cand;
    }
    throw Error("GaloisField: no primitive element found"); // unreachable
}

bool GaloisField::in_subfield(const Elem& a, int subfield_degree) const {
    // fixed points of x -> x^(p^m)
    return pow(a, ipow(p_, subfield_degree)) == a;
}

GaloisField::Elem trace_over_subfield(const GaloisField& f, const GaloisField::Elem& x) {
    if (f.degree() % 3 != 0)
        throw ValidationError("trace_over_subfield: field degree must be divisible by 3");
    const std::int64_t q = [&] {
        std::int64_t r = 1;
        for (int i = 0; i < f.degree() / 3; ++i) r *= f.p();
        return r;
    }();
    auto t = f.add(x, f.add(f.pow(x, q), f.pow(x, q * q)));
    if (!f.in_subfield(t, f.degree() / 3)) throw Error("trace_over_subfield: trace left the subfield");
    return t;
}

} // namespace triweb::gf
