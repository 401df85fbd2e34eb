#pragma once

// Realization of the fiber functor attached to a triangle presentation: for
// each strand label a the space V_a spanned by Pi_a (V_0 and V_n are one
// dimensional), and sparse matrices for the merge, split, univalent and
// crossing generators. The relation checkers compare functor images of both
// sides of every asserted diagram relation as exact matrices and report a
// witness entry on failure.

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "triweb/geometry.hpp"
#include "triweb/presentation.hpp"
#include "triweb/report.hpp"
#include "triweb/sparse.hpp"

namespace triweb::webfun {

struct Hypotheses {
    bool satisfied = true;
    bool overridden = false;
    std::vector<std::string> violations;
};

/// Pass iff the matrices agree entry for entry; the witness is the first
/// differing entry in row-major order.
template <class F>
RelationReport compare_matrices(std::string relation, std::vector<int> labels,
                                const sparsemat::SparseMatrix<F>& lhs, const sparsemat::SparseMatrix<F>& rhs) {
    RelationReport rep;
    rep.relation = std::move(relation);
    rep.labels = std::move(labels);
    auto diff = sparsemat::first_difference(lhs, rhs);
    if (!diff) {
        rep.status = CheckStatus::Pass;
    } else {
        rep.status = CheckStatus::Fail;
        auto [r, c, lv, rv] = *diff;
        rep.witness = Witness{r, c, F::to_string(lv), F::to_string(rv)};
    }
    return rep;
}

enum class SpecialSide { A1, OneA }; // (a,1) or (1,a) ladder

template <class F>
class FunctorContext {
public:
    using Mat = sparsemat::SparseMatrix<F>;
    using Scalar = typename F::Elem;

    FunctorContext(presentation::TrianglePresentation tp, F field, bool override_hypotheses = false)
        : tp_(std::move(tp)), field_(std::move(field)) {
        const int n = tp_.n();
        if (field_.characteristic() == 0) {
            if (tp_.q() != 1)
                hyp_.violations.push_back("characteristic 0 requires a degenerate (q = 1) presentation, got q = " +
                                          std::to_string(tp_.q()));
        } else {
            const auto p = field_.characteristic();
            if (tp_.char_zero_only)
                hyp_.violations.push_back("presentation supports characteristic 0 only");
            if (p < n - 1)
                hyp_.violations.push_back("p >= n-1 violated (p = " + std::to_string(p) +
                                          ", n = " + std::to_string(n) + ")");
            if ((tp_.q() - 1) % p != 0)
                hyp_.violations.push_back("q = 1 mod p violated (q = " + std::to_string(tp_.q()) +
                                          ", p = " + std::to_string(p) + ")");
        }
        hyp_.satisfied = hyp_.violations.empty();
        hyp_.overridden = !hyp_.satisfied && override_hypotheses;
        if (!hyp_.satisfied && !override_hypotheses) {
            std::string msg = "functor hypotheses violated:";
            for (const auto& v : hyp_.violations) msg += " " + v + ";";
            throw HypothesisError(msg);
        }
        pos_.resize(static_cast<std::size_t>(tp_.size()));
        bases_.resize(static_cast<std::size_t>(n));
        for (int a = 1; a <= n - 1; ++a) {
            bases_[static_cast<std::size_t>(a)] = tp_.pi(a);
            const auto& b = bases_[static_cast<std::size_t>(a)];
            for (std::size_t i = 0; i < b.size(); ++i) pos_[static_cast<std::size_t>(b[i])] = static_cast<int>(i);
        }
    }

    const presentation::TrianglePresentation& tp() const { return tp_; }
    const F& field() const { return field_; }
    const Hypotheses& hypotheses() const { return hyp_; }
    int n() const { return tp_.n(); }

    /// dim V_a: |Pi_a| for 0 < a < n, and 1 for the unit (a = 0) and the
    /// determinant label (a = n).
    sparsemat::Index dim_label(int a) const {
        check_label(a);
        if (a == 0 || a == n()) return 1;
        return static_cast<sparsemat::Index>(bases_[static_cast<std::size_t>(a)].size());
    }

    const std::vector<int>& basis(int a) const {
        if (a < 1 || a > n() - 1) throw ValidationError("basis: label outside [1, n-1]");
        return bases_[static_cast<std::size_t>(a)];
    }

    int basis_index(int id) const { return pos_[static_cast<std::size_t>(id)]; }

    Mat identity_on(int a) const { return Mat::identity(dim_label(a), field_); }

    Mat dot_in() const { return Mat::identity(1, field_); }  // V_n -> unit
    Mat dot_out() const { return Mat::identity(1, field_); } // unit -> V_n

    /// V_a (x) V_b -> V_{a+b}; entry 1 at (w; u (x) v) iff (u, v, sigma(w))
    /// lies in T, and for a+b = n the pairing u (x) sigma(u) -> 1. Labels 0
    /// act as the monoidal unit. a+b > n has no label and is an error.
    Mat merge(int a, int b) const { return cached('m', a, b, [&] { return build_merge(a, b); }); }

    /// V_{a+b} -> V_a (x) V_b, the transpose condition of merge.
    Mat split(int a, int b) const { return cached('s', a, b, [&] { return build_split(a, b); }); }

    /// V_a (x) V_b -> V_b (x) V_a via the trivalent-ladder expansion
    /// sum_t (-1)^t [transfer b-t leftwards] o [transfer a-t rightwards].
    Mat crossing(int a, int b) const { return cached('c', a, b, [&] { return build_crossing(a, b); }); }

    // relation checkers -----------------------------------------------------

    RelationReport check_associativity(int a, int b, int c) const;
    RelationReport check_coassociativity(int a, int b, int c) const;
    RelationReport check_bigon(int a, int b) const;
    RelationReport check_bialgebra(int a, int c, int b, int d) const;
    RelationReport check_square_switch(int a, int b, int c, int d, int orientation) const;
    RelationReport check_special_square_switch(int a, SpecialSide side) const;
    RelationReport check_snake(int a) const;
    RelationReport check_univalent() const;
    RelationReport check_crossing_inverse(int a, int b) const;

    /// Sweeps every admissible label tuple (labels capped at max_labels when
    /// positive) across all relation families. Inadmissible tuples are
    /// skipped; the returned reports are all applicable.
    std::vector<RelationReport> run_full_suite(int max_labels = 0) const;

private:
    presentation::TrianglePresentation tp_;
    F field_;
    Hypotheses hyp_;
    std::vector<std::vector<int>> bases_;
    std::vector<int> pos_;

    mutable std::mutex cache_mutex_;
    mutable std::map<std::tuple<char, int, int>, std::shared_ptr<const Mat>> cache_;

    void check_label(int a) const {
        if (a < 0 || a > n())
            throw ValidationError("label " + std::to_string(a) + " outside [0, n]");
    }

    template <class Builder>
    Mat cached(char kind, int a, int b, Builder&& builder) const {
        const std::tuple<char, int, int> key{kind, a, b};
        {
            std::lock_guard<std::mutex> lock(cache_mutex_);
            auto it = cache_.find(key);
            if (it != cache_.end()) return *it->second;
        }
        Mat m = builder();
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto [it, inserted] = cache_.emplace(key, std::make_shared<Mat>(std::move(m)));
        return *it->second;
    }

    Mat build_merge(int a, int b) const {
        check_label(a);
        check_label(b);
        const int n = this->n();
        if (a + b > n)
            throw ValidationError("merge: no label " + std::to_string(a + b) + " (exceeds n = " + std::to_string(n) +
                                  ")");
        if (a == 0) return identity_on(b);
        if (b == 0) return identity_on(a);
        const auto dima = dim_label(a), dimb = dim_label(b);
        std::vector<typename Mat::Triplet> ts;
        if (a + b == n) {
            for (int u : basis(a)) {
                const int su = tp_.sigma[static_cast<std::size_t>(u)];
                ts.push_back({0, static_cast<sparsemat::Index>(basis_index(u)) * dimb + basis_index(su),
                              field_.one()});
            }
            return Mat::from_triplets(1, dima * dimb, field_, std::move(ts));
        }
        for (const auto& t : tp_.triples) {
            if (tp_.dim(t.u) != a || tp_.dim(t.v) != b) continue;
            const int w = tp_.sigma[static_cast<std::size_t>(t.w)];
            if (tp_.dim(w) != a + b) continue;
            ts.push_back({static_cast<sparsemat::Index>(basis_index(w)),
                          static_cast<sparsemat::Index>(basis_index(t.u)) * dimb + basis_index(t.v), field_.one()});
        }
        return Mat::from_triplets(dim_label(a + b), dima * dimb, field_, std::move(ts));
    }

    Mat build_split(int a, int b) const {
        check_label(a);
        check_label(b);
        const int n = this->n();
        if (a + b > n)
            throw ValidationError("split: no label " + std::to_string(a + b) + " (exceeds n = " + std::to_string(n) +
                                  ")");
        if (a == 0) return identity_on(b);
        if (b == 0) return identity_on(a);
        const auto dima = dim_label(a), dimb = dim_label(b);
        std::vector<typename Mat::Triplet> ts;
        if (a + b == n) {
            for (int u : basis(a)) {
                const int su = tp_.sigma[static_cast<std::size_t>(u)];
                ts.push_back({static_cast<sparsemat::Index>(basis_index(u)) * dimb + basis_index(su), 0,
                              field_.one()});
            }
            return Mat::from_triplets(dima * dimb, 1, field_, std::move(ts));
        }
        for (const auto& t : tp_.triples) {
            if (tp_.dim(t.u) != a || tp_.dim(t.v) != b) continue;
            const int u = tp_.sigma[static_cast<std::size_t>(t.w)];
            if (tp_.dim(u) != a + b) continue;
            ts.push_back({static_cast<sparsemat::Index>(basis_index(t.u)) * dimb + basis_index(t.v),
                          static_cast<sparsemat::Index>(basis_index(u)), field_.one()});
        }
        return Mat::from_triplets(dima * dimb, dim_label(a + b), field_, std::move(ts));
    }

    bool xfer_right_ok(int x, int y, int k) const {
        return k >= 0 && x - k >= 0 && x <= n() && y >= 0 && y + k <= n();
    }
    bool xfer_left_ok(int x, int y, int k) const { return k >= 0 && y - k >= 0 && y <= n() && x >= 0 && x + k <= n(); }

    /// V_x (x) V_y -> V_{x-k} (x) V_{y+k}: split k off the left strand and
    /// merge it into the right one.
    Mat xfer_right(int x, int y, int k) const {
        if (!xfer_right_ok(x, y, k)) throw ValidationError("xfer_right: inadmissible labels");
        auto bottom = sparsemat::kron(split(x - k, k), identity_on(y));
        auto top = sparsemat::kron(identity_on(x - k), merge(k, y));
        return sparsemat::matmul(top, bottom);
    }

    /// V_x (x) V_y -> V_{x+k} (x) V_{y-k}: mirror image of xfer_right.
    Mat xfer_left(int x, int y, int k) const {
        if (!xfer_left_ok(x, y, k)) throw ValidationError("xfer_left: inadmissible labels");
        auto bottom = sparsemat::kron(identity_on(x), split(k, y - k));
        auto top = sparsemat::kron(merge(x, k), identity_on(y - k));
        return sparsemat::matmul(top, bottom);
    }

    Mat build_crossing(int a, int b) const {
        check_label(a);
        check_label(b);
        const int n = this->n();
        Mat acc(dim_label(b) * dim_label(a), dim_label(a) * dim_label(b), field_);
        const int t_lo = std::max(0, a + b - n);
        const int t_hi = std::min(a, b);
        for (int t = t_lo; t <= t_hi; ++t) {
            auto term = sparsemat::matmul(xfer_left(t, a + b - t, b - t), xfer_right(a, b, a - t));
            acc = sparsemat::add(acc, t % 2 == 0 ? term : sparsemat::negate(term));
        }
        return acc;
    }

    Scalar binom_scalar(std::int64_t x, int t) const {
        return field_.from_bigint(geometry::generalized_binomial(geometry::Int(x), t));
    }

    RelationReport compare(std::string relation, std::vector<int> labels, const Mat& lhs, const Mat& rhs) const {
        return compare_matrices<F>(std::move(relation), std::move(labels), lhs, rhs);
    }

    static RelationReport not_applicable(std::string relation, std::vector<int> labels) {
        RelationReport rep;
        rep.relation = std::move(relation);
        rep.labels = std::move(labels);
        rep.status = CheckStatus::NotApplicable;
        return rep;
    }
};

template <class F>
RelationReport FunctorContext<F>::check_associativity(int a, int b, int c) const {
    if (!(a >= 1 && b >= 1 && c >= 1 && a + b + c <= n()))
        return not_applicable("associativity", {a, b, c});
    auto lhs = sparsemat::matmul(merge(a + b, c), sparsemat::kron(merge(a, b), identity_on(c)));
    auto rhs = sparsemat::matmul(merge(a, b + c), sparsemat::kron(identity_on(a), merge(b, c)));
    return compare("associativity", {a, b, c}, lhs, rhs);
}

template <class F>
RelationReport FunctorContext<F>::check_coassociativity(int a, int b, int c) const {
    if (!(a >= 1 && b >= 1 && c >= 1 && a + b + c <= n()))
        return not_applicable("coassociativity", {a, b, c});
    auto lhs = sparsemat::matmul(sparsemat::kron(split(a, b), identity_on(c)), split(a + b, c));
    auto rhs = sparsemat::matmul(sparsemat::kron(identity_on(a), split(b, c)), split(a, b + c));
    return compare("coassociativity", {a, b, c}, lhs, rhs);
}

template <class F>
RelationReport FunctorContext<F>::check_bigon(int a, int b) const {
    if (!(a >= 1 && b >= 1 && a + b <= n())) return not_applicable("bigon", {a, b});
    auto lhs = sparsemat::matmul(merge(a, b), split(a, b));
    auto rhs = sparsemat::scale(binom_scalar(a + b, a), identity_on(a + b));
    return compare("bigon", {a, b}, lhs, rhs);
}

template <class F>
RelationReport FunctorContext<F>::check_bialgebra(int a, int c, int b, int d) const {
    if (!(a >= 1 && b >= 1 && c >= 1 && d >= 1 && a + c == b + d && a + c <= n()))
        return not_applicable("bialgebra", {a, c, b, d});
    auto lhs = sparsemat::matmul(split(b, d), merge(a, c));
    Mat rhs(dim_label(b) * dim_label(d), dim_label(a) * dim_label(c), field_);
    for (int s = std::max(0, b - a); s <= std::min(b, c); ++s) {
        // bottom: a -> (b-s, a-b+s), c -> (s, c-s); the middle two strands
        // cross; tops merge to b and d
        auto bottom = sparsemat::kron(split(b - s, a - b + s), split(s, c - s));
        auto mid = sparsemat::kron(sparsemat::kron(identity_on(b - s), crossing(a - b + s, s)), identity_on(c - s));
        auto top = sparsemat::kron(merge(b - s, s), merge(a - b + s, c - s));
        rhs = sparsemat::add(rhs, sparsemat::matmul(top, sparsemat::matmul(mid, bottom)));
    }
    return compare("bialgebra", {a, c, b, d}, lhs, rhs);
}

template <class F>
RelationReport FunctorContext<F>::check_square_switch(int a, int b, int c, int d, int orientation) const {
    const std::string name = orientation == 1 ? "square_switch_1" : "square_switch_2";
    if (orientation != 1 && orientation != 2) throw ValidationError("square switch orientation must be 1 or 2");
    auto in_range = [&](int x) { return x >= 0 && x <= n(); };
    if (!(in_range(a) && in_range(b) && in_range(c) && in_range(d)))
        return not_applicable(name, {a, b, c, d});

    if (orientation == 1) {
        if (!(in_range(a - d) && in_range(b + d) && in_range(a - d + c) && in_range(b + d - c)))
            return not_applicable(name, {a, b, c, d});
        auto lhs = sparsemat::matmul(xfer_left(a - d, b + d, c), xfer_right(a, b, d));
        Mat rhs(dim_label(a - d + c) * dim_label(b + d - c), dim_label(a) * dim_label(b), field_);
        for (int t = 0; t <= std::min(c, d); ++t) {
            if (!(in_range(a + c - t) && in_range(b - c + t))) continue; // absent term
            auto term = sparsemat::matmul(xfer_right(a + c - t, b - c + t, d - t), xfer_left(a, b, c - t));
            rhs = sparsemat::add(rhs, sparsemat::scale(binom_scalar(a - b + c - d, t), term));
        }
        return compare(name, {a, b, c, d}, lhs, rhs);
    }

    if (!(in_range(a + c) && in_range(b - c) && in_range(a + c - d) && in_range(b - c + d)))
        return not_applicable(name, {a, b, c, d});
    auto lhs = sparsemat::matmul(xfer_right(a + c, b - c, d), xfer_left(a, b, c));
    Mat rhs(dim_label(a + c - d) * dim_label(b - c + d), dim_label(a) * dim_label(b), field_);
    for (int t = 0; t <= std::min(c, d); ++t) {
        if (!(in_range(a - d + t) && in_range(b + d - t))) continue;
        auto term = sparsemat::matmul(xfer_left(a - d + t, b + d - t, c - t), xfer_right(a, b, d - t));
        rhs = sparsemat::add(rhs, sparsemat::scale(binom_scalar(b - a + d - c, t), term));
    }
    return compare(name, {a, b, c, d}, lhs, rhs);
}

template <class F>
RelationReport FunctorContext<F>::check_special_square_switch(int a, SpecialSide side) const {
    const std::string name = side == SpecialSide::A1 ? "special_square_switch_a1" : "special_square_switch_1a";
    if (!(a >= 1 && a <= n())) return not_applicable(name, {a});
    Mat lhs = side == SpecialSide::A1 ? sparsemat::matmul(xfer_left(a - 1, 2, 1), xfer_right(a, 1, 1))
                                      : sparsemat::matmul(xfer_right(2, a - 1, 1), xfer_left(1, a, 1));
    const auto dim_pair =
        side == SpecialSide::A1 ? dim_label(a) * dim_label(1) : dim_label(1) * dim_label(a);
    Mat rhs = sparsemat::scale(binom_scalar(a - 1, 1), Mat::identity(dim_pair, field_));
    if (a + 1 <= n()) {
        // the merge-through-(a+1) term; at the corner a = n it vanishes
        auto through = side == SpecialSide::A1 ? sparsemat::matmul(split(a, 1), merge(a, 1))
                                               : sparsemat::matmul(split(1, a), merge(1, a));
        rhs = sparsemat::add(rhs, through);
    }
    return compare(name, {a}, lhs, rhs);
}

template <class F>
RelationReport FunctorContext<F>::check_snake(int a) const {
    if (!(a >= 1 && a <= n() - 1)) return not_applicable("snake", {a});
    const int n = this->n();
    auto id = identity_on(a);
    auto z1 = sparsemat::matmul(sparsemat::kron(merge(a, n - a), id), sparsemat::kron(id, split(n - a, a)));
    auto rep1 = compare("snake", {a}, z1, id);
    if (!rep1.pass()) return rep1;
    auto z2 = sparsemat::matmul(sparsemat::kron(id, merge(n - a, a)), sparsemat::kron(split(a, n - a), id));
    return compare("snake", {a}, z2, id);
}

template <class F>
RelationReport FunctorContext<F>::check_univalent() const {
    auto one = Mat::identity(1, field_);
    auto rep = compare("univalent", {}, sparsemat::matmul(dot_in(), dot_out()), one);
    if (!rep.pass()) return rep;
    return compare("univalent", {}, sparsemat::matmul(dot_out(), dot_in()), one);
}

template <class F>
RelationReport FunctorContext<F>::check_crossing_inverse(int a, int b) const {
    if (!(a >= 0 && a <= n() && b >= 0 && b <= n())) return not_applicable("crossing_inverse", {a, b});
    auto lhs = sparsemat::matmul(crossing(b, a), crossing(a, b));
    return compare("crossing_inverse", {a, b}, lhs, Mat::identity(dim_label(a) * dim_label(b), field_));
}

template <class F>
std::vector<RelationReport> FunctorContext<F>::run_full_suite(int max_labels) const {
    const int n = this->n();
    const int L = max_labels > 0 ? std::min(n, max_labels) : n;
    std::vector<RelationReport> out;
    auto push = [&](RelationReport r) {
        if (r.applicable()) out.push_back(std::move(r));
    };
    for (int a = 1; a <= L; ++a)
        for (int b = 1; b <= L; ++b)
            for (int c = 1; c <= L; ++c)
                if (a + b + c <= n) {
                    push(check_associativity(a, b, c));
                    push(check_coassociativity(a, b, c));
                }
    for (int a = 1; a <= L; ++a)
        for (int b = 1; b <= L; ++b)
            if (a + b <= n) push(check_bigon(a, b));
    for (int a = 1; a <= L; ++a)
        for (int c = 1; c <= L; ++c)
            for (int b = 1; b <= L; ++b) {
                const int d = a + c - b;
                if (d >= 1 && d <= L && a + c <= n) push(check_bialgebra(a, c, b, d));
            }
    for (int a = 0; a <= L; ++a)
        for (int b = 0; b <= L; ++b)
            for (int c = 0; c <= L; ++c)
                for (int d = 0; d <= L; ++d) {
                    push(check_square_switch(a, b, c, d, 1));
                    push(check_square_switch(a, b, c, d, 2));
                }
    for (int a = 1; a <= L; ++a) {
        push(check_special_square_switch(a, SpecialSide::A1));
        push(check_special_square_switch(a, SpecialSide::OneA));
    }
    for (int a = 1; a <= std::min(L, n - 1); ++a) push(check_snake(a));
    push(check_univalent());
    for (int a = 0; a <= L; ++a)
        for (int b = 0; b <= L; ++b) push(check_crossing_inverse(a, b));
    return out;
}

template <class F>
bool all_pass(const std::vector<RelationReport>& reports) {
    for (const auto& r : reports)
        if (!r.pass()) return false;
    return true;
}

template <class F>
FunctorContext<F> make_context(presentation::TrianglePresentation tp, F field, bool override_hypotheses = false) {
    return FunctorContext<F>(std::move(tp), std::move(field), override_hypotheses);
}

} // namespace triweb::webfun
