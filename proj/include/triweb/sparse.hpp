#pragma once

// Exact sparse matrices over a prime field or the rationals, CSR layout.
// The multiplication and Kronecker kernels have OpenMP row-parallel paths;
// *_serial variants are the reference implementations the tests compare
// against. All results are independent of the thread count.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "triweb/error.hpp"

namespace triweb::sparsemat {

using Index = std::int64_t;

struct DensityStats {
    std::int64_t nnz = 0;
    std::int64_t total = 0;
    std::int64_t max_per_col = 0;
};

template <class F>
class SparseMatrix {
public:
    using Field = F;
    using Scalar = typename F::Elem;
    struct Triplet {
        Index row;
        Index col;
        Scalar value;
    };

    SparseMatrix(Index rows, Index cols, F field)
        : rows_(rows), cols_(cols), field_(std::move(field)), row_ptr_(static_cast<std::size_t>(rows) + 1, 0) {
        if (rows < 0 || cols < 0) throw ValidationError("SparseMatrix: negative dimension");
    }

    /// Duplicate (row, col) pairs are summed; exact zeros are dropped.
    static SparseMatrix from_triplets(Index rows, Index cols, F field, std::vector<Triplet> ts) {
        SparseMatrix m(rows, cols, std::move(field));
        for (const auto& t : ts) {
            if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
                throw ValidationError("SparseMatrix::from_triplets: index (" + std::to_string(t.row) + "," +
                                      std::to_string(t.col) + ") out of range for " + std::to_string(rows) + "x" +
                                      std::to_string(cols));
        }
        std::sort(ts.begin(), ts.end(), [](const Triplet& a, const Triplet& b) {
            return std::tie(a.row, a.col) < std::tie(b.row, b.col);
        });
        std::size_t i = 0;
        while (i < ts.size()) {
            std::size_t j = i + 1;
            Scalar acc = m.field_.canon(ts[i].value);
            while (j < ts.size() && ts[j].row == ts[i].row && ts[j].col == ts[i].col) {
                acc = m.field_.add(acc, m.field_.canon(ts[j].value));
                ++j;
            }
            if (!m.field_.is_zero(acc)) {
                m.cols_idx_.push_back(ts[i].col);
                m.values_.push_back(acc);
                ++m.row_ptr_[static_cast<std::size_t>(ts[i].row) + 1];
            }
            i = j;
        }
        for (std::size_t r = 0; r < static_cast<std::size_t>(rows); ++r) m.row_ptr_[r + 1] += m.row_ptr_[r];
        return m;
    }

    static SparseMatrix identity(Index n, F field) {
        SparseMatrix m(n, n, std::move(field));
        m.cols_idx_.resize(static_cast<std::size_t>(n));
        m.values_.assign(static_cast<std::size_t>(n), m.field_.one());
        for (Index i = 0; i < n; ++i) {
            m.cols_idx_[static_cast<std::size_t>(i)] = i;
            m.row_ptr_[static_cast<std::size_t>(i) + 1] = i + 1;
        }
        return m;
    }

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }
    const F& field() const { return field_; }
    std::int64_t nnz() const { return static_cast<std::int64_t>(values_.size()); }

    Index row_begin(Index r) const { return row_ptr_[static_cast<std::size_t>(r)]; }
    Index row_end(Index r) const { return row_ptr_[static_cast<std::size_t>(r) + 1]; }
    Index entry_col(Index k) const { return cols_idx_[static_cast<std::size_t>(k)]; }
    const Scalar& entry_value(Index k) const { return values_[static_cast<std::size_t>(k)]; }

    Scalar at(Index r, Index c) const {
        for (Index k = row_begin(r); k < row_end(r); ++k)
            if (entry_col(k) == c) return entry_value(k);
        return field_.zero();
    }

    bool operator==(const SparseMatrix& o) const {
        require_same_field(o, "==");
        return rows_ == o.rows_ && cols_ == o.cols_ && row_ptr_ == o.row_ptr_ && cols_idx_ == o.cols_idx_ &&
               values_ == o.values_;
    }
    bool operator!=(const SparseMatrix& o) const { return !(*this == o); }

    void require_same_field(const SparseMatrix& o, const char* op) const {
        if (!(field_ == o.field_)) throw ValidationError(std::string("SparseMatrix: field mismatch in ") + op);
    }

private:
    Index rows_;
    Index cols_;
    F field_;
    std::vector<Index> row_ptr_;
    std::vector<Index> cols_idx_;
    std::vector<Scalar> values_;

    template <class G>
    friend SparseMatrix<G> assemble_rows(Index rows, Index cols, G field,
                                         std::vector<std::vector<std::pair<Index, typename G::Elem>>>&& per_row);
};

template <class F>
SparseMatrix<F> assemble_rows(Index rows, Index cols, F field,
                              std::vector<std::vector<std::pair<Index, typename F::Elem>>>&& per_row) {
    SparseMatrix<F> m(rows, cols, std::move(field));
    std::size_t total = 0;
    for (const auto& r : per_row) total += r.size();
    m.cols_idx_.reserve(total);
    m.values_.reserve(total);
    for (Index r = 0; r < rows; ++r) {
        for (auto& [c, v] : per_row[static_cast<std::size_t>(r)]) {
            m.cols_idx_.push_back(c);
            m.values_.push_back(std::move(v));
        }
        m.row_ptr_[static_cast<std::size_t>(r) + 1] =
            m.row_ptr_[static_cast<std::size_t>(r)] + static_cast<Index>(per_row[static_cast<std::size_t>(r)].size());
    }
    return m;
}

namespace detail {

// Sorted-merge accumulator for one output row of a product.
template <class F>
std::vector<std::pair<Index, typename F::Elem>> product_row(const SparseMatrix<F>& a, const SparseMatrix<F>& b,
                                                            Index row) {
    const F& fld = a.field();
    std::vector<std::pair<Index, typename F::Elem>> acc;
    for (Index k = a.row_begin(row); k < a.row_end(row); ++k) {
        const Index mid = a.entry_col(k);
        const auto& av = a.entry_value(k);
        for (Index l = b.row_begin(mid); l < b.row_end(mid); ++l)
            acc.emplace_back(b.entry_col(l), fld.mul(av, b.entry_value(l)));
    }
    std::sort(acc.begin(), acc.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<std::pair<Index, typename F::Elem>> out;
    std::size_t i = 0;
    while (i < acc.size()) {
        auto val = acc[i].second;
        std::size_t j = i + 1;
        while (j < acc.size() && acc[j].first == acc[i].first) {
            val = fld.add(val, acc[j].second);
            ++j;
        }
        if (!fld.is_zero(val)) out.emplace_back(acc[i].first, std::move(val));
        i = j;
    }
    return out;
}

} // namespace detail

template <class F>
void require_mul_compatible(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
    a.require_same_field(b, "matmul");
    if (a.cols() != b.rows())
        throw ValidationError("matmul: dimension mismatch " + std::to_string(a.rows()) + "x" +
                              std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                              std::to_string(b.cols()));
}

/// Reference product; single-threaded by construction.
template <class F>
SparseMatrix<F> matmul_serial(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
    require_mul_compatible(a, b);
    std::vector<std::vector<std::pair<Index, typename F::Elem>>> per_row(static_cast<std::size_t>(a.rows()));
    for (Index r = 0; r < a.rows(); ++r) per_row[static_cast<std::size_t>(r)] = detail::product_row(a, b, r);
    return assemble_rows(a.rows(), b.cols(), a.field(), std::move(per_row));
}

/// Row-parallel product. Each output row is computed independently, so the
/// result is identical to matmul_serial for any thread count.
template <class F>
SparseMatrix<F> matmul(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
    require_mul_compatible(a, b);
    std::vector<std::vector<std::pair<Index, typename F::Elem>>> per_row(static_cast<std::size_t>(a.rows()));
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (a.rows() > 256)
#endif
    for (Index r = 0; r < a.rows(); ++r) per_row[static_cast<std::size_t>(r)] = detail::product_row(a, b, r);
    return assemble_rows(a.rows(), b.cols(), a.field(), std::move(per_row));
}

template <class F>
SparseMatrix<F> add(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
    a.require_same_field(b, "add");
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw ValidationError("add: shape mismatch");
    const F& fld = a.field();
    std::vector<std::vector<std::pair<Index, typename F::Elem>>> per_row(static_cast<std::size_t>(a.rows()));
    for (Index r = 0; r < a.rows(); ++r) {
        auto& out = per_row[static_cast<std::size_t>(r)];
        Index i = a.row_begin(r), j = b.row_begin(r);
        while (i < a.row_end(r) || j < b.row_end(r)) {
            if (j >= b.row_end(r) || (i < a.row_end(r) && a.entry_col(i) < b.entry_col(j))) {
                out.emplace_back(a.entry_col(i), a.entry_value(i));
                ++i;
            } else if (i >= a.row_end(r) || b.entry_col(j) < a.entry_col(i)) {
                out.emplace_back(b.entry_col(j), b.entry_value(j));
                ++j;
            } else {
                auto s = fld.add(a.entry_value(i), b.entry_value(j));
                if (!fld.is_zero(s)) out.emplace_back(a.entry_col(i), std::move(s));
                ++i;
                ++j;
            }
        }
    }
    return assemble_rows(a.rows(), a.cols(), fld, std::move(per_row));
}

template <class F>
SparseMatrix<F> scale(const typename F::Elem& c, const SparseMatrix<F>& a) {
    const F& fld = a.field();
    if (fld.is_zero(c)) return SparseMatrix<F>(a.rows(), a.cols(), fld);
    std::vector<typename SparseMatrix<F>::Triplet> ts;
    ts.reserve(static_cast<std::size_t>(a.nnz()));
    for (Index r = 0; r < a.rows(); ++r)
        for (Index k = a.row_begin(r); k < a.row_end(r); ++k)
            ts.push_back({r, a.entry_col(k), fld.mul(c, a.entry_value(k))});
    return SparseMatrix<F>::from_triplets(a.rows(), a.cols(), fld, std::move(ts));
}

template <class F>
SparseMatrix<F> negate(const SparseMatrix<F>& a) {
    return scale<F>(a.field().neg(a.field().one()), a);
}

template <class F>
SparseMatrix<F> transpose(const SparseMatrix<F>& a) {
    std::vector<typename SparseMatrix<F>::Triplet> ts;
    ts.reserve(static_cast<std::size_t>(a.nnz()));
    for (Index r = 0; r < a.rows(); ++r)
        for (Index k = a.row_begin(r); k < a.row_end(r); ++k) ts.push_back({a.entry_col(k), r, a.entry_value(k)});
    return SparseMatrix<F>::from_triplets(a.cols(), a.rows(), a.field(), std::move(ts));
}

/// Kronecker product with the row-major index convention: the entry of
/// kron(A, B) at (ia*B.rows + ib, ja*B.cols + jb) is A(ia,ja)*B(ib,jb).
/// This convention is the global contract for all tensor-product bases.
template <class F>
SparseMatrix<F> kron_serial(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
    a.require_same_field(b, "kron");
    const F& fld = a.field();
    std::vector<std::vector<std::pair<Index, typename F::Elem>>> per_row(
        static_cast<std::size_t>(a.rows() * b.rows()));
    for (Index ra = 0; ra < a.rows(); ++ra)
        for (Index rb = 0; rb < b.rows(); ++rb) {
            auto& out = per_row[static_cast<std::size_t>(ra * b.rows() + rb)];
            for (Index k = a.row_begin(ra); k < a.row_end(ra); ++k)
                for (Index l = b.row_begin(rb); l < b.row_end(rb); ++l)
                    out.emplace_back(a.entry_col(k) * b.cols() + b.entry_col(l),
                                     fld.mul(a.entry_value(k), b.entry_value(l)));
        }
    return assemble_rows(a.rows() * b.rows(), a.cols() * b.cols(), fld, std::move(per_row));
}

template <class F>
SparseMatrix<F> kron(const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
    a.require_same_field(b, "kron");
    const F& fld = a.field();
    const Index out_rows = a.rows() * b.rows();
    std::vector<std::vector<std::pair<Index, typename F::Elem>>> per_row(static_cast<std::size_t>(out_rows));
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (out_rows > 256)
#endif
    for (Index r = 0; r < out_rows; ++r) {
        const Index ra = r / b.rows();
        const Index rb = r % b.rows();
        auto& out = per_row[static_cast<std::size_t>(r)];
        for (Index k = a.row_begin(ra); k < a.row_end(ra); ++k)
            for (Index l = b.row_begin(rb); l < b.row_end(rb); ++l)
                out.emplace_back(a.entry_col(k) * b.cols() + b.entry_col(l),
                                 fld.mul(a.entry_value(k), b.entry_value(l)));
    }
    return assemble_rows(out_rows, a.cols() * b.cols(), fld, std::move(per_row));
}

template <class F>
DensityStats density_stats(const SparseMatrix<F>& a) {
    DensityStats s;
    s.nnz = a.nnz();
    s.total = a.rows() * a.cols();
    std::vector<std::int64_t> per_col(static_cast<std::size_t>(a.cols()), 0);
    for (Index r = 0; r < a.rows(); ++r)
        for (Index k = a.row_begin(r); k < a.row_end(r); ++k) ++per_col[static_cast<std::size_t>(a.entry_col(k))];
    for (auto c : per_col) s.max_per_col = std::max(s.max_per_col, c);
    return s;
}

template <class F>
std::vector<std::int64_t> column_nnz(const SparseMatrix<F>& a) {
    std::vector<std::int64_t> per_col(static_cast<std::size_t>(a.cols()), 0);
    for (Index r = 0; r < a.rows(); ++r)
        for (Index k = a.row_begin(r); k < a.row_end(r); ++k) ++per_col[static_cast<std::size_t>(a.entry_col(k))];
    return per_col;
}

/// First entry (in row-major order) where the two matrices differ.
template <class F>
std::optional<std::tuple<Index, Index, typename F::Elem, typename F::Elem>> first_difference(
    const SparseMatrix<F>& a, const SparseMatrix<F>& b) {
    a.require_same_field(b, "first_difference");
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ValidationError("first_difference: shape mismatch");
    const F& fld = a.field();
    for (Index r = 0; r < a.rows(); ++r) {
        Index i = a.row_begin(r), j = b.row_begin(r);
        while (i < a.row_end(r) || j < b.row_end(r)) {
            if (j >= b.row_end(r) || (i < a.row_end(r) && a.entry_col(i) < b.entry_col(j))) {
                return std::make_tuple(r, a.entry_col(i), a.entry_value(i), fld.zero());
            } else if (i >= a.row_end(r) || b.entry_col(j) < a.entry_col(i)) {
                return std::make_tuple(r, b.entry_col(j), fld.zero(), b.entry_value(j));
            } else {
                if (!(a.entry_value(i) == b.entry_value(j)))
                    return std::make_tuple(r, a.entry_col(i), a.entry_value(i), b.entry_value(j));
                ++i;
                ++j;
            }
        }
    }
    return std::nullopt;
}

/// Coordinate-list format: header "rows cols characteristic nnz", then one
/// "i j v" line per entry, 0-indexed, sorted by (i, j).
template <class F>
void write_coords(const SparseMatrix<F>& a, std::ostream& os) {
    os << a.rows() << " " << a.cols() << " " << a.field().characteristic() << " " << a.nnz() << "\n";
    for (Index r = 0; r < a.rows(); ++r)
        for (Index k = a.row_begin(r); k < a.row_end(r); ++k)
            os << r << " " << a.entry_col(k) << " " << F::to_string(a.entry_value(k)) << "\n";
}

template <class F>
std::string coords_string(const SparseMatrix<F>& a) {
    std::ostringstream os;
    write_coords(a, os);
    return os.str();
}

} // namespace triweb::sparsemat
