#pragma once

// Exact Gaussian elimination over a field, in two flavours:
//   * sparse rank computation with a Markowitz-style pivot rule (min-nnz row,
//     then min column count), used for the large incidence-like boundary
//     matrices of bar complexes and cdga slices;
//   * dense reduced row echelon form, used for the small quotient-space
//     computations behind graded module realizations.
//
// Field is a trait object (RationalField, PrimeField); elimination is exact.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "quadstab/arith.hpp"
#include "quadstab/matrix.hpp"

namespace quadstab {

template <class Field>
using SparseRows = std::vector<std::vector<std::pair<long, typename Field::Elem>>>;

template <class Field>
SparseRows<Field> to_field_rows(const Field& F, const ExactMatrix& m) {
    SparseRows<Field> out(static_cast<std::size_t>(m.rows()));
    for (long r = 0; r < m.rows(); ++r) {
        out[static_cast<std::size_t>(r)].reserve(m.row(r).size());
        for (const auto& [c, v] : m.row(r)) {
            auto fv = F.from_rational(v);
            if (!F.is_zero(fv)) out[static_cast<std::size_t>(r)].emplace_back(c, fv);
        }
    }
    return out;
}

// Destructive sparse rank. Rows must be sorted by column index.
template <class Field>
long sparse_rank(const Field& F, SparseRows<Field>& rows, long cols) {
    using Elem = typename Field::Elem;
    const long nrows = static_cast<long>(rows.size());
    std::vector<bool> active(static_cast<std::size_t>(nrows), true);
    std::vector<long> col_count(static_cast<std::size_t>(cols), 0);
    // col_rows[c]: row indices that may have an entry in column c (lazy).
    std::vector<std::vector<long>> col_rows(static_cast<std::size_t>(cols));
    for (long r = 0; r < nrows; ++r) {
        if (rows[static_cast<std::size_t>(r)].empty()) active[static_cast<std::size_t>(r)] = false;
        for (const auto& [c, v] : rows[static_cast<std::size_t>(r)]) {
            ++col_count[static_cast<std::size_t>(c)];
            col_rows[static_cast<std::size_t>(c)].push_back(r);
        }
    }

    auto find_entry = [&](long r, long c) -> Elem* {
        auto& row = rows[static_cast<std::size_t>(r)];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const auto& e, long col) { return e.first < col; });
        if (it != row.end() && it->first == c) return &it->second;
        return nullptr;
    };

    // out_row := out_row - factor * pivot_row, maintaining col_count.
    auto combine = [&](long out, const std::vector<std::pair<long, Elem>>& pivot_row, const Elem& factor) {
        auto& a = rows[static_cast<std::size_t>(out)];
        std::vector<std::pair<long, Elem>> res;
        res.reserve(a.size() + pivot_row.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < pivot_row.size()) {
            if (j == pivot_row.size() || (i < a.size() && a[i].first < pivot_row[j].first)) {
                res.push_back(a[i]);
                ++i;
            } else if (i == a.size() || pivot_row[j].first < a[i].first) {
                Elem v = F.neg(F.mul(factor, pivot_row[j].second));
                if (!F.is_zero(v)) {
                    res.emplace_back(pivot_row[j].first, v);
                    ++col_count[static_cast<std::size_t>(pivot_row[j].first)];
                    col_rows[static_cast<std::size_t>(pivot_row[j].first)].push_back(out);
                }
                ++j;
            } else {
                Elem v = F.sub(a[i].second, F.mul(factor, pivot_row[j].second));
                if (!F.is_zero(v)) res.emplace_back(a[i].first, v);
                else --col_count[static_cast<std::size_t>(a[i].first)];
                ++i;
                ++j;
            }
        }
        a = std::move(res);
    };

    long rank = 0;
    while (true) {
        // pivot: minimal-nnz active row, within it the minimal col_count column
        long best_row = -1;
        std::size_t best_len = 0;
        for (long r = 0; r < nrows; ++r) {
            if (!active[static_cast<std::size_t>(r)]) continue;
            std::size_t len = rows[static_cast<std::size_t>(r)].size();
            if (best_row < 0 || len < best_len) {
                best_row = r;
                best_len = len;
                if (len == 1) break;
            }
        }
        if (best_row < 0) break;

        long pivot_col = -1;
        long best_cc = 0;
        for (const auto& [c, v] : rows[static_cast<std::size_t>(best_row)]) {
            long cc = col_count[static_cast<std::size_t>(c)];
            if (pivot_col < 0 || cc < best_cc) {
                pivot_col = c;
                best_cc = cc;
            }
        }

        ++rank;
        active[static_cast<std::size_t>(best_row)] = false;
        std::vector<std::pair<long, Elem>> pivot_row = std::move(rows[static_cast<std::size_t>(best_row)]);
        rows[static_cast<std::size_t>(best_row)].clear();
        for (const auto& [c, v] : pivot_row) --col_count[static_cast<std::size_t>(c)];

        Elem pivot_val{};
        for (const auto& [c, v] : pivot_row)
            if (c == pivot_col) pivot_val = v;

        auto& cands = col_rows[static_cast<std::size_t>(pivot_col)];
        std::vector<long> todo;
        for (long r : cands) {
            if (!active[static_cast<std::size_t>(r)]) continue;
            if (find_entry(r, pivot_col) != nullptr) todo.push_back(r);
        }
        std::sort(todo.begin(), todo.end());
        todo.erase(std::unique(todo.begin(), todo.end()), todo.end());
        cands.clear();
        for (long r : todo) {
            Elem* e = find_entry(r, pivot_col);
            if (!e) continue;
            Elem factor = F.div(*e, pivot_val);
            combine(r, pivot_row, factor);
            if (rows[static_cast<std::size_t>(r)].empty()) active[static_cast<std::size_t>(r)] = false;
        }
    }
    return rank;
}

template <class Field>
long rank(const Field& F, const ExactMatrix& m) {
    auto rows = to_field_rows(F, m);
    return sparse_rank(F, rows, m.cols());
}

// Runtime-domain rank of an exact matrix. Over Z the rank is taken in the
// fraction field, which is what every caller here needs.
inline long rank(const ExactMatrix& m, const CoefficientDomain& domain) {
    if (domain.kind() == CoefficientDomain::Kind::prime_field) {
        PrimeField F(domain.characteristic());
        return rank(F, m);
    }
    RationalField F;
    return rank(F, m);
}

// ---- dense reduced row echelon form ----------------------------------------

template <class Field>
struct DenseMatrix {
    long rows = 0, cols = 0;
    std::vector<typename Field::Elem> a;

    DenseMatrix() = default;
    DenseMatrix(long r, long c, const Field& F)
        : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), F.zero()) {}

    typename Field::Elem& at(long r, long c) {
        return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)];
    }
    const typename Field::Elem& at(long r, long c) const {
        return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)];
    }
};

// In-place RREF; returns pivot columns in increasing order. After the call
// the first pivot_cols.size() rows are the reduced nonzero rows.
template <class Field>
std::vector<long> rref(const Field& F, DenseMatrix<Field>& m) {
    std::vector<long> pivots;
    long row = 0;
    for (long col = 0; col < m.cols && row < m.rows; ++col) {
        long sel = -1;
        for (long r = row; r < m.rows; ++r) {
            if (!F.is_zero(m.at(r, col))) {
                sel = r;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != row)
            for (long c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(row, c));
        auto inv = F.div(F.one(), m.at(row, col));
        for (long c = col; c < m.cols; ++c) m.at(row, c) = F.mul(m.at(row, c), inv);
        for (long r = 0; r < m.rows; ++r) {
            if (r == row || F.is_zero(m.at(r, col))) continue;
            auto f = m.at(r, col);
            for (long c = col; c < m.cols; ++c)
                m.at(r, c) = F.sub(m.at(r, c), F.mul(f, m.at(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Quotient of k^n by the span of a list of relation vectors. Keeps enough of
// the RREF to project arbitrary vectors onto the chosen basis (the non-pivot
// coordinates).
template <class Field>
class QuotientSpace {
public:
    QuotientSpace() = default;

    QuotientSpace(const Field& F, long ambient_dim, const std::vector<std::vector<typename Field::Elem>>& relations)
        : ambient_(ambient_dim) {
        DenseMatrix<Field> m(static_cast<long>(relations.size()), ambient_dim, F);
        for (long r = 0; r < m.rows; ++r)
            for (long c = 0; c < ambient_dim; ++c) m.at(r, c) = relations[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        auto pivots = rref(F, m);
        is_pivot_.assign(static_cast<std::size_t>(ambient_dim), false);
        pivot_row_.assign(static_cast<std::size_t>(ambient_dim), -1);
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            is_pivot_[static_cast<std::size_t>(pivots[i])] = true;
            pivot_row_[static_cast<std::size_t>(pivots[i])] = static_cast<long>(i);
        }
        for (long c = 0; c < ambient_dim; ++c)
            if (!is_pivot_[static_cast<std::size_t>(c)]) basis_cols_.push_back(c);
        rel_rref_ = DenseMatrix<Field>(static_cast<long>(pivots.size()), ambient_dim, F);
        for (long r = 0; r < rel_rref_.rows; ++r)
            for (long c = 0; c < ambient_dim; ++c) rel_rref_.at(r, c) = m.at(r, c);
    }

    long ambient_dim() const { return ambient_; }
    long dim() const { return static_cast<long>(basis_cols_.size()); }
    const std::vector<long>& basis_columns() const { return basis_cols_; }

    // Coordinates of the class of v in the non-pivot basis.
    std::vector<typename Field::Elem> reduce(const Field& F, const std::vector<typename Field::Elem>& v) const {
        std::vector<typename Field::Elem> w = v;
        for (long c = 0; c < ambient_; ++c) {
            if (!is_pivot_[static_cast<std::size_t>(c)] || F.is_zero(w[static_cast<std::size_t>(c)])) continue;
            long r = pivot_row_[static_cast<std::size_t>(c)];
            auto f = w[static_cast<std::size_t>(c)];
            for (long c2 = c; c2 < ambient_; ++c2)
                w[static_cast<std::size_t>(c2)] = F.sub(w[static_cast<std::size_t>(c2)], F.mul(f, rel_rref_.at(r, c2)));
        }
        std::vector<typename Field::Elem> out;
        out.reserve(basis_cols_.size());
        for (long c : basis_cols_) out.push_back(w[static_cast<std::size_t>(c)]);
        return out;
    }

private:
    long ambient_ = 0;
    std::vector<bool> is_pivot_;
    std::vector<long> pivot_row_;
    std::vector<long> basis_cols_;
    DenseMatrix<Field> rel_rref_;
};

} // namespace quadstab
