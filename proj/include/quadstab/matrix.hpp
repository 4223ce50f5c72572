#pragma once

// Sparse exact matrices with rational entries. Rows are kept sorted by
// column index; a dense initializer is provided for tests and small inputs.

#include <algorithm>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "quadstab/arith.hpp"

namespace quadstab {

class ExactMatrix {
public:
    using Entry = std::pair<long, mpq_class>; // (column, value), value != 0

    ExactMatrix() : rows_(0), cols_(0) {}
    ExactMatrix(long rows, long cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows)) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("ExactMatrix: negative dimension");
    }

    static ExactMatrix identity(long n) {
        ExactMatrix m(n, n);
        for (long i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    static ExactMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows) {
        long r = static_cast<long>(rows.size());
        long c = r ? static_cast<long>(rows.begin()->size()) : 0;
        ExactMatrix m(r, c);
        long i = 0;
        for (const auto& row : rows) {
            if (static_cast<long>(row.size()) != c)
                throw std::invalid_argument("ExactMatrix::from_rows: ragged rows");
            long j = 0;
            for (long v : row) {
                if (v != 0) m.set(i, j, v);
                ++j;
            }
            ++i;
        }
        return m;
    }

    long rows() const { return rows_; }
    long cols() const { return cols_; }

    const std::vector<Entry>& row(long r) const { return data_[static_cast<std::size_t>(r)]; }

    mpq_class get(long r, long c) const {
        const auto& row = data_[static_cast<std::size_t>(r)];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const Entry& e, long col) { return e.first < col; });
        if (it != row.end() && it->first == c) return it->second;
        return mpq_class(0);
    }

    void set(long r, long c, const mpq_class& v) {
        check_index(r, c);
        auto& row = data_[static_cast<std::size_t>(r)];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const Entry& e, long col) { return e.first < col; });
        if (it != row.end() && it->first == c) {
            if (sgn(v) == 0) row.erase(it);
            else it->second = v;
        } else if (sgn(v) != 0) {
            row.insert(it, Entry(c, v));
        }
    }

    void add_to(long r, long c, const mpq_class& v) {
        if (sgn(v) == 0) return;
        check_index(r, c);
        auto& row = data_[static_cast<std::size_t>(r)];
        auto it = std::lower_bound(row.begin(), row.end(), c,
                                   [](const Entry& e, long col) { return e.first < col; });
        if (it != row.end() && it->first == c) {
            it->second += v;
            if (sgn(it->second) == 0) row.erase(it);
        } else {
            row.insert(it, Entry(c, v));
        }
    }

    long nnz() const {
        long n = 0;
        for (const auto& row : data_) n += static_cast<long>(row.size());
        return n;
    }

    bool is_zero() const { return nnz() == 0; }

    bool is_integral() const {
        for (const auto& row : data_)
            for (const auto& [c, v] : row)
                if (v.get_den() != 1) return false;
        return true;
    }

    ExactMatrix transpose() const {
        ExactMatrix t(cols_, rows_);
        for (long r = 0; r < rows_; ++r)
            for (const auto& [c, v] : row(r)) t.data_[static_cast<std::size_t>(c)].emplace_back(r, v);
        return t; // column indices arrive in increasing r, rows stay sorted
    }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("ExactMatrix: shape mismatch in product");
        ExactMatrix out(a.rows_, b.cols_);
        std::vector<mpq_class> acc(static_cast<std::size_t>(b.cols_), mpq_class(0));
        std::vector<long> touched;
        for (long r = 0; r < a.rows_; ++r) {
            touched.clear();
            for (const auto& [k, av] : a.row(r)) {
                for (const auto& [c, bv] : b.row(k)) {
                    if (sgn(acc[static_cast<std::size_t>(c)]) == 0) touched.push_back(c);
                    acc[static_cast<std::size_t>(c)] += av * bv;
                }
            }
            std::sort(touched.begin(), touched.end());
            auto& out_row = out.data_[static_cast<std::size_t>(r)];
            for (long c : touched) {
                if (sgn(acc[static_cast<std::size_t>(c)]) != 0)
                    out_row.emplace_back(c, acc[static_cast<std::size_t>(c)]);
                acc[static_cast<std::size_t>(c)] = 0;
            }
        }
        return out;
    }

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    void check_index(long r, long c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
            throw std::out_of_range("ExactMatrix: index out of range");
    }

    long rows_, cols_;
    std::vector<std::vector<Entry>> data_;
};

} // namespace quadstab
