#pragma once

// Smith normal form over Z. Pivoting picks the nonzero entry of minimal
// absolute value in the remaining submatrix, which keeps coefficient growth
// in check. Transforms U, V (unimodular, U*A*V = D) are tracked on request.

#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "quadstab/arith.hpp"
#include "quadstab/matrix.hpp"

namespace quadstab {

struct SmithForm {
    std::vector<mpz_class> invariant_factors; // positive, d_i | d_{i+1}
    long rank = 0;
    bool has_transforms = false;
    ExactMatrix U, V; // U*A*V = diag(invariant_factors)
    int det_u = 1, det_v = 1;
};

inline SmithForm smith_normal_form(const ExactMatrix& m, bool with_transforms = false) {
    if (!m.is_integral())
        throw std::domain_error("smith_normal_form: matrix has non-integer entries");

    const long rows = m.rows(), cols = m.cols();
    std::vector<std::vector<mpz_class>> a(static_cast<std::size_t>(rows),
                                          std::vector<mpz_class>(static_cast<std::size_t>(cols), 0));
    for (long r = 0; r < rows; ++r)
        for (const auto& [c, v] : m.row(r)) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v.get_num();

    std::vector<std::vector<mpz_class>> u, v;
    auto ident = [](long n) {
        std::vector<std::vector<mpz_class>> id(static_cast<std::size_t>(n),
                                               std::vector<mpz_class>(static_cast<std::size_t>(n), 0));
        for (long i = 0; i < n; ++i) id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        return id;
    };
    if (with_transforms) {
        u = ident(rows);
        v = ident(cols);
    }

    SmithForm out;
    auto& U = u;
    auto& V = v;

    auto swap_rows = [&](long i, long j) {
        if (i == j) return;
        std::swap(a[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(j)]);
        if (with_transforms) std::swap(U[static_cast<std::size_t>(i)], U[static_cast<std::size_t>(j)]);
        out.det_u = -out.det_u;
    };
    auto swap_cols = [&](long i, long j) {
        if (i == j) return;
        for (long r = 0; r < rows; ++r)
            std::swap(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)],
                      a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]);
        if (with_transforms)
            for (long r = 0; r < cols; ++r)
                std::swap(V[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)],
                          V[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]);
        out.det_v = -out.det_v;
    };
    auto add_row = [&](long dst, long src, const mpz_class& f) { // row dst += f * row src
        for (long c = 0; c < cols; ++c)
            a[static_cast<std::size_t>(dst)][static_cast<std::size_t>(c)] +=
                f * a[static_cast<std::size_t>(src)][static_cast<std::size_t>(c)];
        if (with_transforms)
            for (long c = 0; c < rows; ++c)
                U[static_cast<std::size_t>(dst)][static_cast<std::size_t>(c)] +=
                    f * U[static_cast<std::size_t>(src)][static_cast<std::size_t>(c)];
    };
    auto add_col = [&](long dst, long src, const mpz_class& f) { // col dst += f * col src
        for (long r = 0; r < rows; ++r)
            a[static_cast<std::size_t>(r)][static_cast<std::size_t>(dst)] +=
                f * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(src)];
        if (with_transforms)
            for (long r = 0; r < cols; ++r)
                V[static_cast<std::size_t>(r)][static_cast<std::size_t>(dst)] +=
                    f * V[static_cast<std::size_t>(r)][static_cast<std::size_t>(src)];
    };
    auto negate_row = [&](long i) {
        for (long c = 0; c < cols; ++c) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] *= -1;
        if (with_transforms)
            for (long c = 0; c < rows; ++c) U[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] *= -1;
        out.det_u = -out.det_u;
    };

    const long nmin = std::min(rows, cols);
    for (long t = 0; t < nmin; ++t) {
        while (true) {
            // minimal-|value| nonzero pivot in the trailing submatrix
            long pi = -1, pj = -1;
            mpz_class best;
            for (long i = t; i < rows; ++i) {
                for (long j = t; j < cols; ++j) {
                    const mpz_class& x = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                    if (x == 0) continue;
                    mpz_class ax = abs(x);
                    if (pi < 0 || ax < best) {
                        best = ax;
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (pi < 0) break; // trailing submatrix is zero
            swap_rows(t, pi);
            swap_cols(t, pj);

            const mpz_class& d = a[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)];
            bool dirty = false;
            for (long i = t + 1; i < rows; ++i) {
                mpz_class& x = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
                if (x == 0) continue;
                mpz_class q = x / d; // truncated division, remainder |r| < |d|
                if (q != 0) add_row(i, t, -q);
                if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] != 0) dirty = true;
            }
            for (long j = t + 1; j < cols; ++j) {
                mpz_class& x = a[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)];
                if (x == 0) continue;
                mpz_class q = x / d;
                if (q != 0) add_col(j, t, -q);
                if (a[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] != 0) dirty = true;
            }
            if (dirty) continue; // smaller remainders appeared; re-pick pivot

            // pivot is lone; enforce divisibility of the trailing block
            bool fixed = true;
            for (long i = t + 1; i < rows && fixed; ++i) {
                for (long j = t + 1; j < cols && fixed; ++j) {
                    if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] % d != 0) {
                        add_row(t, i, 1);
                        fixed = false;
                    }
                }
            }
            if (fixed) break;
        }
        if (a[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)] == 0) break;
        if (a[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)] < 0) negate_row(t);
        out.invariant_factors.push_back(a[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)]);
    }
    out.rank = static_cast<long>(out.invariant_factors.size());

    if (with_transforms) {
        out.has_transforms = true;
        out.U = ExactMatrix(rows, rows);
        out.V = ExactMatrix(cols, cols);
        for (long r = 0; r < rows; ++r)
            for (long c = 0; c < rows; ++c)
                if (U[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0)
                    out.U.set(r, c, mpq_class(U[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]));
        for (long r = 0; r < cols; ++r)
            for (long c = 0; c < cols; ++c)
                if (V[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0)
                    out.V.set(r, c, mpq_class(V[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]));
    }
    return out;
}

} // namespace quadstab
