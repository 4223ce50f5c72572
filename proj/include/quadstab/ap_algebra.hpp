#pragma once

// The quadratic algebra A_P attached to a finite abelian group P: the
// polynomial algebra on the set P modulo rho*rho' = sigma*(rho ⋆ rho'),
// graded with each rho in degree 1. Basis normal form: A(0) = k, and A(n)
// for n >= 1 has basis <n, rho> = sigma^(n-1)*rho. Tor over the ground field
// is computed from the reduced bar complex, one grading slice at a time.

#include <map>
#include <stdexcept>
#include <vector>

#include "quadstab/chain.hpp"
#include "quadstab/group.hpp"

namespace quadstab {

struct APElement {
    long degree; // >= 1
    long rho;    // element index in P
};

class APAlgebra {
public:
    APAlgebra(FiniteAbelianGroup group, CoefficientDomain field)
        : group_(std::move(group)), field_(field) {
        if (!field_.is_field())
            throw std::domain_error("APAlgebra: ground domain must be a field");
    }

    const FiniteAbelianGroup& group() const { return group_; }
    const CoefficientDomain& field() const { return field_; }

    long dim(long n) const { return n == 0 ? 1 : group_.order(); }

    APElement multiply(const APElement& a, const APElement& b) const {
        if (a.degree < 1 || b.degree < 1)
            throw std::domain_error("APAlgebra::multiply: basis elements have degree >= 1");
        return APElement{a.degree + b.degree, group_.op(a.rho, b.rho)};
    }

private:
    FiniteAbelianGroup group_;
    CoefficientDomain field_;
};

struct TorTable {
    long max_n = 0; // window: gradings 0..max_n
    long max_d = 0; // homological degrees 0..max_d
    std::vector<std::vector<long>> dims; // dims[n][d]

    long dim(long n, long d) const {
        if (n < 0 || n > max_n || d < 0 || d > max_d) return 0;
        return dims[static_cast<std::size_t>(n)][static_cast<std::size_t>(d)];
    }
};

namespace detail {

// Compositions of n into d parts >= 1, lex order.
inline std::vector<std::vector<long>> compositions(long n, long d) {
    std::vector<std::vector<long>> out;
    if (d == 0) {
        if (n == 0) out.push_back({});
        return out;
    }
    std::vector<long> cur(static_cast<std::size_t>(d));
    auto rec = [&](auto&& self, long pos, long rest) -> void {
        if (pos == d - 1) {
            if (rest >= 1) {
                cur[static_cast<std::size_t>(pos)] = rest;
                out.push_back(cur);
            }
            return;
        }
        for (long v = 1; v <= rest - (d - 1 - pos); ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, rest - v);
        }
    };
    rec(rec, 0, n);
    return out;
}

// Basis of the grading-n slice of I^{⊗d}: a composition of n interleaved
// with a tuple of P-elements, packed as one vector for indexing.
struct BarBasis {
    std::vector<std::vector<long>> elems; // packed (n_1..n_d, rho_1..rho_d)
    std::map<std::vector<long>, long> index;

    void build(long n, long d, long p_order) {
        for (const auto& comp : compositions(n, d)) {
            std::vector<long> rhos(static_cast<std::size_t>(d), 0);
            while (true) {
                std::vector<long> key = comp;
                key.insert(key.end(), rhos.begin(), rhos.end());
                index.emplace(key, static_cast<long>(elems.size()));
                elems.push_back(std::move(key));
                long i = d - 1;
                for (; i >= 0; --i) {
                    if (++rhos[static_cast<std::size_t>(i)] < p_order) break;
                    rhos[static_cast<std::size_t>(i)] = 0;
                }
                if (i < 0) break;
            }
        }
    }
};

} // namespace detail

// The grading-n slice of the reduced bar complex B_d = I^{⊗d}(n), with
// degrees 0..d_top. Face i (1-based) merges tensor slots i, i+1 and carries
// sign (-1)^(i-1).
inline FreeChainComplex bar_complex_trivial(const APAlgebra& alg, long n, long d_top) {
    const long p = alg.group().order();
    std::vector<detail::BarBasis> bases(static_cast<std::size_t>(d_top) + 1);
    for (long d = 0; d <= d_top; ++d) bases[static_cast<std::size_t>(d)].build(n, d, p);

    std::vector<long> dims;
    for (long d = 0; d <= d_top; ++d) dims.push_back(static_cast<long>(bases[static_cast<std::size_t>(d)].elems.size()));

    std::vector<ExactMatrix> boundaries;
    for (long d = 1; d <= d_top; ++d) {
        const auto& src = bases[static_cast<std::size_t>(d)];
        const auto& dst = bases[static_cast<std::size_t>(d - 1)];
        ExactMatrix m(static_cast<long>(dst.elems.size()), static_cast<long>(src.elems.size()));
        for (long col = 0; col < static_cast<long>(src.elems.size()); ++col) {
            const auto& key = src.elems[static_cast<std::size_t>(col)];
            for (long i = 0; i + 1 < d; ++i) {
                std::vector<long> merged;
                merged.reserve(key.size() - 2);
                for (long j = 0; j < d; ++j)
                    if (j != i + 1)
                        merged.push_back(key[static_cast<std::size_t>(j)] +
                                         (j == i ? key[static_cast<std::size_t>(i + 1)] : 0));
                for (long j = 0; j < d; ++j) {
                    if (j == i + 1) continue;
                    long rho = key[static_cast<std::size_t>(d + j)];
                    if (j == i) rho = alg.group().op(rho, key[static_cast<std::size_t>(d + i + 1)]);
                    merged.push_back(rho);
                }
                long row = dst.index.at(merged);
                m.add_to(row, col, (i % 2 == 0) ? mpq_class(1) : mpq_class(-1));
            }
        }
        boundaries.push_back(std::move(m));
    }
    return FreeChainComplex(0, std::move(dims), std::move(boundaries));
}

// Tor^{A_P}_{n,d}(k, k) for n <= N, d <= D, over the algebra's ground field.
inline TorTable bar_tor_trivial(const APAlgebra& alg, long N, long D) {
    TorTable t;
    t.max_n = N;
    t.max_d = D;
    t.dims.assign(static_cast<std::size_t>(N) + 1, std::vector<long>(static_cast<std::size_t>(D) + 1, 0));
    for (long n = 0; n <= N; ++n) {
        long d_top = std::min(n, D + 1); // B_d(n) = 0 for d > n
        FreeChainComplex c = bar_complex_trivial(alg, n, d_top);
        HomologyResult h = homology(c, alg.field());
        for (long d = 0; d <= std::min(n, D); ++d)
            t.dims[static_cast<std::size_t>(n)][static_cast<std::size_t>(d)] = h.dim(d);
    }
    return t;
}

// True iff Tor_{n,d} vanishes off the diagonal n = d in the computed window.
inline bool is_koszul_window(const TorTable& t) {
    for (long n = 0; n <= t.max_n; ++n)
        for (long d = 0; d <= t.max_d; ++d)
            if (n != d && t.dim(n, d) != 0) return false;
    return true;
}

} // namespace quadstab
