#pragma once

// The bigraded cdga Sym(V[1,0]) ⊗ Λ(W[2,1]) with a differential that moves
// one wedge factor into the symmetric part, together with its multiset block
// decomposition: the differential never changes the multiset of symbol
// subscripts, so each grading slice splits into one finite complex per
// n-element multiset. Two instances are used: the symmetric-square complex
// (wedge symbols = unordered pairs, all alive) and the D' complex over a
// finite group (wedge symbols = ordered pairs, pairs through the identity
// have zero differential and the symmetric side omits the identity symbol).
//
// Also: self-conjugate partitions and the hook content formula, which give
// the closed-form homology dimensions of the symmetric-square complex in
// characteristic zero.

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "quadstab/chain.hpp"
#include "quadstab/group.hpp"
#include "quadstab/parallel.hpp"

namespace quadstab {

// ---- partitions and Schur dimensions ---------------------------------------

struct Partition {
    std::vector<long> parts; // weakly decreasing, positive

    long size() const {
        long s = 0;
        for (long p : parts) s += p;
        return s;
    }

    long rows() const { return static_cast<long>(parts.size()); }

    Partition conjugate() const {
        Partition c;
        if (parts.empty()) return c;
        for (long i = 1; i <= parts[0]; ++i) {
            long cnt = 0;
            for (long p : parts)
                if (p >= i) ++cnt;
            c.parts.push_back(cnt);
        }
        return c;
    }

    long diagonal_length() const {
        long d = 0;
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (parts[i] >= static_cast<long>(i) + 1) d = static_cast<long>(i) + 1;
        return d;
    }

    bool self_conjugate() const { return conjugate().parts == parts; }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts[i]);
        }
        return s + ")";
    }
};

// Self-conjugate partitions of n with diagonal length k, via the bijection
// with k distinct odd hook lengths a_1 > ... > a_k summing to n.
inline std::vector<Partition> self_conjugate_partitions(long n, long k) {
    std::vector<Partition> out;
    if (k < 0) return out;
    if (k == 0) {
        if (n == 0) out.push_back(Partition{});
        return out;
    }
    std::vector<long> hooks(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, long pos, long rest, long max_hook) -> void {
        if (pos == k) {
            if (rest != 0) return;
            // rebuild the diagram from its principal hooks
            long nrows = pos > 0 ? (hooks[0] - 1) / 2 + 1 : 0;
            std::vector<long> row_len(static_cast<std::size_t>(nrows), 0);
            for (long i = 0; i < k; ++i) {
                long arm = (hooks[static_cast<std::size_t>(i)] - 1) / 2;
                row_len[static_cast<std::size_t>(i)] = i + 1 + arm; // row i: diagonal cell + arm
                for (long leg = 1; leg <= arm; ++leg)
                    row_len[static_cast<std::size_t>(i + leg)] =
                        std::max(row_len[static_cast<std::size_t>(i + leg)], static_cast<long>(i) + 1);
            }
            out.push_back(Partition{row_len});
            return;
        }
        long remaining_slots = k - pos - 1;
        // smallest possible sum of the remaining (strictly smaller odd) hooks
        long min_rest = remaining_slots * remaining_slots;
        for (long a = (max_hook % 2 == 0 ? max_hook - 1 : max_hook); a >= 2 * remaining_slots + 1; a -= 2) {
            if (rest - a < min_rest) continue;
            hooks[static_cast<std::size_t>(pos)] = a;
            self(self, pos + 1, rest - a, a - 2);
        }
    };
    rec(rec, 0, n, n);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) { return a.parts < b.parts; });
    return out;
}

// dim S_lambda(k^m) by the hook content formula; zero when lambda has more
// than m rows (a content factor vanishes).
inline mpz_class schur_dimension(const Partition& lam, long m) {
    Partition conj = lam.conjugate();
    mpz_class num = 1, den = 1;
    for (long i = 1; i <= lam.rows(); ++i) {
        for (long j = 1; j <= lam.parts[static_cast<std::size_t>(i - 1)]; ++j) {
            num *= (m + j - i);
            den *= lam.parts[static_cast<std::size_t>(i - 1)] - j + conj.parts[static_cast<std::size_t>(j - 1)] - i + 1;
        }
    }
    if (num == 0) return 0;
    mpz_class q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("schur_dimension: hook content product not integral");
    return q;
}

// Characteristic-zero homology dimension of the symmetric-square complex:
// sum of dim S_lambda(k^m) over self-conjugate lambda of size n with
// diagonal length n - 2d.
inline mpz_class partition_formula_dim(long m, long n, long d) {
    if (n < 0 || d < 0) return 0;
    long k = n - 2 * d;
    if (k < 0) return 0;
    mpz_class total = 0;
    for (const auto& lam : self_conjugate_partitions(n, k)) total += schur_dimension(lam, m);
    return total;
}

// ---- the wedge cdga slices and their block decomposition -------------------

struct WedgeCdga {
    struct PairSymbol {
        long s1, s2;   // symbol indices
        bool alive;    // differential sends the wedge factor to s1*s2 when alive
    };

    std::string object_name;
    std::vector<std::string> symbol_names;
    std::vector<bool> allowed_in_sym; // may the symbol appear in the symmetric part?
    std::vector<PairSymbol> pairs;

    long num_symbols() const { return static_cast<long>(symbol_names.size()); }

    std::string block_name(const std::vector<long>& mu) const {
        std::ostringstream os;
        os << "{";
        bool first = true;
        for (long s = 0; s < num_symbols(); ++s)
            for (long c = 0; c < mu[static_cast<std::size_t>(s)]; ++c) {
                if (!first) os << ",";
                os << symbol_names[static_cast<std::size_t>(s)];
                first = false;
            }
        os << "}";
        return os.str();
    }

    // all multisets of size n over the symbols, lex order
    std::vector<std::vector<long>> blocks(long n) const {
        std::vector<std::vector<long>> out;
        std::vector<long> mu(static_cast<std::size_t>(num_symbols()), 0);
        auto rec = [&](auto&& self, long pos, long rest) -> void {
            if (pos == num_symbols() - 1) {
                mu[static_cast<std::size_t>(pos)] = rest;
                out.push_back(mu);
                return;
            }
            for (long c = 0; c <= rest; ++c) {
                mu[static_cast<std::size_t>(pos)] = c;
                self(self, pos + 1, rest - c);
            }
        };
        if (num_symbols() == 0) {
            if (n == 0) out.push_back({});
            return out;
        }
        rec(rec, 0, n);
        return out;
    }

    struct BlockComplex {
        std::vector<long> mu;
        // basis[k]: wedge sets S (ascending pair indices); the symmetric
        // monomial is mu minus the symbols used by S
        std::vector<std::vector<std::vector<long>>> basis;
        FreeChainComplex complex;

        BlockComplex(std::vector<long> mu_, std::vector<std::vector<std::vector<long>>> basis_, FreeChainComplex c)
            : mu(std::move(mu_)), basis(std::move(basis_)), complex(std::move(c)) {}
    };

    bool sym_part_valid(const std::vector<long>& e) const {
        for (long s = 0; s < num_symbols(); ++s)
            if (e[static_cast<std::size_t>(s)] > 0 && !allowed_in_sym[static_cast<std::size_t>(s)]) return false;
        return true;
    }

    BlockComplex block_complex(const std::vector<long>& mu, long n, long cap) const {
        long kmax = n / 2;
        std::vector<std::vector<std::vector<long>>> basis(static_cast<std::size_t>(kmax) + 1);
        std::vector<long> e = mu;
        std::vector<long> cur;
        long count = 0;
        auto record = [&]() {
            if (!sym_part_valid(e)) return;
            basis[cur.size()].push_back(cur);
            if (++count > cap)
                throw ResourceLimitError(object_name + " block " + block_name(mu) + " exceeds the basis cap of " +
                                         std::to_string(cap) + " elements");
        };
        auto rec = [&](auto&& self, long idx) -> void {
            record();
            if (static_cast<long>(cur.size()) == kmax) return;
            for (long t = idx; t < static_cast<long>(pairs.size()); ++t) {
                const auto& ps = pairs[static_cast<std::size_t>(t)];
                auto& c1 = e[static_cast<std::size_t>(ps.s1)];
                auto& c2 = e[static_cast<std::size_t>(ps.s2)];
                if (ps.s1 == ps.s2 ? c1 < 2 : (c1 < 1 || c2 < 1)) continue;
                c1 -= 1;
                c2 -= 1;
                cur.push_back(t);
                self(self, t + 1);
                cur.pop_back();
                c1 += 1;
                c2 += 1;
            }
        };
        rec(rec, 0);

        std::vector<std::map<std::vector<long>, long>> index(static_cast<std::size_t>(kmax) + 1);
        for (long k = 0; k <= kmax; ++k)
            for (std::size_t i = 0; i < basis[static_cast<std::size_t>(k)].size(); ++i)
                index[static_cast<std::size_t>(k)].emplace(basis[static_cast<std::size_t>(k)][i], static_cast<long>(i));

        std::vector<long> dims;
        for (long k = 0; k <= kmax; ++k) dims.push_back(static_cast<long>(basis[static_cast<std::size_t>(k)].size()));
        std::vector<ExactMatrix> boundaries;
        for (long k = 1; k <= kmax; ++k) {
            ExactMatrix m(dims[static_cast<std::size_t>(k - 1)], dims[static_cast<std::size_t>(k)]);
            const auto& src = basis[static_cast<std::size_t>(k)];
            for (long col = 0; col < static_cast<long>(src.size()); ++col) {
                const auto& S = src[static_cast<std::size_t>(col)];
                for (std::size_t i = 0; i < S.size(); ++i) {
                    if (!pairs[static_cast<std::size_t>(S[i])].alive) continue;
                    std::vector<long> rest;
                    rest.reserve(S.size() - 1);
                    for (std::size_t j = 0; j < S.size(); ++j)
                        if (j != i) rest.push_back(S[j]);
                    long row = index[static_cast<std::size_t>(k - 1)].at(rest);
                    m.add_to(row, col, (i % 2 == 0) ? mpq_class(1) : mpq_class(-1));
                }
            }
            boundaries.push_back(std::move(m));
        }
        return BlockComplex(mu, std::move(basis), FreeChainComplex(0, std::move(dims), std::move(boundaries)));
    }

    // whole grading-n slice as one complex: blocks concatenated in lex order
    FreeChainComplex slice_complex(long n, long cap) const {
        long kmax = n / 2;
        std::vector<long> dims(static_cast<std::size_t>(kmax) + 1, 0);
        std::vector<BlockComplex> bcs;
        for (const auto& mu : blocks(n)) bcs.push_back(block_complex(mu, n, cap));
        std::vector<long> offset(static_cast<std::size_t>(kmax) + 1, 0);
        for (const auto& bc : bcs)
            for (long k = 0; k <= kmax; ++k) dims[static_cast<std::size_t>(k)] += bc.complex.dim(k);
        std::vector<ExactMatrix> boundaries;
        for (long k = 1; k <= kmax; ++k)
            boundaries.emplace_back(dims[static_cast<std::size_t>(k - 1)], dims[static_cast<std::size_t>(k)]);
        std::vector<long> row_off(static_cast<std::size_t>(kmax) + 1, 0), col_off(static_cast<std::size_t>(kmax) + 1, 0);
        for (const auto& bc : bcs) {
            for (long k = 1; k <= kmax; ++k) {
                const ExactMatrix& b = bc.complex.boundary(k);
                for (long r = 0; r < b.rows(); ++r)
                    for (const auto& [c, v] : b.row(r))
                        boundaries[static_cast<std::size_t>(k - 1)].set(row_off[static_cast<std::size_t>(k - 1)] + r,
                                                                        col_off[static_cast<std::size_t>(k)] + c, v);
            }
            for (long k = 0; k <= kmax; ++k) {
                row_off[static_cast<std::size_t>(k)] += bc.complex.dim(k);
                col_off[static_cast<std::size_t>(k)] += bc.complex.dim(k);
            }
        }
        return FreeChainComplex(0, std::move(dims), std::move(boundaries));
    }

    // homology of the slice computed block by block and summed in block
    // order; blocks are independent, so they may be farmed out to threads
    HomologyResult slice_homology(long n, const CoefficientDomain& domain, long cap, long threads = 1) const {
        long kmax = n / 2;
        auto mus = blocks(n);
        std::vector<HomologyResult> per_block(mus.size());
        std::exception_ptr failure;
        std::mutex failure_mutex;
        parallel_for(static_cast<long>(mus.size()), threads, [&](long i) {
            try {
                BlockComplex bc = block_complex(mus[static_cast<std::size_t>(i)], n, cap);
                per_block[static_cast<std::size_t>(i)] = homology(bc.complex, domain);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
        if (failure) std::rethrow_exception(failure);
        HomologyResult total;
        total.domain = domain;
        total.min_degree = 0;
        total.groups.assign(static_cast<std::size_t>(kmax) + 1, AbelianInvariants{});
        for (const auto& h : per_block)
            for (long k = 0; k <= kmax; ++k)
                total.groups[static_cast<std::size_t>(k)] =
                    AbelianInvariants::direct_sum(total.groups[static_cast<std::size_t>(k)], h.at(k));
        return total;
    }
};

inline constexpr long kDefaultBlockCap = 200000;

// Sym(V) ⊗ Λ(Sym^2 V) with dim V = m: symbols b_1..b_m, wedge symbols the
// unordered products b_a b_b, every wedge factor alive.
inline WedgeCdga jw_cdga(long m) {
    if (m < 1) throw std::invalid_argument("jw_cdga: need m >= 1");
    WedgeCdga w;
    w.object_name = "jw slice m=" + std::to_string(m);
    for (long a = 1; a <= m; ++a) w.symbol_names.push_back("b" + std::to_string(a));
    w.allowed_in_sym.assign(static_cast<std::size_t>(m), true);
    for (long a = 0; a < m; ++a)
        for (long b = a; b < m; ++b) w.pairs.push_back({a, b, true});
    return w;
}

struct JWHomology {
    long m, n;
    HomologyResult h;
};

inline HomologyResult jw_homology(long m, long n, const CoefficientDomain& domain, long cap = kDefaultBlockCap,
                                  long threads = 1) {
    return jw_cdga(m).slice_homology(n, domain, cap, threads);
}

// The squarefree block of the (n, n) slice with m >= n symbols: its degree-d
// piece is spanned by the d-edge partial matchings on n vertices.
inline WedgeCdga::BlockComplex jw_squarefree_block(long m, long n, long cap = kDefaultBlockCap) {
    if (m < n) throw std::invalid_argument("jw_squarefree_block: need m >= n");
    WedgeCdga w = jw_cdga(m);
    std::vector<long> mu(static_cast<std::size_t>(m), 0);
    for (long s = 0; s < n; ++s) mu[static_cast<std::size_t>(s)] = 1;
    return w.block_complex(mu, n, cap);
}

} // namespace quadstab
