#pragma once

// The D' complex of a finite abelian group P: Sym(V[1,0]) ⊗ Λ(W⊗W[2,1]) with
// V spanned by the non-identity elements and W by all of P. The differential
// sends rho⊗rho' to the product rho·rho' in Sym(V) when neither factor is the
// identity, and to zero otherwise. Its homology is the computational kernel
// of the square-root stability bound, and decomposes as the homology of the
// symmetric-square complex on V tensored with a free graded commutative
// algebra on the differential-closed wedge generators (all in bidegree
// (2,1)): the sigma-pairs together with the antisymmetric part of V⊗V.

#include <vector>

#include "quadstab/jw.hpp"

namespace quadstab {

inline WedgeCdga dprime_cdga(const FiniteAbelianGroup& P) {
    WedgeCdga w;
    w.object_name = "dprime slice P=" + P.name_str();
    const long order = P.order();
    for (long r = 0; r < order; ++r) w.symbol_names.push_back(P.element_name(r));
    w.allowed_in_sym.assign(static_cast<std::size_t>(order), true);
    w.allowed_in_sym[static_cast<std::size_t>(P.identity())] = false;
    for (long r = 0; r < order; ++r)
        for (long s = 0; s < order; ++s)
            w.pairs.push_back({r, s, r != P.identity() && s != P.identity()});
    return w;
}

inline HomologyResult dprime_homology(const FiniteAbelianGroup& P, long n, const CoefficientDomain& domain,
                                      long cap = kDefaultBlockCap, long threads = 1) {
    return dprime_cdga(P).slice_homology(n, domain, cap, threads);
}

// number of differential-closed wedge generators: pairs through sigma plus
// the antisymmetrizations of V⊗V, (|P|^2 + |P|)/2 in total
inline long dprime_closed_generator_count(const FiniteAbelianGroup& P) {
    long q = P.order();
    return (q * q + q) / 2;
}

struct TensorDecompositionCheck {
    long n = 0, d = 0;
    long lhs = 0; // dim H_{n,d}(D')
    long rhs = 0; // convolution with the free factor
    bool pass = false;
};

struct TensorDecompositionReport {
    std::vector<TensorDecompositionCheck> checks;
    bool all_pass = true;
};

// dim H_{n,d}(D') should equal sum_j C(g, j) * dim H_{n-2j, d-j}(C on V),
// where g counts the closed wedge generators (each of bidegree (2,1)) and
// both homologies are computed here over the rationals.
inline TensorDecompositionReport verify_tensor_decomposition(const FiniteAbelianGroup& P, long n_max,
                                                             long cap = kDefaultBlockCap) {
    const CoefficientDomain Q = CoefficientDomain::rationals();
    const long m = P.order() - 1;
    const long g = dprime_closed_generator_count(P);

    std::vector<HomologyResult> hc; // homology of the symmetric-square complex on V
    for (long n = 0; n <= n_max; ++n) {
        if (m >= 1) {
            hc.push_back(jw_homology(m, n, Q, cap));
        } else {
            HomologyResult h;
            h.domain = Q;
            h.min_degree = 0;
            h.groups.assign(static_cast<std::size_t>(n / 2) + 1, AbelianInvariants{});
            if (n == 0) h.groups[0] = AbelianInvariants::free(1);
            hc.push_back(h);
        }
    }

    std::vector<long> binom(static_cast<std::size_t>(g) + 1, 1);
    for (long j = 1; j <= g; ++j)
        binom[static_cast<std::size_t>(j)] = binom[static_cast<std::size_t>(j - 1)] * (g - j + 1) / j;

    TensorDecompositionReport rep;
    for (long n = 0; n <= n_max; ++n) {
        HomologyResult hd = dprime_homology(P, n, Q, cap);
        for (long d = 0; d <= n / 2; ++d) {
            TensorDecompositionCheck c;
            c.n = n;
            c.d = d;
            c.lhs = hd.dim(d);
            long rhs = 0;
            for (long j = 0; j <= std::min({g, d, n / 2}); ++j)
                rhs += binom[static_cast<std::size_t>(j)] * hc[static_cast<std::size_t>(n - 2 * j)].dim(d - j);
            c.rhs = rhs;
            c.pass = (c.lhs == c.rhs);
            rep.all_pass = rep.all_pass && c.pass;
            rep.checks.push_back(c);
        }
    }
    return rep;
}

// vanishing-line helpers: d < (n - sqrt n)/2 iff (n-2d)^2 > n, and
// d < (n - b)/2 iff n - 2d > b
inline bool below_sqrt_line(long n, long d) {
    long k = n - 2 * d;
    return k > 0 && k * k > n;
}
inline bool below_linear_line(long n, long d, long b) { return n - 2 * d > b; }

} // namespace quadstab
