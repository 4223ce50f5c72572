#pragma once

// Canonical values of finitely generated abelian groups: a free rank plus
// invariant factors in a divisibility chain. Direct sums are recombined into
// canonical form through prime factorization (factors here are tiny).

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "quadstab/arith.hpp"

namespace quadstab {

struct AbelianInvariants {
    long free_rank = 0;
    std::vector<mpz_class> factors; // each > 1, factors[i] | factors[i+1]

    bool is_trivial() const { return free_rank == 0 && factors.empty(); }

    friend bool operator==(const AbelianInvariants& a, const AbelianInvariants& b) {
        return a.free_rank == b.free_rank && a.factors == b.factors;
    }

    static AbelianInvariants free(long rank) { return AbelianInvariants{rank, {}}; }

    static AbelianInvariants cyclic(long n) {
        AbelianInvariants g;
        if (n == 0) g.free_rank = 1;
        else if (n > 1) g.factors.push_back(n);
        return g;
    }

    // Canonical form of the direct sum.
    static AbelianInvariants direct_sum(const AbelianInvariants& x, const AbelianInvariants& y) {
        AbelianInvariants out;
        out.free_rank = x.free_rank + y.free_rank;
        std::map<mpz_class, std::vector<long>> primes; // prime -> exponents, one per cyclic piece
        auto absorb = [&](const std::vector<mpz_class>& fs) {
            for (mpz_class f : fs) {
                for (mpz_class p = 2; f > 1; ++p) {
                    if (f % p != 0) continue;
                    long e = 0;
                    while (f % p == 0) {
                        f /= p;
                        ++e;
                    }
                    primes[p].push_back(e);
                }
            }
        };
        absorb(x.factors);
        absorb(y.factors);
        std::size_t k = 0;
        for (auto& [p, es] : primes) {
            std::sort(es.begin(), es.end(), std::greater<long>());
            k = std::max(k, es.size());
        }
        std::vector<mpz_class> chain(k, 1);
        for (const auto& [p, es] : primes) {
            for (std::size_t j = 0; j < es.size(); ++j) {
                mpz_class pw;
                mpz_pow_ui(pw.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(es[j]));
                chain[j] *= pw; // j-th largest exponent goes to j-th largest factor
            }
        }
        std::reverse(chain.begin(), chain.end());
        out.factors = std::move(chain);
        return out;
    }

    // e.g. "Z/2 + Z/6 + Z^2", "Z", "0"
    std::string to_string() const {
        std::string s;
        for (const auto& f : factors) {
            if (!s.empty()) s += " + ";
            s += "Z/" + f.get_str();
        }
        if (free_rank == 1) s += (s.empty() ? "" : " + ") + std::string("Z");
        else if (free_rank > 1) s += (s.empty() ? "" : " + ") + std::string("Z^") + std::to_string(free_rank);
        return s.empty() ? "0" : s;
    }
};

} // namespace quadstab
