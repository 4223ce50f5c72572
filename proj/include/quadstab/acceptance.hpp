#pragma once

// The full verification suite, one runner per criterion. Each runner returns
// a list of named checks with expected/got values pinned in code; the CLI
// verify-all command and the acceptance binary both consume these.

#include <chrono>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "quadstab/ap_algebra.hpp"
#include "quadstab/bounds.hpp"
#include "quadstab/dprime.hpp"
#include "quadstab/jw.hpp"
#include "quadstab/module.hpp"
#include "quadstab/poset.hpp"
#include "quadstab/quadfield.hpp"
#include "quadstab/simplicial.hpp"

namespace quadstab {

struct Check {
    std::string anchor;
    std::string expected;
    std::string got;
    bool pass = false;
};

struct CriterionResult {
    int number = 0;
    std::string name;
    double budget_seconds = 0;
    double elapsed_seconds = 0;
    std::vector<Check> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    long failed_count() const {
        long n = 0;
        for (const auto& c : checks)
            if (!c.pass) ++n;
        return n;
    }
};

struct AcceptanceConfig {
    unsigned long seed = 12345;
    long cap = kDefaultBlockCap;
    long threads = 1;
};

namespace detail {

inline void check_eq(std::vector<Check>& out, const std::string& anchor, const std::string& expected,
                     const std::string& got) {
    out.push_back({anchor, expected, got, expected == got});
}

inline void check_true(std::vector<Check>& out, const std::string& anchor, bool got,
                       const std::string& expected = "true") {
    out.push_back({anchor, expected, got ? "true" : "false", got == (expected == "true")});
}

template <class F>
CriterionResult timed(int number, std::string name, double budget, F&& body) {
    CriterionResult r;
    r.number = number;
    r.name = std::move(name);
    r.budget_seconds = budget;
    auto t0 = std::chrono::steady_clock::now();
    body(r.checks);
    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    check_true(r.checks, "criterion " + std::to_string(number) + " within " +
                             std::to_string(static_cast<long>(budget)) + "s budget",
               r.elapsed_seconds < budget);
    return r;
}

} // namespace detail

// 1. Koszulness: Tor_{n,d}(k,k) vanishes off the diagonal for the four small
// groups over Q, F2, F3, out to n = 6.
inline CriterionResult criterion_koszul(const AcceptanceConfig&) {
    return detail::timed(1, "Koszulness of A_P", 30.0, [&](std::vector<Check>& checks) {
        for (const char* g : {"1", "Z2", "Z3", "Z2xZ2"})
            for (const char* f : {"Q", "F2", "F3"}) {
                APAlgebra alg(FiniteAbelianGroup::parse(g), CoefficientDomain::parse(f));
                TorTable t = bar_tor_trivial(alg, 6, 6);
                detail::check_true(checks,
                                   std::string("koszul offdiagonal vanishing P=") + g + " k=" + f + " n<=6",
                                   is_koszul_window(t));
            }
    });
}

// 2. Regularity: h_d <= d - 1 + h_1 for d = 2, 3 on the example module,
// A/sigma, and 50 seeded random presentations, window N = 10.
inline CriterionResult criterion_regularity(const AcceptanceConfig& cfg) {
    return detail::timed(2, "module regularity estimate", 60.0, [&](std::vector<Check>& checks) {
        APAlgebra alg(FiniteAbelianGroup::cyclic(2), CoefficientDomain::prime_field(2));
        PrimeField F(2);
        auto run = [&](const std::string& label, const GradedModulePresentation& pres) {
            RealizedModule<PrimeField> M(F, alg, pres, 10);
            auto rep = verify_regularity_lemma(M, 3, 10);
            detail::check_true(checks, "regularity d=2,3 " + label, rep.all_pass);
        };
        run("example module", example_module_presentation());
        run("A/sigma", quotient_by_sigma_presentation());
        std::mt19937 rng(static_cast<std::mt19937::result_type>(cfg.seed));
        bool all_random_ok = true;
        for (int i = 0; i < 50; ++i) {
            auto pres = random_presentation(rng, alg.group());
            RealizedModule<PrimeField> M(F, alg, pres, 10);
            auto rep = verify_regularity_lemma(M, 3, 10);
            all_random_ok = all_random_ok && !rep.any_failure && rep.all_pass;
        }
        detail::check_true(checks, "regularity d=2,3 on 50 seeded random presentations", all_random_ok);
    });
}

// 3. The worked example module: generated in gradings <= 2, presented in
// gradings <= 3, summed stabilization onto gradings 3 and 4.
inline CriterionResult criterion_example_module(const AcceptanceConfig&) {
    return detail::timed(3, "worked example module", 10.0, [&](std::vector<Check>& checks) {
        APAlgebra alg(FiniteAbelianGroup::cyclic(2), CoefficientDomain::prime_field(2));
        PrimeField F(2);
        RealizedModule<PrimeField> M(F, alg, example_module_presentation(), 8);
        TorTable t = bar_tor_module(M, 8, 1);
        bool tor0 = true, tor1 = true;
        for (long n = 3; n <= 8; ++n) tor0 = tor0 && (t.dim(n, 0) == 0);
        for (long n = 4; n <= 8; ++n) tor1 = tor1 && (t.dim(n, 1) == 0);
        detail::check_true(checks, "example module Tor_0 vanishes in gradings > 2 (N=8)", tor0);
        detail::check_true(checks, "example module Tor_1 vanishes in gradings > 3 (N=8)", tor1);
        auto stab = verify_stabilization_surjectivity(M, 1);
        bool onto34 = true;
        for (const auto& [n, surj] : stab.surjective_at)
            if (n == 3 || n == 4) onto34 = onto34 && surj;
        detail::check_true(checks, "summed stabilization onto gradings 3 and 4", onto34);
    });
}

// 4. The three support-bound charts entry for entry, plus closed forms for
// t <= 50 with equality at the chart-visible rows.
inline CriterionResult criterion_bound_charts(const AcceptanceConfig&) {
    return detail::timed(4, "support-bound charts", 1.0, [&](std::vector<Check>& checks) {
        struct ChartRow {
            long t;
            std::vector<const char*> entries; // s = 0..len-1
        };
        struct Chart {
            const char* flags;
            std::vector<ChartRow> rows;
        };
        const std::vector<Chart> charts = {
            {"none", {{0, {"0", "-inf", "3", "4", "5", "6"}}, {1, {"3", "4", "6", "7", "8"}}}},
            {"III",
             {{0, {"0", "-inf", "2", "4", "5", "6"}},
              {1, {"2", "4", "5", "7", "8"}},
              {2, {"5", "7", "8", "10", "11"}},
              {3, {"8", "10", "11", "13", "14"}}}},
            {"III,IV",
             {{0, {"0", "-inf", "2", "3", "5", "6"}},
              {1, {"2", "3", "4", "5", "7"}},
              {2, {"4", "5", "6", "7", "9"}},
              {3, {"6", "7", "8", "9", "11"}}}},
        };
        for (const auto& chart : charts) {
            Flags flags = Flags::parse(chart.flags);
            BoundTable table = propagate(flags, 3, 5);
            for (const auto& row : chart.rows) {
                std::string expected, got;
                for (std::size_t s = 0; s < row.entries.size(); ++s) {
                    if (s) {
                        expected += " ";
                        got += " ";
                    }
                    expected += row.entries[s];
                    got += table.at(static_cast<long>(s), row.t).to_string();
                }
                detail::check_eq(checks,
                                 std::string("bounds flags=") + chart.flags + " row " + std::to_string(row.t),
                                 expected, got);
            }
            ClosedFormReport rep = verify_closed_forms(flags, 50);
            detail::check_true(checks, std::string("closed forms hold, flags=") + chart.flags + ", t<=50",
                               rep.all_hold);
            long chart_tmax = chart.rows.back().t;
            bool equality = true;
            for (const auto& c : rep.checks)
                if (c.s <= 1 && c.t <= chart_tmax) equality = equality && c.equality;
            detail::check_true(checks,
                               std::string("closed-form equality at chart rows, flags=") + chart.flags,
                               equality);
        }
    });
}

// 5. Brute-force slice homology equals the self-conjugate-partition /
// hook-content formula for m <= 3, n <= 8, with the stated vanishing lines
// and the two nonvanishing witnesses.
inline CriterionResult criterion_jw_formula(const AcceptanceConfig& cfg) {
    return detail::timed(5, "symmetric-square cdga vs partition formula", 300.0, [&](std::vector<Check>& checks) {
        const CoefficientDomain Q = CoefficientDomain::rationals();
        bool match = true, vanish_sqrt = true, vanish_dim = true;
        for (long m = 1; m <= 3; ++m)
            for (long n = 0; n <= 8; ++n) {
                HomologyResult h = jw_homology(m, n, Q, cfg.cap, cfg.threads);
                for (long d = 0; d <= n / 2; ++d) {
                    if (mpz_class(h.dim(d)) != partition_formula_dim(m, n, d)) match = false;
                    if (below_sqrt_line(n, d) && h.dim(d) != 0) vanish_sqrt = false;
                    if (below_linear_line(n, d, m) && h.dim(d) != 0) vanish_dim = false;
                }
            }
        detail::check_true(checks, "dim H(C;Q) = partition formula, m<=3 n<=8", match);
        detail::check_true(checks, "H(C;Q) vanishes for d < (n-sqrt n)/2", vanish_sqrt);
        detail::check_true(checks, "H(C;Q) vanishes for d < (n-m)/2", vanish_dim);
        detail::check_eq(checks, "nonvanishing H_{4,1}, m=2",
                         "1", std::to_string(jw_homology(2, 4, Q, cfg.cap, cfg.threads).dim(1)));
        detail::check_true(checks, "nonvanishing H_{9,3}, m=3",
                           jw_homology(3, 9, Q, cfg.cap, cfg.threads).dim(3) != 0);
    });
}

// 6. Characteristic-3 phenomenon: M(7) has exactly Z/3 in degree 1, which
// makes the squarefree block of the (7,7) slice nonzero over F3 while the
// whole slice vanishes over Q at homological degree 2.
inline CriterionResult criterion_char3(const AcceptanceConfig& cfg) {
    return detail::timed(6, "characteristic-3 torsion", 180.0, [&](std::vector<Check>& checks) {
        auto m7 = matching_complex(7);
        auto h = homology(m7.chain_complex(true, cfg.cap), CoefficientDomain::integers());
        detail::check_eq(checks, "matching M(7) H~1 over Z", "Z/3", h.at(1).to_string());
        auto block = jw_squarefree_block(7, 7, cfg.cap);
        auto h3 = homology(block.complex, CoefficientDomain::prime_field(3));
        detail::check_true(checks, "squarefree block H_{7,2} over F3 nonzero", h3.dim(2) != 0);
        HomologyResult hq = jw_homology(7, 7, CoefficientDomain::rationals(), cfg.cap, cfg.threads);
        detail::check_eq(checks, "full slice H_{7,2} over Q", "0", std::to_string(hq.dim(2)));
    });
}

// 7. The D' complex: vanishing below both stability lines for the three
// small groups, nonvanishing at the square n = 4 where the witness applies
// (it needs |P| - 1 >= n - 2d, so Z/3 here; for Z/2 the group vanishes).
inline CriterionResult criterion_dprime(const AcceptanceConfig& cfg) {
    return detail::timed(7, "D' vanishing lines", 120.0, [&](std::vector<Check>& checks) {
        const CoefficientDomain Q = CoefficientDomain::rationals();
        for (long q : {1L, 2L, 3L}) {
            FiniteAbelianGroup P = FiniteAbelianGroup::cyclic(q);
            bool vanish_linear = true, vanish_sqrt = true;
            for (long n = 0; n <= 6; ++n) {
                HomologyResult h = dprime_homology(P, n, Q, cfg.cap, cfg.threads);
                for (long d = 0; d <= n / 2; ++d) {
                    if (below_linear_line(n, d, q - 1) && h.dim(d) != 0) vanish_linear = false;
                    if (below_sqrt_line(n, d) && h.dim(d) != 0) vanish_sqrt = false;
                }
            }
            detail::check_true(checks, "D' vanishes for d < (n-|P|+1)/2, P=Z" + std::to_string(q),
                               vanish_linear);
            detail::check_true(checks, "D' vanishes for d < (n-sqrt n)/2, P=Z" + std::to_string(q),
                               vanish_sqrt);
        }
        detail::check_eq(checks, "D' H_{4,1} for P=Z2 (sharpness witness needs |P|-1 >= 2)", "0",
                         std::to_string(dprime_homology(FiniteAbelianGroup::cyclic(2), 4, Q, cfg.cap).dim(1)));
        detail::check_true(checks, "D' H_{4,1} nonzero for P=Z3 (square n = 4)",
                           dprime_homology(FiniteAbelianGroup::cyclic(3), 4, Q, cfg.cap).dim(1) != 0);
    });
}

// 8. Poset combinatorics: contractibility of the decorated-list posets, the
// partial-sum order isomorphism with subdivided X, and the homology of X_m.
inline CriterionResult criterion_posets(const AcceptanceConfig& cfg) {
    return detail::timed(8, "poset combinatorics", 120.0, [&](std::vector<Check>& checks) {
        const CoefficientDomain Z = CoefficientDomain::integers();
        bool contractible = true;
        bool order_iso = true;
        for (long q : {1L, 2L, 3L}) {
            FiniteAbelianGroup P = FiniteAbelianGroup::cyclic(q);
            for (long n = 1; n <= 4; ++n)
                for (long rho = 0; rho < q; ++rho) {
                    auto r = rbs_poset(n, rho, P);
                    auto h = reduced_homology(r.poset.order_complex(), Z, cfg.cap);
                    for (long d = h.min_degree; d <= h.max_degree(); ++d)
                        contractible = contractible && h.at(d).is_trivial();
                    if (n < 2) continue;
                    auto b = boundary_rbs(n, rho, P);
                    auto x = x_poset(n - 1, P);
                    if (b.elements.size() != x.chains().size()) order_iso = false;
                    std::vector<std::vector<std::pair<long, long>>> chains;
                    for (const auto& e : b.elements) {
                        auto c = rbs_to_sdx(e, P);
                        if (!(sdx_to_rbs(c, n, rho, P) == e)) order_iso = false;
                        chains.push_back(std::move(c));
                    }
                    for (std::size_t i = 0; i < chains.size(); ++i)
                        for (std::size_t j = 0; j < chains.size(); ++j) {
                            bool le = b.poset.le(static_cast<long>(i), static_cast<long>(j));
                            bool sub = std::includes(chains[i].begin(), chains[i].end(), chains[j].begin(),
                                                     chains[j].end());
                            if (le != sub) order_iso = false;
                        }
                }
        }
        detail::check_true(checks, "RBS posets contractible, n<=4 |P|<=3", contractible);
        detail::check_true(checks, "partial-sum map is an order isomorphism onto sd X chains", order_iso);
        bool xh = true;
        for (long m = 1; m <= 3; ++m)
            for (long q : {1L, 2L, 3L}) {
                auto h = reduced_homology(x_poset(m, FiniteAbelianGroup::cyclic(q)).order_complex(), Z, cfg.cap);
                long expect = 1;
                for (long i = 0; i < m; ++i) expect *= (q - 1);
                for (long d = h.min_degree; d <= h.max_degree(); ++d) {
                    if (d == m - 1) xh = xh && (h.at(d) == AbelianInvariants::free(expect));
                    else xh = xh && h.at(d).is_trivial();
                }
            }
        detail::check_true(checks, "X_m(P) homology = Z^((|P|-1)^m) in degree m-1, m<=3 |P|<=3", xh);
    });
}

// 9. The rank-2 abelianization table and the exact matrix verification of
// both presentations and their conjugation certificates.
inline CriterionResult criterion_table5(const AcceptanceConfig&) {
    return detail::timed(9, "rank-2 presentations and abelianizations", 5.0, [&](std::vector<Check>& checks) {
        auto swan = builtin_swan_sl2();
        auto fgt = builtin_fgt_sl();
        detail::check_eq(checks, "SL free-module abelianization", "Z/2 + Z/6 + Z^2",
                         abelianize(swan.pres).to_string());
        detail::check_eq(checks, "SL twisted-module abelianization", "Z/3 + Z^2",
                         abelianize(fgt.pres).to_string());
        auto gl_free = semidirect_z2(swan.pres, swan_e_action(swan.pres), Word::one());
        detail::check_eq(checks, "GL free-module abelianization", "Z/2 + Z/2 + Z/2 + Z/2 + Z/2",
                         abelianize(gl_free).to_string());
        auto gl_twisted = semidirect_z2(fgt.pres, fgt_e_action(fgt.pres), Word::one());
        detail::check_eq(checks, "GL twisted-module abelianization", "Z/2 + Z/2 + Z/2",
                         abelianize(gl_twisted).to_string());
        auto rep1 = verify_relators(swan.pres, swan.matrices);
        detail::check_true(checks, "free-module relators hold in exact matrices",
                           rep1.relators_pass && rep1.determinants_pass);
        auto rep2 = verify_relators(fgt.pres, fgt.matrices);
        detail::check_true(checks, "twisted-module relators hold in exact matrices",
                           rep2.relators_pass && rep2.determinants_pass);
        Mat2 E = conjugation_matrix_e();
        bool certs = E * E == Mat2::identity() && E.det() == QuadInt(-1);
        for (const auto& c : derive_conjugation_action(swan, E, swan_e_action(swan.pres))) certs = certs && c.pass;
        for (const auto& c : derive_conjugation_action(fgt, E, fgt_e_action(fgt.pres))) certs = certs && c.pass;
        detail::check_true(checks, "conjugation action certificates", certs);
    });
}

inline std::vector<CriterionResult> run_all_criteria(const AcceptanceConfig& cfg) {
    std::vector<CriterionResult> out;
    out.push_back(criterion_koszul(cfg));
    out.push_back(criterion_regularity(cfg));
    out.push_back(criterion_example_module(cfg));
    out.push_back(criterion_bound_charts(cfg));
    out.push_back(criterion_jw_formula(cfg));
    out.push_back(criterion_char3(cfg));
    out.push_back(criterion_dprime(cfg));
    out.push_back(criterion_posets(cfg));
    out.push_back(criterion_table5(cfg));
    return out;
}

} // namespace quadstab
