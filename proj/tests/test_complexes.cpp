#include <catch2/catch_amalgamated.hpp>

#include "quadstab/poset.hpp"
#include "quadstab/simplicial.hpp"

using namespace quadstab;

namespace {

const CoefficientDomain Z = CoefficientDomain::integers();
const CoefficientDomain Q = CoefficientDomain::rationals();

bool all_reduced_homology_zero(const SimplicialComplex& k) {
    auto h = reduced_homology(k, Z);
    for (long d = h.min_degree; d <= h.max_degree(); ++d)
        if (!h.at(d).is_trivial()) return false;
    return true;
}

} // namespace

TEST_CASE("matching complexes", "[complexes]") {
    SECTION("M(3): three isolated vertices") {
        auto k = matching_complex(3);
        REQUIRE(k.dimension() == 0);
        REQUIRE(k.simplices(0).size() == 3);
        auto h = reduced_homology(k, Z);
        REQUIRE(h.at(0) == AbelianInvariants::free(2));
    }
    SECTION("M(4): three disjoint segments") {
        auto k = matching_complex(4);
        REQUIRE(k.simplices(0).size() == 6);
        REQUIRE(k.simplices(1).size() == 3); // the perfect matchings
        auto h = reduced_homology(k, Z);
        REQUIRE(h.at(0) == AbelianInvariants::free(2));
        REQUIRE(h.at(1).is_trivial());
    }
    SECTION("M(7): Bouc torsion, exactly Z/3 in degree 1") {
        auto k = matching_complex(7);
        REQUIRE(k.simplices(0).size() == 21);
        REQUIRE(k.simplices(1).size() == 105);
        REQUIRE(k.simplices(2).size() == 105);
        auto h = reduced_homology(k, Z);
        REQUIRE(h.at(0).is_trivial());
        REQUIRE(h.at(1) == AbelianInvariants{0, {3}});
        // top homology is free of rank 20 = reduced Euler characteristic
        REQUIRE(h.at(2) == AbelianInvariants::free(20));
        // universal coefficients: rational dimensions equal the free ranks
        auto hq = reduced_homology(k, Q);
        for (long d = -1; d <= 2; ++d) REQUIRE(hq.dim(d) == h.at(d).free_rank);
    }
    SECTION("cap trips with the complex named") {
        REQUIRE_THROWS_AS(matching_complex(7).chain_complex(true, 100), ResourceLimitError);
    }
}

TEST_CASE("order complexes of simple posets", "[complexes]") {
    SECTION("a poset with a terminal element is contractible") {
        // three elements a, b < c=top plus a < b
        std::vector<std::vector<bool>> le = {{1, 1, 1}, {0, 1, 1}, {0, 0, 1}};
        FinitePoset p("chainish", {"a", "b", "c"}, le);
        REQUIRE(p.terminal_element() == 2);
        REQUIRE(all_reduced_homology_zero(p.order_complex()));
    }
    SECTION("two-element antichain") {
        std::vector<std::vector<bool>> le = {{1, 0}, {0, 1}};
        FinitePoset p("antichain", {"a", "b"}, le);
        REQUIRE(p.terminal_element() == -1);
        auto h = reduced_homology(p.order_complex(), Z);
        REQUIRE(h.at(0) == AbelianInvariants::free(1));
    }
    SECTION("poset axioms are validated") {
        std::vector<std::vector<bool>> not_trans = {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}};
        REQUIRE_THROWS_AS(FinitePoset("bad", {"a", "b", "c"}, not_trans), std::invalid_argument);
        std::vector<std::vector<bool>> not_antisym = {{1, 1}, {1, 1}};
        REQUIRE_THROWS_AS(FinitePoset("bad", {"a", "b"}, not_antisym), std::invalid_argument);
    }
}

TEST_CASE("barycentric subdivision preserves homology", "[complexes]") {
    auto tetra = SimplicialComplex::from_facets(
        "boundary of tetrahedron", {"0", "1", "2", "3"},
        {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    auto sd = barycentric_subdivision(tetra);
    REQUIRE(sd.simplices(0).size() == 14); // 4 + 6 + 4 proper faces
    auto h1 = reduced_homology(tetra, Z);
    auto h2 = reduced_homology(sd, Z);
    for (long d = -1; d <= 2; ++d) REQUIRE(h1.at(d) == h2.at(d));

    auto m3 = matching_complex(3);
    auto h3 = reduced_homology(barycentric_subdivision(m3), Z);
    REQUIRE(h3.at(0) == AbelianInvariants::free(2));
}

TEST_CASE("plain-text interchange round trips", "[complexes]") {
    auto m4 = matching_complex(4);
    auto back = SimplicialComplex::from_text(m4.to_text());
    REQUIRE(back.simplex_count() == m4.simplex_count());
    auto h1 = reduced_homology(m4, Z);
    auto h2 = reduced_homology(back, Z);
    for (long d = -1; d <= m4.dimension(); ++d) REQUIRE(h1.at(d) == h2.at(d));

    auto x = x_poset(2, FiniteAbelianGroup::cyclic(2));
    auto px = FinitePoset::from_text(x.to_text());
    REQUIRE(px.size() == x.size());
    for (long i = 0; i < x.size(); ++i)
        for (long j = 0; j < x.size(); ++j) REQUIRE(px.le(i, j) == x.le(i, j));

    REQUIRE_THROWS_AS(SimplicialComplex::from_text("facet: a b\n"), std::invalid_argument);
    // a transitivity gap in the input relation is rejected by validation
    REQUIRE_THROWS_AS(FinitePoset::from_text("elements: a b c\nle: a b\nle: b c\n"), std::invalid_argument);
}

TEST_CASE("x posets", "[complexes]") {
    SECTION("m = 1: a discrete set of |P| points") {
        for (long q : {1L, 2L, 3L}) {
            auto p = x_poset(1, FiniteAbelianGroup::cyclic(q));
            auto h = reduced_homology(p.order_complex(), Z);
            REQUIRE(h.at(0) == AbelianInvariants::free(q - 1));
        }
    }
    SECTION("m = 2, |P| = 2: the order complex is a 4-cycle") {
        auto p = x_poset(2, FiniteAbelianGroup::cyclic(2));
        auto k = p.order_complex();
        REQUIRE(k.simplices(0).size() == 4);
        REQUIRE(k.simplices(1).size() == 4);
        auto h = reduced_homology(k, Z);
        REQUIRE(h.at(0).is_trivial());
        REQUIRE(h.at(1) == AbelianInvariants::free(1));
    }
    SECTION("homology concentrated in degree m-1 with rank (|P|-1)^m") {
        for (long m = 1; m <= 3; ++m)
            for (long q : {1L, 2L, 3L}) {
                auto p = x_poset(m, FiniteAbelianGroup::cyclic(q));
                auto h = reduced_homology(p.order_complex(), Z);
                long expect = 1;
                for (long i = 0; i < m; ++i) expect *= (q - 1);
                for (long d = h.min_degree; d <= h.max_degree(); ++d) {
                    if (d == m - 1) REQUIRE(h.at(d) == AbelianInvariants::free(expect));
                    else REQUIRE(h.at(d).is_trivial());
                }
            }
    }
}

TEST_CASE("decorated-list posets", "[complexes]") {
    FiniteAbelianGroup z2 = FiniteAbelianGroup::cyclic(2);
    FiniteAbelianGroup z3 = FiniteAbelianGroup::cyclic(3);

    SECTION("n = 1: a single element") {
        auto r = rbs_poset(1, 0, z2);
        REQUIRE(r.elements.size() == 1);
        REQUIRE(r.poset.terminal_element() == 0);
    }
    SECTION("element counts match the composition formula") {
        // sum over k of C(n-1, k-1) |P|^(k-1): the last class is determined
        auto count = [](long n, long q) {
            long total = 0;
            for (long k = 1; k <= n; ++k) {
                long binom = 1;
                for (long i = 0; i < k - 1; ++i) binom = binom * (n - 1 - i) / (i + 1);
                long pw = 1;
                for (long i = 0; i < k - 1; ++i) pw *= q;
                total += binom * pw;
            }
            return total;
        };
        REQUIRE(static_cast<long>(rbs_poset(3, 0, z2).elements.size()) == count(3, 2));
        REQUIRE(static_cast<long>(rbs_poset(3, 0, z2).elements.size()) == 9);
        REQUIRE(static_cast<long>(rbs_poset(4, 1, z3).elements.size()) == count(4, 3));
        for (long rho : {0L, 1L})
            REQUIRE(static_cast<long>(rbs_poset(3, rho, z2).elements.size()) == 9);
    }
    SECTION("terminal element and contractibility") {
        for (long n = 1; n <= 4; ++n)
            for (long q : {1L, 2L, 3L})
                for (long rho = 0; rho < q; ++rho) {
                    auto r = rbs_poset(n, rho, FiniteAbelianGroup::cyclic(q));
                    long t = r.poset.terminal_element();
                    REQUIRE(t >= 0);
                    REQUIRE(r.elements[static_cast<std::size_t>(t)].blocks.size() == 1);
                    REQUIRE(all_reduced_homology_zero(r.poset.order_complex()));
                }
    }
    SECTION("boundary poset basics") {
        auto b1 = boundary_rbs(2, 0, FiniteAbelianGroup::trivial());
        REQUIRE(b1.elements.size() == 1);
        auto b2 = boundary_rbs(2, 0, z2);
        REQUIRE(b2.elements.size() == 2);
        REQUIRE(b2.elements[0].blocks == std::vector<std::pair<long, long>>{{1, 0}, {1, 0}});
        REQUIRE(b2.elements[1].blocks == std::vector<std::pair<long, long>>{{1, 1}, {1, 1}});
    }
}

TEST_CASE("partial-sum dictionary with the subdivided x poset", "[complexes]") {
    FiniteAbelianGroup z2 = FiniteAbelianGroup::cyclic(2);
    SECTION("worked examples") {
        RBSList l{{{1, 0}, {1, 0}}};
        auto chain = rbs_to_sdx(l, z2);
        REQUIRE(chain == std::vector<std::pair<long, long>>{{1, 0}});
        RBSList l2{{{1, 1}, {2, 1}}};
        REQUIRE(rbs_to_sdx(l2, z2) == std::vector<std::pair<long, long>>{{1, 1}});
        REQUIRE_THROWS_AS(rbs_to_sdx(RBSList{{{3, 0}}}, z2), std::domain_error);
    }
    SECTION("bijection, round trip, and order isomorphism") {
        for (long n = 2; n <= 4; ++n)
            for (long q : {1L, 2L, 3L})
                for (long rho = 0; rho < std::min(q, 2L); ++rho) {
                    FiniteAbelianGroup P = FiniteAbelianGroup::cyclic(q);
                    auto b = boundary_rbs(n, rho, P);
                    auto x = x_poset(n - 1, P);
                    auto all_chains = x.chains();
                    REQUIRE(b.elements.size() == all_chains.size());
                    for (std::size_t i = 0; i < b.elements.size(); ++i) {
                        auto chain = rbs_to_sdx(b.elements[i], P);
                        // image is a strict chain in X_{n-1}(P)
                        for (std::size_t t = 0; t + 1 < chain.size(); ++t)
                            REQUIRE(chain[t].first < chain[t + 1].first);
                        REQUIRE(sdx_to_rbs(chain, n, rho, P) == b.elements[i]);
                        for (std::size_t j = 0; j < b.elements.size(); ++j) {
                            auto cj = rbs_to_sdx(b.elements[j], P);
                            bool le_lists = b.poset.le(static_cast<long>(i), static_cast<long>(j));
                            // merging drops partial sums: x <= y iff chain(y) ⊆ chain(x)
                            bool chain_contains = std::includes(chain.begin(), chain.end(), cj.begin(), cj.end());
                            REQUIRE(le_lists == chain_contains);
                        }
                    }
                }
    }
    SECTION("boundary poset has the homology of the subdivided x poset") {
        for (long n = 2; n <= 4; ++n)
            for (long q : {1L, 2L, 3L}) {
                FiniteAbelianGroup P = FiniteAbelianGroup::cyclic(q);
                auto hb = reduced_homology(boundary_rbs(n, 0, P).poset.order_complex(), Z);
                auto hx = reduced_homology(x_poset(n - 1, P).order_complex(), Z);
                long top = std::max(hb.max_degree(), hx.max_degree());
                for (long d = -1; d <= top; ++d) REQUIRE(hb.at(d) == hx.at(d));
            }
    }
}
