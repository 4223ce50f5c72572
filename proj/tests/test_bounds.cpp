#include <catch2/catch_amalgamated.hpp>

#include "quadstab/bounds.hpp"

using namespace quadstab;

namespace {

void require_row(const BoundTable& t, long row, const std::vector<long>& expect_finite, bool s1_neg_inf = false) {
    for (std::size_t s = 0; s < expect_finite.size(); ++s) {
        Bound b = t.at(static_cast<long>(s), row);
        if (s1_neg_inf && s == 1) {
            REQUIRE(!b.finite);
        } else {
            REQUIRE(b.finite);
            REQUIRE(b.value == expect_finite[s]);
        }
    }
}

} // namespace

TEST_CASE("flags invariant", "[boundprop]") {
    REQUIRE_THROWS_AS(Flags(false, true), std::invalid_argument);
    REQUIRE(Flags::parse("none").name() == "none");
    REQUIRE(Flags::parse("III").name() == "III");
    REQUIRE(Flags::parse("III,IV").name() == "III,IV");
}

TEST_CASE("row zero matches the axiom inputs", "[boundprop]") {
    Flags none;
    std::vector<long> expect = {0, 0, 3, 4, 5, 6};
    for (long s = 0; s <= 5; ++s) {
        Bound b = row_zero(none, s);
        if (s == 1) REQUIRE(!b.finite);
        else REQUIRE(b.value == expect[static_cast<std::size_t>(s)]);
    }
    Flags a3(true, false);
    REQUIRE(row_zero(a3, 2) == Bound::of(2));
    REQUIRE(row_zero(a3, 3) == Bound::of(4));
    Flags a34(true, true);
    REQUIRE(row_zero(a34, 2) == Bound::of(2));
    REQUIRE(row_zero(a34, 3) == Bound::of(3));
    REQUIRE(row_zero(a34, 7) == Bound::of(8));
}

TEST_CASE("lemma estimate regimes", "[boundprop]") {
    REQUIRE_THROWS_AS(lemma_estimates(Flags(), Bound::of(0), Bound::of(0), 1), std::domain_error);
    REQUIRE(lemma_estimates(Flags(), Bound::of(3), Bound::of(4), 2) == Bound::of(6));
    REQUIRE(lemma_estimates(Flags(true, false), Bound::of(2), Bound::of(4), 2) == Bound::of(5));
    REQUIRE(lemma_estimates(Flags(true, true), Bound::of(2), Bound::of(3), 4) == Bound::of(7));
    // -inf inputs propagate
    REQUIRE(!lemma_estimates(Flags(), Bound::neg_inf(), Bound::neg_inf(), 3).finite);
}

TEST_CASE("charts reproduced entry for entry", "[boundprop]") {
    SECTION("no flags") {
        BoundTable t = propagate(Flags(), 1, 5);
        require_row(t, 0, {0, 0, 3, 4, 5, 6}, true);
        require_row(t, 1, {3, 4, 6, 7, 8});
    }
    SECTION("axiom III") {
        BoundTable t = propagate(Flags(true, false), 3, 5);
        require_row(t, 0, {0, 0, 2, 4, 5, 6}, true);
        require_row(t, 1, {2, 4, 5, 7, 8});
        require_row(t, 2, {5, 7, 8, 10, 11});
        require_row(t, 3, {8, 10, 11, 13, 14});
    }
    SECTION("axioms III and IV") {
        BoundTable t = propagate(Flags(true, true), 3, 5);
        require_row(t, 0, {0, 0, 2, 3, 5, 6}, true);
        require_row(t, 1, {2, 3, 4, 5, 7});
        require_row(t, 2, {4, 5, 6, 7, 9});
        require_row(t, 3, {6, 7, 8, 9, 11});
    }
}

TEST_CASE("row zero of every table equals row_zero pointwise", "[boundprop]") {
    for (auto flags : {Flags(), Flags(true, false), Flags(true, true)}) {
        BoundTable t = propagate(flags, 4, 8);
        for (long s = 0; s <= 8; ++s) REQUIRE(t.at(s, 0) == row_zero(flags, s));
    }
}

TEST_CASE("monotonicity in flags", "[boundprop]") {
    BoundTable none = propagate(Flags(), 12, 8);
    BoundTable a3 = propagate(Flags(true, false), 12, 8);
    BoundTable a34 = propagate(Flags(true, true), 12, 8);
    for (long t = 0; t <= 12; ++t)
        for (long s = 0; s <= 8; ++s) {
            REQUIRE(a3.at(s, t).leq(none.at(s, t)));
            REQUIRE(a34.at(s, t).leq(a3.at(s, t)));
        }
}

TEST_CASE("closed forms hold out to t = 50", "[boundprop]") {
    for (auto flags : {Flags(), Flags(true, false), Flags(true, true)}) {
        ClosedFormReport rep = verify_closed_forms(flags, 50);
        REQUIRE(rep.all_hold);
        // equality at s in {0,1} for every t >= 1, as visible in the charts
        for (const auto& c : rep.checks)
            if (c.s <= 1) REQUIRE(c.equality);
    }
}
