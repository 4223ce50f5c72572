#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "quadstab/presentation.hpp"
#include "quadstab/quadfield.hpp"

using namespace quadstab;

TEST_CASE("word parsing and reduction", "[grouppres]") {
    std::vector<std::string> gens = {"J", "T", "A"};
    Word w = parse_word("(T A)^3 J^-1", gens);
    REQUIRE(w.format(gens) == "T A T A T A J^-1");
    REQUIRE(parse_word("T T^-1", gens).empty());
    REQUIRE(parse_word("T^2 T^-1 A", gens).format(gens) == "T A");
    REQUIRE(parse_word("(T A)^-2", gens) == parse_word("A^-1 T^-1 A^-1 T^-1", gens));
    REQUIRE(w.inverse().concat(w).empty());
    REQUIRE_THROWS_AS(parse_word("T Q", gens), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_word("(T A", gens), std::invalid_argument);
}

TEST_CASE("presentation text format", "[grouppres]") {
    auto p = GroupPresentation::parse("gens: a b\na^2\n(a b)^3\n# comment\n");
    REQUIRE(p.generators.size() == 2);
    REQUIRE(p.relators.size() == 2);
    auto q = GroupPresentation::parse(p.format());
    REQUIRE(q.format() == p.format());
    REQUIRE_THROWS_AS(GroupPresentation::parse("a^2\n"), std::invalid_argument);
}

TEST_CASE("abelianization basics", "[grouppres]") {
    GroupPresentation p;
    p.generators = {"a"};
    p.add_relator("a^2");
    REQUIRE(abelianize(p).to_string() == "Z/2");

    // invariance under inversion, cyclic permutation and free insertion
    std::mt19937 rng(4242);
    GroupPresentation base;
    base.generators = {"x", "y", "z"};
    base.add_relator("x^2 y^-3 z");
    base.add_relator("(x z)^2 y");
    auto expected = abelianize(base);
    for (int trial = 0; trial < 20; ++trial) {
        GroupPresentation mod = base;
        std::size_t which = rng() % mod.relators.size();
        switch (rng() % 3) {
            case 0: mod.relators[which] = mod.relators[which].inverse(); break;
            case 1: mod.relators[which] = mod.relators[which].cyclic_permutation(); break;
            default: {
                long g = static_cast<long>(rng() % 3);
                Word noise = Word::generator(g, 1).concat(mod.relators[which]).concat(Word::generator(g, -1));
                mod.relators[which] = noise;
                break;
            }
        }
        REQUIRE(abelianize(mod) == expected);
    }
}

TEST_CASE("builtin special linear presentations", "[grouppres]") {
    auto swan = builtin_swan_sl2();
    REQUIRE(swan.pres.relators.size() == 14); // 9 printed relations, centrality as 5 commutators
    REQUIRE(abelianize(swan.pres).to_string() == "Z/2 + Z/6 + Z^2");

    auto fgt = builtin_fgt_sl();
    REQUIRE(fgt.pres.relators.size() == 10);
    REQUIRE(abelianize(fgt.pres).to_string() == "Z/3 + Z^2");

    SECTION("matrix transcription spot checks") {
        const QuadInt w = QuadInt::omega();
        REQUIRE(swan.matrices[swan.pres.gen_index("T")] == Mat2::of(1, 1, 0, 1));
        REQUIRE(swan.matrices[swan.pres.gen_index("B")] == Mat2::of(-w, 2, 2, w));
        REQUIRE(fgt.matrices[fgt.pres.gen_index("V")] ==
                Mat2::of(1, QuadInt(mpq_class(1, 2), mpq_class(1, 2)), 0, 1));
        REQUIRE(fgt.matrices[fgt.pres.gen_index("D")] == Mat2::of(1, 0, QuadInt(1) - w, 1));
    }

    SECTION("all relators hold under exact matrix evaluation") {
        for (const auto& mp : {swan, fgt}) {
            auto rep = verify_relators(mp.pres, mp.matrices);
            REQUIRE(rep.relators_pass);
            REQUIRE(rep.determinants_pass);
        }
    }

    SECTION("a corrupted relator is reported by name") {
        auto bad = swan;
        bad.pres.relators[7] = parse_word("A T", bad.pres.generators);
        auto rep = verify_relators(bad.pres, bad.matrices);
        REQUIRE(!rep.relators_pass);
        bool found = false;
        for (const auto& c : rep.checks)
            if (!c.pass) {
                found = true;
                REQUIRE(c.relator == "A T");
                REQUIRE(!c.value.empty());
            }
        REQUIRE(found);
    }
}

TEST_CASE("conjugation action certificates", "[grouppres]") {
    Mat2 E = conjugation_matrix_e();
    REQUIRE(E.det() == QuadInt(-1));
    REQUIRE(E * E == Mat2::identity());

    auto swan = builtin_swan_sl2();
    for (const auto& c : derive_conjugation_action(swan, E, swan_e_action(swan.pres))) REQUIRE(c.pass);
    auto fgt = builtin_fgt_sl();
    for (const auto& c : derive_conjugation_action(fgt, E, fgt_e_action(fgt.pres))) REQUIRE(c.pass);

    SECTION("a wrong candidate is reported with both matrices") {
        auto candidates = swan_e_action(swan.pres);
        candidates[1] = parse_word("T", swan.pres.generators); // E T E^-1 is T^-1, not T
        auto certs = derive_conjugation_action(swan, E, candidates);
        REQUIRE(!certs[1].pass);
        REQUIRE(!certs[1].lhs.empty());
        REQUIRE(!certs[1].rhs.empty());
    }
}

TEST_CASE("order-2 extensions", "[grouppres]") {
    SECTION("trivial action is a direct product") {
        GroupPresentation p;
        p.generators = {"a"};
        p.add_relator("a^3");
        std::vector<Word> id = {Word::generator(0)};
        auto ext = semidirect_z2(p, id, Word::one());
        REQUIRE(abelianize(ext).to_string() == "Z/6"); // Z/3 + Z/2 in canonical form
    }
    SECTION("general-linear extensions of the builtins") {
        auto swan = builtin_swan_sl2();
        auto gl_free = semidirect_z2(swan.pres, swan_e_action(swan.pres), Word::one());
        REQUIRE(abelianize(gl_free) == AbelianInvariants{0, {2, 2, 2, 2, 2}});
        auto fgt = builtin_fgt_sl();
        auto gl_twisted = semidirect_z2(fgt.pres, fgt_e_action(fgt.pres), Word::one());
        REQUIRE(abelianize(gl_twisted) == AbelianInvariants{0, {2, 2, 2}});
    }
    SECTION("identity action adds a Z/2 summand") {
        std::mt19937 rng(31);
        for (int trial = 0; trial < 10; ++trial) {
            GroupPresentation p;
            long ng = 1 + static_cast<long>(rng() % 3);
            for (long i = 0; i < ng; ++i) p.generators.push_back("g" + std::to_string(i));
            long nr = static_cast<long>(rng() % 3);
            for (long r = 0; r < nr; ++r) {
                Word w;
                long len = 1 + static_cast<long>(rng() % 4);
                for (long i = 0; i < len; ++i)
                    w.append(static_cast<long>(rng() % static_cast<unsigned long>(ng)),
                             static_cast<long>(rng() % 5) - 2);
                if (!w.empty()) p.relators.push_back(w);
            }
            std::vector<Word> id;
            for (long i = 0; i < ng; ++i) id.push_back(Word::generator(i));
            auto lhs = abelianize(semidirect_z2(p, id, Word::one()));
            auto rhs = AbelianInvariants::direct_sum(abelianize(p), AbelianInvariants::cyclic(2));
            REQUIRE(lhs == rhs);
        }
    }
    SECTION("action must cover all generators") {
        GroupPresentation p;
        p.generators = {"a", "b"};
        REQUIRE_THROWS_AS(semidirect_z2(p, {Word::generator(0)}, Word::one()), std::invalid_argument);
    }
}

TEST_CASE("abelianization table", "[grouppres]") {
    auto table = abelianization_table(4);
    REQUIRE(table.size() == 8);
    for (const auto& e : table) {
        if (e.rank == 1) {
            REQUIRE(e.value.to_string() == "Z/2");
            REQUIRE(e.source == "computed");
        } else if (e.rank == 2) {
            REQUIRE(e.source == "computed");
            if (e.column == "free") REQUIRE(e.value == AbelianInvariants{0, {2, 2, 2, 2, 2}});
            else REQUIRE(e.value == AbelianInvariants{0, {2, 2, 2}});
        } else {
            REQUIRE(e.source == "literature");
            REQUIRE(e.value.to_string() == "Z/2");
        }
    }
}
