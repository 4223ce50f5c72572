#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "quadstab/chain.hpp"
#include "quadstab/linalg.hpp"
#include "quadstab/matrix.hpp"
#include "quadstab/smith.hpp"

using namespace quadstab;

namespace {

ExactMatrix random_int_matrix(std::mt19937& rng, long rows, long cols, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    ExactMatrix m(rows, cols);
    for (long r = 0; r < rows; ++r)
        for (long c = 0; c < cols; ++c) {
            int v = dist(rng);
            if (v != 0) m.set(r, c, v);
        }
    return m;
}

// test oracle: determinant by dense fraction-free elimination
mpq_class det_oracle(const ExactMatrix& m) {
    REQUIRE(m.rows() == m.cols());
    long n = m.rows();
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n, 0));
    for (long r = 0; r < n; ++r)
        for (const auto& [c, v] : m.row(r)) a[r][c] = v;
    mpq_class det = 1;
    for (long k = 0; k < n; ++k) {
        long piv = -1;
        for (long r = k; r < n; ++r)
            if (sgn(a[r][k]) != 0) { piv = r; break; }
        if (piv < 0) return 0;
        if (piv != k) {
            std::swap(a[piv], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (long r = k + 1; r < n; ++r) {
            if (sgn(a[r][k]) == 0) continue;
            mpq_class f = a[r][k] / a[k][k];
            for (long c = k; c < n; ++c) a[r][c] -= f * a[k][c];
        }
    }
    return det;
}

// test oracle: gcd of all k x k minors
mpz_class minor_gcd_oracle(const ExactMatrix& m, long k) {
    std::vector<long> rows_sel(k), cols_sel(k);
    mpz_class g = 0;
    auto rec_cols = [&](auto&& self, long pos, long start) -> void {
        if (pos == k) {
            ExactMatrix sub(k, k);
            for (long i = 0; i < k; ++i)
                for (long j = 0; j < k; ++j) {
                    mpq_class v = m.get(rows_sel[i], cols_sel[j]);
                    if (sgn(v) != 0) sub.set(i, j, v);
                }
            mpq_class d = det_oracle(sub);
            mpz_class z = d.get_num();
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
            return;
        }
        for (long c = start; c < m.cols(); ++c) {
            cols_sel[pos] = c;
            self(self, pos + 1, c + 1);
        }
    };
    auto rec_rows = [&](auto&& self, long pos, long start) -> void {
        if (pos == k) {
            rec_cols(rec_cols, 0, 0);
            return;
        }
        for (long r = start; r < m.rows(); ++r) {
            rows_sel[pos] = r;
            self(self, pos + 1, r + 1);
        }
    };
    rec_rows(rec_rows, 0, 0);
    return g;
}

} // namespace

TEST_CASE("smith normal form basics", "[exactalg]") {
    SECTION("identity") {
        auto sf = smith_normal_form(ExactMatrix::identity(3));
        REQUIRE(sf.invariant_factors == std::vector<mpz_class>{1, 1, 1});
        REQUIRE(sf.rank == 3);
    }
    SECTION("hand-reduced 2x2") {
        // [[2,4],[6,8]]: gcd of entries 2, |det| = 8, so factors (2, 4)
        auto sf = smith_normal_form(ExactMatrix::from_rows({{2, 4}, {6, 8}}));
        REQUIRE(sf.invariant_factors == std::vector<mpz_class>{2, 4});
    }
    SECTION("zero matrix") {
        auto sf = smith_normal_form(ExactMatrix(2, 3));
        REQUIRE(sf.invariant_factors.empty());
        REQUIRE(sf.rank == 0);
    }
    SECTION("non-integral input rejected") {
        ExactMatrix m(1, 1);
        m.set(0, 0, mpq_class(1, 2));
        REQUIRE_THROWS_AS(smith_normal_form(m), std::domain_error);
    }
}

TEST_CASE("smith transforms are unimodular and diagonalize", "[exactalg]") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 25; ++trial) {
        long rows = 1 + static_cast<long>(rng() % 5);
        long cols = 1 + static_cast<long>(rng() % 5);
        ExactMatrix m = random_int_matrix(rng, rows, cols, -6, 6);
        auto sf = smith_normal_form(m, true);
        ExactMatrix d = sf.U * m * sf.V;
        ExactMatrix expect(rows, cols);
        for (std::size_t i = 0; i < sf.invariant_factors.size(); ++i)
            expect.set(static_cast<long>(i), static_cast<long>(i), mpq_class(sf.invariant_factors[i]));
        REQUIRE(d == expect);
        REQUIRE(abs(det_oracle(sf.U)) == 1);
        REQUIRE(abs(det_oracle(sf.V)) == 1);
        REQUIRE(det_oracle(sf.U) == sf.det_u);
        REQUIRE(det_oracle(sf.V) == sf.det_v);
        for (std::size_t i = 0; i + 1 < sf.invariant_factors.size(); ++i)
            REQUIRE(sf.invariant_factors[i + 1] % sf.invariant_factors[i] == 0);
    }
}

TEST_CASE("invariant factors match minor gcds", "[exactalg]") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 10; ++trial) {
        ExactMatrix m = random_int_matrix(rng, 3, 4, -5, 5);
        auto sf = smith_normal_form(m);
        mpz_class prod = 1;
        for (long k = 1; k <= sf.rank; ++k) {
            prod *= sf.invariant_factors[static_cast<std::size_t>(k - 1)];
            REQUIRE(prod == minor_gcd_oracle(m, k));
        }
        REQUIRE(rank(m, CoefficientDomain::rationals()) == sf.rank);
    }
}

TEST_CASE("prime-field rank agrees with the Smith form", "[exactalg]") {
    // rank mod p = number of invariant factors not divisible by p
    std::mt19937 rng(4040);
    for (int trial = 0; trial < 20; ++trial) {
        long rows = 1 + static_cast<long>(rng() % 5);
        long cols = 1 + static_cast<long>(rng() % 5);
        ExactMatrix m = random_int_matrix(rng, rows, cols, -9, 9);
        auto sf = smith_normal_form(m);
        for (std::uint64_t p : {2ull, 3ull, 5ull}) {
            long expect = 0;
            for (const auto& f : sf.invariant_factors)
                if (f % static_cast<unsigned long>(p) != 0) ++expect;
            REQUIRE(rank(m, CoefficientDomain::prime_field(p)) == expect);
        }
        REQUIRE(rank(m, CoefficientDomain::rationals()) ==
                rank(m.transpose(), CoefficientDomain::rationals()));
    }
}

TEST_CASE("rank over the three domains", "[exactalg]") {
    REQUIRE(rank(ExactMatrix::identity(5), CoefficientDomain::rationals()) == 5);
    ExactMatrix m = ExactMatrix::from_rows({{1, 2}, {2, 4}});
    REQUIRE(rank(m, CoefficientDomain::rationals()) == 1);
    REQUIRE(rank(m, CoefficientDomain::prime_field(2)) == 1);
    REQUIRE(rank(m, CoefficientDomain::integers()) == 1);
    // det [[1,2],[2,1]] = -3: full rank except in characteristic 3
    ExactMatrix m3 = ExactMatrix::from_rows({{1, 2}, {2, 1}});
    REQUIRE(rank(m3, CoefficientDomain::rationals()) == 2);
    REQUIRE(rank(m3, CoefficientDomain::prime_field(2)) == 2);
    REQUIRE(rank(m3, CoefficientDomain::prime_field(3)) == 1);
}

TEST_CASE("chain complex validation", "[exactalg]") {
    // d1 * d2 != 0
    ExactMatrix d1 = ExactMatrix::from_rows({{1}});
    ExactMatrix d2 = ExactMatrix::from_rows({{1}});
    REQUIRE_THROWS_AS(FreeChainComplex(0, {1, 1, 1}, {d1, d2}), std::invalid_argument);
    ExactMatrix bad_shape(2, 2);
    REQUIRE_THROWS_AS(FreeChainComplex(0, {1, 1}, {bad_shape}), std::invalid_argument);
}

TEST_CASE("homology of small complexes", "[exactalg]") {
    SECTION("zero map Z -> Z") {
        FreeChainComplex c(0, {1, 1}, {ExactMatrix(1, 1)});
        auto h = homology(c, CoefficientDomain::integers());
        REQUIRE(h.at(0) == AbelianInvariants::free(1));
        REQUIRE(h.at(1) == AbelianInvariants::free(1));
    }
    SECTION("boundary of the tetrahedron") {
        ExactMatrix d1 = ExactMatrix::from_rows({
            {-1, -1, -1, 0, 0, 0},
            {1, 0, 0, -1, -1, 0},
            {0, 1, 0, 1, 0, -1},
            {0, 0, 1, 0, 1, 1},
        });
        ExactMatrix d2 = ExactMatrix::from_rows({
            {1, 1, 0, 0},
            {-1, 0, 1, 0},
            {0, -1, -1, 0},
            {1, 0, 0, 1},
            {0, 1, 0, -1},
            {0, 0, 1, 1},
        });
        FreeChainComplex c(0, {4, 6, 4}, {d1, d2});
        auto hz = homology(c, CoefficientDomain::integers());
        REQUIRE(hz.at(0) == AbelianInvariants::free(1));
        REQUIRE(hz.at(1).is_trivial());
        REQUIRE(hz.at(2) == AbelianInvariants::free(1));
        auto hq = homology(c, CoefficientDomain::rationals());
        for (long d = 0; d <= 2; ++d) REQUIRE(hq.dim(d) == hz.at(d).free_rank);
    }
}

TEST_CASE("abelian invariants canonical form", "[exactalg]") {
    auto a = AbelianInvariants::cyclic(3);
    auto b = AbelianInvariants::cyclic(2);
    auto s = AbelianInvariants::direct_sum(a, b);
    REQUIRE(s.factors == std::vector<mpz_class>{6});
    REQUIRE(s.to_string() == "Z/6");
    auto t = AbelianInvariants::direct_sum(s, AbelianInvariants{2, {2}});
    REQUIRE(t.factors == std::vector<mpz_class>{2, 6});
    REQUIRE(t.free_rank == 2);
    REQUIRE(t.to_string() == "Z/2 + Z/6 + Z^2");
    REQUIRE(AbelianInvariants{}.to_string() == "0");
}
