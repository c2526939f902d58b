#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <random>
#include "qsh/linalg.hpp"

using namespace qsh;

namespace {

SparseMat from_rows(const std::vector<std::vector<long>>& rows, int cols) {
    SparseMat m((int)rows.size(), cols);
    for (int r = 0; r < (int)rows.size(); ++r)
        for (int c = 0; c < cols; ++c)
            if (rows[r][c] != 0) m.set(r, c, Rat(rows[r][c]));
    return m;
}

/* integer entries only when integral, so the same matrices are usable over
   every test field */
SparseMat random_mat(std::mt19937& rng, int rows, int cols, bool integral = false) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 3);
    SparseMat m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            if (rng() % 3 != 0) m.set(r, c, rat(num(rng), integral ? 1 : den(rng)));
    return m;
}

}  // namespace

TEST_CASE("rank over Q: basic examples") {
    Field q = Field::rationals();
    CHECK(rank(from_rows({{1, 0}, {0, 1}}, 2), q) == 2);
    CHECK(rank(from_rows({{1, 1}, {1, 1}}, 2), q) == 1);
    CHECK(rank(from_rows({{1, 2}, {2, 4}, {3, 6}}, 2), q) == 1);
    CHECK(rank(SparseMat(0, 3), q) == 0);
    CHECK(rank(SparseMat(3, 0), q) == 0);
}

TEST_CASE("rank depends on the field: [[2]] has rank 1 over Q, 0 over F_2") {
    SparseMat m = from_rows({{2}}, 1);
    CHECK(rank(m, Field::rationals()) == 1);
    CHECK(rank(m, Field::prime(2)) == 0);
    CHECK(rank(m, Field::prime(3)) == 1);
}

TEST_CASE("prime field arithmetic") {
    Field f5 = Field::prime(5);
    CHECK(f5.reduce(Rat(7)) == Rat(2));
    CHECK(f5.reduce(Rat(-1)) == Rat(4));
    CHECK(f5.reduce(Rat(1, 2)) == Rat(3));  // 2 * 3 = 6 = 1 mod 5
    CHECK(f5.inv(Rat(3)) == Rat(2));
    CHECK_THROWS(Field::prime(4));
    CHECK_THROWS(Field::prime(1));
    CHECK_THROWS(Field::prime(2).reduce(Rat(1, 2)));
}

TEST_CASE("kernel basis: exact null space") {
    Field q = Field::rationals();
    SparseMat m = from_rows({{1, 2, 3}, {2, 4, 6}}, 3);
    auto ker = kernel_basis(m, q);
    REQUIRE(ker.size() == 2);
    for (const Vec& v : ker) CHECK(is_zero_vec(m.apply(v)));
    // deterministic: free columns 1 and 2 in ascending order
    CHECK(ker[0][1] == Rat(1));
    CHECK(ker[1][2] == Rat(1));
    CHECK(ker[0] == Vec{Rat(-2), Rat(1), Rat(0)});
}

TEST_CASE("solve: consistent and inconsistent systems") {
    Field q = Field::rationals();
    SparseMat m = from_rows({{1, 1}, {0, 1}}, 2);
    auto x = solve(m, {Rat(3), Rat(1)}, q);
    REQUIRE(x.has_value());
    CHECK(*x == Vec{Rat(2), Rat(1)});

    SparseMat sing = from_rows({{1, 1}, {1, 1}}, 2);
    CHECK_FALSE(solve(sing, {Rat(1), Rat(2)}, q).has_value());
    auto y = solve(sing, {Rat(2), Rat(2)}, q);
    REQUIRE(y.has_value());
    CHECK(sing.apply(*y) == Vec{Rat(2), Rat(2)});
}

TEST_CASE("solve: forward and backward pivot orders both solve, possibly differently") {
    Field q = Field::rationals();
    SparseMat m = from_rows({{1, 1, 1}}, 3);
    Vec b{Rat(5)};
    auto xf = solve(m, b, q, PivotOrder::Forward);
    auto xb = solve(m, b, q, PivotOrder::Backward);
    REQUIRE(xf.has_value());
    REQUIRE(xb.has_value());
    CHECK(m.apply(*xf) == b);
    CHECK(m.apply(*xb) == b);
    CHECK(*xf != *xb);  // pivot at column 0 vs column 2
}

TEST_CASE("solve over F_l") {
    Field f2 = Field::prime(2);
    // x + y = 1, y = 1 over F_2
    SparseMat m = from_rows({{1, 1}, {0, 1}}, 2);
    auto x = solve(m, {Rat(1), Rat(1)}, f2);
    REQUIRE(x.has_value());
    CHECK(*x == Vec{Rat(0), Rat(1)});
    // 2x = 1 is inconsistent mod 2
    CHECK_FALSE(solve(from_rows({{2}}, 1), {Rat(1)}, f2).has_value());
}

TEST_CASE("property: rank + nullity = cols, and kernel vectors are in the kernel") {
    std::mt19937 rng(20260823);
    for (const Field& f : {Field::rationals(), Field::prime(2), Field::prime(5)}) {
        for (int trial = 0; trial < 12; ++trial) {
            int rows = 1 + (int)(rng() % 6), cols = 1 + (int)(rng() % 6);
            SparseMat m = random_mat(rng, rows, cols, !f.is_rational());
            int r = rank(m, f);
            auto ker = kernel_basis(m, f);
            CHECK(r + (int)ker.size() == cols);
            for (const Vec& v : ker) {
                Vec mv = m.apply(v);
                for (Rat& e : mv) e = f.reduce(e);
                CHECK(is_zero_vec(mv));
            }
        }
    }
}

TEST_CASE("property: rank is invariant under row permutation") {
    std::mt19937 rng(7);
    Field q = Field::rationals();
    for (int trial = 0; trial < 10; ++trial) {
        int rows = 2 + (int)(rng() % 5), cols = 2 + (int)(rng() % 5);
        SparseMat m = random_mat(rng, rows, cols);
        std::vector<int> perm(rows);
        for (int i = 0; i < rows; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        SparseMat p(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (const auto& [c, v] : m.row(r)) p.set(perm[r], c, v);
        CHECK(rank(m, q) == rank(p, q));
    }
}

TEST_CASE("property: solve result actually solves (random consistent systems)") {
    std::mt19937 rng(99);
    Field f3 = Field::prime(3);
    for (const Field& f : {Field::rationals(), f3}) {
        for (int trial = 0; trial < 10; ++trial) {
            int rows = 1 + (int)(rng() % 5), cols = 1 + (int)(rng() % 5);
            SparseMat m = random_mat(rng, rows, cols, !f.is_rational());
            Vec x0(cols);
            for (int c = 0; c < cols; ++c) x0[c] = Rat((long)(rng() % 7) - 3);
            Vec b = m.apply(x0);
            for (auto ord : {PivotOrder::Forward, PivotOrder::Backward}) {
                auto x = solve(m, b, f, ord);
                REQUIRE(x.has_value());
                Vec mx = m.apply(*x);
                for (int r = 0; r < rows; ++r) CHECK(f.reduce(mx[r]) == f.reduce(b[r]));
            }
        }
    }
}

TEST_CASE("echelon form is reduced and deterministic") {
    Field q = Field::rationals();
    SparseMat m = from_rows({{0, 2, 4}, {1, 1, 1}, {1, 3, 5}}, 3);
    Echelon e = echelonize(m, q);
    CHECK(e.rank() == 2);
    CHECK(e.pivot_cols == std::vector<int>{0, 1});
    // pivot columns cleared elsewhere
    CHECK(e.rows[0][1] == Rat(0));
    CHECK(e.rows[1][0] == Rat(0));
    CHECK(e.rows[0] == Vec{Rat(1), Rat(0), Rat(-1)});
    CHECK(e.rows[1] == Vec{Rat(0), Rat(1), Rat(2)});
}

TEST_CASE("EchelonBasis: canonical RREF independent of insertion order") {
    Field q = Field::rationals();
    std::vector<Vec> vs = {
        {Rat(1), Rat(2), Rat(0)}, {Rat(0), Rat(1), Rat(1)}, {Rat(1), Rat(3), Rat(1)}};
    EchelonBasis a(3, q), b(3, q);
    a.add(vs[0]); a.add(vs[1]); a.add(vs[2]);
    b.add(vs[2]); b.add(vs[0]); b.add(vs[1]);
    CHECK(a.dim() == 2);
    CHECK(b.dim() == 2);
    CHECK(a.basis() == b.basis());
    CHECK(a.contains({Rat(1), Rat(3), Rat(1)}));
    CHECK_FALSE(a.contains({Rat(0), Rat(0), Rat(1)}));
    Vec coords = a.coordinates({Rat(1), Rat(3), Rat(1)});
    // reconstruct from coordinates
    auto rows = a.basis();
    Vec rec = zero_vec(3);
    for (int i = 0; i < (int)rows.size(); ++i)
        for (int k = 0; k < 3; ++k) rec[k] += coords[i] * rows[i][k];
    CHECK(rec == Vec{Rat(1), Rat(3), Rat(1)});
}

TEST_CASE("column space dimension equals rank") {
    std::mt19937 rng(5);
    Field q = Field::rationals();
    for (int trial = 0; trial < 8; ++trial) {
        SparseMat m = random_mat(rng, 2 + (int)(rng() % 4), 2 + (int)(rng() % 4));
        CHECK(column_space(m, q).dim() == rank(m, q));
    }
}
