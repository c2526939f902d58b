#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "qsh/symwreath.hpp"

using namespace qsh;

namespace {

/* -------- oracle: S_2-invariants of V tensor V by explicit swap action ----- */
GradedDims swap_invariants_oracle(const GradedDims& v, SignConvention conv) {
    // basis of V: (degree, index) pairs
    std::vector<int> deg;
    for (size_t d = 0; d < v.size(); ++d)
        for (long long i = 0; i < v[d]; ++i) deg.push_back((int)d);
    int n = (int)deg.size();
    Field QQ = Field::rationals();
    int maxdeg = v.empty() ? 0 : 2 * (int)(v.size() - 1);
    GradedDims out((size_t)maxdeg + 1, 0);
    for (int total = 0; total <= maxdeg; ++total) {
        // block of V⊗V in this degree
        std::vector<std::pair<int, int>> pairs;
        std::map<std::pair<int, int>, int> pos;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (deg[(size_t)a] + deg[(size_t)b] == total) {
                    pos[{a, b}] = (int)pairs.size();
                    pairs.push_back({a, b});
                }
        if (pairs.empty()) continue;
        // fixed space of the (signed) swap = kernel of (S - I)
        SparseMat M((int)pairs.size(), (int)pairs.size());
        for (size_t c = 0; c < pairs.size(); ++c) {
            auto [a, b] = pairs[c];
            int sign = 1;
            if (conv == SignConvention::Signed && deg[(size_t)a] % 2 == 1 &&
                deg[(size_t)b] % 2 == 1)
                sign = -1;
            M.add(pos.at({b, a}), (int)c, rat(sign));
            M.add((int)c, (int)c, rat(-1));
        }
        out[(size_t)total] = (long long)kernel_basis(M, QQ).size();
    }
    return trim_graded(out);
}

/* -------- oracle: expand a SymPoly in w honest variables ----------------- */
std::map<std::vector<int>, Rat> expand_full(const SymPoly& f) {
    return expand_truncated(f, f.degree() + 1);  // no exponent reaches the cutoff
}

long long choose(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

GradedDims trimmed(GradedDims v) {
    return trim_graded(v);
}

}  // namespace

TEST_CASE("partitions") {
    auto p3 = partitions(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0].parts == std::vector<int>{3});
    CHECK(p3[1].parts == std::vector<int>{2, 1});
    CHECK(p3[2].parts == std::vector<int>{1, 1, 1});

    Partition two_one = make_partition({2, 1});
    CHECK(two_one.multiplicity(2) == 1);
    CHECK(two_one.multiplicity(1) == 1);
    CHECK(two_one.multiplicity(3) == 0);
    CHECK(two_one.size() == 3);
    CHECK(two_one.str() == "(2,1)");
    CHECK(Partition{}.str() == "()");

    std::vector<size_t> counts{1, 1, 2, 3, 5, 7, 11};
    for (int w = 0; w <= 6; ++w) CHECK(partitions(w).size() == counts[(size_t)w]);

    CHECK_THROWS_AS(make_partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(make_partition({0}), std::invalid_argument);
}

TEST_CASE("invariant_tensor_dims against the explicit swap-action oracle") {
    for (const GradedDims& v :
         {GradedDims{1, 1}, GradedDims{2, 1, 1}, GradedDims{3, 1, 1, 1, 1}, GradedDims{0, 2, 1}}) {
        for (auto conv : {SignConvention::Unsigned, SignConvention::Signed}) {
            CAPTURE(convention_name(conv));
            std::string vs;
            for (long long x : v) vs += std::to_string(x) + ",";
            CAPTURE(vs);
            auto got = invariant_tensor_dims(v, 2, conv);
            auto want = swap_invariants_oracle(v, conv);
            std::string gs, ws;
            for (long long x : got) gs += std::to_string(x) + ",";
            for (long long x : want) ws += std::to_string(x) + ",";
            CAPTURE(gs);
            CAPTURE(ws);
            CHECK(got == want);
        }
    }
    // the worked example: one degree-0 and one degree-1 generator
    CHECK(invariant_tensor_dims({1, 1}, 2, SignConvention::Unsigned) == GradedDims{1, 1, 1});
    CHECK(invariant_tensor_dims({1, 1}, 2, SignConvention::Signed) == GradedDims{1, 1});
}

TEST_CASE("invariant_tensor_dims structural properties") {
    GradedDims v{2, 1, 1};
    for (auto conv : {SignConvention::Unsigned, SignConvention::Signed}) {
        CHECK(invariant_tensor_dims(v, 1, conv) == v);
        CHECK(invariant_tensor_dims(v, 0, conv) == GradedDims{1});
    }
    // even-concentrated input: conventions agree
    GradedDims even{1, 0, 2, 0, 1};
    for (int p = 0; p <= 3; ++p)
        CHECK(invariant_tensor_dims(even, p, SignConvention::Unsigned) ==
              invariant_tensor_dims(even, p, SignConvention::Signed));
    // ungraded symmetric square count
    for (int n = 1; n <= 5; ++n) {
        auto dims = invariant_tensor_dims({n}, 2, SignConvention::Unsigned);
        REQUIRE(dims.size() == 1);
        CHECK(dims[0] == (long long)n * (n + 1) / 2);
    }
}

TEST_CASE("wreath_hh_dims") {
    GradedDims v{2, 1, 1};
    for (auto conv : {SignConvention::Unsigned, SignConvention::Signed}) {
        CAPTURE(convention_name(conv));
        CHECK(wreath_hh_dims(v, 1, conv) == v);
        // w = 2: terms for (1,1) and (2)
        GradedDims expect = invariant_tensor_dims(v, 2, conv);
        if (expect.size() < v.size()) expect.resize(v.size(), 0);
        for (size_t d = 0; d < v.size(); ++d) expect[d] += v[d];
        CHECK(wreath_hh_dims(v, 2, conv) == trimmed(expect));
    }
    // entrywise monotone in v
    GradedDims bigger{2, 2, 1};
    for (auto conv : {SignConvention::Unsigned, SignConvention::Signed})
        for (int w = 1; w <= 3; ++w) {
            auto a = wreath_hh_dims(v, w, conv), b = wreath_hh_dims(bigger, w, conv);
            REQUIRE(a.size() <= b.size());
            for (size_t d = 0; d < a.size(); ++d) CHECK(a[d] <= b[d]);
        }
}

TEST_CASE("power sums in the elementary basis") {
    SymPoly p1 = power_sum_in_e(1, 3);
    CHECK(p1 == sym_monomial(3, {1, 0, 0}, rat(1)));
    SymPoly p2 = power_sum_in_e(2, 3);
    CHECK(p2 == sym_add(sym_monomial(3, {2, 0, 0}, rat(1)), sym_monomial(3, {0, 1, 0}, rat(-2))));
    CHECK(p2.str() == "e1^2 - 2*e2");
    SymPoly p3 = power_sum_in_e(3, 3);
    SymPoly expect3 = sym_add(
        sym_add(sym_monomial(3, {3, 0, 0}, rat(1)), sym_monomial(3, {1, 1, 0}, rat(-3))),
        sym_monomial(3, {0, 0, 1}, rat(3)));
    CHECK(p3 == expect3);
    // e_3 = 0 when w = 2
    SymPoly p3w2 = power_sum_in_e(3, 2);
    CHECK(p3w2 == sym_add(sym_monomial(2, {3, 0}, rat(1)), sym_monomial(2, {1, 1}, rat(-3))));

    // oracle: expanding in w variables gives sum of x_i^k exactly
    for (int w = 1; w <= 4; ++w)
        for (int k = 1; k <= 8; ++k) {
            auto em = expand_full(power_sum_in_e(k, w));
            std::map<std::vector<int>, Rat> expect;
            for (int i = 0; i < w; ++i) {
                std::vector<int> mono((size_t)w, 0);
                mono[(size_t)i] = k;
                expect[mono] = rat(1);
            }
            CAPTURE(w);
            CAPTURE(k);
            CHECK(em == expect);
        }
}

TEST_CASE("lambda basis and homogeneity") {
    // dim Lambda_{w,d} = partitions of d into parts <= w
    CHECK(lambda_basis(2, 0).size() == 1);
    CHECK(lambda_basis(2, 5).size() == 3);  // 5 = 1+2+2 patterns: e1^5, e1^3 e2, e1 e2^2
    CHECK(lambda_basis(3, 6).size() == 7);
    for (int k = 1; k <= 6; ++k) {
        CHECK(power_sum_in_e(k, 3).is_homogeneous());
        CHECK(power_sum_in_e(k, 3).degree() == k);
    }
    CHECK(sym_zero(2).degree() == -1);
}

TEST_CASE("truncated invariant ring") {
    CHECK(truncated_invariant_dims(2, 2) == GradedDims{1, 1, 1});  // 1, y1+y2, y1*y2
    CHECK(truncated_invariant_dims(1, 3) == GradedDims{1});
    // total dimension is the box count C(e-1+w, w), independently via orbit reps
    for (int e = 1; e <= 5; ++e)
        for (int w = 1; w <= 5; ++w) {
            long long total = 0;
            for (long long d : truncated_invariant_dims(e, w)) total += d;
            CHECK(total == choose(e - 1 + w, w));
            // direct enumeration of sorted exponent tuples
            long long direct = 0;
            for (int d = 0; d <= w * (e - 1); ++d) direct += (long long)truncated_basis(e, w, d).size();
            CHECK(total == direct);
        }
}

TEST_CASE("pi kills high power sums") {
    for (int e = 2; e <= 4; ++e)
        for (int w = 2; w <= 3; ++w)
            for (int k = e; k <= e + w + 1; ++k) {
                CAPTURE(e);
                CAPTURE(w);
                CAPTURE(k);
                CHECK(is_zero_vec(pi_coords(power_sum_in_e(k, w), e, k)));
            }
    // and keeps low ones alive
    CHECK_FALSE(is_zero_vec(pi_coords(power_sum_in_e(1, 2), 2, 1)));
}

TEST_CASE("kernel_pi_report at e=2, w=2 documents the p_2 discrepancy") {
    auto rep = kernel_pi_report(2, 2, 6);
    CHECK(rep.generator_indices == std::vector<int>{3, 4, 5});
    CHECK(rep.ideal_contained);       // <p_3,p_4,p_5> really sits inside Ker pi
    CHECK_FALSE(rep.kernel_matches);  // ...but misses p_2 in degree 2
    REQUIRE(rep.degrees.size() == 7);
    const auto& d2 = rep.degrees[2];
    CHECK(d2.lambda_dim == 2);
    CHECK(d2.kernel_dim == 1);
    CHECK(d2.ideal_dim == 0);
    CHECK_FALSE(d2.kernel_in_ideal);
    REQUIRE(d2.witnesses.size() >= 1);
    CHECK(d2.witnesses[0].find("p_2") == 0);
    // rank-nullity per degree
    for (const auto& row : rep.degrees) CHECK(row.kernel_dim == row.lambda_dim - row.image_dim);
    CHECK_THROWS_AS(kernel_pi_report(2, 2, 3), std::invalid_argument);
}

TEST_CASE("quotient_hilbert basics") {
    // no generators: Hilbert series of Lambda_2 itself
    CHECK(quotient_hilbert(2, 2, {}, 5) == GradedDims{1, 1, 2, 2, 3, 3});
    // complete intersection Lambda_2/<p_2, p_3> = [1,1,1]
    std::vector<SymPoly> p23{power_sum_in_e(2, 2), power_sum_in_e(3, 2)};
    CHECK(quotient_hilbert(2, 2, p23, 8) == GradedDims{1, 1, 1});
    CHECK(quotient_hilbert(2, 2, p23, 8) == truncated_invariant_dims(2, 2));
    // the generator list of the text leaves degree 2 too big
    auto q = quotient_hilbert(2, 2, power_sum_ideal_generators(2, 2), 6);
    REQUIRE(q.size() >= 3);
    CHECK(q[2] == 2);
    // inhomogeneous generators rejected
    SymPoly bad = sym_add(power_sum_in_e(1, 2), power_sum_in_e(2, 2));
    CHECK_THROWS_AS(quotient_hilbert(2, 2, {bad}, 3), std::invalid_argument);
}

TEST_CASE("Lambda_w modulo the brute-force kernel is the truncated invariant ring") {
    for (int e = 2; e <= 4; ++e)
        for (int w = 2; w <= 4; ++w) {
            int maxd = 10;
            auto quot = quotient_hilbert(e, w, kernel_pi_basis(e, w, maxd), maxd);
            auto tgt = truncated_invariant_dims(e, w);
            for (int d = 0; d <= maxd; ++d) {
                long long a = d < (int)quot.size() ? quot[(size_t)d] : 0;
                long long b = d < (int)tgt.size() ? tgt[(size_t)d] : 0;
                CAPTURE(e);
                CAPTURE(w);
                CAPTURE(d);
                CHECK(a == b);
            }
        }
}
