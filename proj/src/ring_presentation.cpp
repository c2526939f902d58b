#include "qsh/ring_presentation.hpp"

#include <sstream>
#include <stdexcept>

namespace qsh {

namespace {

bool divisible(const std::vector<int>& exp, const std::vector<int>& rel) {
    for (size_t v = 0; v < exp.size(); ++v)
        if (exp[v] < rel[v]) return false;
    return true;
}

void enumerate(const MonomialQuotient& q, const std::vector<int>& cap, size_t v,
               std::vector<int>& exp, int degree, int max_degree, GradedDims& out) {
    if (v == q.var_degrees.size()) {
        for (const auto& rel : q.relations)
            if (divisible(exp, rel)) return;
        out[(size_t)degree] += 1;
        return;
    }
    for (int k = 0; k <= cap[v]; ++k) {
        int d = degree + k * q.var_degrees[v];
        if (d > max_degree) break;
        exp[v] = k;
        enumerate(q, cap, v + 1, exp, d, max_degree, out);
    }
    exp[v] = 0;
}

}  // namespace

GradedDims monomial_quotient_hilbert(const MonomialQuotient& q, int max_degree) {
    size_t nv = q.var_degrees.size();
    for (const auto& rel : q.relations)
        if (rel.size() != nv) throw std::invalid_argument("relation length != variable count");
    std::vector<int> cap(nv, -1);
    for (size_t v = 0; v < nv; ++v) {
        if (q.var_degrees[v] > 0) cap[v] = max_degree / q.var_degrees[v];
        for (const auto& rel : q.relations) {
            bool pure = rel[v] > 0;
            for (size_t u = 0; u < nv && pure; ++u)
                if (u != v && rel[u] != 0) pure = false;
            if (pure && (cap[v] < 0 || rel[v] - 1 < cap[v])) cap[v] = rel[v] - 1;
        }
        if (cap[v] < 0)
            throw std::invalid_argument("degree-0 variable with unbounded exponent");
    }
    GradedDims out((size_t)max_degree + 1, 0);
    std::vector<int> exp(nv, 0);
    enumerate(q, cap, 0, exp, 0, max_degree, out);
    return out;
}

GradedDims even_part_hilbert(int e) {
    if (e < 2) throw std::invalid_argument("the family A_e needs e >= 2");
    int nz = e - 1;
    MonomialQuotient q;
    q.var_degrees.assign((size_t)nz, 0);
    q.var_degrees.push_back(2);  // y
    auto rel = [&](std::initializer_list<std::pair<int, int>> entries) {
        std::vector<int> r((size_t)nz + 1, 0);
        for (auto [v, k] : entries) r[(size_t)v] += k;
        q.relations.push_back(std::move(r));
    };
    for (int i = 0; i < nz; ++i)
        for (int j = i; j < nz; ++j) rel({{i, 1}, {j, 1}});
    for (int i = 0; i < nz; ++i) rel({{i, 1}, {nz, 1}});  // z_k y
    rel({{nz, e}});                                       // y^e
    return monomial_quotient_hilbert(q, 2 * (e - 1));
}

Vec central_cochain(const BimoduleResolution& res, const Elem& z) {
    CochainBasis C0 = cochain_basis(res.terms[0]);
    const auto& A = *res.A;
    Vec out = zero_vec(C0.dim());
    for (int g = 0; g < (int)res.terms[0].gens.size(); ++g) {
        auto [i, j] = res.terms[0].gens[(size_t)g];
        Elem piece = A.mul(A.mul(A.idempotent(i), z), A.idempotent(j));
        for (auto& [x, c] : piece.c) out[(size_t)C0.find(g, x)] += c;
    }
    return out;
}

bool RingReport::pass() const {
    if (!resolution_ok || !dims_match || !lift_independent) return false;
    for (const auto* sec : {&relations, &nonvanishing, &commutativity})
        for (const auto& ch : *sec)
            if (!ch.pass) return false;
    return true;
}

RingReport verify_ring_presentation(int e, const Field& f) {
    if (e < 2) throw std::invalid_argument("the family A_e needs e >= 2");
    RingReport rep;
    rep.e = e;
    rep.field = f.name();

    auto A = build_A_e(e);
    int top = resolution_length(e);
    auto res = paper_resolution(A, top);
    rep.resolution_ok = verify_complex(res, f).pass();
    if (!rep.resolution_ok) return rep;

    rep.hh = hh_dims(res, f);

    // presented dims of k[z_1..z_{e-1}, x, y]/J
    {
        int nz = e - 1;
        MonomialQuotient q;
        q.var_degrees.assign((size_t)nz, 0);
        q.var_degrees.push_back(1);  // x
        q.var_degrees.push_back(2);  // y
        int vx = nz, vy = nz + 1;
        auto rel = [&](std::initializer_list<std::pair<int, int>> entries) {
            std::vector<int> r((size_t)nz + 2, 0);
            for (auto [v, k] : entries) r[(size_t)v] += k;
            q.relations.push_back(std::move(r));
        };
        for (int i = 0; i < nz; ++i)
            for (int j = i; j < nz; ++j) rel({{i, 1}, {j, 1}});
        for (int i = 0; i < nz; ++i) rel({{i, 1}, {vx, 1}});
        for (int i = 0; i < nz; ++i) rel({{i, 1}, {vy, 1}});
        rel({{vx, 2}});
        rel({{vx, 1}, {vy, e - 1}});
        rel({{vy, e}});
        rep.presented = monomial_quotient_hilbert(q, top);
    }
    rep.dims_match = graded_equal(rep.hh, rep.presented);

    // generators: z_i = class of the central loop c_i; x, y canonical
    CochainBasis C0 = cochain_basis(res.terms[0]);
    std::vector<Vec> z;
    for (int i = 1; i <= e - 1; ++i) {
        Elem ci = A.basis_elem(*A.index_of_name("c" + std::to_string(i)));
        z.push_back(central_cochain(res, ci));
        rep.generators.push_back("z_" + std::to_string(i) + " = " + C0.cochain_str(z.back()));
    }
    auto reps1 = cohomology_representatives(res, 1, f);
    auto reps2 = cohomology_representatives(res, 2, f);
    if (reps1.size() != 1 || reps2.size() != 1)
        throw std::runtime_error("expected one-dimensional HH^1 and HH^2");
    Vec x = reps1[0], y = reps2[0];
    rep.generators.push_back("x = " + cochain_basis(res.terms[1]).cochain_str(x));
    rep.generators.push_back("y = " + cochain_basis(res.terms[2]).cochain_str(y));

    auto zero_class = [&](int n, const Vec& v) {
        return n > top || is_coboundary(res, n, v, f);
    };
    auto check = [](std::vector<RingCheck>& sec, std::string name, bool pass, std::string detail) {
        sec.push_back(RingCheck{std::move(name), pass, std::move(detail)});
    };

    // powers of y: ypow[s] represents y^s, degree 2s, for s ≤ e-1
    std::vector<Vec> ypow{Vec{}, y};
    for (int s = 2; s <= e - 1; ++s)
        ypow.push_back(yoneda_product(res, 2, y, 2 * (s - 1), ypow[(size_t)(s - 1)], f));

    // relations of J
    for (int i = 0; i < e - 1; ++i)
        for (int j = i; j < e - 1; ++j) {
            Vec p = yoneda_product(res, 0, z[(size_t)i], 0, z[(size_t)j], f);
            Elem ci = A.basis_elem(*A.index_of_name("c" + std::to_string(i + 1)));
            Elem cj = A.basis_elem(*A.index_of_name("c" + std::to_string(j + 1)));
            bool center_zero = A.mul(ci, cj).is_zero();
            check(rep.relations, "z_" + std::to_string(i + 1) + "*z_" + std::to_string(j + 1),
                  zero_class(0, p) && center_zero,
                  center_zero ? "matches c_i*c_j = 0 in Z(A)" : "center product nonzero");
        }
    for (int i = 0; i < e - 1; ++i) {
        Vec p = yoneda_product(res, 1, x, 0, z[(size_t)i], f);
        check(rep.relations, "z_" + std::to_string(i + 1) + "*x", zero_class(1, p),
              "class in HH^1");
        Vec py = yoneda_product(res, 2, y, 0, z[(size_t)i], f);
        check(rep.relations, "z_" + std::to_string(i + 1) + "*y", zero_class(2, py),
              "class in HH^2");
    }
    {
        Vec p = yoneda_product(res, 1, x, 1, x, f);
        check(rep.relations, "x*x", zero_class(2, p), "class in HH^2");
    }
    {
        int n = 1 + 2 * (e - 1);
        Vec p = (n > top) ? Vec{} : yoneda_product(res, 1, x, 2 * (e - 1), ypow[(size_t)(e - 1)], f);
        check(rep.relations, "x*y^" + std::to_string(e - 1), zero_class(n, p),
              "degree " + std::to_string(n) + " exceeds the cohomological length");
    }
    {
        int n = 2 * e;
        check(rep.relations, "y^" + std::to_string(e), n > top,
              "degree " + std::to_string(n) + " exceeds the cohomological length");
    }

    // nonvanishing: y^s (s ≤ e-1) and x·y^s (s ≤ e-2)
    for (int i = 0; i < e - 1; ++i)
        check(rep.nonvanishing, "z_" + std::to_string(i + 1) + " != 0",
              !zero_class(0, z[(size_t)i]) && is_cocycle(res, 0, z[(size_t)i], f), "central loop class");
    for (int s = 1; s <= e - 1; ++s)
        check(rep.nonvanishing, "y^" + std::to_string(s) + " != 0",
              is_cocycle(res, 2 * s, ypow[(size_t)s], f) && !zero_class(2 * s, ypow[(size_t)s]),
              "class in HH^" + std::to_string(2 * s));
    for (int s = 0; s <= e - 2; ++s) {
        Vec p = (s == 0) ? x : yoneda_product(res, 1, x, 2 * s, ypow[(size_t)s], f);
        check(rep.nonvanishing, "x*y^" + std::to_string(s) + " != 0",
              is_cocycle(res, 2 * s + 1, p, f) && !zero_class(2 * s + 1, p),
              "class in HH^" + std::to_string(2 * s + 1));
    }

    // graded commutativity spot checks: a*b = (-1)^{nm} b*a up to coboundary
    auto comm = [&](const std::string& name, int n, const Vec& a, int m, const Vec& b) {
        if (n + m > top) {
            check(rep.commutativity, name, true, "both orders vanish beyond the length");
            return;
        }
        Vec ab = yoneda_product(res, n, a, m, b, f);
        Vec ba = yoneda_product(res, m, b, n, a, f);
        int sign = (n * m % 2 == 0) ? 1 : -1;
        Vec diff = ab;
        for (size_t k = 0; k < diff.size(); ++k) diff[k] -= sign * ba[k];
        check(rep.commutativity, name, zero_class(n + m, diff),
              "difference is a coboundary in HH^" + std::to_string(n + m));
    };
    comm("z_1*x vs x*z_1", 0, z[0], 1, x);
    comm("z_1*y vs y*z_1", 0, z[0], 2, y);
    comm("x*y vs y*x", 1, x, 2, y);
    comm("x*x vs -x*x", 1, x, 1, x);
    comm("y*y vs y*y", 2, y, 2, y);

    // recompute a sample of products with the other pivot order
    rep.lift_independent = true;
    auto stable = [&](int n, const Vec& a, int m, const Vec& b) {
        if (n + m > top) return true;
        Vec p1 = yoneda_product(res, n, a, m, b, f, PivotOrder::Forward);
        Vec p2 = yoneda_product(res, n, a, m, b, f, PivotOrder::Backward);
        for (size_t k = 0; k < p1.size(); ++k) p1[k] -= p2[k];
        return zero_class(n + m, p1);
    };
    rep.lift_independent = stable(1, x, 1, x) && stable(1, x, 2, y) && stable(2, y, 2, y) &&
                           stable(0, z[0], 1, x);

    return rep;
}

}  // namespace qsh
