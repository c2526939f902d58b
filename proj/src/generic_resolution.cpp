#include "qsh/generic_resolution.hpp"

#include <algorithm>
#include <stdexcept>

namespace qsh {
namespace {

Vec restrict_weight(const FreeBimodule& F, const Vec& v, int i, int j) {
    Vec out = zero_vec(F.dim());
    for (int k = 0; k < (int)v.size(); ++k) {
        if (is_zero(v[(size_t)k])) continue;
        auto [g, p, q] = F.basis[(size_t)k];
        (void)g;
        if (F.A->target(p) == i && F.A->source(q) == j) out[(size_t)k] = v[(size_t)k];
    }
    return out;
}

std::vector<Elem> arrow_elems(const BoundQuiverAlgebra& A) {
    std::vector<Elem> out;
    for (int b = 0; b < A.dim(); ++b)
        if (A.grade(b) == 1) out.push_back(A.basis_elem(b));
    return out;
}

struct Cover {
    std::vector<std::pair<int, int>> gens;
    std::vector<Vec> lifts;
};

/* projective cover of the sub-bimodule spanned by K: one generator per basis
   vector of e_i·K·e_j modulo the weight component of JK + KJ */
Cover cover_of(const FreeBimodule& F, const std::vector<Vec>& K) {
    const auto& A = *F.A;
    Field QQ = Field::rationals();
    std::vector<Vec> rad;
    for (const Elem& a : arrow_elems(A))
        for (const Vec& v : K) {
            rad.push_back(act_left(F, a, v));
            rad.push_back(act_right(F, v, a));
        }
    Cover cv;
    for (int i : A.vertex_labels())
        for (int j : A.vertex_labels()) {
            EchelonBasis kw(F.dim(), QQ), rw(F.dim(), QQ);
            for (const Vec& v : K) kw.add(restrict_weight(F, v, i, j));
            if (kw.dim() == 0) continue;
            for (const Vec& v : rad) rw.add(restrict_weight(F, v, i, j));
            EchelonBasis grow = rw;
            for (const Vec& r : kw.basis())
                if (grow.add(r)) {
                    cv.gens.emplace_back(i, j);
                    cv.lifts.push_back(r);
                }
        }
    return cv;
}

}  // namespace

BimoduleResolution generic_minimal_resolution(const BoundQuiverAlgebra& A, int max_degree) {
    if (max_degree < 0) throw std::invalid_argument("max_degree must be >= 0");
    Field QQ = Field::rationals();
    BimoduleResolution res;
    res.A = &A;
    std::vector<std::pair<int, int>> g0;
    for (int v : A.vertex_labels()) g0.emplace_back(v, v);
    res.terms.push_back(FreeBimodule::build(A, g0));
    res.d.resize(1);
    res.d0 = augmentation_matrix(res.terms[0]);
    std::vector<Vec> K = kernel_basis(res.d0, QQ);
    int n = 0;
    while (!K.empty() && n < max_degree) {
        ++n;
        Cover cv = cover_of(res.terms.back(), K);
        res.terms.push_back(FreeBimodule::build(A, cv.gens));
        BimoduleMap mp;
        mp.src = &res.terms.back();
        mp.dst = &res.terms[res.terms.size() - 2];
        mp.gen_images = std::move(cv.lifts);
        K = kernel_basis(mp.matrix(), QQ);
        res.d.push_back(std::move(mp));
    }
    return res;
}

namespace {

/* free left module ⊕_k A·e_{gens[k]}, flat basis (k, path with source gens[k]) */
struct FreeLeft {
    const BoundQuiverAlgebra* A = nullptr;
    std::vector<int> gens;
    std::vector<std::pair<int, int>> basis;
    std::map<std::pair<int, int>, int> index;

    static FreeLeft build(const BoundQuiverAlgebra& A, std::vector<int> gens) {
        FreeLeft F;
        F.A = &A;
        F.gens = std::move(gens);
        for (int k = 0; k < (int)F.gens.size(); ++k)
            for (int p : A.paths_from(F.gens[(size_t)k])) {
                F.index[{k, p}] = (int)F.basis.size();
                F.basis.emplace_back(k, p);
            }
        return F;
    }
    int dim() const { return (int)basis.size(); }
};

Vec left_act(const FreeLeft& F, const Elem& a, const Vec& v) {
    Vec out = zero_vec(F.dim());
    for (int k = 0; k < (int)v.size(); ++k) {
        if (is_zero(v[(size_t)k])) continue;
        auto [g, p] = F.basis[(size_t)k];
        Elem prod = F.A->mul(a, F.A->basis_elem(p));
        for (auto& [p2, c] : prod.c) out[(size_t)F.index.at({g, p2})] += c * v[(size_t)k];
    }
    return out;
}

Vec left_restrict(const FreeLeft& F, const Vec& v, int u) {
    Vec out = zero_vec(F.dim());
    for (int k = 0; k < (int)v.size(); ++k)
        if (!is_zero(v[(size_t)k]) && F.A->target(F.basis[(size_t)k].second) == u)
            out[(size_t)k] = v[(size_t)k];
    return out;
}

}  // namespace

int ExtTable::at(int label_i, int label_j, int n) const {
    auto pos = [&](int lbl) {
        for (int a = 0; a < (int)labels.size(); ++a)
            if (labels[(size_t)a] == lbl) return a;
        throw std::invalid_argument("unknown vertex label " + std::to_string(lbl));
    };
    if (n < 0 || n >= (int)dims[0][0].size()) return 0;
    return dims[(size_t)pos(label_i)][(size_t)pos(label_j)][(size_t)n];
}

int ext_simple_dims(const BoundQuiverAlgebra& A, int i, int j, int n) {
    return ext_simple_table(A, std::max(n, 0)).at(i, j, n);
}

ExtTable ext_simple_table(const BoundQuiverAlgebra& A, int max_degree) {
    Field QQ = Field::rationals();
    ExtTable table;
    table.labels = A.vertex_labels();
    int nv = (int)table.labels.size();
    table.dims.assign((size_t)nv, std::vector<std::vector<int>>(
                                      (size_t)nv, std::vector<int>((size_t)max_degree + 1, 0)));
    std::map<int, int> label_pos;
    for (int a = 0; a < nv; ++a) label_pos[table.labels[(size_t)a]] = a;
    std::vector<Elem> arrows = arrow_elems(A);

    for (int a = 0; a < nv; ++a) {
        int start = table.labels[(size_t)a];
        FreeLeft F = FreeLeft::build(A, {start});
        table.dims[(size_t)a][(size_t)a][0] += 1;
        // kernel of P(start) ->> S_start is the radical part
        std::vector<Vec> K;
        for (int k = 0; k < F.dim(); ++k)
            if (A.grade(F.basis[(size_t)k].second) > 0) {
                Vec v = zero_vec(F.dim());
                v[(size_t)k] = 1;
                K.push_back(std::move(v));
            }
        for (int n = 1; n <= max_degree && !K.empty(); ++n) {
            std::vector<Vec> rad;
            for (const Elem& ar : arrows)
                for (const Vec& v : K) rad.push_back(left_act(F, ar, v));
            std::vector<int> gens;
            std::vector<Vec> lifts;
            for (int u : A.vertex_labels()) {
                EchelonBasis kw(F.dim(), QQ), rw(F.dim(), QQ);
                for (const Vec& v : K) kw.add(left_restrict(F, v, u));
                if (kw.dim() == 0) continue;
                for (const Vec& v : rad) rw.add(left_restrict(F, v, u));
                EchelonBasis grow = rw;
                for (const Vec& r : kw.basis())
                    if (grow.add(r)) {
                        gens.push_back(u);
                        lifts.push_back(r);
                    }
            }
            for (int u : gens) table.dims[(size_t)a][(size_t)label_pos.at(u)][(size_t)n] += 1;
            FreeLeft F2 = FreeLeft::build(A, gens);
            SparseMat M(F.dim(), F2.dim());
            for (int col = 0; col < F2.dim(); ++col) {
                auto [k, p] = F2.basis[(size_t)col];
                Vec w = left_act(F, A.basis_elem(p), lifts[(size_t)k]);
                for (int r = 0; r < (int)w.size(); ++r)
                    if (!is_zero(w[(size_t)r])) M.set(r, col, w[(size_t)r]);
            }
            K = kernel_basis(M, QQ);
            F = std::move(F2);
        }
    }
    return table;
}

}  // namespace qsh
