#include <algorithm>
#include <stdexcept>
#include "qsh/quiver_algebra.hpp"

namespace qsh {

namespace {

/* dim Hom_A(H, A/H) as left modules.  Maps split over left weights (the
   target vertex of paths): f sends e_u H into e_u (A/H), so the unknowns are
   blocked by u and the constraint rows, one per arrow-piece of each algebra
   generator, stay small and sparse. */
int hom_ideal_to_quotient_dim(const BoundQuiverAlgebra& A, const Ideal& I) {
    int d = A.dim();
    Field q = Field::rationals();

    // left-weight blocks of H; RREF rows of a weight-split subspace are
    // weight-homogeneous, so this just partitions the rows
    std::map<int, EchelonBasis> Hu;
    for (int u : A.vertex_labels()) Hu.emplace(u, EchelonBasis(d, q));
    for (const Vec& x : I.span.basis()) {
        int u = -1;
        for (int b = 0; b < d; ++b)
            if (!qsh::is_zero(x[b])) { u = A.target(b); break; }
        Vec proj = zero_vec(d);
        for (int b = 0; b < d; ++b)
            if (A.target(b) == u) proj[b] = x[b];
        if (!(proj == x)) throw std::logic_error("ideal RREF row not weight-homogeneous");
        Hu.at(u).add(x);
    }

    // quotient coordinates (non-pivot basis paths), blocked by target vertex
    std::vector<bool> is_pivot(d, false);
    for (const auto& [pc, row] : I.span.rows_by_pivot()) is_pivot[pc] = true;
    std::map<int, std::vector<int>> Mu;  // u -> surviving basis paths with target u
    for (int u : A.vertex_labels()) Mu[u] = {};
    for (int b = 0; b < d; ++b)
        if (!is_pivot[b]) Mu[A.target(b)].push_back(b);

    // unknown layout: per u, an (h-row, m-coord) grid
    std::map<int, int> offset;
    int unknowns = 0;
    for (int u : A.vertex_labels()) {
        offset[u] = unknowns;
        unknowns += Hu.at(u).dim() * (int)Mu.at(u).size();
    }
    if (unknowns == 0) return 0;
    auto var = [&](int u, int t, int m) {
        return offset.at(u) + t * (int)Mu.at(u).size() + m;
    };

    std::vector<std::map<int, Rat>> rows;
    for (const Elem& g : A.algebra_generators())
        for (int u2 : A.vertex_labels())
            for (int u : A.vertex_labels()) {
                Elem piece = A.mul(A.idempotent(u2), A.mul(g, A.idempotent(u)));
                if (piece.is_zero()) continue;
                const auto h_basis = Hu.at(u).basis();
                for (int t = 0; t < (int)h_basis.size(); ++t) {
                    // f(piece * h) in the u2 block
                    Elem lhs = A.mul(piece, A.from_vec(h_basis[t]));
                    Vec kappa = Hu.at(u2).coordinates(A.to_vec(lhs));
                    // action of piece on the quotient coordinates of block u
                    const auto& mu = Mu.at(u);
                    const auto& mu2 = Mu.at(u2);
                    std::vector<Vec> nu(mu.size());
                    for (int m = 0; m < (int)mu.size(); ++m) {
                        Vec res = I.span.residue(A.to_vec(A.mul(piece, A.basis_elem(mu[m]))));
                        nu[m] = zero_vec((int)mu2.size());
                        for (int m2 = 0; m2 < (int)mu2.size(); ++m2) nu[m][m2] = res[mu2[m2]];
                    }
                    for (int m2 = 0; m2 < (int)mu2.size(); ++m2) {
                        std::map<int, Rat> row;
                        for (int t2 = 0; t2 < (int)kappa.size(); ++t2)
                            if (!qsh::is_zero(kappa[t2])) row[var(u2, t2, m2)] += kappa[t2];
                        for (int m = 0; m < (int)mu.size(); ++m)
                            if (!qsh::is_zero(nu[m][m2])) row[var(u, t, m)] -= nu[m][m2];
                        for (auto it = row.begin(); it != row.end();)
                            it = qsh::is_zero(it->second) ? row.erase(it) : std::next(it);
                        if (!row.empty()) rows.push_back(std::move(row));
                    }
                }
            }

    SparseMat m((int)rows.size(), unknowns);
    for (int r = 0; r < (int)rows.size(); ++r)
        for (const auto& [c, v] : rows[r]) m.set(r, c, v);
    return unknowns - rank(m, q);
}

}  // namespace

HeredityReport is_heredity_ideal(const BoundQuiverAlgebra& A, const Ideal& I) {
    HeredityReport rep;
    int d = A.dim();
    int r = I.span.dim();
    if (I.span.ambient() != d) throw std::invalid_argument("ideal belongs to a different algebra");
    if (r == 0) {
        rep.idempotent_condition = rep.hom_condition = rep.hjh_condition = true;
        rep.is_heredity = true;
        rep.zero_ideal = true;
        rep.reason = "zero ideal: conditions hold vacuously under the definition as printed";
        return rep;
    }

    auto note = [&](const std::string& s) {
        if (rep.reason.empty()) rep.reason = s;
    };

    {  // H*H = H (the reverse inclusion is automatic for ideals)
        EchelonBasis hh(d);
        const auto hb = I.span.basis();
        for (const Vec& x : hb)
            for (const Vec& y : hb) hh.add(A.to_vec(A.mul(A.from_vec(x), A.from_vec(y))));
        rep.idempotent_condition = hh.dim() == r;
        if (!rep.idempotent_condition)
            note("H*H has dimension " + std::to_string(hh.dim()) + " < dim H = " + std::to_string(r));
    }

    {  // H*J(A)*H = 0, witnessed
        EchelonBasis hj(d);
        for (const Vec& x : I.span.basis())
            for (const Vec& j : A.radical_span().basis())
                hj.add(A.to_vec(A.mul(A.from_vec(x), A.from_vec(j))));
        rep.hjh_condition = true;
        for (const Vec& x : hj.basis()) {
            for (const Vec& h : I.span.basis()) {
                Elem prod = A.mul(A.from_vec(x), A.from_vec(h));
                if (!prod.is_zero()) {
                    rep.hjh_condition = false;
                    note("H*J(A)*H contains " + A.elem_str(prod));
                    break;
                }
            }
            if (!rep.hjh_condition) break;
        }
    }

    {
        int homdim = hom_ideal_to_quotient_dim(A, I);
        rep.hom_condition = homdim == 0;
        if (!rep.hom_condition)
            note("Hom_A(H, A/H) has dimension " + std::to_string(homdim));
    }

    rep.is_heredity = rep.idempotent_condition && rep.hom_condition && rep.hjh_condition;
    if (rep.is_heredity) rep.reason = "heredity ideal";
    return rep;
}

HeredityChain heredity_chain_search(const BoundQuiverAlgebra& A) {
    HeredityChain ch;
    ch.chain_dims.push_back(0);
    BoundQuiverAlgebra B = A;
    while (B.dim() > 0) {
        std::vector<int> labels = B.vertex_labels();
        bool found = false;
        for (int sz = 1; sz <= (int)labels.size() && !found; ++sz) {
            std::vector<int> idx(sz);
            for (int i = 0; i < sz; ++i) idx[i] = i;
            while (true) {
                std::vector<int> T;
                for (int i : idx) T.push_back(labels[i]);
                Ideal I = idempotent_ideal(B, T);
                HeredityReport rep = is_heredity_ideal(B, I);
                if (rep.is_heredity) {
                    ch.steps.push_back({T, I.span.dim(), rep});
                    B = quotient_algebra(B, I);
                    found = true;
                    break;
                }
                // next sz-combination in lex order
                int k = sz - 1;
                while (k >= 0 && idx[k] == (int)labels.size() - sz + k) --k;
                if (k < 0) break;
                ++idx[k];
                for (int i = k + 1; i < sz; ++i) idx[i] = idx[i - 1] + 1;
            }
        }
        if (!found) {
            ch.complete = false;
            return ch;
        }
    }
    ch.complete = true;
    for (const auto& st : ch.steps) ch.chain_dims.push_back(ch.chain_dims.back() + st.ideal_dim);
    return ch;
}

}  // namespace qsh
