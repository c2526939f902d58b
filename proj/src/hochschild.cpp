#include "qsh/hochschild.hpp"

#include <sstream>
#include <stdexcept>

namespace qsh {

CochainBasis cochain_basis(const FreeBimodule& R) {
    CochainBasis C;
    C.R = &R;
    const auto& A = *R.A;
    for (int g = 0; g < (int)R.gens.size(); ++g) {
        auto [i, j] = R.gens[(size_t)g];
        for (int x : A.paths_between(j, i)) {  // e_i·A·e_j = span of paths j -> i
            C.index[{g, x}] = (int)C.entries.size();
            C.entries.emplace_back(g, x);
        }
    }
    return C;
}

int CochainBasis::find(int g, int path) const {
    auto it = index.find({g, path});
    if (it == index.end()) throw std::out_of_range("no such cochain basis entry");
    return it->second;
}

std::string CochainBasis::entry_str(int k) const {
    auto [g, x] = entries[(size_t)k];
    auto [i, j] = R->gens[(size_t)g];
    std::ostringstream os;
    os << "(" << i << "," << j << ")->" << R->A->name(x);
    return os.str();
}

std::string CochainBasis::cochain_str(const Vec& v) const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k < (int)v.size(); ++k) {
        if (is_zero(v[(size_t)k])) continue;
        Rat c = v[(size_t)k];
        if (first) {
            if (c == -1) os << "-";
            else if (c != 1) os << rat_str(c) << "*";
        } else {
            os << (c < 0 ? " - " : " + ");
            Rat a = abs(c);
            if (a != 1) os << rat_str(a) << "*";
        }
        first = false;
        os << "[" << entry_str(k) << "]";
    }
    if (first) os << "0";
    return os.str();
}

Vec cochain_eval(const CochainBasis& C, const Vec& phi, const Vec& v) {
    const auto& R = *C.R;
    const auto& A = *R.A;
    std::vector<Elem> vals((size_t)R.gens.size());
    for (int k = 0; k < (int)phi.size(); ++k) {
        if (is_zero(phi[(size_t)k])) continue;
        auto [g, x] = C.entries[(size_t)k];
        add_scaled(vals[(size_t)g], A.basis_elem(x), phi[(size_t)k]);
    }
    Vec out = zero_vec(A.dim());
    for (int k = 0; k < (int)v.size(); ++k) {
        if (is_zero(v[(size_t)k])) continue;
        auto [g, p, q] = R.basis[(size_t)k];
        Elem prod = A.mul(A.mul(A.basis_elem(p), vals[(size_t)g]), A.basis_elem(q));
        for (auto& [y, c] : prod.c) out[(size_t)y] += v[(size_t)k] * c;
    }
    return out;
}

SparseMat hochschild_delta(const BimoduleResolution& res, int n) {
    int top = (int)res.terms.size() - 1;
    if (n < 0 || n > top) throw std::invalid_argument("hochschild_delta: degree out of range");
    CochainBasis Cn = cochain_basis(res.terms[(size_t)n]);
    if (n == top) return SparseMat(0, Cn.dim());
    CochainBasis Cn1 = cochain_basis(res.terms[(size_t)(n + 1)]);
    const auto& A = *res.A;
    SparseMat M(Cn1.dim(), Cn.dim());
    const auto& up = res.d[(size_t)(n + 1)];
    for (int g1 = 0; g1 < (int)up.src->gens.size(); ++g1) {
        const Vec& w = up.gen_images[(size_t)g1];
        for (int k = 0; k < (int)w.size(); ++k) {
            if (is_zero(w[(size_t)k])) continue;
            auto [g, p, q] = res.terms[(size_t)n].basis[(size_t)k];
            auto [i, j] = res.terms[(size_t)n].gens[(size_t)g];
            for (int x : A.paths_between(j, i)) {
                int col = Cn.find(g, x);
                Elem prod = A.mul(A.mul(A.basis_elem(p), A.basis_elem(x)), A.basis_elem(q));
                for (auto& [y, c] : prod.c)
                    M.add(Cn1.find(g1, y), col, w[(size_t)k] * c);
            }
        }
    }
    return M;
}

GradedDims hh_dims(const BimoduleResolution& res, const Field& f) {
    int top = (int)res.terms.size() - 1;
    GradedDims out((size_t)top + 1, 0);
    std::vector<int> ranks((size_t)top + 1, 0);
    std::vector<int> cdims((size_t)top + 1, 0);
    for (int n = 0; n <= top; ++n) {
        SparseMat M = hochschild_delta(res, n);
        cdims[(size_t)n] = M.cols();
        ranks[(size_t)n] = rank(M, f);
    }
    for (int n = 0; n <= top; ++n)
        out[(size_t)n] = cdims[(size_t)n] - ranks[(size_t)n] - (n > 0 ? ranks[(size_t)(n - 1)] : 0);
    return out;
}

GradedDims hh_dims(int e, const Field& f) {
    auto A = build_A_e(e);
    auto res = paper_resolution(A, resolution_length(e));
    auto rep = verify_complex(res, f);
    if (!rep.pass())
        throw std::runtime_error("resolution failed verification over " + f.name() + ": " +
                                 failure_summary(rep));
    return hh_dims(res, f);
}

bool is_cocycle(const BimoduleResolution& res, int n, const Vec& phi, const Field& f) {
    Vec w = hochschild_delta(res, n).apply(phi);
    for (auto& x : w)
        if (!f.is_zero(x)) return false;
    return true;
}

bool is_coboundary(const BimoduleResolution& res, int n, const Vec& phi, const Field& f) {
    if (n == 0) {
        for (auto& x : phi)
            if (!f.is_zero(x)) return false;
        return true;
    }
    return solve(hochschild_delta(res, n - 1), phi, f).has_value();
}

std::vector<Vec> cohomology_representatives(const BimoduleResolution& res, int n, const Field& f) {
    CochainBasis Cn = cochain_basis(res.terms[(size_t)n]);
    EchelonBasis seen(Cn.dim(), f);
    if (n > 0) {
        SparseMat below = hochschild_delta(res, n - 1);
        for (int c = 0; c < below.cols(); ++c) {
            Vec col = zero_vec(below.rows());
            for (int r = 0; r < below.rows(); ++r) col[(size_t)r] = below.at(r, c);
            seen.add(std::move(col));
        }
    }
    std::vector<Vec> reps;
    for (Vec& v : kernel_basis(hochschild_delta(res, n), f))
        if (seen.add(v)) reps.push_back(std::move(v));
    return reps;
}

std::vector<int> hom_ker_dims(const BimoduleResolution& res, const Field& f) {
    int top = (int)res.terms.size() - 1;
    const auto& A = *res.A;
    std::vector<int> out((size_t)top + 1, 0);
    for (int n = 0; n < top; ++n) {
        CochainBasis C = cochain_basis(res.terms[(size_t)(n + 1)]);
        if (C.dim() == 0) continue;
        std::vector<Vec> K = kernel_basis(res.d[(size_t)(n + 1)].matrix(), f);
        SparseMat M((int)K.size() * A.dim(), C.dim());
        for (int col = 0; col < C.dim(); ++col) {
            Vec phi = zero_vec(C.dim());
            phi[(size_t)col] = 1;
            for (int ki = 0; ki < (int)K.size(); ++ki) {
                Vec val = cochain_eval(C, phi, K[(size_t)ki]);
                for (int r = 0; r < (int)val.size(); ++r)
                    if (!is_zero(val[(size_t)r])) M.set(ki * A.dim() + r, col, val[(size_t)r]);
            }
        }
        out[(size_t)n] = C.dim() - rank(M, f);
    }
    return out;  // Ker d_top = 0, so the last entry stays 0
}

namespace {

std::vector<int> weight_coords(const FreeBimodule& F, int i, int j) {
    std::vector<int> out;
    for (int k = 0; k < F.dim(); ++k) {
        auto [g, p, q] = F.basis[(size_t)k];
        (void)g;
        if (F.A->target(p) == i && F.A->source(q) == j) out.push_back(k);
    }
    return out;
}

Vec solve_on_columns(const SparseMat& M, const std::vector<int>& cols, const Vec& b,
                     const Field& f, PivotOrder order, int degree) {
    std::map<int, int> pos;
    for (int c = 0; c < (int)cols.size(); ++c) pos[cols[(size_t)c]] = c;
    SparseMat sub(M.rows(), (int)cols.size());
    for (int r = 0; r < M.rows(); ++r)
        for (auto& [c, v] : M.row(r)) {
            auto it = pos.find(c);
            if (it != pos.end()) sub.set(r, it->second, v);
        }
    auto x = solve(sub, b, f, order);
    if (!x)
        throw std::runtime_error("lift system inconsistent in degree " + std::to_string(degree) +
                                 " (input is not a cocycle, or the complex is broken)");
    Vec full = zero_vec(M.cols());
    for (int c = 0; c < (int)cols.size(); ++c) full[(size_t)cols[(size_t)c]] = (*x)[(size_t)c];
    return full;
}

}  // namespace

YonedaLift lift_cocycle(const BimoduleResolution& res, int deg, const Vec& phi, const Field& f,
                        int max_t, PivotOrder order) {
    int top = (int)res.terms.size() - 1;
    if (deg < 0 || deg > top) throw std::invalid_argument("lift_cocycle: degree out of range");
    if (max_t < 0 || deg + max_t > top) throw std::invalid_argument("lift_cocycle: max_t out of range");
    const auto& A = *res.A;
    CochainBasis Cd = cochain_basis(res.terms[(size_t)deg]);
    if ((int)phi.size() != Cd.dim()) throw std::invalid_argument("lift_cocycle: wrong cochain length");

    YonedaLift L;
    L.deg = deg;
    const FreeBimodule& Rd = res.terms[(size_t)deg];
    std::vector<Vec> s0;
    for (int g = 0; g < (int)Rd.gens.size(); ++g) {
        auto [i, j] = Rd.gens[(size_t)g];
        Elem val;
        for (int x : A.paths_between(j, i)) {
            Rat c = phi[(size_t)Cd.find(g, x)];
            if (!is_zero(c)) add_scaled(val, A.basis_elem(x), c);
        }
        s0.push_back(solve_on_columns(res.d0, weight_coords(res.terms[0], i, j), A.to_vec(val), f,
                                      order, 0));
    }
    L.sigma.push_back(std::move(s0));

    for (int t = 1; t <= max_t; ++t) {
        SparseMat Mt = res.d[(size_t)t].matrix();
        BimoduleMap prev;
        prev.src = &res.terms[(size_t)(deg + t - 1)];
        prev.dst = &res.terms[(size_t)(t - 1)];
        prev.gen_images = L.sigma[(size_t)(t - 1)];
        const FreeBimodule& Rdt = res.terms[(size_t)(deg + t)];
        std::vector<Vec> st;
        for (int g = 0; g < (int)Rdt.gens.size(); ++g) {
            auto [i, j] = Rdt.gens[(size_t)g];
            Vec b = prev.apply(res.d[(size_t)(deg + t)].gen_images[(size_t)g]);
            st.push_back(solve_on_columns(Mt, weight_coords(res.terms[(size_t)t], i, j), b, f,
                                          order, t));
        }
        L.sigma.push_back(std::move(st));
    }
    return L;
}

Vec yoneda_product(const BimoduleResolution& res, int da, const Vec& alpha, int db,
                   const Vec& beta, const Field& f, PivotOrder order) {
    int top = (int)res.terms.size() - 1;
    if (da + db > top) return Vec{};
    YonedaLift L = lift_cocycle(res, db, beta, f, da, order);
    CochainBasis Ca = cochain_basis(res.terms[(size_t)da]);
    CochainBasis Cab = cochain_basis(res.terms[(size_t)(da + db)]);
    Vec out = zero_vec(Cab.dim());
    for (int g = 0; g < (int)res.terms[(size_t)(da + db)].gens.size(); ++g) {
        Vec val = cochain_eval(Ca, alpha, L.sigma[(size_t)da][(size_t)g]);
        for (int y = 0; y < (int)val.size(); ++y) {
            Rat c = f.reduce(val[(size_t)y]);
            if (!is_zero(c)) out[(size_t)Cab.find(g, y)] += c;
        }
    }
    return out;
}

}  // namespace qsh
