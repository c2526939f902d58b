#include "qsh/bimodule.hpp"

#include <sstream>
#include <stdexcept>

namespace qsh {

FreeBimodule FreeBimodule::build(const BoundQuiverAlgebra& A, std::vector<std::pair<int, int>> gens) {
    FreeBimodule F;
    F.A = &A;
    F.gens = std::move(gens);
    const auto& labels = A.vertex_labels();
    auto valid = [&](int v) { return std::find(labels.begin(), labels.end(), v) != labels.end(); };
    for (int g = 0; g < (int)F.gens.size(); ++g) {
        auto [i, j] = F.gens[(size_t)g];
        if (!valid(i) || !valid(j)) throw std::invalid_argument("bimodule generator uses unknown vertex");
        if (!F.pair_gen.emplace(F.gens[(size_t)g], g).second) F.pairs_distinct = false;
        for (int p : A.paths_from(i))
            for (int q : A.paths_into(j)) {
                std::array<int, 3> key{g, p, q};
                F.index[key] = (int)F.basis.size();
                F.basis.push_back(key);
            }
    }
    if (!F.pairs_distinct) F.pair_gen.clear();
    return F;
}

int FreeBimodule::flat(int g, int p, int q) const {
    auto it = index.find({g, p, q});
    if (it == index.end()) throw std::out_of_range("no such bimodule basis element");
    return it->second;
}

int FreeBimodule::generator_flat(int g) const {
    auto [i, j] = gens.at((size_t)g);
    return flat(g, A->idempotent_index(i), A->idempotent_index(j));
}

std::string FreeBimodule::elem_str(const Vec& v) const {
    std::ostringstream out;
    bool first = true;
    for (int k = 0; k < (int)v.size(); ++k) {
        if (is_zero(v[(size_t)k])) continue;
        auto [g, p, q] = basis[(size_t)k];
        Rat c = v[(size_t)k];
        if (first) {
            if (c == -1) out << "-";
            else if (c != 1) out << rat_str(c) << "*";
        } else {
            out << (c < 0 ? " - " : " + ");
            Rat a = abs(c);
            if (a != 1) out << rat_str(a) << "*";
        }
        first = false;
        out << A->name(p) << "(x)" << A->name(q) << " in P(" << gens[(size_t)g].first << ","
            << gens[(size_t)g].second << ")";
        if (!pairs_distinct) out << "#" << g;
    }
    if (first) out << "0";
    return out.str();
}

Vec act_left(const FreeBimodule& F, const Elem& a, const Vec& v) {
    Vec out = zero_vec(F.dim());
    for (int k = 0; k < (int)v.size(); ++k) {
        if (is_zero(v[(size_t)k])) continue;
        auto [g, p, q] = F.basis[(size_t)k];
        Elem prod = F.A->mul(a, F.A->basis_elem(p));
        for (auto& [p2, c] : prod.c) out[(size_t)F.flat(g, p2, q)] += c * v[(size_t)k];
    }
    return out;
}

Vec act_right(const FreeBimodule& F, const Vec& v, const Elem& a) {
    Vec out = zero_vec(F.dim());
    for (int k = 0; k < (int)v.size(); ++k) {
        if (is_zero(v[(size_t)k])) continue;
        auto [g, p, q] = F.basis[(size_t)k];
        Elem prod = F.A->mul(F.A->basis_elem(q), a);
        for (auto& [q2, c] : prod.c) out[(size_t)F.flat(g, p, q2)] += c * v[(size_t)k];
    }
    return out;
}

SparseMat BimoduleMap::matrix() const {
    SparseMat m(dst->dim(), src->dim());
    for (int col = 0; col < src->dim(); ++col) {
        auto [g, p, q] = src->basis[(size_t)col];
        Vec w = act_right(*dst, act_left(*dst, src->A->basis_elem(p), gen_images[(size_t)g]),
                          src->A->basis_elem(q));
        for (int r = 0; r < (int)w.size(); ++r)
            if (!is_zero(w[(size_t)r])) m.set(r, col, w[(size_t)r]);
    }
    return m;
}

Vec BimoduleMap::apply(const Vec& v) const {
    Vec out = zero_vec(dst->dim());
    for (int k = 0; k < (int)v.size(); ++k) {
        if (is_zero(v[(size_t)k])) continue;
        auto [g, p, q] = src->basis[(size_t)k];
        Vec w = act_right(*dst, act_left(*dst, src->A->basis_elem(p), gen_images[(size_t)g]),
                          src->A->basis_elem(q));
        for (int r = 0; r < (int)w.size(); ++r) out[(size_t)r] += v[(size_t)k] * w[(size_t)r];
    }
    return out;
}

SparseMat augmentation_matrix(const FreeBimodule& R0) {
    const auto& A = *R0.A;
    SparseMat m(A.dim(), R0.dim());
    for (int col = 0; col < R0.dim(); ++col) {
        auto [g, p, q] = R0.basis[(size_t)col];
        (void)g;
        Elem prod = A.mul(A.basis_elem(p), A.basis_elem(q));
        for (auto& [r, c] : prod.c) m.set(r, col, c);
    }
    return m;
}

VerifyReport verify_complex(const BimoduleResolution& res, const Field& f) {
    VerifyReport rep;
    rep.field = f.name();
    const auto& A = *res.A;
    int top = (int)res.terms.size() - 1;

    std::vector<SparseMat> mats((size_t)top + 1, SparseMat(0, 0));
    mats[0] = res.d0;
    for (int n = 1; n <= top; ++n) mats[(size_t)n] = res.d[(size_t)n].matrix();

    // d∘d = 0: enough to check on generators, the composite being a bimodule map
    rep.dd_zero = true;
    for (int n = 1; n <= top && rep.dd_zero; ++n) {
        const auto& upper = res.d[(size_t)n];
        for (int g = 0; g < (int)upper.src->gens.size(); ++g) {
            Vec img = upper.gen_images[(size_t)g];
            Vec w = mats[(size_t)(n - 1)].apply(img);
            for (auto& x : w) x = f.reduce(x);
            bool zero = true;
            for (auto& x : w)
                if (!f.is_zero(x)) { zero = false; break; }
            if (!zero) {
                rep.dd_zero = false;
                std::ostringstream os;
                os << "d_" << (n - 1) << " d_" << n << " != 0 on generator P(" << upper.src->gens[(size_t)g].first
                   << "," << upper.src->gens[(size_t)g].second << ") of R_" << n << ": image ";
                if (n >= 2) os << res.terms[(size_t)(n - 2)].elem_str(w);
                else os << A.elem_str(A.from_vec(w));
                rep.dd_witness = os.str();
                break;
            }
        }
    }

    std::vector<int> ranks((size_t)top + 1, 0);
    for (int n = 0; n <= top; ++n) ranks[(size_t)n] = rank(mats[(size_t)n], f);
    for (int n = 0; n <= top; ++n) {
        DegreeInfo di;
        di.degree = n;
        di.term_dim = res.terms[(size_t)n].dim();
        di.rank_d = ranks[(size_t)n];
        di.ker_d = di.term_dim - di.rank_d;
        rep.degrees.push_back(di);
    }

    rep.surjective = (ranks[0] == A.dim());

    rep.exact = true;
    std::ostringstream ew;
    for (int n = 0; n <= top; ++n) {
        int ker = res.terms[(size_t)n].dim() - ranks[(size_t)n];
        int im = (n < top) ? ranks[(size_t)(n + 1)] : 0;
        if (ker != im) {
            rep.exact = false;
            ew << "homology at R_" << n << ": dim ker d_" << n << " = " << ker << " but dim im d_" << (n + 1)
               << " = " << im;
            break;
        }
    }
    rep.exactness_witness = ew.str();

    // minimality: generator images must lie in rad R = J·R + R·J, i.e. have no
    // component on any e_i ⊗ e_j coordinate
    rep.minimal = true;
    for (int n = 1; n <= top && rep.minimal; ++n) {
        const auto& mp = res.d[(size_t)n];
        for (int g = 0; g < (int)mp.src->gens.size() && rep.minimal; ++g) {
            const Vec& img = mp.gen_images[(size_t)g];
            for (int k = 0; k < (int)img.size(); ++k) {
                if (f.is_zero(img[(size_t)k])) continue;
                auto [g2, p, q] = mp.dst->basis[(size_t)k];
                if (A.grade(p) == 0 && A.grade(q) == 0) {
                    rep.minimal = false;
                    std::ostringstream os;
                    os << "d_" << n << " sends generator P(" << mp.src->gens[(size_t)g].first << ","
                       << mp.src->gens[(size_t)g].second << ") outside the radical: coefficient "
                       << rat_str(img[(size_t)k]) << " on e(x)e in P(" << mp.dst->gens[(size_t)g2].first << ","
                       << mp.dst->gens[(size_t)g2].second << ")";
                    rep.minimality_witness = os.str();
                    break;
                }
            }
        }
    }
    return rep;
}

std::string failure_summary(const VerifyReport& rep) {
    if (!rep.dd_zero) return rep.dd_witness;
    if (!rep.surjective) return "augmentation is not surjective";
    if (!rep.exact) return rep.exactness_witness;
    if (!rep.minimal) return rep.minimality_witness;
    return "verified";
}

}  // namespace qsh
