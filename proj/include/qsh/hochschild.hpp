#pragma once
#include "qsh/grading.hpp"
#include "qsh/resolution.hpp"

namespace qsh {

/* Basis of Hom_{A-A}(R, A) for a free bimodule R: one functional per pair
   (generator g = (i,j), basis path x ∈ e_i·A·e_j), sending g ↦ x and every
   other generator to 0. */
struct CochainBasis {
    const FreeBimodule* R = nullptr;
    std::vector<std::pair<int, int>> entries;  // (generator, path)
    std::map<std::pair<int, int>, int> index;

    int dim() const { return (int)entries.size(); }
    int find(int g, int path) const;
    std::string entry_str(int k) const;
    std::string cochain_str(const Vec& v) const;
};

CochainBasis cochain_basis(const FreeBimodule& R);

/* value of the cochain phi (coordinates in C) on the element v of R, as a
   vector in A's basis coordinates */
Vec cochain_eval(const CochainBasis& C, const Vec& phi, const Vec& v);

/* matrix of Hom(d_{n+1}, A) : C^n -> C^{n+1}; at the top degree the target is
   the zero space */
SparseMat hochschild_delta(const BimoduleResolution& res, int n);

/* HH^n for n = 0..top of the given (full) resolution */
GradedDims hh_dims(const BimoduleResolution& res, const Field& f);
/* builds the repaired resolution of A_e, verifies it over f, then computes */
GradedDims hh_dims(int e, const Field& f);

bool is_cocycle(const BimoduleResolution& res, int n, const Vec& phi, const Field& f);
bool is_coboundary(const BimoduleResolution& res, int n, const Vec& phi, const Field& f);

/* Deterministic representatives of a basis of HH^n: kernel vectors of δ^n
   that grow an echelon basis seeded with im δ^{n-1}. */
std::vector<Vec> cohomology_representatives(const BimoduleResolution& res, int n, const Field& f);

/* dims[n] = dim Hom(Ker d_n, A) for n = 0..top, computed as the space of
   degree-(n+1) cochains vanishing on Ker d_{n+1} */
std::vector<int> hom_ker_dims(const BimoduleResolution& res, const Field& f);

/* comparison maps σ_t : R_{deg+t} -> R_t with d_0 σ_0 = φ and
   d_t σ_t = σ_{t-1} d_{deg+t} */
struct YonedaLift {
    int deg = 0;
    std::vector<std::vector<Vec>> sigma;  // sigma[t][g]
};

YonedaLift lift_cocycle(const BimoduleResolution& res, int deg, const Vec& phi, const Field& f,
                        int max_t, PivotOrder order = PivotOrder::Forward);

/* α ⋆ β = α ∘ σ_{da}, a cocycle in C^{da+db}; the two pivot orders may give
   different cocycles, cohomologous by lift uniqueness up to homotopy.
   Returns the empty vector when da+db exceeds the resolution length. */
Vec yoneda_product(const BimoduleResolution& res, int da, const Vec& alpha, int db,
                   const Vec& beta, const Field& f, PivotOrder order = PivotOrder::Forward);

}  // namespace qsh
