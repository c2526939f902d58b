#pragma once
#include <array>
#include <deque>
#include <utility>
#include "qsh/quiver_algebra.hpp"

namespace qsh {

/* Free bimodule ⊕_g P(i_g, j_g) with P(i,j) = A·e_i ⊗ e_j·A.  The flat basis
   is (generator, left path, right path) where the left path has source i_g
   and the right path has target j_g; a·(p⊗q)·b = (a·p)⊗(q·b). */
struct FreeBimodule {
    const BoundQuiverAlgebra* A = nullptr;
    std::vector<std::pair<int, int>> gens;
    std::vector<std::array<int, 3>> basis;  // (gen, left path, right path)
    std::map<std::array<int, 3>, int> index;
    std::map<std::pair<int, int>, int> pair_gen;  // pair -> generator, when pairs are distinct
    bool pairs_distinct = true;

    static FreeBimodule build(const BoundQuiverAlgebra& A, std::vector<std::pair<int, int>> gens);

    int dim() const { return (int)basis.size(); }
    int flat(int g, int p, int q) const;
    int generator_flat(int g) const;  // index of e_i ⊗ e_j for generator g
    std::string elem_str(const Vec& v) const;
};

Vec act_left(const FreeBimodule& F, const Elem& a, const Vec& v);
Vec act_right(const FreeBimodule& F, const Vec& v, const Elem& a);

/* bimodule map determined by generator images */
struct BimoduleMap {
    const FreeBimodule* src = nullptr;
    const FreeBimodule* dst = nullptr;
    std::vector<Vec> gen_images;  // dst coordinates

    SparseMat matrix() const;  // dst.dim() x src.dim()
    Vec apply(const Vec& v) const;
};

/* complex ... -> R_1 -> R_0 -> A -> 0; d[n] : terms[n] -> terms[n-1] for
   n >= 1, d0 the augmentation matrix dim A x dim R_0.  Maps point at the
   terms, so the container is a deque (stable addresses) and the struct is
   movable but not copyable. */
struct BimoduleResolution {
    const BoundQuiverAlgebra* A = nullptr;
    std::deque<FreeBimodule> terms;
    std::vector<BimoduleMap> d;  // d[0] unused
    SparseMat d0;

    BimoduleResolution() = default;
    BimoduleResolution(const BimoduleResolution&) = delete;
    BimoduleResolution& operator=(const BimoduleResolution&) = delete;
    BimoduleResolution(BimoduleResolution&&) = default;
    BimoduleResolution& operator=(BimoduleResolution&&) = default;
};

SparseMat augmentation_matrix(const FreeBimodule& R0);

struct DegreeInfo {
    int degree = 0;
    int term_dim = 0;
    int rank_d = 0;  // rank of d_degree
    int ker_d = 0;
};

struct VerifyReport {
    std::string field;
    bool dd_zero = false;
    bool exact = false;
    bool minimal = false;
    bool surjective = false;
    std::string dd_witness, exactness_witness, minimality_witness;
    std::vector<DegreeInfo> degrees;
    bool pass() const { return dd_zero && exact && minimal && surjective; }
};

/* checks d∘d = 0 on generators, exactness (homology = A in degree 0 only,
   zero top kernel), and minimality (generator images inside the radical) */
VerifyReport verify_complex(const BimoduleResolution& res, const Field& f);

/* one-line description of the first failed check, or "verified" */
std::string failure_summary(const VerifyReport& rep);

}  // namespace qsh
