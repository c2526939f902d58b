#pragma once

#include <map>
#include <string>
#include <vector>

#include "qsh/grading.hpp"
#include "qsh/linalg.hpp"

namespace qsh {

/* ------------------------------------------------------------------ */
/* Partitions                                                          */
/* ------------------------------------------------------------------ */

struct Partition {
    std::vector<int> parts;  // weakly decreasing, all >= 1

    int size() const;
    /* multiplicity of the part value i */
    int multiplicity(int i) const;
    std::string str() const;  // "(3,1,1)", empty partition "()"

    bool operator==(const Partition&) const = default;
    bool operator<(const Partition& o) const { return parts < o.parts; }
};

/* Validates: weakly decreasing, strictly positive parts. */
Partition make_partition(std::vector<int> parts);

/* All partitions of w, largest-part-first order: (w), ..., (1,...,1). */
std::vector<Partition> partitions(int w);

/* ------------------------------------------------------------------ */
/* Graded invariants of tensor powers                                  */
/* ------------------------------------------------------------------ */

enum class SignConvention { Unsigned, Signed };

std::string convention_name(SignConvention c);

/* Graded dimensions of the S_p-invariants of the p-th tensor power of a
   graded space with dimension vector v.  Unsigned: plain permutation
   action (symmetric powers of every generator).  Signed: Koszul signs,
   i.e. symmetric powers of even generators and exterior powers of odd
   generators.  Computed by coefficient extraction from the product
   generating function. */
GradedDims invariant_tensor_dims(const GradedDims& v, int p, SignConvention conv);

/* Sum over partitions lambda of w of the graded tensor product over i of
   invariant_tensor_dims(v, multiplicity_i(lambda), conv). */
GradedDims wreath_hh_dims(const GradedDims& v, int w, SignConvention conv);

/* ------------------------------------------------------------------ */
/* Symmetric polynomials in the elementary basis                       */
/* ------------------------------------------------------------------ */

/* A polynomial in e_1..e_w with exact coefficients.  Keys are exponent
   vectors (exponent of e_1, ..., exponent of e_w); zero coefficients are
   never stored.  The weighted degree puts deg e_k = k. */
struct SymPoly {
    int w = 0;
    std::map<std::vector<int>, Rat> coeffs;

    bool is_zero() const { return coeffs.empty(); }
    bool is_homogeneous() const;
    /* weighted degree of the highest monomial; -1 for the zero polynomial */
    int degree() const;
    std::string str() const;  // e.g. "e1^2 - 2*e2"

    bool operator==(const SymPoly&) const = default;
};

SymPoly sym_zero(int w);
SymPoly sym_monomial(int w, std::vector<int> expo, const Rat& c);
SymPoly sym_add(const SymPoly& a, const SymPoly& b);
SymPoly sym_scale(const SymPoly& a, const Rat& c);
SymPoly sym_mul(const SymPoly& a, const SymPoly& b);

/* The power sum p_k written in e_1..e_w via the Newton recursion
   (e_m = 0 for m > w). */
SymPoly power_sum_in_e(int k, int w);

/* Degree-d monomial basis of Lambda_w in the e-variables: all exponent
   vectors m with sum k*m[k-1] = d.  Deterministic order. */
std::vector<std::vector<int>> lambda_basis(int w, int d);

/* ------------------------------------------------------------------ */
/* The truncated invariant ring and the map pi                         */
/* ------------------------------------------------------------------ */

/* Orbit-sum basis of degree d of (k[y_1..y_w]/<y_i^e>)^{S_w}: partitions
   of d into at most w parts, each part <= e-1, padded to length w. */
std::vector<std::vector<int>> truncated_basis(int e, int w, int d);

/* Graded dimensions of (k[y_1..y_w]/<y_i^e>)^{S_w} in y-degree, through
   the top degree w*(e-1). */
GradedDims truncated_invariant_dims(int e, int w);

/* Expansion of f(e_1,...,e_w) in the y-variables with every monomial
   containing some y_i^e dropped, i.e. the image in k[y]/<y_i^e>.  Keys
   are y-exponent vectors. */
std::map<std::vector<int>, Rat> expand_truncated(const SymPoly& f, int e);

/* Coordinates of pi(f) on truncated_basis(e, w, d) for homogeneous f of
   weighted degree d. */
Vec pi_coords(const SymPoly& f, int e, int d);

/* ------------------------------------------------------------------ */
/* Kernel of pi and quotients                                          */
/* ------------------------------------------------------------------ */

/* The generator list <p_{e+1}, ..., p_{e+w+1}>. */
std::vector<SymPoly> power_sum_ideal_generators(int e, int w);

/* Basis vectors of Ker pi in every degree <= max_degree, found by exact
   linear algebra on the monomial basis of Lambda_w. */
std::vector<SymPoly> kernel_pi_basis(int e, int w, int max_degree);

struct KernelPiDegree {
    int degree = 0;
    long long lambda_dim = 0;  // dim Lambda_{w,d}
    long long image_dim = 0;   // rank of pi in degree d
    long long kernel_dim = 0;  // lambda_dim - image_dim
    long long ideal_dim = 0;   // degree-d piece of <p_{e+1},...,p_{e+w+1}>
    bool ideal_in_kernel = true;
    bool kernel_in_ideal = true;
    /* elements of Ker pi in this degree that are not in the ideal;
       named power sums are preferred when one qualifies */
    std::vector<std::string> witnesses;
};

struct KernelPiReport {
    int e = 0, w = 0, max_degree = 0;
    std::vector<int> generator_indices;  // e+1 .. e+w+1
    std::vector<KernelPiDegree> degrees;
    bool ideal_contained = true;  // every degree: ideal piece inside Ker pi
    bool kernel_matches = true;   // every degree: Ker pi inside the ideal
};

/* Degree-by-degree comparison of the brute-force Ker pi with the ideal
   generated by p_{e+1}, ..., p_{e+w+1}.  The report documents both
   containments; it never decides which generator list is "right". */
KernelPiReport kernel_pi_report(int e, int w, int max_degree);

/* Graded dimensions of Lambda_w modulo the graded ideal generated by the
   (homogeneous) inputs, degrees 0..max_degree. */
GradedDims quotient_hilbert(int e, int w, const std::vector<SymPoly>& generators,
                            int max_degree);

}  // namespace qsh
