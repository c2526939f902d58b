#pragma once
#include "qsh/hochschild.hpp"

namespace qsh {

/* graded polynomial ring modulo monomial relations */
struct MonomialQuotient {
    std::vector<int> var_degrees;
    std::vector<std::vector<int>> relations;  // exponent vectors of the monomial generators
};

/* Dimension of each graded piece up to max_degree, by enumerating exponent
   vectors divisible by no relation.  Degree-0 variables must be bounded by a
   pure-power relation, otherwise some graded piece is infinite. */
GradedDims monomial_quotient_hilbert(const MonomialQuotient& q, int max_degree);

struct RingCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct RingReport {
    int e = 0;
    std::string field;
    bool resolution_ok = false;
    GradedDims hh;         // computed cohomology dims
    GradedDims presented;  // dims of k[z_1..z_{e-1},x,y]/J
    bool dims_match = false;
    std::vector<std::string> generators;  // chosen representatives, printable
    std::vector<RingCheck> relations;
    std::vector<RingCheck> nonvanishing;
    std::vector<RingCheck> commutativity;
    bool lift_independent = false;  // products stable under the other pivot order
    bool pass() const;
};

/* Checks HH*(A_e) against k[z_1,..,z_{e-1},x,y]/(z_i z_j, z_i x, z_i y, x²,
   x y^{e-1}, y^e) with deg z_i = 0, deg x = 1, deg y = 2: the z_i are the
   classes of the central loops c_i, x and y are the canonical degree-1 and
   degree-2 representatives. */
RingReport verify_ring_presentation(int e, const Field& f);

/* degree-0 cochain attached to a central element */
Vec central_cochain(const BimoduleResolution& res, const Elem& z);

/* graded dims of k[z_1..z_{e-1}, y]/(z_i z_j, z_k y, y^e), deg z_i = 0,
   deg y = 2: the even part of the presentation */
GradedDims even_part_hilbert(int e);

}  // namespace qsh
