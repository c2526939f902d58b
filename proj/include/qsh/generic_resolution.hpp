#pragma once
#include "qsh/bimodule.hpp"

namespace qsh {

/* Minimal projective bimodule resolution of A computed degree by degree:
   cover the current kernel by projectives on a basis of K/(JK+KJ), take the
   kernel of the induced map, repeat.  Stops when the kernel vanishes or at
   max_degree.  Independent of any closed-form term or differential tables. */
BimoduleResolution generic_minimal_resolution(const BoundQuiverAlgebra& A, int max_degree);

/* dims[a][b][n] = dim Ext^n(S_{labels[a]}, S_{labels[b]}), read off one-sided
   minimal projective resolutions of the simple left modules */
struct ExtTable {
    std::vector<int> labels;
    std::vector<std::vector<std::vector<int>>> dims;  // [a][b][0..max_degree]
    int at(int label_i, int label_j, int n) const;
};
ExtTable ext_simple_table(const BoundQuiverAlgebra& A, int max_degree);

int ext_simple_dims(const BoundQuiverAlgebra& A, int i, int j, int n);

}  // namespace qsh
