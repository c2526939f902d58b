#pragma once
#include <map>
#include <optional>
#include <vector>
#include "qsh/field.hpp"

namespace qsh {

/* Elimination visits pivot columns left-to-right (Forward) or right-to-left
   (Backward).  Both are deterministic; Backward exists so lift computations
   can be repeated with a genuinely different pivot set. */
enum class PivotOrder { Forward, Backward };

class SparseMat {
public:
    SparseMat() : rows_(0), cols_(0) {}
    SparseMat(int rows, int cols) : rows_(rows), cols_(cols), data_(rows) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    void add(int r, int c, const Rat& v);  // accumulates, prunes exact zeros
    void set(int r, int c, const Rat& v);
    Rat at(int r, int c) const;
    const std::map<int, Rat>& row(int r) const { return data_[r]; }
    int nnz() const;

    SparseMat transpose() const;
    Vec apply(const Vec& x) const;  // m * x, column-vector convention

private:
    int rows_, cols_;
    std::vector<std::map<int, Rat>> data_;
};

/* Reduced row echelon data: pivot entries are 1 and their columns are cleared
   from every other row; rows are listed in ascending pivot-column order. */
struct Echelon {
    std::vector<Vec> rows;
    std::vector<int> pivot_cols;
    int cols = 0;
    int rank() const { return (int)rows.size(); }
};

Echelon echelonize(const SparseMat& m, const Field& f,
                   PivotOrder order = PivotOrder::Forward);

int rank(const SparseMat& m, const Field& f);

/* Basis of the null space { x : m x = 0 }, one vector per free column in
   ascending free-column order. */
std::vector<Vec> kernel_basis(const SparseMat& m, const Field& f,
                              PivotOrder order = PivotOrder::Forward);

/* Particular solution of m x = b with all free variables set to 0, or nullopt
   if the system is inconsistent. */
std::optional<Vec> solve(const SparseMat& m, const Vec& b, const Field& f,
                         PivotOrder order = PivotOrder::Forward);

/* Incremental reduced-echelon basis of a subspace.  The stored basis is the
   canonical RREF of the span, so it does not depend on insertion order. */
class EchelonBasis {
public:
    explicit EchelonBasis(int ambient, Field f = Field::rationals())
        : f_(f), n_(ambient) {}

    bool add(Vec v);  // true if the subspace grew
    void add_all(const std::vector<Vec>& vs);
    Vec residue(Vec v) const;
    bool contains(const Vec& v) const { return is_zero_vec(residue(v)); }
    /* coefficients of v in the RREF basis; requires contains(v) */
    Vec coordinates(const Vec& v) const;
    int dim() const { return (int)rows_.size(); }
    int ambient() const { return n_; }
    std::vector<Vec> basis() const;
    const std::map<int, Vec>& rows_by_pivot() const { return rows_; }

private:
    Field f_;
    int n_;
    std::map<int, Vec> rows_;  // pivot column -> row
};

/* Image of x -> m x as a subspace of the row-count-dimensional target. */
EchelonBasis column_space(const SparseMat& m, const Field& f);

}  // namespace qsh
