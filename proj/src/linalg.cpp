#include "qsh/linalg.hpp"
#include <algorithm>
#include <stdexcept>

namespace qsh {

void SparseMat::add(int r, int c, const Rat& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("SparseMat::add index");
    auto it = data_[r].find(c);
    if (it == data_[r].end()) {
        if (!qsh::is_zero(v)) data_[r].emplace(c, v);
    } else {
        it->second += v;
        if (qsh::is_zero(it->second)) data_[r].erase(it);
    }
}

void SparseMat::set(int r, int c, const Rat& v) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_)
        throw std::out_of_range("SparseMat::set index");
    if (qsh::is_zero(v))
        data_[r].erase(c);
    else
        data_[r][c] = v;
}

Rat SparseMat::at(int r, int c) const {
    auto it = data_[r].find(c);
    return it == data_[r].end() ? Rat(0) : it->second;
}

int SparseMat::nnz() const {
    int n = 0;
    for (const auto& row : data_) n += (int)row.size();
    return n;
}

SparseMat SparseMat::transpose() const {
    SparseMat t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) t.set(c, r, v);
    return t;
}

Vec SparseMat::apply(const Vec& x) const {
    if ((int)x.size() != cols_) throw std::invalid_argument("SparseMat::apply size");
    Vec y = zero_vec(rows_);
    for (int r = 0; r < rows_; ++r)
        for (const auto& [c, v] : data_[r]) y[r] += v * x[c];
    return y;
}

namespace {

/* Shared elimination core.  Works on dense copies of the rows; optionally an
   augmented column (for solve) which is never chosen as a pivot.  Pivot
   selection: columns visited in `order` direction, first not-yet-pivoted row
   (in input order) with a nonzero entry wins; its column is then cleared from
   every other row, so the result is fully reduced. */
struct Elim {
    std::vector<Vec> rows;       // dense, length cols (+1 if augmented)
    std::vector<int> pivot_col;  // per row, -1 if none
    std::vector<int> pivot_rows; // rows that hold pivots, in selection order
    int cols;
    bool augmented;
};

Elim eliminate(const SparseMat& m, const Vec* b, const Field& f, PivotOrder order) {
    Elim e;
    e.cols = m.cols();
    e.augmented = b != nullptr;
    int width = e.cols + (e.augmented ? 1 : 0);
    e.rows.assign(m.rows(), Vec());
    e.pivot_col.assign(m.rows(), -1);
    for (int r = 0; r < m.rows(); ++r) {
        e.rows[r] = zero_vec(width);
        for (const auto& [c, v] : m.row(r)) e.rows[r][c] = f.reduce(v);
        if (b) e.rows[r][e.cols] = f.reduce((*b)[r]);
    }
    std::vector<int> col_order(e.cols);
    for (int c = 0; c < e.cols; ++c)
        col_order[c] = order == PivotOrder::Forward ? c : e.cols - 1 - c;

    for (int col : col_order) {
        int pr = -1;
        for (int r = 0; r < (int)e.rows.size(); ++r)
            if (e.pivot_col[r] < 0 && !qsh::is_zero(e.rows[r][col])) { pr = r; break; }
        if (pr < 0) continue;
        Rat inv = f.inv(e.rows[pr][col]);
        for (Rat& x : e.rows[pr]) x = f.mul(x, inv);
        for (int r = 0; r < (int)e.rows.size(); ++r) {
            if (r == pr || qsh::is_zero(e.rows[r][col])) continue;
            Rat c0 = e.rows[r][col];
            for (int k = 0; k < width; ++k)
                e.rows[r][k] = f.sub(e.rows[r][k], f.mul(c0, e.rows[pr][k]));
        }
        e.pivot_col[pr] = col;
        e.pivot_rows.push_back(pr);
    }
    return e;
}

}  // namespace

Echelon echelonize(const SparseMat& m, const Field& f, PivotOrder order) {
    Elim e = eliminate(m, nullptr, f, order);
    std::vector<std::pair<int, int>> piv;  // (col, row)
    for (int r : e.pivot_rows) piv.emplace_back(e.pivot_col[r], r);
    std::sort(piv.begin(), piv.end());
    Echelon out;
    out.cols = m.cols();
    for (auto& [c, r] : piv) {
        out.pivot_cols.push_back(c);
        out.rows.push_back(std::move(e.rows[r]));
    }
    return out;
}

int rank(const SparseMat& m, const Field& f) {
    return echelonize(m, f).rank();
}

std::vector<Vec> kernel_basis(const SparseMat& m, const Field& f, PivotOrder order) {
    Echelon e = echelonize(m, f, order);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int c : e.pivot_cols) is_pivot[c] = true;
    std::vector<Vec> out;
    for (int fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        Vec v = zero_vec(m.cols());
        v[fc] = 1;
        for (int r = 0; r < e.rank(); ++r)
            v[e.pivot_cols[r]] = f.neg(e.rows[r][fc]);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Vec> solve(const SparseMat& m, const Vec& b, const Field& f, PivotOrder order) {
    if ((int)b.size() != m.rows()) throw std::invalid_argument("solve: rhs size");
    Elim e = eliminate(m, &b, f, order);
    for (int r = 0; r < (int)e.rows.size(); ++r)
        if (e.pivot_col[r] < 0 && !qsh::is_zero(e.rows[r][e.cols]))
            return std::nullopt;
    Vec x = zero_vec(m.cols());
    for (int r = 0; r < (int)e.rows.size(); ++r)
        if (e.pivot_col[r] >= 0) x[e.pivot_col[r]] = e.rows[r][e.cols];
    return x;
}

bool EchelonBasis::add(Vec v) {
    if ((int)v.size() != n_) throw std::invalid_argument("EchelonBasis::add size");
    v = residue(std::move(v));
    int p = -1;
    for (int i = 0; i < n_; ++i)
        if (!qsh::is_zero(v[i])) { p = i; break; }
    if (p < 0) return false;
    Rat inv = f_.inv(v[p]);
    for (Rat& x : v) x = f_.mul(x, inv);
    for (auto& [pc, row] : rows_) {
        if (qsh::is_zero(row[p])) continue;
        Rat c0 = row[p];
        for (int k = 0; k < n_; ++k) row[k] = f_.sub(row[k], f_.mul(c0, v[k]));
    }
    rows_.emplace(p, std::move(v));
    return true;
}

void EchelonBasis::add_all(const std::vector<Vec>& vs) {
    for (const Vec& v : vs) add(v);
}

Vec EchelonBasis::residue(Vec v) const {
    if ((int)v.size() != n_) throw std::invalid_argument("EchelonBasis::residue size");
    for (int i = 0; i < n_; ++i) v[i] = f_.reduce(v[i]);
    for (const auto& [pc, row] : rows_) {
        if (qsh::is_zero(v[pc])) continue;
        Rat c0 = v[pc];
        for (int k = 0; k < n_; ++k) v[k] = f_.sub(v[k], f_.mul(c0, row[k]));
    }
    return v;
}

Vec EchelonBasis::coordinates(const Vec& v) const {
    if (!contains(v)) throw std::invalid_argument("EchelonBasis::coordinates: not in span");
    Vec out;
    out.reserve(rows_.size());
    for (const auto& [pc, row] : rows_) out.push_back(f_.reduce(v[pc]));
    return out;
}

std::vector<Vec> EchelonBasis::basis() const {
    std::vector<Vec> out;
    out.reserve(rows_.size());
    for (const auto& [pc, row] : rows_) out.push_back(row);
    return out;
}

EchelonBasis column_space(const SparseMat& m, const Field& f) {
    EchelonBasis eb(m.rows(), f);
    SparseMat t = m.transpose();
    for (int c = 0; c < t.rows(); ++c) {
        Vec col = zero_vec(m.rows());
        for (const auto& [r, v] : t.row(c)) col[r] = v;
        eb.add(std::move(col));
    }
    return eb;
}

}  // namespace qsh
