#include "qsh/symwreath.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qsh {

/* ------------------------------------------------------------------ */
/* Partitions                                                          */
/* ------------------------------------------------------------------ */

int Partition::size() const {
    int s = 0;
    for (int p : parts) s += p;
    return s;
}

int Partition::multiplicity(int i) const {
    return (int)std::count(parts.begin(), parts.end(), i);
}

std::string Partition::str() const {
    std::ostringstream os;
    os << '(';
    for (size_t k = 0; k < parts.size(); ++k) {
        if (k) os << ',';
        os << parts[k];
    }
    os << ')';
    return os.str();
}

Partition make_partition(std::vector<int> parts) {
    for (size_t k = 0; k < parts.size(); ++k) {
        if (parts[k] < 1) throw std::invalid_argument("partition parts must be positive");
        if (k && parts[k] > parts[k - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    return Partition{std::move(parts)};
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition{cur});
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions(int w) {
    if (w < 0) throw std::invalid_argument("partitions: w must be >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(w, w, cur, out);
    return out;
}

/* ------------------------------------------------------------------ */
/* Graded invariants of tensor powers                                  */
/* ------------------------------------------------------------------ */

std::string convention_name(SignConvention c) {
    return c == SignConvention::Unsigned ? "unsigned" : "signed";
}

namespace {

/* dst += q^shift * src */
void add_shifted(std::vector<long long>& dst, const std::vector<long long>& src, int shift) {
    if (dst.size() < src.size() + (size_t)shift) dst.resize(src.size() + (size_t)shift, 0);
    for (size_t i = 0; i < src.size(); ++i) dst[i + (size_t)shift] += src[i];
}

std::vector<long long> poly_mul(const std::vector<long long>& a,
                                const std::vector<long long>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<long long> out(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace

GradedDims invariant_tensor_dims(const GradedDims& v, int p, SignConvention conv) {
    if (p < 0) throw std::invalid_argument("invariant_tensor_dims: p must be >= 0");
    /* series[t] = q-polynomial coefficient of t^t in the product over all
       generators of 1/(1-q^d t) (symmetric) or (1+q^d t) (exterior) */
    std::vector<std::vector<long long>> series((size_t)p + 1);
    series[0] = {1};
    for (size_t d = 0; d < v.size(); ++d) {
        for (long long g = 0; g < v[d]; ++g) {
            if (conv == SignConvention::Signed && d % 2 == 1) {
                for (int t = p; t >= 1; --t)
                    add_shifted(series[(size_t)t], series[(size_t)t - 1], (int)d);
            } else {
                /* new[t] = old[t] + q^d new[t-1]: ascending t reads the
                   already-updated lower row */
                for (int t = 1; t <= p; ++t)
                    add_shifted(series[(size_t)t], series[(size_t)t - 1], (int)d);
            }
        }
    }
    return trim_graded(series[(size_t)p]);
}

GradedDims wreath_hh_dims(const GradedDims& v, int w, SignConvention conv) {
    if (w < 1) throw std::invalid_argument("wreath_hh_dims: w must be >= 1");
    GradedDims total;
    for (const Partition& lam : partitions(w)) {
        std::vector<long long> term{1};
        for (int i = 1; i <= w; ++i) {
            int m = lam.multiplicity(i);
            if (m > 0) term = poly_mul(term, invariant_tensor_dims(v, m, conv));
        }
        add_shifted(total, term, 0);
    }
    return trim_graded(total);
}

/* ------------------------------------------------------------------ */
/* Symmetric polynomials                                               */
/* ------------------------------------------------------------------ */

namespace {

int weighted_degree(const std::vector<int>& expo) {
    int d = 0;
    for (size_t k = 0; k < expo.size(); ++k) d += (int)(k + 1) * expo[k];
    return d;
}

}  // namespace

bool SymPoly::is_homogeneous() const {
    int d = -1;
    for (const auto& [m, c] : coeffs) {
        int dm = weighted_degree(m);
        if (d == -1) d = dm;
        if (dm != d) return false;
    }
    return true;
}

int SymPoly::degree() const {
    int d = -1;
    for (const auto& [m, c] : coeffs) d = std::max(d, weighted_degree(m));
    return d;
}

std::string SymPoly::str() const {
    if (coeffs.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        const auto& [m, c] = *it;
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::ostringstream mono;
        bool any = false;
        for (size_t k = 0; k < m.size(); ++k) {
            if (m[k] == 0) continue;
            if (any) mono << "*";
            mono << "e" << (k + 1);
            if (m[k] > 1) mono << "^" << m[k];
            any = true;
        }
        if (!any) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << mono.str();
        }
    }
    return os.str();
}

SymPoly sym_zero(int w) { return SymPoly{w, {}}; }

SymPoly sym_monomial(int w, std::vector<int> expo, const Rat& c) {
    if ((int)expo.size() != w) throw std::invalid_argument("sym_monomial: exponent length != w");
    for (int x : expo)
        if (x < 0) throw std::invalid_argument("sym_monomial: negative exponent");
    SymPoly out{w, {}};
    if (c != 0) out.coeffs.emplace(std::move(expo), c);
    return out;
}

SymPoly sym_add(const SymPoly& a, const SymPoly& b) {
    if (a.w != b.w) throw std::invalid_argument("sym_add: mismatched variable counts");
    SymPoly out = a;
    for (const auto& [m, c] : b.coeffs) {
        Rat& slot = out.coeffs[m];
        slot += c;
        if (slot == 0) out.coeffs.erase(m);
    }
    return out;
}

SymPoly sym_scale(const SymPoly& a, const Rat& c) {
    SymPoly out{a.w, {}};
    if (c == 0) return out;
    for (const auto& [m, co] : a.coeffs) out.coeffs.emplace(m, co * c);
    return out;
}

SymPoly sym_mul(const SymPoly& a, const SymPoly& b) {
    if (a.w != b.w) throw std::invalid_argument("sym_mul: mismatched variable counts");
    SymPoly out{a.w, {}};
    for (const auto& [ma, ca] : a.coeffs)
        for (const auto& [mb, cb] : b.coeffs) {
            std::vector<int> m(ma.size());
            for (size_t k = 0; k < m.size(); ++k) m[k] = ma[k] + mb[k];
            Rat& slot = out.coeffs[m];
            slot += ca * cb;
            if (slot == 0) out.coeffs.erase(m);
        }
    return out;
}

SymPoly power_sum_in_e(int k, int w) {
    if (k < 1 || w < 1) throw std::invalid_argument("power_sum_in_e: k, w must be >= 1");
    auto e_var = [&](int m) {  // e_m, zero beyond w
        std::vector<int> expo((size_t)w, 0);
        if (m > w) return sym_zero(w);
        expo[(size_t)m - 1] = 1;
        return sym_monomial(w, expo, rat(1));
    };
    std::vector<SymPoly> p(1, sym_zero(w));  // p[0] unused
    for (int n = 1; n <= k; ++n) {
        /* Newton: p_n = sum_{m=1}^{n-1} (-1)^{m-1} e_m p_{n-m} + (-1)^{n-1} n e_n */
        SymPoly acc = sym_zero(w);
        for (int m = 1; m < n; ++m) {
            SymPoly t = sym_mul(e_var(m), p[(size_t)(n - m)]);
            acc = sym_add(acc, sym_scale(t, rat(m % 2 == 1 ? 1 : -1)));
        }
        acc = sym_add(acc, sym_scale(e_var(n), rat(n % 2 == 1 ? n : -n)));
        p.push_back(acc);
    }
    return p[(size_t)k];
}

namespace {

void lambda_basis_rec(int k, int remaining, std::vector<int>& expo,
                      std::vector<std::vector<int>>& out) {
    if (k == 0) {
        if (remaining == 0) out.push_back(expo);
        return;
    }
    for (int m = remaining / k; m >= 0; --m) {
        expo[(size_t)k - 1] = m;
        lambda_basis_rec(k - 1, remaining - k * m, expo, out);
    }
    expo[(size_t)k - 1] = 0;
}

}  // namespace

std::vector<std::vector<int>> lambda_basis(int w, int d) {
    if (w < 1 || d < 0) throw std::invalid_argument("lambda_basis: bad arguments");
    std::vector<std::vector<int>> out;
    std::vector<int> expo((size_t)w, 0);
    lambda_basis_rec(w, d, expo, out);
    return out;
}

/* ------------------------------------------------------------------ */
/* Truncated invariant ring and pi                                     */
/* ------------------------------------------------------------------ */

namespace {

void truncated_basis_rec(int slots, int maxpart, int remaining, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
    if (slots == 0) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    for (int p = std::min(remaining, maxpart); p >= 0; --p) {
        cur.push_back(p);
        truncated_basis_rec(slots - 1, p, remaining - p, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> truncated_basis(int e, int w, int d) {
    if (e < 1 || w < 1 || d < 0) throw std::invalid_argument("truncated_basis: bad arguments");
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    truncated_basis_rec(w, e - 1, d, cur, out);
    return out;
}

GradedDims truncated_invariant_dims(int e, int w) {
    if (e < 1 || w < 1)
        throw std::invalid_argument("truncated_invariant_dims: e, w must be >= 1");
    GradedDims out;
    for (int d = 0; d <= w * (e - 1); ++d)
        out.push_back((long long)truncated_basis(e, w, d).size());
    return trim_graded(out);
}

namespace {

/* all k-subsets of {0..w-1} as 0/1 exponent vectors */
std::vector<std::vector<int>> elementary_terms(int w, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> idx((size_t)k);
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == k) {
            std::vector<int> expo((size_t)w, 0);
            for (int j = 0; j < k; ++j) expo[(size_t)idx[(size_t)j]] = 1;
            out.push_back(std::move(expo));
            return;
        }
        for (int i = start; i < w; ++i) {
            idx[(size_t)depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace

std::map<std::vector<int>, Rat> expand_truncated(const SymPoly& f, int e) {
    if (e < 1) throw std::invalid_argument("expand_truncated: e must be >= 1");
    int w = f.w;
    std::vector<std::vector<std::vector<int>>> elem((size_t)w + 1);
    for (int k = 1; k <= w; ++k) elem[(size_t)k] = elementary_terms(w, k);

    std::map<std::vector<int>, Rat> total;
    for (const auto& [m, c] : f.coeffs) {
        std::map<std::vector<int>, Rat> cur;
        cur.emplace(std::vector<int>((size_t)w, 0), c);
        for (int k = 1; k <= w; ++k) {
            for (int rep = 0; rep < m[(size_t)k - 1]; ++rep) {
                std::map<std::vector<int>, Rat> next;
                for (const auto& [ye, yc] : cur)
                    for (const auto& term : elem[(size_t)k]) {
                        std::vector<int> sum(ye.size());
                        bool dead = false;
                        for (size_t i = 0; i < sum.size(); ++i) {
                            sum[i] = ye[i] + term[i];
                            if (sum[i] >= e) dead = true;
                        }
                        if (dead) continue;
                        Rat& slot = next[sum];
                        slot += yc;
                        if (slot == 0) next.erase(sum);
                    }
                cur = std::move(next);
            }
        }
        for (const auto& [ye, yc] : cur) {
            Rat& slot = total[ye];
            slot += yc;
            if (slot == 0) total.erase(ye);
        }
    }
    return total;
}

Vec pi_coords(const SymPoly& f, int e, int d) {
    auto tgt = truncated_basis(e, f.w, d);
    auto em = expand_truncated(f, e);
    Vec out = zero_vec((int)tgt.size());
    for (size_t r = 0; r < tgt.size(); ++r) {
        auto it = em.find(tgt[r]);
        if (it != em.end()) out[r] = it->second;
    }
    return out;
}

/* ------------------------------------------------------------------ */
/* Kernel of pi and quotients                                          */
/* ------------------------------------------------------------------ */

std::vector<SymPoly> power_sum_ideal_generators(int e, int w) {
    if (e < 1 || w < 1)
        throw std::invalid_argument("power_sum_ideal_generators: e, w must be >= 1");
    std::vector<SymPoly> out;
    for (int k = e + 1; k <= e + w + 1; ++k) out.push_back(power_sum_in_e(k, w));
    return out;
}

namespace {

SymPoly from_coords(int w, const std::vector<std::vector<int>>& mons, const Vec& v) {
    SymPoly out = sym_zero(w);
    for (size_t j = 0; j < mons.size(); ++j)
        if (v[j] != 0) out.coeffs.emplace(mons[j], v[j]);
    return out;
}

/* pi on the degree-d monomial basis of Lambda_w, as a matrix */
SparseMat pi_matrix(int e, int w, int d, const std::vector<std::vector<int>>& mons) {
    auto tgt = truncated_basis(e, w, d);
    SparseMat M((int)tgt.size(), (int)mons.size());
    for (size_t j = 0; j < mons.size(); ++j) {
        Vec col = pi_coords(sym_monomial(w, mons[j], rat(1)), e, d);
        for (size_t r = 0; r < col.size(); ++r)
            if (col[r] != 0) M.set((int)r, (int)j, col[r]);
    }
    return M;
}

Vec sym_to_coords(const SymPoly& f, const std::vector<std::vector<int>>& mons) {
    std::map<std::vector<int>, int> pos;
    for (size_t j = 0; j < mons.size(); ++j) pos.emplace(mons[j], (int)j);
    Vec out = zero_vec((int)mons.size());
    for (const auto& [m, c] : f.coeffs) {
        auto it = pos.find(m);
        if (it == pos.end()) throw std::invalid_argument("coordinate lookup: wrong degree");
        out[(size_t)it->second] = c;
    }
    return out;
}

/* echelon basis of the degree-d piece of the ideal generated by gens */
EchelonBasis ideal_piece(int w, const std::vector<SymPoly>& gens, int d,
                         const std::vector<std::vector<int>>& mons) {
    EchelonBasis eb((int)mons.size(), Field::rationals());
    for (const SymPoly& g : gens) {
        if (g.is_zero()) continue;
        int dg = g.degree();
        if (dg > d) continue;
        for (const auto& m : lambda_basis(w, d - dg))
            eb.add(sym_to_coords(sym_mul(g, sym_monomial(w, m, rat(1))), mons));
    }
    return eb;
}

}  // namespace

std::vector<SymPoly> kernel_pi_basis(int e, int w, int max_degree) {
    if (e < 1 || w < 1 || max_degree < 0)
        throw std::invalid_argument("kernel_pi_basis: bad arguments");
    std::vector<SymPoly> out;
    Field QQ = Field::rationals();
    for (int d = 0; d <= max_degree; ++d) {
        auto mons = lambda_basis(w, d);
        for (const Vec& v : kernel_basis(pi_matrix(e, w, d, mons), QQ))
            out.push_back(from_coords(w, mons, v));
    }
    return out;
}

KernelPiReport kernel_pi_report(int e, int w, int max_degree) {
    if (e < 1 || w < 1) throw std::invalid_argument("kernel_pi_report: e, w must be >= 1");
    if (max_degree < e + w + 1)
        throw std::invalid_argument(
            "kernel_pi_report: max_degree must be at least e+w+1 to see every generator");
    KernelPiReport rep;
    rep.e = e;
    rep.w = w;
    rep.max_degree = max_degree;
    for (int k = e + 1; k <= e + w + 1; ++k) rep.generator_indices.push_back(k);
    auto gens = power_sum_ideal_generators(e, w);
    Field QQ = Field::rationals();

    for (int d = 0; d <= max_degree; ++d) {
        KernelPiDegree row;
        row.degree = d;
        auto mons = lambda_basis(w, d);
        row.lambda_dim = (long long)mons.size();
        SparseMat M = pi_matrix(e, w, d, mons);
        row.image_dim = rank(M, QQ);
        auto ker = kernel_basis(M, QQ);
        row.kernel_dim = (long long)ker.size();

        EchelonBasis ideal = ideal_piece(w, gens, d, mons);
        row.ideal_dim = ideal.dim();

        /* ideal piece inside the kernel: every spanning product maps to 0 */
        for (const Vec& bv : ideal.basis()) {
            Vec img = M.apply(bv);
            if (!is_zero_vec(img)) {
                row.ideal_in_kernel = false;
                break;
            }
        }

        /* kernel inside the ideal piece, with witnesses when it is not */
        EchelonBasis kspan((int)mons.size(), QQ);
        for (const Vec& kv : ker) {
            kspan.add(kv);
            if (!ideal.contains(kv)) row.kernel_in_ideal = false;
        }
        if (!row.kernel_in_ideal) {
            /* prefer a named power sum that witnesses the gap */
            for (int k = 1; k <= max_degree; ++k) {
                SymPoly pk = power_sum_in_e(k, w);
                if (pk.degree() != d) continue;
                Vec v = sym_to_coords(pk, mons);
                if (kspan.contains(v) && !ideal.contains(v))
                    row.witnesses.push_back("p_" + std::to_string(k) + " = " + pk.str());
            }
            if (row.witnesses.empty())
                for (const Vec& kv : ker)
                    if (!ideal.contains(kv)) {
                        row.witnesses.push_back(from_coords(w, mons, kv).str());
                        break;
                    }
        }

        rep.ideal_contained = rep.ideal_contained && row.ideal_in_kernel;
        rep.kernel_matches = rep.kernel_matches && row.kernel_in_ideal;
        rep.degrees.push_back(std::move(row));
    }
    return rep;
}

GradedDims quotient_hilbert(int e, int w, const std::vector<SymPoly>& generators,
                            int max_degree) {
    if (e < 1 || w < 1 || max_degree < 0)
        throw std::invalid_argument("quotient_hilbert: bad arguments");
    for (const SymPoly& g : generators) {
        if (g.w != w) throw std::invalid_argument("quotient_hilbert: generator in wrong ring");
        if (!g.is_homogeneous())
            throw std::invalid_argument("quotient_hilbert: generators must be homogeneous");
    }
    GradedDims out;
    for (int d = 0; d <= max_degree; ++d) {
        auto mons = lambda_basis(w, d);
        EchelonBasis ideal = ideal_piece(w, generators, d, mons);
        out.push_back((long long)mons.size() - ideal.dim());
    }
    return trim_graded(out);
}

}  // namespace qsh
