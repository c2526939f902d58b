#include "qsh/quiver_algebra.hpp"
#include <algorithm>
#include <set>
#include <stdexcept>

namespace qsh {

Elem& add_scaled(Elem& x, const Elem& y, const Rat& s) {
    if (qsh::is_zero(s)) return x;
    for (const auto& [b, v] : y.c) {
        auto it = x.c.find(b);
        if (it == x.c.end()) {
            x.c.emplace(b, v * s);
        } else {
            it->second += v * s;
            if (qsh::is_zero(it->second)) x.c.erase(it);
        }
    }
    return x;
}

namespace {

using Word = std::vector<int>;

struct Rule {
    Word lhs;
    Rat coeff;  // lhs -> coeff * rhs; monomial rules have empty rhs, coeff 0
    Word rhs;
    bool monomial() const { return rhs.empty() && qsh::is_zero(coeff); }
};

/* (length, lex-on-arrow-indices); rewriting strictly decreases this order */
bool word_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

struct Rewriter {
    const Quiver* q;
    std::vector<Rule> rules;

    int word_source(const Word& w, int trivial_vertex) const {
        return w.empty() ? trivial_vertex : (*q).arrows[w.front()].source;
    }
    int word_target(const Word& w, int trivial_vertex) const {
        return w.empty() ? trivial_vertex : (*q).arrows[w.back()].target;
    }

    bool composable(const Word& w) const {
        for (size_t k = 0; k + 1 < w.size(); ++k)
            if (q->arrows[w[k]].target != q->arrows[w[k + 1]].source) return false;
        return true;
    }

    /* first match scanning positions left to right, rules in order */
    std::optional<std::pair<size_t, size_t>> find_match(const Word& w) const {
        for (size_t pos = 0; pos < w.size(); ++pos)
            for (size_t ri = 0; ri < rules.size(); ++ri) {
                const Word& l = rules[ri].lhs;
                if (pos + l.size() > w.size()) continue;
                if (std::equal(l.begin(), l.end(), w.begin() + pos)) return {{pos, ri}};
            }
        return std::nullopt;
    }

    /* reduce to normal form; single-term because rule right sides are single
       words.  Returns coeff 0 for words that reduce to zero. */
    std::pair<Rat, Word> reduce(Word w) const {
        Rat c(1);
        while (true) {
            auto m = find_match(w);
            if (!m) return {c, w};
            const Rule& r = rules[m->second];
            if (r.monomial()) return {Rat(0), {}};
            Word next(w.begin(), w.begin() + m->first);
            next.insert(next.end(), r.rhs.begin(), r.rhs.end());
            next.insert(next.end(), w.begin() + m->first + r.lhs.size(), w.end());
            c *= r.coeff;
            w = std::move(next);
        }
    }

    bool irreducible(const Word& w) const { return !find_match(w).has_value(); }
};

Rewriter make_rewriter(const Quiver& q, const std::vector<Relation>& rels) {
    Rewriter rw{&q, {}};
    for (const Relation& rel : rels) {
        if (rel.terms.empty() || rel.terms.size() > 2)
            throw std::invalid_argument("relations must be monomial or binomial");
        for (const RelationTerm& t : rel.terms) {
            if (t.word.empty()) throw std::invalid_argument("relation words must be admissible (length >= 2)");
            if (t.word.size() < 2) throw std::invalid_argument("relation words must have length >= 2");
            for (int a : t.word)
                if (a < 0 || a >= (int)q.arrows.size())
                    throw std::invalid_argument("relation references unknown arrow");
            if (!rw.composable(t.word)) throw std::invalid_argument("relation word not composable");
            if (qsh::is_zero(t.coeff)) throw std::invalid_argument("relation term with zero coefficient");
        }
        if (rel.terms.size() == 1) {
            rw.rules.push_back({rel.terms[0].word, Rat(0), {}});
            continue;
        }
        const RelationTerm &t0 = rel.terms[0], &t1 = rel.terms[1];
        if (rw.q->arrows[t0.word.front()].source != rw.q->arrows[t1.word.front()].source ||
            rw.q->arrows[t0.word.back()].target != rw.q->arrows[t1.word.back()].target)
            throw std::invalid_argument("binomial relation terms must be parallel");
        if (t0.word == t1.word) {
            Rat s = t0.coeff + t1.coeff;
            if (qsh::is_zero(s)) throw std::invalid_argument("trivial relation");
            rw.rules.push_back({t0.word, Rat(0), {}});
            continue;
        }
        // orient the (length, lex)-larger word toward the smaller one
        bool first_larger = word_less(t1.word, t0.word);
        const RelationTerm& big = first_larger ? t0 : t1;
        const RelationTerm& small = first_larger ? t1 : t0;
        rw.rules.push_back({big.word, -small.coeff / big.coeff, small.word});
    }
    return rw;
}

}  // namespace

BoundQuiverAlgebra BoundQuiverAlgebra::from_quiver(const Quiver& q, const std::vector<Relation>& rels) {
    if (q.num_vertices < 1) throw std::invalid_argument("quiver needs at least one vertex");
    for (const Arrow& a : q.arrows)
        if (a.source < 1 || a.source > q.num_vertices || a.target < 1 || a.target > q.num_vertices)
            throw std::invalid_argument("arrow endpoints out of range");

    Rewriter rw = make_rewriter(q, rels);

    BoundQuiverAlgebra A;
    A.presented_ = true;
    A.quiver_ = q;
    A.relations_ = rels;
    for (int v = 1; v <= q.num_vertices; ++v) A.labels_.push_back(v);

    // basis: irreducible words, by length then generation order (lex within length)
    std::map<Word, int> index;
    auto push = [&](const Word& w, int src, int tgt) {
        index.emplace(w, (int)A.words_.size());
        A.words_.push_back(w);
        A.source_.push_back(src);
        A.target_.push_back(tgt);
        A.grade_.push_back((int)w.size());
    };
    for (int v = 1; v <= q.num_vertices; ++v) push({}, v, v);

    std::vector<Word> level;  // trivial words handled above; arrows seed length 1
    for (int a = 0; a < (int)q.arrows.size(); ++a) {
        Word w{a};
        if (rw.irreducible(w)) level.push_back(w);
    }
    std::sort(level.begin(), level.end());
    const int basis_cap = 100000;
    while (!level.empty()) {
        for (const Word& w : level)
            push(w, q.arrows[w.front()].source, q.arrows[w.back()].target);
        if ((int)A.words_.size() > basis_cap)
            throw std::runtime_error("basis did not stabilize: relations are not admissible");
        std::vector<Word> next;
        for (const Word& w : level)
            for (int a = 0; a < (int)q.arrows.size(); ++a) {
                if (q.arrows[a].source != q.arrows[w.back()].target) continue;
                Word ext = w;
                ext.push_back(a);
                if (rw.irreducible(ext)) next.push_back(ext);
            }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        level = std::move(next);
    }

    // names: e{v} for idempotents, reversed arrow names joined by '*' otherwise
    for (int b = 0; b < A.dim(); ++b) {
        if (A.words_[b].empty()) {
            A.names_.push_back("e" + std::to_string(A.source_[b]));
        } else {
            std::string n;
            for (auto it = A.words_[b].rbegin(); it != A.words_[b].rend(); ++it) {
                if (!n.empty()) n += "*";
                n += q.arrows[*it].name;
            }
            A.names_.push_back(n);
        }
    }
    for (int b = 0; b < A.dim(); ++b) A.name_index_[A.names_[b]] = b;

    // multiplication table: x·y = "apply y, then x"
    A.table_.assign(A.dim(), std::vector<Elem>((size_t)A.dim()));
    for (int i = 0; i < A.dim(); ++i)
        for (int j = 0; j < A.dim(); ++j) {
            if (A.source_[i] != A.target_[j]) continue;  // not composable
            Word w = A.words_[j];
            w.insert(w.end(), A.words_[i].begin(), A.words_[i].end());
            if (w.empty()) {  // e_v * e_v; the empty word alone doesn't name the vertex
                A.table_[i][(size_t)j] = A.basis_elem(i);
                continue;
            }
            auto [c, nf] = rw.reduce(std::move(w));
            if (qsh::is_zero(c)) continue;
            auto it = index.find(nf);
            if (it == index.end()) throw std::logic_error("normal form missing from basis");
            A.table_[i][(size_t)j].c.emplace(it->second, c);
        }

    for (int v = 1; v <= q.num_vertices; ++v) A.generators_.push_back(A.idempotent(v));
    for (int a = 0; a < (int)q.arrows.size(); ++a) {
        Word w{a};
        auto [c, nf] = rw.reduce(w);
        Elem g;
        if (!qsh::is_zero(c)) g.c.emplace(index.at(nf), c);
        if (!g.is_zero()) A.generators_.push_back(g);
    }

    A.radical_ = EchelonBasis(A.dim());
    for (int b = 0; b < A.dim(); ++b)
        if (A.grade_[b] >= 1) {
            Vec v = zero_vec(A.dim());
            v[b] = 1;
            A.radical_.add(std::move(v));
        }
    return A;
}

BoundQuiverAlgebra BoundQuiverAlgebra::semisimple(int num_vertices) {
    return from_quiver(Quiver{num_vertices, {}}, {});
}

std::optional<int> BoundQuiverAlgebra::index_of_name(const std::string& n) const {
    auto it = name_index_.find(n);
    if (it == name_index_.end()) return std::nullopt;
    return it->second;
}

std::vector<int> BoundQuiverAlgebra::paths_from(int v) const {
    std::vector<int> out;
    for (int b = 0; b < dim(); ++b)
        if (source_[b] == v) out.push_back(b);
    return out;
}

std::vector<int> BoundQuiverAlgebra::paths_into(int v) const {
    std::vector<int> out;
    for (int b = 0; b < dim(); ++b)
        if (target_[b] == v) out.push_back(b);
    return out;
}

std::vector<int> BoundQuiverAlgebra::paths_between(int src, int tgt) const {
    std::vector<int> out;
    for (int b = 0; b < dim(); ++b)
        if (source_[b] == src && target_[b] == tgt) out.push_back(b);
    return out;
}

Elem BoundQuiverAlgebra::unit() const {
    Elem u;
    for (int v : labels_) add_scaled(u, idempotent(v), Rat(1));
    return u;
}

Elem BoundQuiverAlgebra::idempotent(int label) const {
    return basis_elem(idempotent_index(label));
}

int BoundQuiverAlgebra::idempotent_index(int label) const {
    for (int b = 0; b < dim(); ++b)
        if (grade_[b] == 0 && source_[b] == label) return b;
    throw std::invalid_argument("no idempotent for vertex label " + std::to_string(label));
}

Elem BoundQuiverAlgebra::basis_elem(int b) const {
    Elem x;
    x.c.emplace(b, Rat(1));
    return x;
}

Elem BoundQuiverAlgebra::mul(const Elem& x, const Elem& y) const {
    Elem out;
    for (const auto& [i, ci] : x.c)
        for (const auto& [j, cj] : y.c) add_scaled(out, table_[i][(size_t)j], ci * cj);
    return out;
}

Vec BoundQuiverAlgebra::to_vec(const Elem& x) const {
    Vec v = zero_vec(dim());
    for (const auto& [b, c] : x.c) v[b] = c;
    return v;
}

Elem BoundQuiverAlgebra::from_vec(const Vec& v) const {
    Elem x;
    for (int b = 0; b < dim(); ++b)
        if (!qsh::is_zero(v[b])) x.c.emplace(b, v[b]);
    return x;
}

std::string BoundQuiverAlgebra::elem_str(const Elem& x) const {
    if (x.is_zero()) return "0";
    std::string out;
    for (const auto& [b, c] : x.c) {
        Rat a = abs(c);
        bool neg = sgn(c) < 0;
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (a != 1) out += rat_str(a) + "*";
        out += names_[b];
    }
    return out;
}

std::vector<Elem> BoundQuiverAlgebra::center() const {
    // z central iff it commutes with every algebra generator
    int d = dim();
    SparseMat m((int)generators_.size() * d, d);
    for (int gi = 0; gi < (int)generators_.size(); ++gi)
        for (int k = 0; k < d; ++k) {
            Elem comm = mul(generators_[gi], basis_elem(k));
            add_scaled(comm, mul(basis_elem(k), generators_[gi]), Rat(-1));
            for (const auto& [b, c] : comm.c) m.add(gi * d + b, k, c);
        }
    EchelonBasis eb(d);
    eb.add_all(kernel_basis(m, Field::rationals()));
    std::vector<Elem> out;
    for (const Vec& v : eb.basis()) out.push_back(from_vec(v));
    return out;
}

std::vector<Elem> BoundQuiverAlgebra::radical_power(int k) const {
    if (k < 1) throw std::invalid_argument("radical_power needs k >= 1");
    std::vector<Vec> cur = radical_.basis();
    for (int step = 2; step <= k; ++step) {
        EchelonBasis next(dim());
        for (const Vec& x : cur)
            for (const Vec& j : radical_.basis())
                next.add(to_vec(mul(from_vec(x), from_vec(j))));
        cur = next.basis();
        if (cur.empty()) break;
    }
    std::vector<Elem> out;
    for (const Vec& v : cur) out.push_back(from_vec(v));
    return out;
}

bool BoundQuiverAlgebra::verify_associativity() const {
    for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j) {
            Elem ij = mul_basis(i, j);
            for (int k = 0; k < dim(); ++k) {
                Elem left = mul(ij, basis_elem(k));
                Elem right = mul(basis_elem(i), mul_basis(j, k));
                if (!(left == right)) return false;
            }
        }
    return true;
}

bool BoundQuiverAlgebra::verify_confluence(int max_len) const {
    if (!presented_) throw std::logic_error("verify_confluence needs a presentation");
    Rewriter rw = make_rewriter(quiver_, relations_);

    // all reachable outcomes of every reduction order; memoized on the word
    std::map<Word, std::set<std::pair<Rat, Word>>> memo;
    auto outcomes = [&](auto&& self, const Word& w) -> const std::set<std::pair<Rat, Word>>& {
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
        std::set<std::pair<Rat, Word>> res;
        bool any = false;
        for (size_t pos = 0; pos < w.size(); ++pos)
            for (size_t ri = 0; ri < rw.rules.size(); ++ri) {
                const Rule& r = rw.rules[ri];
                if (pos + r.lhs.size() > w.size()) continue;
                if (!std::equal(r.lhs.begin(), r.lhs.end(), w.begin() + pos)) continue;
                any = true;
                if (r.monomial()) {
                    res.insert({Rat(0), {}});
                    continue;
                }
                Word next(w.begin(), w.begin() + pos);
                next.insert(next.end(), r.rhs.begin(), r.rhs.end());
                next.insert(next.end(), w.begin() + pos + r.lhs.size(), w.end());
                for (const auto& [c, nf] : self(self, next))
                    res.insert(qsh::is_zero(c * r.coeff) ? std::pair<Rat, Word>{Rat(0), {}}
                                                        : std::pair<Rat, Word>{c * r.coeff, nf});
            }
        if (!any) res.insert({Rat(1), w});
        return memo.emplace(w, std::move(res)).first->second;
    };

    // enumerate all composable words up to max_len
    std::vector<Word> level;
    for (int a = 0; a < (int)quiver_.arrows.size(); ++a) level.push_back({a});
    for (int len = 1; len <= max_len && !level.empty(); ++len) {
        for (const Word& w : level)
            if (outcomes(outcomes, w).size() != 1) return false;
        std::vector<Word> next;
        for (const Word& w : level)
            for (int a = 0; a < (int)quiver_.arrows.size(); ++a)
                if (quiver_.arrows[a].source == quiver_.arrows[w.back()].target) {
                    Word ext = w;
                    ext.push_back(a);
                    next.push_back(ext);
                }
        level = std::move(next);
    }
    return true;
}

void BoundQuiverAlgebra::set_name(int b, const std::string& n) {
    name_index_.erase(names_[b]);
    names_[b] = n;
    name_index_[n] = b;
}

BoundQuiverAlgebra AlgebraBuilder::build() const {
    BoundQuiverAlgebra A;
    A.presented_ = presented;
    A.quiver_ = quiver;
    A.relations_ = relations;
    A.labels_ = labels;
    A.words_ = words;
    A.source_ = source;
    A.target_ = target;
    A.grade_ = grade;
    A.names_ = names;
    for (int b = 0; b < (int)names.size(); ++b) A.name_index_[names[b]] = b;
    A.table_ = table;
    A.generators_ = generators;
    A.radical_ = EchelonBasis((int)words.size());
    for (const Vec& v : radical_vectors) A.radical_.add(v);
    return A;
}

BoundQuiverAlgebra build_A_e(int e) {
    if (e < 2) throw std::invalid_argument("A_e needs e >= 2");
    Quiver q;
    q.num_vertices = e;
    for (int i = 1; i <= e - 1; ++i) q.arrows.push_back({"a" + std::to_string(i), i, i + 1});
    for (int i = 1; i <= e - 1; ++i) q.arrows.push_back({"b" + std::to_string(i), i + 1, i});
    auto a = [&](int i) { return i - 1; };
    auto b = [&](int i) { return e - 1 + i - 1; };

    std::vector<Relation> rels;
    for (int i = 2; i <= e - 1; ++i) {
        // alpha(i) alpha(i-1) = 0: apply a_{i-1} then a_i
        rels.push_back({{{Rat(1), {a(i - 1), a(i)}}}});
        // alpha^-(i-1) alpha^-(i) = 0: apply b_i then b_{i-1}
        rels.push_back({{{Rat(1), {b(i), b(i - 1)}}}});
        // alpha(i-1) alpha^-(i-1) = alpha^-(i) alpha(i): loop at i from below = from above
        rels.push_back({{{Rat(1), {b(i - 1), a(i - 1)}}, {Rat(-1), {a(i), b(i)}}}});
    }
    // alpha(e-1) alpha^-(e-1) = 0: the loop at vertex e vanishes
    rels.push_back({{{Rat(1), {b(e - 1), a(e - 1)}}}});

    BoundQuiverAlgebra A = BoundQuiverAlgebra::from_quiver(q, rels);
    // canonical loop names: c_i is the loop at vertex i (normal form a_i then b_i)
    for (int i = 1; i <= e - 1; ++i) {
        auto idx = A.index_of_name("b" + std::to_string(i) + "*a" + std::to_string(i));
        if (!idx) throw std::logic_error("A_e loop missing");
        A.set_name(*idx, "c" + std::to_string(i));
    }
    return A;
}

Ideal ideal_from_generators(const BoundQuiverAlgebra& A, const std::vector<Elem>& gens) {
    Ideal I;
    I.generators = gens;
    I.span = EchelonBasis(A.dim());
    for (const Elem& g : gens) I.span.add(A.to_vec(g));
    // close under left/right multiplication by the algebra generators
    while (true) {
        int before = I.span.dim();
        for (const Vec& v : I.span.basis()) {
            Elem x = A.from_vec(v);
            for (const Elem& g : A.algebra_generators()) {
                I.span.add(A.to_vec(A.mul(g, x)));
                I.span.add(A.to_vec(A.mul(x, g)));
            }
        }
        if (I.span.dim() == before) break;
    }
    return I;
}

Ideal idempotent_ideal(const BoundQuiverAlgebra& A, const std::vector<int>& vertex_labels) {
    Elem eps;
    for (int v : vertex_labels) add_scaled(eps, A.idempotent(v), Rat(1));
    return ideal_from_generators(A, {eps});
}

BoundQuiverAlgebra quotient_algebra(const BoundQuiverAlgebra& A, const Ideal& I) {
    std::vector<bool> is_pivot(A.dim(), false);
    for (const auto& [pc, row] : I.span.rows_by_pivot()) is_pivot[pc] = true;
    std::vector<int> coords;  // surviving coordinates, the quotient basis
    std::vector<int> coord_of(A.dim(), -1);
    for (int b = 0; b < A.dim(); ++b)
        if (!is_pivot[b]) {
            coord_of[b] = (int)coords.size();
            coords.push_back(b);
        }

    auto project = [&](const Elem& x) {
        Vec r = I.span.residue(A.to_vec(x));
        Elem out;
        for (int k = 0; k < (int)coords.size(); ++k)
            if (!qsh::is_zero(r[coords[k]])) out.c.emplace(k, r[coords[k]]);
        return out;
    };

    AlgebraBuilder B;
    for (int k = 0; k < (int)coords.size(); ++k) {
        int b = coords[k];
        B.words.push_back(A.word(b));
        B.source.push_back(A.source(b));
        B.target.push_back(A.target(b));
        B.grade.push_back(A.grade(b));
        B.names.push_back(A.name(b));
    }
    for (int v : A.vertex_labels())
        if (!project(A.idempotent(v)).is_zero()) B.labels.push_back(v);

    B.table.assign(coords.size(), std::vector<Elem>(coords.size()));
    for (int i = 0; i < (int)coords.size(); ++i)
        for (int j = 0; j < (int)coords.size(); ++j)
            B.table[i][(size_t)j] = project(A.mul(A.basis_elem(coords[i]), A.basis_elem(coords[j])));

    for (const Elem& g : A.algebra_generators()) {
        Elem pg = project(g);
        if (!pg.is_zero()) B.generators.push_back(pg);
    }
    // J(A/I) is the image of J(A): nilpotent ideal with semisimple quotient
    for (const Vec& v : A.radical_span().basis()) {
        Elem pv = project(A.from_vec(v));
        Vec w = zero_vec((int)coords.size());
        for (const auto& [k, c] : pv.c) w[k] = c;
        B.radical_vectors.push_back(std::move(w));
    }
    return B.build();
}

}  // namespace qsh
