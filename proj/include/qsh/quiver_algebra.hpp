#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>
#include "qsh/linalg.hpp"

namespace qsh {

/* Vertices are 1-based labels.  Arrow words list arrow indices in
   application order: word[0] acts first, so the word [a, b] is the
   composite b∘a and products follow the right-to-left convention
   p·q = "apply q, then p". */
struct Arrow {
    std::string name;
    int source = 0, target = 0;
};

struct Quiver {
    int num_vertices = 0;
    std::vector<Arrow> arrows;
};

struct RelationTerm {
    Rat coeff;
    std::vector<int> word;
};

/* Only monomial (1 term) and binomial (2 term) relations are supported; the
   rewriting system orients each binomial toward the (length, lex)-smaller
   word, which makes reduction terminate. */
struct Relation {
    std::vector<RelationTerm> terms;
};

/* sparse element: basis index -> coefficient, no explicit zeros */
struct Elem {
    std::map<int, Rat> c;
    bool is_zero() const { return c.empty(); }
    bool operator==(const Elem&) const = default;
};

Elem& add_scaled(Elem& x, const Elem& y, const Rat& s);

class BoundQuiverAlgebra {
public:
    /* builds the path-algebra quotient: enumerates the irreducible-word basis
       and the full multiplication table.  Throws on malformed input or if the
       basis fails to stabilize. */
    static BoundQuiverAlgebra from_quiver(const Quiver& q, const std::vector<Relation>& rels);
    static BoundQuiverAlgebra semisimple(int num_vertices);

    int dim() const { return (int)words_.size(); }
    const std::vector<int>& vertex_labels() const { return labels_; }

    int source(int b) const { return source_[b]; }
    int target(int b) const { return target_[b]; }
    int grade(int b) const { return grade_[b]; }
    const std::string& name(int b) const { return names_[b]; }
    std::optional<int> index_of_name(const std::string& n) const;
    const std::vector<int>& word(int b) const { return words_[b]; }

    std::vector<int> paths_from(int v) const;            // source(b) == v
    std::vector<int> paths_into(int v) const;            // target(b) == v
    std::vector<int> paths_between(int src, int tgt) const;

    Elem unit() const;
    Elem idempotent(int label) const;
    int idempotent_index(int label) const;  // basis index of e_label
    Elem basis_elem(int b) const;
    const Elem& mul_basis(int i, int j) const { return table_[i][(size_t)j]; }
    Elem mul(const Elem& x, const Elem& y) const;

    Vec to_vec(const Elem& x) const;
    Elem from_vec(const Vec& v) const;
    std::string elem_str(const Elem& x) const;

    /* RREF basis of the center, computed against the algebra generators */
    std::vector<Elem> center() const;
    /* basis of J^k (J = Jacobson radical); k >= 1 */
    std::vector<Elem> radical_power(int k) const;
    const EchelonBasis& radical_span() const { return radical_; }
    /* idempotents plus arrow images; multiplicatively generating */
    const std::vector<Elem>& algebra_generators() const { return generators_; }

    bool verify_associativity() const;
    /* quiver-presented algebras: every word of length <= max_len reduces to
       the same normal form under every reduction order */
    bool verify_confluence(int max_len) const;

    const Quiver& quiver() const { return quiver_; }
    const std::vector<Relation>& relations() const { return relations_; }
    bool has_presentation() const { return presented_; }

    void set_name(int b, const std::string& n);

    /* used by quotient construction and deserialization */
    friend class AlgebraBuilder;

private:
    BoundQuiverAlgebra() = default;

    bool presented_ = false;
    Quiver quiver_;
    std::vector<Relation> relations_;
    std::vector<int> labels_;
    std::vector<std::vector<int>> words_;  // arrow words; idempotents are empty words
    std::vector<int> source_, target_, grade_;
    std::vector<std::string> names_;
    std::map<std::string, int> name_index_;
    std::vector<std::vector<Elem>> table_;
    std::vector<Elem> generators_;
    EchelonBasis radical_{0};
};

/* assembles a table-backed algebra without a presentation (quotients,
   deserialized algebras) */
class AlgebraBuilder {
public:
    std::vector<int> labels;
    std::vector<std::vector<int>> words;
    std::vector<int> source, target, grade;
    std::vector<std::string> names;
    std::vector<std::vector<Elem>> table;
    std::vector<Elem> generators;
    std::vector<Vec> radical_vectors;
    /* optional presentation metadata, carried through serialization */
    bool presented = false;
    Quiver quiver;
    std::vector<Relation> relations;
    BoundQuiverAlgebra build() const;
};

BoundQuiverAlgebra build_A_e(int e);

/* two-sided ideal with its closure */
struct Ideal {
    EchelonBasis span{0};
    std::vector<Elem> generators;
};

Ideal ideal_from_generators(const BoundQuiverAlgebra& A, const std::vector<Elem>& gens);
Ideal idempotent_ideal(const BoundQuiverAlgebra& A, const std::vector<int>& vertex_labels);

BoundQuiverAlgebra quotient_algebra(const BoundQuiverAlgebra& A, const Ideal& I);

struct HeredityReport {
    bool is_heredity = false;
    bool idempotent_condition = false;  // H·H = H
    bool hom_condition = false;         // Hom_A(H, A/H) = 0
    bool hjh_condition = false;         // H·J(A)·H = 0
    bool zero_ideal = false;            // vacuous case, flagged
    std::string reason;
};

HeredityReport is_heredity_ideal(const BoundQuiverAlgebra& A, const Ideal& I);

struct HeredityChain {
    struct Step {
        std::vector<int> peeled_labels;   // idempotent subset generating the ideal
        int ideal_dim = 0;                // dimension inside the current quotient
        HeredityReport report;
    };
    std::vector<Step> steps;   // bottom of the chain first
    std::vector<int> chain_dims;  // 0 = J_0 < J_1 < ... < J_n = dim A
    bool complete = false;
};

/* deterministic search over idempotent-generated candidate ideals (subsets by
   size, then lexicographically), recursing on the quotient */
HeredityChain heredity_chain_search(const BoundQuiverAlgebra& A);

}  // namespace qsh
