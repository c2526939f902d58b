#include "qsh/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qsh {

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw std::runtime_error("serialize: " + what);
}

}  // namespace

Json rat_to_json(const Rat& r) { return r.get_str(); }

Rat rat_from_json(const Json& j) {
    if (!j.is_string()) bad("rational must be a string");
    Rat r(j.get<std::string>());
    r.canonicalize();
    return r;
}

Json elem_to_json(const Elem& x) {
    Json out = Json::array();
    for (const auto& [b, c] : x.c) out.push_back(Json::array({b, rat_to_json(c)}));
    return out;
}

Elem elem_from_json(const Json& j) {
    Elem x;
    for (const auto& t : j) {
        Rat c = rat_from_json(t.at(1));
        if (c != 0) x.c[t.at(0).get<int>()] = c;
    }
    return x;
}

namespace {

Json vec_to_json(const Vec& v) {
    Json out = Json::array();
    for (const Rat& x : v) out.push_back(rat_to_json(x));
    return out;
}

Vec vec_from_json(const Json& j) {
    Vec v;
    for (const auto& t : j) v.push_back(rat_from_json(t));
    return v;
}

}  // namespace

Json algebra_to_json(const BoundQuiverAlgebra& A) {
    Json j;
    j["version"] = kAlgebraVersion;
    j["vertices"] = A.vertex_labels();
    j["presented"] = A.has_presentation();

    Json arrows = Json::array();
    for (const Arrow& a : A.quiver().arrows)
        arrows.push_back({{"name", a.name}, {"source", a.source}, {"target", a.target}});
    j["arrows"] = arrows;

    Json rels = Json::array();
    for (const Relation& r : A.relations()) {
        Json terms = Json::array();
        for (const RelationTerm& t : r.terms)
            terms.push_back({{"coeff", rat_to_json(t.coeff)}, {"word", t.word}});
        rels.push_back(terms);
    }
    j["relations"] = rels;

    Json basis = Json::array();
    for (int b = 0; b < A.dim(); ++b)
        basis.push_back({{"name", A.name(b)},
                         {"word", A.word(b)},
                         {"source", A.source(b)},
                         {"target", A.target(b)},
                         {"grade", A.grade(b)}});
    j["basis"] = basis;

    Json table = Json::array();
    for (int x = 0; x < A.dim(); ++x)
        for (int y = 0; y < A.dim(); ++y) {
            const Elem& prod = A.mul_basis(x, y);
            if (!prod.is_zero()) table.push_back(Json::array({x, y, elem_to_json(prod)}));
        }
    j["structure_constants"] = table;

    Json gens = Json::array();
    for (const Elem& g : A.algebra_generators()) gens.push_back(elem_to_json(g));
    j["generators"] = gens;

    Json rad = Json::array();
    for (const Vec& v : A.radical_span().basis()) rad.push_back(vec_to_json(v));
    j["radical"] = rad;
    return j;
}

BoundQuiverAlgebra algebra_from_json(const Json& j) {
    if (j.value("version", std::string{}) != kAlgebraVersion) bad("unknown algebra document version");
    AlgebraBuilder b;
    b.labels = j.at("vertices").get<std::vector<int>>();
    b.presented = j.at("presented").get<bool>();
    b.quiver.num_vertices = (int)b.labels.size();
    for (const auto& a : j.at("arrows"))
        b.quiver.arrows.push_back(
            {a.at("name").get<std::string>(), a.at("source").get<int>(), a.at("target").get<int>()});
    for (const auto& r : j.at("relations")) {
        Relation rel;
        for (const auto& t : r)
            rel.terms.push_back({rat_from_json(t.at("coeff")), t.at("word").get<std::vector<int>>()});
        b.relations.push_back(std::move(rel));
    }
    for (const auto& e : j.at("basis")) {
        b.names.push_back(e.at("name").get<std::string>());
        b.words.push_back(e.at("word").get<std::vector<int>>());
        b.source.push_back(e.at("source").get<int>());
        b.target.push_back(e.at("target").get<int>());
        b.grade.push_back(e.at("grade").get<int>());
    }
    int dim = (int)b.names.size();
    if (dim == 0) bad("algebra document has an empty basis");
    b.table.assign((size_t)dim, std::vector<Elem>((size_t)dim));
    for (const auto& t : j.at("structure_constants")) {
        int x = t.at(0).get<int>(), y = t.at(1).get<int>();
        if (x < 0 || x >= dim || y < 0 || y >= dim) bad("structure constant out of range");
        b.table[(size_t)x][(size_t)y] = elem_from_json(t.at(2));
    }
    for (const auto& g : j.at("generators")) b.generators.push_back(elem_from_json(g));
    for (const auto& v : j.at("radical")) {
        Vec vec = vec_from_json(v);
        if ((int)vec.size() != dim) bad("radical vector has wrong length");
        b.radical_vectors.push_back(std::move(vec));
    }
    return b.build();
}

Json sparse_to_json(const SparseMat& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json entries = Json::array();
    for (int r = 0; r < m.rows(); ++r)
        for (const auto& [c, v] : m.row(r)) {
            Rat x = v;
            entries.push_back(Json::array(
                {r, c, x.get_num().get_str(), x.get_den().get_str()}));
        }
    j["entries"] = entries;
    return j;
}

SparseMat sparse_from_json(const Json& j) {
    SparseMat m(j.at("rows").get<int>(), j.at("cols").get<int>());
    for (const auto& t : j.at("entries")) {
        Rat v(mpz_class(t.at(2).get<std::string>()), mpz_class(t.at(3).get<std::string>()));
        v.canonicalize();
        m.set(t.at(0).get<int>(), t.at(1).get<int>(), v);
    }
    return m;
}

namespace {

std::string token(ResolutionRepair::D4Special v) {
    return v == ResolutionRepair::D4Special::TopOffset ? "top-offset" : "as-printed";
}
std::string token(ResolutionRepair::Token v) {
    return v == ResolutionRepair::Token::Read ? "read" : "drop";
}

}  // namespace

Json repair_to_json(const ResolutionRepair& r) {
    Json j;
    j["d4_special"] = token(r.d4_special);
    j["double_tensor"] = token(r.double_tensor);
    j["capital_j"] = token(r.capital_j);
    j["summary"] = r.describe();
    return j;
}

ResolutionRepair repair_from_json(const Json& j) {
    ResolutionRepair r;
    auto tok = [&](const char* key) { return j.at(key).get<std::string>(); };
    std::string d4 = tok("d4_special");
    if (d4 == "top-offset")
        r.d4_special = ResolutionRepair::D4Special::TopOffset;
    else if (d4 == "as-printed")
        r.d4_special = ResolutionRepair::D4Special::AsPrinted;
    else
        bad("unknown d4_special value");
    auto parse_tok = [&](const std::string& s) {
        if (s == "read") return ResolutionRepair::Token::Read;
        if (s == "drop") return ResolutionRepair::Token::Drop;
        bad("unknown token value");
    };
    r.double_tensor = parse_tok(tok("double_tensor"));
    r.capital_j = parse_tok(tok("capital_j"));
    return r;
}

Json verify_report_to_json(const VerifyReport& rep) {
    Json j;
    j["field"] = rep.field;
    j["dd_zero"] = rep.dd_zero;
    j["exact"] = rep.exact;
    j["minimal"] = rep.minimal;
    j["surjective"] = rep.surjective;
    j["dd_witness"] = rep.dd_witness;
    j["exactness_witness"] = rep.exactness_witness;
    j["minimality_witness"] = rep.minimality_witness;
    Json degs = Json::array();
    for (const DegreeInfo& d : rep.degrees)
        degs.push_back({{"degree", d.degree},
                        {"term_dim", d.term_dim},
                        {"rank_d", d.rank_d},
                        {"ker_d", d.ker_d}});
    j["degrees"] = degs;
    return j;
}

VerifyReport verify_report_from_json(const Json& j) {
    VerifyReport rep;
    rep.field = j.at("field").get<std::string>();
    rep.dd_zero = j.at("dd_zero").get<bool>();
    rep.exact = j.at("exact").get<bool>();
    rep.minimal = j.at("minimal").get<bool>();
    rep.surjective = j.at("surjective").get<bool>();
    rep.dd_witness = j.at("dd_witness").get<std::string>();
    rep.exactness_witness = j.at("exactness_witness").get<std::string>();
    rep.minimality_witness = j.at("minimality_witness").get<std::string>();
    for (const auto& d : j.at("degrees"))
        rep.degrees.push_back({d.at("degree").get<int>(), d.at("term_dim").get<int>(),
                               d.at("rank_d").get<int>(), d.at("ker_d").get<int>()});
    return rep;
}

Json resolution_cache_to_json(const BimoduleResolution& res, int e,
                              const ResolutionRepair& repair,
                              const std::vector<VerifyReport>& reports) {
    Json j;
    j["version"] = kCacheVersion;
    j["e"] = e;
    j["top_degree"] = (int)res.terms.size() - 1;
    j["repair"] = repair_to_json(repair);
    j["algebra"] = algebra_to_json(*res.A);

    Json terms = Json::array();
    for (const FreeBimodule& t : res.terms) {
        Json gens = Json::array();
        for (auto [i, jg] : t.gens) gens.push_back(Json::array({i, jg}));
        terms.push_back(gens);
    }
    j["terms"] = terms;

    j["augmentation"] = sparse_to_json(res.d0);
    Json diffs = Json::array();
    for (size_t n = 1; n < res.terms.size(); ++n) diffs.push_back(sparse_to_json(res.d[n].matrix()));
    j["differentials"] = diffs;

    Json reps = Json::array();
    for (const VerifyReport& r : reports) reps.push_back(verify_report_to_json(r));
    j["verification"] = reps;
    return j;
}

ResolutionCache resolution_cache_from_json(const Json& j, const BoundQuiverAlgebra& A) {
    if (j.value("version", std::string{}) != kCacheVersion) bad("unknown cache document version");
    ResolutionCache out;
    out.e = j.at("e").get<int>();
    out.top_degree = j.at("top_degree").get<int>();
    out.repair = repair_from_json(j.at("repair"));
    for (const auto& r : j.at("verification")) out.reports.push_back(verify_report_from_json(r));

    /* the embedded algebra must be the one we are rebuilding against */
    BoundQuiverAlgebra embedded = algebra_from_json(j.at("algebra"));
    if (embedded.dim() != A.dim() || embedded.vertex_labels() != A.vertex_labels())
        bad("cache was built for a different algebra");
    for (int b = 0; b < A.dim(); ++b)
        if (embedded.name(b) != A.name(b) || embedded.word(b) != A.word(b))
            bad("cache was built for a different algebra basis");

    out.resolution.A = &A;
    for (const auto& tg : j.at("terms")) {
        std::vector<std::pair<int, int>> gens;
        for (const auto& g : tg) gens.push_back({g.at(0).get<int>(), g.at(1).get<int>()});
        out.resolution.terms.push_back(FreeBimodule::build(A, std::move(gens)));
    }
    if ((int)out.resolution.terms.size() != out.top_degree + 1)
        bad("cache term count does not match top_degree");

    out.resolution.d.resize(out.resolution.terms.size());
    const auto& diffs = j.at("differentials");
    if ((int)diffs.size() != out.top_degree) bad("cache differential count mismatch");
    for (size_t n = 1; n < out.resolution.terms.size(); ++n) {
        SparseMat m = sparse_from_json(diffs.at(n - 1));
        const FreeBimodule& src = out.resolution.terms[n];
        const FreeBimodule& dst = out.resolution.terms[n - 1];
        if (m.rows() != dst.dim() || m.cols() != src.dim()) bad("cached differential has wrong shape");
        BimoduleMap& map = out.resolution.d[n];
        map.src = &src;
        map.dst = &dst;
        SparseMat mt = m.transpose();
        for (int g = 0; g < (int)src.gens.size(); ++g) {
            Vec img = zero_vec(dst.dim());
            for (const auto& [r, v] : mt.row(src.generator_flat(g))) img[(size_t)r] = v;
            map.gen_images.push_back(std::move(img));
        }
        /* the stored matrix must be the bimodule extension of those images */
        SparseMat rebuilt = map.matrix();
        if (rebuilt.rows() != m.rows() || rebuilt.cols() != m.cols()) bad("cache matrix mismatch");
        for (int r = 0; r < m.rows(); ++r)
            if (rebuilt.row(r) != m.row(r)) bad("cached differential is not a bimodule map");
    }
    out.resolution.d0 = sparse_from_json(j.at("augmentation"));
    SparseMat aug = augmentation_matrix(out.resolution.terms[0]);
    for (int r = 0; r < aug.rows(); ++r)
        if (aug.row(r) != out.resolution.d0.row(r)) bad("cached augmentation is inconsistent");
    return out;
}

bool write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out << text;
    return bool(out);
}

std::optional<std::string> read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace qsh
