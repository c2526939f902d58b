/* qschur: exact homological invariants of the algebras A_e.
 *
 * One subcommand per pipeline; every numeric parameter is an explicit flag
 * (the only defaults are --field rational and --format table).  Every report
 * embeds the tool version and the full configuration.
 *
 * Exit codes: 0 success, 1 internal error, 2 invalid usage, 3 verification
 * failure (the failing check is named on stderr).
 */

#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "qsh/blockcomb.hpp"
#include "qsh/generic_resolution.hpp"
#include "qsh/hochschild.hpp"
#include "qsh/ring_presentation.hpp"
#include "qsh/serialize.hpp"
#include "qsh/symwreath.hpp"

namespace {

using namespace qsh;

constexpr const char* kToolName = "qschur";
constexpr const char* kToolVersion = "1.0.0";

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerify = 3;

enum class Fmt { Table, Json, Csv };

Fmt parse_fmt(const std::string& s) {
    if (s == "json") return Fmt::Json;
    if (s == "csv") return Fmt::Csv;
    return Fmt::Table;
}

Field parse_field(const std::string& s) {
    if (s == "rational") return Field::rationals();
    long l = 0;
    try {
        size_t pos = 0;
        l = std::stol(s, &pos);
        if (pos != s.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("--field expects 'rational' or a prime, got '" + s + "'");
    }
    return Field::prime(l);  // throws invalid_argument unless prime
}

/* ---------------------------------------------------------------- */
/* report plumbing                                                   */
/* ---------------------------------------------------------------- */

/* the full configuration, echoed into every report */
struct Echo {
    std::string command;
    std::vector<std::pair<std::string, std::string>> kv;

    void add(const std::string& k, const std::string& v) { kv.emplace_back(k, v); }
    void add(const std::string& k, long v) { kv.emplace_back(k, std::to_string(v)); }

    Json doc() const {
        Json j;
        j["tool"] = kToolName;
        j["version"] = kToolVersion;
        j["command"] = command;
        Json cfg = Json::object();
        for (const auto& [k, v] : kv) cfg[k] = v;
        j["config"] = cfg;
        return j;
    }

    void comment(std::ostream& os) const {
        os << "# " << kToolName << " " << kToolVersion << "\n# command=" << command;
        for (const auto& [k, v] : kv) os << " " << k << "=" << v;
        os << "\n";
    }
};

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }

    void print_aligned(std::ostream& os) const {
        std::vector<size_t> w(header.size(), 0);
        auto widen = [&](const std::vector<std::string>& r) {
            for (size_t i = 0; i < r.size() && i < w.size(); ++i)
                w[i] = std::max(w[i], r[i].size());
        };
        widen(header);
        for (const auto& r : rows) widen(r);
        auto line = [&](const std::vector<std::string>& r) {
            for (size_t i = 0; i < r.size(); ++i) {
                os << r[i];
                if (i + 1 < r.size())
                    os << std::string(w[i] - r[i].size() + 2, ' ');
            }
            os << "\n";
        };
        line(header);
        for (const auto& r : rows) line(r);
    }

    void print_csv(std::ostream& os) const {
        auto line = [&](const std::vector<std::string>& r) {
            for (size_t i = 0; i < r.size(); ++i) {
                if (i) os << ',';
                os << csv_escape(r[i]);
            }
            os << "\n";
        };
        line(header);
        for (const auto& r : rows) line(r);
    }
};

void emit_json(const Echo& echo, const Json& result) {
    Json j = echo.doc();
    j["result"] = result;
    std::cout << j.dump(2) << "\n";
}

/* table format: comment header, preamble lines, the tables, footer lines */
void emit_table(const Echo& echo, const std::vector<std::string>& pre,
                const std::vector<Table>& tables, const std::vector<std::string>& post) {
    echo.comment(std::cout);
    for (const auto& s : pre) std::cout << s << "\n";
    for (size_t i = 0; i < tables.size(); ++i) {
        if (i) std::cout << "\n";
        tables[i].print_aligned(std::cout);
    }
    for (const auto& s : post) std::cout << s << "\n";
}

void emit_csv(const Echo& echo, const Table& t) {
    echo.comment(std::cout);
    t.print_csv(std::cout);
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i];
    }
    return out;
}

std::string dims_str(const GradedDims& d) {
    std::vector<std::string> v;
    for (int x : d) v.push_back(std::to_string(x));
    return join(v, " ");
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

/* ---------------------------------------------------------------- */
/* resolution cache                                                  */
/* ---------------------------------------------------------------- */

/* Loads the cache when it matches (e, full length, canonical repair);
 * otherwise builds the repaired complex.  Cache status goes to stderr so
 * stdout stays byte-identical between a hit and a cold run. */
struct ResolutionSession {
    BimoduleResolution res;
    std::vector<VerifyReport> reports;  // verified fields, cached ones first
    bool hit = false;
};

ResolutionSession load_resolution(const BoundQuiverAlgebra& A, int e,
                                  const ResolutionRepair& repair,
                                  const std::string& cache_path) {
    ResolutionSession s;
    const int top = resolution_length(e);
    if (!cache_path.empty()) {
        if (auto text = read_text_file(cache_path)) {
            try {
                ResolutionCache c = resolution_cache_from_json(Json::parse(*text), A);
                if (c.e == e && c.top_degree == top && c.repair == repair) {
                    s.res = std::move(c.resolution);
                    s.reports = std::move(c.reports);
                    s.hit = true;
                } else {
                    std::cerr << kToolName << ": cache: parameter mismatch, recomputing\n";
                }
            } catch (const std::exception& ex) {
                std::cerr << kToolName << ": cache: " << ex.what() << "; recomputing\n";
            }
        }
        std::cerr << kToolName << ": cache: " << (s.hit ? "hit " : "miss ") << cache_path << "\n";
    }
    if (!s.hit) s.res = paper_resolution(A, top, repair);
    return s;
}

const VerifyReport* find_report(const std::vector<VerifyReport>& reports, const Field& f) {
    for (const auto& r : reports) {
        if (r.field == f.name()) return &r;
    }
    return nullptr;
}

void store_cache(const ResolutionSession& s, int e, const ResolutionRepair& repair,
                 const std::string& cache_path) {
    if (cache_path.empty()) return;
    Json j = resolution_cache_to_json(s.res, e, repair, s.reports);
    if (write_text_file(cache_path, j.dump(2) + "\n"))
        std::cerr << kToolName << ": cache: wrote " << cache_path << "\n";
    else
        std::cerr << kToolName << ": cache: could not write " << cache_path << "\n";
}

/* Ensures a verification report over f exists; newly computed reports that
 * pass are written back to the cache.  Returns nullptr only on failure,
 * after naming the failed check on stderr. */
const VerifyReport* ensure_verified(ResolutionSession& s, int e,
                                    const ResolutionRepair& repair, const Field& f,
                                    const std::string& cache_path) {
    if (const VerifyReport* r = find_report(s.reports, f)) {
        if (!r->pass()) {
            std::cerr << kToolName << ": verification failure: " << failure_summary(*r) << "\n";
            return nullptr;
        }
        return r;
    }
    s.reports.push_back(verify_complex(s.res, f));
    const VerifyReport& rep = s.reports.back();
    if (!rep.pass()) {
        std::cerr << kToolName << ": verification failure: " << failure_summary(rep) << "\n";
        return nullptr;
    }
    store_cache(s, e, repair, cache_path);
    return &rep;
}

/* ---------------------------------------------------------------- */
/* subcommands                                                       */
/* ---------------------------------------------------------------- */

int run_algebra(int e, Fmt fmt) {
    auto A = build_A_e(e);
    auto Z = A.center();
    std::vector<int> rad;
    for (int k = 1;; ++k) {
        rad.push_back((int)A.radical_power(k).size());
        if (rad.back() == 0) break;
    }
    HeredityChain chain = heredity_chain_search(A);

    std::vector<std::string> rad_s, chain_s, center_s, peel_s;
    for (int d : rad) rad_s.push_back(std::to_string(d));
    for (int d : chain.chain_dims) chain_s.push_back(std::to_string(d));
    for (const auto& z : Z) center_s.push_back(A.elem_str(z));
    for (const auto& st : chain.steps) {
        std::vector<std::string> labels;
        for (int v : st.peeled_labels) labels.push_back(std::to_string(v));
        peel_s.push_back("{" + join(labels, ",") + "}");
    }

    Echo echo;
    echo.command = "algebra";
    echo.add("e", e);
    echo.add("format", fmt == Fmt::Json ? "json" : fmt == Fmt::Csv ? "csv" : "table");

    if (fmt == Fmt::Json) {
        Json r;
        r["e"] = e;
        r["vertices"] = A.quiver().num_vertices;
        r["arrows"] = (int)A.quiver().arrows.size();
        r["dimension"] = A.dim();
        r["center_dimension"] = (int)Z.size();
        r["center_basis"] = center_s;
        r["radical_power_dims"] = rad;
        Json hc;
        hc["dims"] = chain.chain_dims;
        hc["complete"] = chain.complete;
        Json steps = Json::array();
        for (const auto& st : chain.steps) {
            Json sj;
            sj["peeled_vertices"] = st.peeled_labels;
            sj["ideal_dim"] = st.ideal_dim;
            sj["is_heredity"] = st.report.is_heredity;
            steps.push_back(sj);
        }
        hc["steps"] = steps;
        r["heredity_chain"] = hc;
        emit_json(echo, r);
        return kExitOk;
    }

    Table t;
    t.header = {"quantity", "value"};
    t.add({"vertices", std::to_string(A.quiver().num_vertices)});
    t.add({"arrows", std::to_string((int)A.quiver().arrows.size())});
    t.add({"dimension", std::to_string(A.dim())});
    t.add({"center dimension", std::to_string((int)Z.size())});
    t.add({"radical power dims", join(rad_s, " ")});
    t.add({"heredity chain", join(chain_s, " < ") + (chain.complete ? "  (complete)" : "  (INCOMPLETE)")});
    t.add({"heredity peels", join(peel_s, " ")});
    for (size_t i = 0; i < center_s.size(); ++i)
        t.add({"center basis " + std::to_string(i + 1), center_s[i]});

    if (fmt == Fmt::Csv) {
        emit_csv(echo, t);
        return kExitOk;
    }
    emit_table(echo, {"algebra A_" + std::to_string(e)}, {t}, {});
    return kExitOk;
}

std::string gens_str(const FreeBimodule& F) {
    std::vector<std::string> parts;
    for (auto [i, j] : F.gens)
        parts.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
    return join(parts, " ");
}

int run_resolution(int e, const Field& f, bool verify, const std::string& cache_path, Fmt fmt) {
    auto A = build_A_e(e);
    const ResolutionRepair repair{};
    const int top = resolution_length(e);

    ResolutionSession s = load_resolution(A, e, repair, cache_path);
    const VerifyReport* rep = nullptr;
    bool failed = false;
    if (verify) {
        rep = ensure_verified(s, e, repair, f, cache_path);
        if (!rep) {
            failed = true;
            rep = find_report(s.reports, f);  // still printed, with the failure
        }
    }

    Echo echo;
    echo.command = "resolution";
    echo.add("e", e);
    echo.add("field", f.name());
    echo.add("verify", yes_no(verify));
    echo.add("cache", cache_path.empty() ? "(none)" : cache_path);
    echo.add("format", fmt == Fmt::Json ? "json" : fmt == Fmt::Csv ? "csv" : "table");

    if (fmt == Fmt::Json) {
        Json r;
        r["e"] = e;
        r["top_degree"] = top;
        r["repair"] = repair_to_json(repair);
        Json terms = Json::array();
        for (int n = 0; n <= top; ++n) {
            Json tj;
            tj["degree"] = n;
            Json gj = Json::array();
            for (auto [i, j] : s.res.terms[n].gens) gj.push_back(Json::array({i, j}));
            tj["generators"] = gj;
            tj["dim"] = s.res.terms[n].dim();
            terms.push_back(tj);
        }
        r["terms"] = terms;
        if (rep) r["verification"] = verify_report_to_json(*rep);
        emit_json(echo, r);
        return failed ? kExitVerify : kExitOk;
    }

    Table t;
    t.header = {"degree", "generators", "dim"};
    if (rep) {
        t.header.push_back("rank d");
        t.header.push_back("ker d");
    }
    for (int n = 0; n <= top; ++n) {
        std::vector<std::string> row = {std::to_string(n), gens_str(s.res.terms[n]),
                                        std::to_string(s.res.terms[n].dim())};
        if (rep) {
            std::string rk = "-", kr = "-";
            for (const auto& di : rep->degrees) {
                if (di.degree == n) {
                    rk = std::to_string(di.rank_d);
                    kr = std::to_string(di.ker_d);
                }
            }
            row.push_back(rk);
            row.push_back(kr);
        }
        t.add(row);
    }

    if (fmt == Fmt::Csv) {
        emit_csv(echo, t);
        return failed ? kExitVerify : kExitOk;
    }

    std::vector<std::string> pre = {
        "bimodule resolution of A_" + std::to_string(e) + ": degrees 0.." + std::to_string(top),
        "repair: " + repair.describe(),
    };
    std::vector<std::string> post;
    if (rep) {
        post.push_back("checks over " + rep->field + ": d.d=0 " + (rep->dd_zero ? "pass" : "FAIL") +
                       ", exactness " + (rep->exact ? "pass" : "FAIL") + ", minimality " +
                       (rep->minimal ? "pass" : "FAIL") + ", surjectivity " +
                       (rep->surjective ? "pass" : "FAIL"));
        post.push_back("result: " + failure_summary(*rep));
    }
    emit_table(echo, pre, {t}, post);
    return failed ? kExitVerify : kExitOk;
}

int run_hh(int e, const Field& f, const std::string& cache_path, Fmt fmt) {
    auto A = build_A_e(e);
    const ResolutionRepair repair{};
    ResolutionSession s = load_resolution(A, e, repair, cache_path);
    if (!ensure_verified(s, e, repair, f, cache_path)) return kExitVerify;
    GradedDims dims = hh_dims(s.res, f);

    Echo echo;
    echo.command = "hh";
    echo.add("e", e);
    echo.add("field", f.name());
    echo.add("cache", cache_path.empty() ? "(none)" : cache_path);
    echo.add("format", fmt == Fmt::Json ? "json" : fmt == Fmt::Csv ? "csv" : "table");

    if (fmt == Fmt::Json) {
        Json r;
        r["e"] = e;
        r["field"] = f.name();
        r["degree_convention"] = "cohomological";
        r["dims"] = dims;
        emit_json(echo, r);
        return kExitOk;
    }

    Table t;
    t.header = {"cohomological degree", "dim HH^n"};
    for (size_t n = 0; n < dims.size(); ++n)
        t.add({std::to_string(n), std::to_string(dims[n])});
    if (fmt == Fmt::Csv) {
        emit_csv(echo, t);
        return kExitOk;
    }
    emit_table(echo, {"Hochschild cohomology of A_" + std::to_string(e) + " over " + f.name()},
               {t}, {"total dimension " + std::to_string([&] {
                        int s2 = 0;
                        for (int x : dims) s2 += x;
                        return s2;
                    }())});
    return kExitOk;
}

std::string first_ring_failure(const RingReport& r) {
    if (!r.resolution_ok) return "resolution verification";
    if (!r.dims_match) return "cohomology dimensions vs presented ring";
    for (const auto* v : {&r.relations, &r.nonvanishing, &r.commutativity})
        for (const auto& c : *v)
            if (!c.pass) return c.name;
    if (!r.lift_independent) return "lift independence";
    return "unknown check";
}

int run_ring(int e, const Field& f, Fmt fmt) {
    RingReport rep = verify_ring_presentation(e, f);
    const bool ok = rep.pass();
    if (!ok)
        std::cerr << kToolName << ": verification failure: " << first_ring_failure(rep) << "\n";

    Echo echo;
    echo.command = "ring";
    echo.add("e", e);
    echo.add("field", f.name());
    echo.add("format", fmt == Fmt::Json ? "json" : fmt == Fmt::Csv ? "csv" : "table");

    auto checks_json = [](const std::vector<RingCheck>& cs) {
        Json a = Json::array();
        for (const auto& c : cs) {
            Json cj;
            cj["name"] = c.name;
            cj["pass"] = c.pass;
            cj["detail"] = c.detail;
            a.push_back(cj);
        }
        return a;
    };

    if (fmt == Fmt::Json) {
        Json r;
        r["e"] = rep.e;
        r["field"] = rep.field;
        r["resolution_ok"] = rep.resolution_ok;
        r["hh_dims"] = rep.hh;
        r["presented_dims"] = rep.presented;
        r["dims_match"] = rep.dims_match;
        r["generators"] = rep.generators;
        r["relations"] = checks_json(rep.relations);
        r["nonvanishing"] = checks_json(rep.nonvanishing);
        r["commutativity"] = checks_json(rep.commutativity);
        r["lift_independent"] = rep.lift_independent;
        r["pass"] = ok;
        emit_json(echo, r);
        return ok ? kExitOk : kExitVerify;
    }

    Table t;
    t.header = {"section", "check", "pass", "detail"};
    t.add({"summary", "resolution verified", yes_no(rep.resolution_ok), ""});
    t.add({"summary", "dims match", yes_no(rep.dims_match),
           "computed [" + dims_str(rep.hh) + "] presented [" + dims_str(rep.presented) + "]"});
    for (const auto& c : rep.relations) t.add({"relation", c.name, yes_no(c.pass), c.detail});
    for (const auto& c : rep.nonvanishing) t.add({"nonvanishing", c.name, yes_no(c.pass), c.detail});
    for (const auto& c : rep.commutativity) t.add({"commutativity", c.name, yes_no(c.pass), c.detail});
    t.add({"summary", "lift independence", yes_no(rep.lift_independent), ""});

    if (fmt == Fmt::Csv) {
        emit_csv(echo, t);
        return ok ? kExitOk : kExitVerify;
    }

    std::vector<std::string> pre = {
        "ring presentation of HH*(A_" + std::to_string(e) + ") over " + rep.field,
        "modulus: z_i*z_j, z_i*x, z_i*y, x^2, x*y^" + std::to_string(e - 1) + ", y^" +
            std::to_string(e),
        "generators:",
    };
    for (const auto& g : rep.generators) pre.push_back("  " + g);
    emit_table(echo, pre, {t}, {std::string("result: ") + (ok ? "pass" : "FAIL")});
    return ok ? kExitOk : kExitVerify;
}

int run_wreath(int e, int w, const Field& f, const std::string& conv, Fmt fmt) {
    auto A = build_A_e(e);
    const ResolutionRepair repair{};
    ResolutionSession s = load_resolution(A, e, repair, "");
    if (!ensure_verified(s, e, repair, f, "")) return kExitVerify;
    GradedDims v = hh_dims(s.res, f);

    std::vector<std::pair<std::string, GradedDims>> outs;
    if (conv != "signed")
        outs.emplace_back("unsigned", wreath_hh_dims(v, w, SignConvention::Unsigned));
    if (conv != "unsigned")
        outs.emplace_back("signed", wreath_hh_dims(v, w, SignConvention::Signed));

    Echo echo;
    echo.command = "wreath";
    echo.add("e", e);
    echo.add("w", w);
    echo.add("field", f.name());
    echo.add("convention", conv);
    echo.add("format", fmt == Fmt::Json ? "json" : fmt == Fmt::Csv ? "csv" : "table");

    if (fmt == Fmt::Json) {
        Json r;
        r["e"] = e;
        r["w"] = w;
        r["field"] = f.name();
        r["base_dims"] = v;
        r["degree_convention"] = "cohomological";
        Json dj = Json::object();
        for (const auto& [name, dims] : outs) dj[name] = dims;
        r["dims"] = dj;
        emit_json(echo, r);
        return kExitOk;
    }

    size_t len = 0;
    for (const auto& [name, dims] : outs) len = std::max(len, dims.size());
    Table t;
    t.header = {"cohomological degree"};
    for (const auto& [name, dims] : outs) t.header.push_back(name);
    for (size_t n = 0; n < len; ++n) {
        std::vector<std::string> row = {std::to_string(n)};
        for (const auto& [name, dims] : outs)
            row.push_back(std::to_string(n < dims.size() ? dims[n] : 0));
        t.add(row);
    }

    if (fmt == Fmt::Csv) {
        emit_csv(echo, t);
        return kExitOk;
    }
    emit_table(echo,
               {"wreath product Hochschild dimensions: base A_" + std::to_string(e) + ", w=" +
                    std::to_string(w) + ", over " + f.name(),
                "base dims HH*(A_" + std::to_string(e) + "): " + dims_str(v),
                "degree convention: cohomological"},
               {t}, {});
    return kExitOk;
}

int run_kernel_pi(int e, int w, int max_degree, Fmt fmt) {
    KernelPiReport rep = kernel_pi_report(e, w, max_degree);

    Echo echo;
    echo.command = "kernel-pi";
    echo.add("e", e);
    echo.add("w", w);
    echo.add("max-degree", max_degree);
    echo.add("format", fmt == Fmt::Json ? "json" : fmt == Fmt::Csv ? "csv" : "table");

    std::vector<std::string> gen_names;
    for (int k : rep.generator_indices) gen_names.push_back("p_" + std::to_string(k));

    if (fmt == Fmt::Json) {
        Json r;
        r["e"] = rep.e;
        r["w"] = rep.w;
        r["max_degree"] = rep.max_degree;
        r["degree_convention"] = "y-degree";
        r["generator_indices"] = rep.generator_indices;
        r["ideal_contained_in_kernel"] = rep.ideal_contained;
        r["kernel_matches_ideal"] = rep.kernel_matches;
        Json degs = Json::array();
        for (const auto& d : rep.degrees) {
            Json dj;
            dj["degree"] = d.degree;
            dj["lambda_dim"] = d.lambda_dim;
            dj["image_dim"] = d.image_dim;
            dj["kernel_dim"] = d.kernel_dim;
            dj["ideal_dim"] = d.ideal_dim;
            dj["ideal_in_kernel"] = d.ideal_in_kernel;
            dj["kernel_in_ideal"] = d.kernel_in_ideal;
            dj["witnesses"] = d.witnesses;
            degs.push_back(dj);
        }
        r["degrees"] = degs;
        emit_json(echo, r);
        return kExitOk;
    }

    Table t;
    t.header = {"y-degree", "dim Lambda", "rank pi", "dim ker", "dim ideal",
                "ideal<=ker", "ker<=ideal", "witnesses outside ideal"};
    for (const auto& d : rep.degrees)
        t.add({std::to_string(d.degree), std::to_string(d.lambda_dim),
               std::to_string(d.image_dim), std::to_string(d.kernel_dim),
               std::to_string(d.ideal_dim), yes_no(d.ideal_in_kernel),
               yes_no(d.kernel_in_ideal), join(d.witnesses, "; ")});

    if (fmt == Fmt::Csv) {
        emit_csv(echo, t);
        return kExitOk;
    }
    emit_table(echo,
               {"kernel of pi (x_i -> y_i mod y_i^" + std::to_string(e) + "): e=" +
                    std::to_string(e) + ", w=" + std::to_string(w) + ", degrees 0.." +
                    std::to_string(max_degree),
                "comparison ideal: <" + join(gen_names, ", ") + ">"},
               {t},
               {"ideal contained in kernel: " + yes_no(rep.ideal_contained),
                "kernel matches ideal: " + yes_no(rep.kernel_matches)});
    return kExitOk;
}

int run_quotient(int e, int w, int max_degree, const std::string& gens_choice, Fmt fmt) {
    std::vector<SymPoly> gens;
    std::string gens_label;
    if (gens_choice == "kernel") {
        gens = kernel_pi_basis(e, w, max_degree);
        gens_label = "brute-force kernel basis";
    } else {
        gens = power_sum_ideal_generators(e, w);
        std::vector<std::string> names;
        for (int k = e + 1; k <= e + w + 1; ++k) names.push_back("p_" + std::to_string(k));
        gens_label = join(names, " ");
    }
    GradedDims q = quotient_hilbert(e, w, gens, max_degree);
    GradedDims trunc = truncated_invariant_dims(e, w);

    Echo echo;
    echo.command = "quotient";
    echo.add("e", e);
    echo.add("w", w);
    echo.add("max-degree", max_degree);
    echo.add("generators", gens_choice);
    echo.add("format", fmt == Fmt::Json ? "json" : fmt == Fmt::Csv ? "csv" : "table");

    if (fmt == Fmt::Json) {
        Json r;
        r["e"] = e;
        r["w"] = w;
        r["max_degree"] = max_degree;
        r["generators"] = gens_choice;
        r["generator_count"] = (int)gens.size();
        r["degree_convention"] = "y-degree";
        r["dims"] = q;
        r["truncated_invariant_dims"] = trunc;
        emit_json(echo, r);
        return kExitOk;
    }

    Table t;
    t.header = {"y-degree", "dim quotient", "dim truncated invariants"};
    for (int d = 0; d <= max_degree; ++d)
        t.add({std::to_string(d), std::to_string(d < (int)q.size() ? q[d] : 0),
               std::to_string(d < (int)trunc.size() ? trunc[d] : 0)});

    if (fmt == Fmt::Csv) {
        emit_csv(echo, t);
        return kExitOk;
    }
    emit_table(echo,
               {"quotient of Lambda_" + std::to_string(w) + " by <" + gens_label + ">: e=" +
                    std::to_string(e) + ", degrees 0.." + std::to_string(max_degree),
                "degree convention: y-degree (cohomological degree = 2*d)"},
               {t}, {});
    return kExitOk;
}

int run_blocks(int n, int e, Fmt fmt) {
    auto blocks = blocks_of(n, e);

    Echo echo;
    echo.command = "blocks";
    echo.add("n", n);
    echo.add("e", e);
    echo.add("format", fmt == Fmt::Json ? "json" : fmt == Fmt::Csv ? "csv" : "table");

    if (fmt == Fmt::Json) {
        Json r;
        r["n"] = n;
        r["e"] = e;
        Json bj = Json::array();
        for (const auto& [label, parts] : blocks) {
            Json b;
            b["weight"] = label.weight;
            b["core"] = label.core.parts;  // decreasing integer list
            b["rouquier"] = is_rouquier_core(label.core, e, label.weight);
            Json pj = Json::array();
            for (const auto& p : parts) pj.push_back(p.parts);
            b["partitions"] = pj;
            b["count"] = (int)parts.size();
            bj.push_back(b);
        }
        r["blocks"] = bj;
        emit_json(echo, r);
        return kExitOk;
    }

    Table t;
    t.header = {"weight", "core", "rouquier", "count", "partitions"};
    for (const auto& [label, parts] : blocks) {
        std::vector<std::string> ps;
        for (const auto& p : parts) ps.push_back(p.str());
        t.add({std::to_string(label.weight), label.core.str(),
               yes_no(is_rouquier_core(label.core, e, label.weight)),
               std::to_string((int)parts.size()), join(ps, " ")});
    }

    if (fmt == Fmt::Csv) {
        emit_csv(echo, t);
        return kExitOk;
    }
    emit_table(echo,
               {"blocks of partitions of " + std::to_string(n) + " at e=" + std::to_string(e)},
               {t}, {});
    return kExitOk;
}

int guarded(const std::function<int()>& fn) {
    try {
        return fn();
    } catch (const std::invalid_argument& ex) {
        std::cerr << kToolName << ": " << ex.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& ex) {
        std::cerr << kToolName << ": " << ex.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact homological invariants of the algebras A_e"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);

    auto fmt_check = CLI::IsMember({"table", "json", "csv"});
    int rc = kExitOk;

    // algebra
    int al_e = 0;
    std::string al_fmt = "table";
    auto* alg = app.add_subcommand("algebra", "dimension, center, radical and heredity data of A_e");
    alg->add_option("--e", al_e, "number of vertices (>= 2)")->required()->check(CLI::Range(2, 1000));
    alg->add_option("--format", al_fmt, "table, json or csv")->check(fmt_check);
    alg->callback([&] { rc = guarded([&] { return run_algebra(al_e, parse_fmt(al_fmt)); }); });

    // resolution
    int re_e = 0;
    std::string re_field = "rational", re_fmt = "table", re_cache;
    bool re_verify = false;
    auto* reso = app.add_subcommand("resolution", "repaired bimodule resolution of A_e");
    reso->add_option("--e", re_e, "number of vertices (>= 2)")->required()->check(CLI::Range(2, 1000));
    reso->add_option("--field", re_field, "'rational' or a prime");
    reso->add_flag("--verify", re_verify, "check d.d=0, exactness, minimality");
    reso->add_option("--cache", re_cache, "resolution cache file (read, and written after verification)");
    reso->add_option("--format", re_fmt, "table, json or csv")->check(fmt_check);
    reso->callback([&] {
        rc = guarded([&] {
            return run_resolution(re_e, parse_field(re_field), re_verify, re_cache, parse_fmt(re_fmt));
        });
    });

    // hh
    int hh_e = 0;
    std::string hh_field = "rational", hh_fmt = "table", hh_cache;
    auto* hh = app.add_subcommand("hh", "Hochschild cohomology dimensions of A_e");
    hh->add_option("--e", hh_e, "number of vertices (>= 2)")->required()->check(CLI::Range(2, 1000));
    hh->add_option("--field", hh_field, "'rational' or a prime");
    hh->add_option("--cache", hh_cache, "resolution cache file");
    hh->add_option("--format", hh_fmt, "table, json or csv")->check(fmt_check);
    hh->callback([&] {
        rc = guarded([&] { return run_hh(hh_e, parse_field(hh_field), hh_cache, parse_fmt(hh_fmt)); });
    });

    // ring
    int ri_e = 0;
    std::string ri_field = "rational", ri_fmt = "table";
    auto* ring = app.add_subcommand("ring", "presentation checks for the ring HH*(A_e)");
    ring->add_option("--e", ri_e, "number of vertices (>= 2)")->required()->check(CLI::Range(2, 1000));
    ring->add_option("--field", ri_field, "'rational' or a prime");
    ring->add_option("--format", ri_fmt, "table, json or csv")->check(fmt_check);
    ring->callback([&] {
        rc = guarded([&] { return run_ring(ri_e, parse_field(ri_field), parse_fmt(ri_fmt)); });
    });

    // wreath
    int wr_e = 0, wr_w = 0;
    std::string wr_field = "rational", wr_fmt = "table", wr_conv = "both";
    auto* wre = app.add_subcommand("wreath", "Hochschild dimensions of the wreath product");
    wre->add_option("--e", wr_e, "number of vertices (>= 2)")->required()->check(CLI::Range(2, 1000));
    wre->add_option("--w", wr_w, "wreath exponent (>= 1)")->required()->check(CLI::Range(1, 1000));
    wre->add_option("--field", wr_field, "'rational' or a prime");
    wre->add_option("--convention", wr_conv, "unsigned, signed or both")
        ->check(CLI::IsMember({"unsigned", "signed", "both"}));
    wre->add_option("--format", wr_fmt, "table, json or csv")->check(fmt_check);
    wre->callback([&] {
        rc = guarded([&] {
            return run_wreath(wr_e, wr_w, parse_field(wr_field), wr_conv, parse_fmt(wr_fmt));
        });
    });

    // kernel-pi
    int kp_e = 0, kp_w = 0, kp_deg = -1;
    std::string kp_fmt = "table";
    auto* kpi = app.add_subcommand("kernel-pi", "degreewise comparison of Ker pi with the power-sum ideal");
    kpi->add_option("--e", kp_e, "truncation exponent (>= 2)")->required()->check(CLI::Range(2, 1000));
    kpi->add_option("--w", kp_w, "number of variables (>= 1)")->required()->check(CLI::Range(1, 1000));
    kpi->add_option("--max-degree", kp_deg, "top degree (>= e+w+1)")->required()->check(CLI::Range(0, 100000));
    kpi->add_option("--format", kp_fmt, "table, json or csv")->check(fmt_check);
    kpi->callback([&] {
        rc = guarded([&] { return run_kernel_pi(kp_e, kp_w, kp_deg, parse_fmt(kp_fmt)); });
    });

    // quotient
    int qu_e = 0, qu_w = 0, qu_deg = -1;
    std::string qu_fmt = "table", qu_gens = "power-sums";
    auto* quo = app.add_subcommand("quotient", "Hilbert function of Lambda_w modulo a graded ideal");
    quo->add_option("--e", qu_e, "truncation exponent (>= 2)")->required()->check(CLI::Range(2, 1000));
    quo->add_option("--w", qu_w, "number of variables (>= 1)")->required()->check(CLI::Range(1, 1000));
    quo->add_option("--max-degree", qu_deg, "top degree")->required()->check(CLI::Range(0, 100000));
    quo->add_option("--generators", qu_gens, "power-sums or kernel")
        ->check(CLI::IsMember({"power-sums", "kernel"}));
    quo->add_option("--format", qu_fmt, "table, json or csv")->check(fmt_check);
    quo->callback([&] {
        rc = guarded([&] { return run_quotient(qu_e, qu_w, qu_deg, qu_gens, parse_fmt(qu_fmt)); });
    });

    // blocks
    int bl_n = -1, bl_e = 0;
    std::string bl_fmt = "table";
    auto* blo = app.add_subcommand("blocks", "partitions of n grouped by e-core and e-weight");
    blo->add_option("--n", bl_n, "size of the partitions (>= 0)")->required()->check(CLI::Range(0, 1000));
    blo->add_option("--e", bl_e, "number of runners (>= 2)")->required()->check(CLI::Range(2, 1000));
    blo->add_option("--format", bl_fmt, "table, json or csv")->check(fmt_check);
    blo->callback([&] { rc = guarded([&] { return run_blocks(bl_n, bl_e, parse_fmt(bl_fmt)); }); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& ex) {
        return app.exit(ex);
    } catch (const CLI::CallForVersion& ex) {
        return app.exit(ex);
    } catch (const CLI::ParseError& ex) {
        app.exit(ex);
        return kExitUsage;
    }
    return rc;
}
