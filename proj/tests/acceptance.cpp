/* Acceptance suite: one line per criterion, PASS or FAIL, then a summary.
 * Every comparison is exact; the process exit code is the number of failed
 * criteria.  Criterion 8 additionally writes kernel_pi_report.json into the
 * working directory. */

#include <algorithm>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qsh/blockcomb.hpp"
#include "qsh/generic_resolution.hpp"
#include "qsh/hochschild.hpp"
#include "qsh/ring_presentation.hpp"
#include "qsh/serialize.hpp"
#include "qsh/symwreath.hpp"

using namespace qsh;

namespace {

/* records only the first failure, to keep the output line readable */
struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

std::string show(const GradedDims& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
    return os.str();
}

/* shared, lazily built objects; map nodes are address-stable, so the
 * resolutions can keep pointing at their algebras */
std::map<int, BoundQuiverAlgebra> g_algebras;
std::map<int, BimoduleResolution> g_resolutions;

const BoundQuiverAlgebra& getA(int e) {
    auto it = g_algebras.find(e);
    if (it == g_algebras.end()) it = g_algebras.emplace(e, build_A_e(e)).first;
    return it->second;
}

const BimoduleResolution& getRes(int e) {
    auto it = g_resolutions.find(e);
    if (it == g_resolutions.end())
        it = g_resolutions.emplace(e, paper_resolution(getA(e), resolution_length(e))).first;
    return it->second;
}

GradedDims expected_hh_dims(int e) {
    GradedDims v{e};
    for (int n = 1; n <= 2 * (e - 1); ++n) v.push_back(1);
    return v;
}

/* ------------------------------------------------------------------ */
/* criterion bodies                                                    */
/* ------------------------------------------------------------------ */

void crit_1(Check& c) {
    for (int e = 2; e <= 8; ++e) {
        const auto& A = getA(e);
        c.expect(A.dim() == 4 * e - 3, "dim A_" + std::to_string(e) + " = " +
                                           std::to_string(A.dim()) + ", expected " +
                                           std::to_string(4 * e - 3));
        int z = (int)A.center().size();
        c.expect(z == e, "dim Z(A_" + std::to_string(e) + ") = " + std::to_string(z) +
                             ", expected " + std::to_string(e));
    }
}

void crit_2(Check& c) {
    for (int e = 2; e <= 5; ++e) {
        const auto& A = getA(e);
        const int len = resolution_length(e);
        auto gen = generic_minimal_resolution(A, len + 2);
        c.expect((int)gen.terms.size() == len + 1,
                 "e=" + std::to_string(e) + ": generic resolution has " +
                     std::to_string(gen.terms.size()) + " terms, expected to stop after degree " +
                     std::to_string(len));
        for (int n = 0; n < (int)gen.terms.size() && n <= len; ++n) {
            auto got = gen.terms[n].gens;
            auto want = paper_resolution_term(e, n);
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            c.expect(got == want, "e=" + std::to_string(e) + " degree " + std::to_string(n) +
                                      ": generator multisets differ");
        }
        for (int n = len + 1; n <= len + 2; ++n)
            c.expect(paper_resolution_term(e, n).empty(),
                     "closed-form term nonzero beyond degree 2(e-1)");
    }
}

void crit_3(Check& c) {
    for (int e = 2; e <= 5; ++e) {
        VerifyReport rep = verify_complex(getRes(e), Field::rationals());
        std::string tag = "e=" + std::to_string(e) + ": ";
        c.expect(rep.dd_zero, tag + "d.d != 0 (" + rep.dd_witness + ")");
        c.expect(rep.exact, tag + "homology not concentrated in degree 0 (" +
                                rep.exactness_witness + ")");
        c.expect(rep.surjective, tag + "augmentation not surjective");
        c.expect(rep.minimal, tag + "not minimal (" + rep.minimality_witness + ")");
    }
}

void crit_4(Check& c) {
    for (int e = 2; e <= 6; ++e) {
        const auto& res = getRes(e);
        const int len = resolution_length(e);
        for (int n = 1; n <= len; ++n) {
            int d = hom_to_A_dim(res.terms[n]);
            c.expect(d == 2 * e - n - 1, "e=" + std::to_string(e) + ": dim Hom(R_" +
                                             std::to_string(n) + ", A) = " + std::to_string(d) +
                                             ", expected " + std::to_string(2 * e - n - 1));
        }
        auto hk = hom_ker_dims(res, Field::rationals());
        for (int n = 1; n <= len; ++n) {
            int want;
            if (n == len) {
                want = 0;  // the top kernel vanishes
            } else {
                switch (n % 4) {
                    case 1: want = e - 2 * (n / 4) - 1; break;
                    case 2: want = e - 2 * (n / 4) - 1; break;
                    case 3: want = e - 2 * (n / 4) - 2; break;
                    default: want = e - 2 * (n / 4 - 1) - 2; break;
                }
            }
            c.expect(hk[n] == want, "e=" + std::to_string(e) + ": dim Hom(Ker d_" +
                                        std::to_string(n) + ", A) = " + std::to_string(hk[n]) +
                                        ", expected " + std::to_string(want));
        }
    }
}

void crit_5(Check& c) {
    const std::vector<Field> fields = {Field::rationals(), Field::prime(2), Field::prime(3),
                                       Field::prime(5)};
    for (int e = 2; e <= 6; ++e) {
        const auto& res = getRes(e);
        GradedDims want = expected_hh_dims(e);
        for (const Field& f : fields) {
            VerifyReport rep = verify_complex(res, f);
            c.expect(rep.pass(), "e=" + std::to_string(e) + " over " + f.name() + ": " +
                                     failure_summary(rep));
            GradedDims got = hh_dims(res, f);
            c.expect(got == want, "e=" + std::to_string(e) + " over " + f.name() + ": hh_dims = " +
                                      show(got) + ", expected " + show(want));
        }
    }
}

std::string first_ring_failure(const RingReport& r) {
    if (!r.resolution_ok) return "resolution verification failed";
    if (!r.dims_match) return "dimension mismatch with the presented ring";
    for (const auto* v : {&r.relations, &r.nonvanishing, &r.commutativity})
        for (const auto& ch : *v)
            if (!ch.pass) return "check '" + ch.name + "': " + ch.detail;
    if (!r.lift_independent) return "products depend on the lift pivot order";
    return "unknown failure";
}

void crit_6(Check& c) {
    for (int e = 2; e <= 4; ++e) {
        RingReport rep = verify_ring_presentation(e, Field::rationals());
        c.expect(rep.pass(), "e=" + std::to_string(e) + ": " + first_ring_failure(rep));
        c.expect((int)rep.relations.size() > 0 && (int)rep.nonvanishing.size() > 0 &&
                     (int)rep.commutativity.size() > 0,
                 "e=" + std::to_string(e) + ": a check section is empty");
    }
}

void crit_7(Check& c) {
    for (int e = 2; e <= 6; ++e) {
        GradedDims hh = hh_dims(getRes(e), Field::rationals());
        GradedDims ev = even_part_hilbert(e);
        c.expect(ev.size() == hh.size(), "e=" + std::to_string(e) + ": even part has length " +
                                             std::to_string(ev.size()) + ", cohomology " +
                                             std::to_string(hh.size()));
        for (size_t d = 0; d < std::min(ev.size(), hh.size()); ++d) {
            long long want = (d % 2 == 0) ? hh[d] : 0;
            c.expect(ev[d] == want, "e=" + std::to_string(e) + " degree " + std::to_string(d) +
                                        ": even part " + std::to_string(ev[d]) + ", expected " +
                                        std::to_string(want));
        }
    }
}

void crit_8(Check& c) {
    const int maxdeg = 10;
    for (int e = 2; e <= 4; ++e) {
        for (int w = 1; w <= 4; ++w) {
            GradedDims q = quotient_hilbert(e, w, kernel_pi_basis(e, w, maxdeg), maxdeg);
            GradedDims t = truncated_invariant_dims(e, w);
            for (int d = 0; d <= maxdeg; ++d) {
                long long qa = d < (int)q.size() ? q[d] : 0;
                long long ta = d < (int)t.size() ? t[d] : 0;
                c.expect(qa == ta, "e=" + std::to_string(e) + " w=" + std::to_string(w) +
                                       " degree " + std::to_string(d) + ": quotient " +
                                       std::to_string(qa) + " vs invariants " + std::to_string(ta));
            }
        }
    }

    /* the degreewise kernel-vs-ideal comparison is a required artifact; it
     * documents the discrepancy (p_2 at e=2, w=2) and is not a gate */
    KernelPiReport rep = kernel_pi_report(2, 2, 6);
    c.expect(rep.ideal_contained, "power-sum ideal not contained in Ker pi");
    bool has_p2 = false;
    for (const auto& deg : rep.degrees)
        if (deg.degree == 2)
            for (const auto& wtn : deg.witnesses)
                if (wtn.rfind("p_2", 0) == 0) has_p2 = true;
    c.expect(has_p2, "degree-2 witness p_2 missing from the e=2, w=2 report");

    Json doc;
    doc["e"] = rep.e;
    doc["w"] = rep.w;
    doc["max_degree"] = rep.max_degree;
    doc["generator_indices"] = rep.generator_indices;
    doc["ideal_contained_in_kernel"] = rep.ideal_contained;
    doc["kernel_matches_ideal"] = rep.kernel_matches;
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
    doc["degrees"] = degs;
    c.expect(write_text_file("kernel_pi_report.json", doc.dump(2) + "\n"),
             "could not write kernel_pi_report.json");
}

/* swap-orbit count: unordered pairs of labeled basis elements per degree */
GradedDims swap_orbit_dims(const GradedDims& v) {
    std::vector<int> deg_of;
    for (int d = 0; d < (int)v.size(); ++d)
        for (long long k = 0; k < v[d]; ++k) deg_of.push_back(d);
    GradedDims out(2 * (v.empty() ? 1 : v.size()), 0);
    for (size_t i = 0; i < deg_of.size(); ++i)
        for (size_t j = i; j < deg_of.size(); ++j) out[deg_of[i] + deg_of[j]] += 1;
    return trim_graded(out);
}

void crit_9(Check& c) {
    std::vector<GradedDims> samples = {expected_hh_dims(2), expected_hh_dims(3), GradedDims{0, 2, 1},
                                       GradedDims{1, 1}};
    for (const auto& v : samples)
        for (auto conv : {SignConvention::Unsigned, SignConvention::Signed})
            c.expect(wreath_hh_dims(v, 1, conv) == v,
                     "w=1 is not the identity on " + show(v) + " (" + convention_name(conv) + ")");

    for (int e = 2; e <= 3; ++e) {
        GradedDims v = hh_dims(getRes(e), Field::rationals());
        c.expect(v == expected_hh_dims(e), "base dims for e=" + std::to_string(e) + " off");
        for (int w = 2; w <= 3; ++w)
            for (auto conv : {SignConvention::Unsigned, SignConvention::Signed})
                c.expect(!wreath_hh_dims(v, w, conv).empty(),
                         "empty wreath dims at e=" + std::to_string(e) + ", w=" +
                             std::to_string(w));

        /* independent oracle for unsigned w=2: V plus the swap orbits of VxV */
        GradedDims got = wreath_hh_dims(v, 2, SignConvention::Unsigned);
        GradedDims orbits = swap_orbit_dims(v);
        size_t len = std::max(got.size(), std::max(orbits.size(), v.size()));
        for (size_t d = 0; d < len; ++d) {
            long long lhs = d < got.size() ? got[d] : 0;
            long long rhs = (d < v.size() ? v[d] : 0) + (d < orbits.size() ? orbits[d] : 0);
            c.expect(lhs == rhs, "e=" + std::to_string(e) + " unsigned w=2 degree " +
                                     std::to_string(d) + ": " + std::to_string(lhs) +
                                     " vs oracle " + std::to_string(rhs));
        }
    }
}

/* ---- rim-hook oracle for criterion 10, independent of the abacus ---- */

using Parts = std::vector<int>;

Parts strip_zeros(Parts p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

/* all mu contained in la with |mu| = target */
void contained_of_size(const Parts& la, int target, Parts& mu, size_t i, int left,
                       std::vector<Parts>& out) {
    if (left == 0) {
        Parts m = mu;
        m.resize(la.size(), 0);
        out.push_back(strip_zeros(m));
        return;
    }
    if (i >= la.size()) return;
    int hi = std::min(la[i], left);
    if (i > 0) hi = std::min(hi, mu[i - 1]);
    for (int v = hi; v >= 0; --v) {
        mu.push_back(v);
        contained_of_size(la, target, mu, i + 1, left - v, out);
        mu.pop_back();
        if (v == 0) break;
    }
}

/* la/mu is a rim e-hook: e cells, edge-connected, no 2x2 square */
bool is_rim_hook(const Parts& la, const Parts& mu_in, int e) {
    Parts mu = mu_in;
    mu.resize(la.size(), 0);
    std::set<std::pair<int, int>> cells;
    for (size_t r = 0; r < la.size(); ++r)
        for (int col = mu[r]; col < la[r]; ++col) cells.insert({(int)r, col});
    if ((int)cells.size() != e) return false;
    for (auto [r, col] : cells)
        if (cells.count({r + 1, col}) && cells.count({r, col + 1}) && cells.count({r + 1, col + 1}))
            return false;
    /* connectivity along edges */
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<int, int>> stack = {*cells.begin()};
    seen.insert(*cells.begin());
    while (!stack.empty()) {
        auto [r, col] = stack.back();
        stack.pop_back();
        for (auto [dr, dc] : {std::pair<int, int>{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
            std::pair<int, int> nb{r + dr, col + dc};
            if (cells.count(nb) && !seen.count(nb)) {
                seen.insert(nb);
                stack.push_back(nb);
            }
        }
    }
    return seen.size() == cells.size();
}

std::map<Parts, std::pair<Parts, int>> g_oracle[6];  // per e

/* removes rim e-hooks in every possible order; fails if outcomes disagree */
std::pair<Parts, int> oracle_core(const Parts& la, int e, Check& c) {
    auto it = g_oracle[e].find(la);
    if (it != g_oracle[e].end()) return it->second;
    int total = 0;
    for (int x : la) total += x;
    std::vector<Parts> candidates;
    if (total >= e) {
        Parts mu;
        contained_of_size(la, total - e, mu, 0, total - e, candidates);
    }
    std::vector<std::pair<Parts, int>> outcomes;
    for (const Parts& m : candidates)
        if (is_rim_hook(la, m, e)) outcomes.push_back(oracle_core(m, e, c));
    std::pair<Parts, int> res;
    if (outcomes.empty()) {
        res = {la, 0};
    } else {
        res = {outcomes[0].first, outcomes[0].second + 1};
        for (const auto& o : outcomes)
            c.expect(o.first == outcomes[0].first && o.second == outcomes[0].second,
                     "removal orders disagree on " + Partition{la}.str());
    }
    g_oracle[e][la] = res;
    return res;
}

void all_partitions_upto(int n, std::vector<Parts>& out) {
    for (int k = 0; k <= n; ++k)
        for (const Partition& p : partitions(k)) out.push_back(p.parts);
}

/* replay the push-up on an explicit abacus with a chosen bead count */
std::pair<Partition, int> replay(const Partition& p, int e, int beads) {
    AbacusConfig cfg = abacus_from_partition(p, e, beads);
    std::vector<int> out;
    int weight = 0;
    for (int r = 0; r < e; ++r) {
        std::vector<int> levels;
        for (int b : cfg.beta)
            if (b % e == r) levels.push_back(b / e);
        std::sort(levels.begin(), levels.end());
        for (size_t j = 0; j < levels.size(); ++j) {
            weight += levels[j] - (int)j;
            out.push_back(r + e * (int)j);
        }
    }
    return {partition_from_beta(out), weight};
}

void crit_10(Check& c) {
    std::vector<Parts> all;
    all_partitions_upto(12, all);
    for (int e = 2; e <= 5; ++e) {
        for (const Parts& la : all) {
            Partition p{la};
            auto [core, weight] = e_core_and_weight(p, e);
            auto [ocore, oweight] = oracle_core(la, e, c);
            c.expect(core.parts == ocore && weight == oweight,
                     "e=" + std::to_string(e) + ", p=" + p.str() + ": abacus gives (" +
                         Partition{core}.str() + "," + std::to_string(weight) +
                         "), rim hooks give (" + Partition{ocore}.str() + "," +
                         std::to_string(oweight) + ")");
            c.expect(p.size() == core.size() + e * weight,
                     "size identity fails at e=" + std::to_string(e) + ", p=" + p.str());
            int np = (int)p.parts.size();
            for (int beads = std::max(np, 1); beads <= np + 2 * e; ++beads) {
                auto [rcore, rweight] = replay(p, e, beads);
                c.expect(rcore == core && rweight == weight,
                         "bead count " + std::to_string(beads) + " changes the outcome at e=" +
                             std::to_string(e) + ", p=" + p.str());
            }
        }
    }
}

void crit_11(Check& c) {
    for (int e = 2; e <= 6; ++e) {
        const auto& A = getA(e);
        auto rep = is_heredity_ideal(A, idempotent_ideal(A, {e}));
        c.expect(rep.is_heredity,
                 "A.e_" + std::to_string(e) + ".A in A_" + std::to_string(e) +
                     " rejected: " + rep.reason);
    }
    const auto& A2 = getA(2);
    auto bad = is_heredity_ideal(A2, idempotent_ideal(A2, {1}));
    c.expect(!bad.is_heredity, "A.e_1.A in A_2 wrongly accepted");
    c.expect(bad.reason.find("c1") != std::string::npos,
             "witness c1 missing from the refusal: " + bad.reason);
    for (int e = 2; e <= 4; ++e) {
        HeredityChain chain = heredity_chain_search(getA(e));
        c.expect(chain.complete, "no complete chain for A_" + std::to_string(e));
        c.expect(!chain.chain_dims.empty() && chain.chain_dims.front() == 0 &&
                     chain.chain_dims.back() == getA(e).dim(),
                 "chain endpoints wrong for A_" + std::to_string(e));
    }
}

}  // namespace

int main() {
    struct Entry {
        int id;
        std::string desc;
        void (*fn)(Check&);
    };
    const std::vector<Entry> entries = {
        {1, "dim A_e = 4e-3 and dim Z(A_e) = e for e = 2..8", crit_1},
        {2, "generic minimal resolution matches the closed-form terms for e = 2..5 and stops at degree 2(e-1)", crit_2},
        {3, "repaired differentials: d.d = 0, homology A_e in degree 0 only, minimal, for e = 2..5", crit_3},
        {4, "dim Hom(R_n, A) = 2e-n-1 and dim Hom(Ker d_n, A) follows the case table for e = 2..6", crit_4},
        {5, "hh_dims = [e, 1, ..., 1] for e = 2..6 over Q, F2, F3, F5", crit_5},
        {6, "ring presentation: relations, nonvanishing and graded commutativity for e = 2..4", crit_6},
        {7, "even_part_hilbert equals the even Hochschild entries for e = 2..6", crit_7},
        {8, "quotient by the brute-force kernel of pi equals the truncated invariants for e, w <= 4 up to degree 10; kernel_pi_report.json written", crit_8},
        {9, "wreath formula: w = 1 identity; unsigned w = 2 matches the swap-orbit oracle; both conventions for w = 2, 3", crit_9},
        {10, "e-core and e-weight match the rim-hook oracle for |p| <= 12, e <= 5, with size identity and bead independence", crit_10},
        {11, "heredity: A.e_e.A accepted, A.e_1.A in A_2 refused with witness c1, complete chains for e <= 4", crit_11},
    };

    int failures = 0;
    for (const auto& entry : entries) {
        Check c;
        try {
            entry.fn(c);
        } catch (const std::exception& ex) {
            c.expect(false, std::string("exception: ") + ex.what());
        }
        if (!c.ok) ++failures;
        std::cout << "CRITERION " << entry.id << " " << (c.ok ? "PASS" : "FAIL") << " - "
                  << entry.desc;
        if (!c.ok) std::cout << " (" << c.detail << ")";
        std::cout << "\n" << std::flush;
    }
    std::cout << "SUMMARY: " << (entries.size() - failures) << "/" << entries.size()
              << " criteria passed" << (failures ? ", " + std::to_string(failures) + " failed" : "")
              << "\n";
    return failures;
}
