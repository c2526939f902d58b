#pragma once
#include <optional>
#include "qsh/bimodule.hpp"

namespace qsh {

/* The printed differential tables contain three defects, each with the
   possible readings enumerated here.  The default assignment is the one the
   search below singles out.
   - d4_special: in degrees ≡ 0 (mod 4) the two-term boundary branch for
     (j)⊗(j+2n) generators carries the label n = 2s+1, which overlaps the
     generic branch and leaves the top offset n = 2s+2 uncovered (the mirror
     branch is labelled n = 2s+2).  TopOffset moves the label to the top
     offset; AsPrinted keeps it, leaving top-offset generators without a rule.
   - double_tensor: one generic term is printed "(t+2m-1)⊗⊗α(t)"; Read treats
     the doubled symbol as a single tensor, Drop removes the term.
   - capital_j: one boundary term is printed "α(J+2n-1)⊗(j)"; Read takes J=j,
     Drop removes the term. */
struct ResolutionRepair {
    enum class D4Special { TopOffset, AsPrinted };
    enum class Token { Read, Drop };
    D4Special d4_special = D4Special::TopOffset;
    Token double_tensor = Token::Read;
    Token capital_j = Token::Read;

    bool operator==(const ResolutionRepair&) const = default;
    std::string describe() const;
};

/* generator pairs of R_n for the algebra A_e, in table order */
std::vector<std::pair<int, int>> paper_resolution_term(int e, int n);

int resolution_length(int e);  // 2(e-1)

/* Builds R_0..R_top with the printed differentials under the given repair.
   Terms whose arrow index falls outside 1..e-1 denote compositions with
   nonexistent arrows and are dropped; a surviving term addressed to a
   generator pair absent from the previous degree raises std::runtime_error.
   A must be build_A_e(e). */
BimoduleResolution paper_resolution(const BoundQuiverAlgebra& A, int top_degree,
                                    const ResolutionRepair& repair = {});

int hom_to_A_dim(const FreeBimodule& F);  // dim Hom_{A-A}(F, A)

struct RepairSearchEntry {
    ResolutionRepair repair;
    bool constructed = false;
    bool pass = false;
    std::string note;
};

struct RepairSearchResult {
    std::vector<RepairSearchEntry> entries;
    std::vector<ResolutionRepair> passing;
    /* the default assignment, when it passes */
    std::optional<ResolutionRepair> canonical;
};

/* Tries all eight repair assignments against the full-length complex for A
   and verifies each over f.  Assignments whose defective branch is not
   reachable at this e pass vacuously, so `passing` shrinks as e grows. */
RepairSearchResult repair_search(const BoundQuiverAlgebra& A, const Field& f);

}  // namespace qsh
