#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "qsh/bimodule.hpp"
#include "qsh/quiver_algebra.hpp"
#include "qsh/resolution.hpp"

namespace qsh {

/* insertion-ordered documents keep emitted files stable byte-for-byte */
using Json = nlohmann::ordered_json;

inline constexpr const char* kCacheVersion = "qsh-resolution-cache-1";
inline constexpr const char* kAlgebraVersion = "qsh-algebra-1";

/* rationals as canonical strings: "3", "-5/2" */
Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json elem_to_json(const Elem& x);
Elem elem_from_json(const Json& j);

/* versioned document: vertices, arrows, relations, basis, structure
   constants; round trips through AlgebraBuilder */
Json algebra_to_json(const BoundQuiverAlgebra& A);
BoundQuiverAlgebra algebra_from_json(const Json& j);

/* entries as (row, col, numerator, denominator) quadruples */
Json sparse_to_json(const SparseMat& m);
SparseMat sparse_from_json(const Json& j);

Json repair_to_json(const ResolutionRepair& r);
ResolutionRepair repair_from_json(const Json& j);

Json verify_report_to_json(const VerifyReport& rep);
VerifyReport verify_report_from_json(const Json& j);

struct ResolutionCache {
    int e = 0;
    int top_degree = 0;
    ResolutionRepair repair;
    std::vector<VerifyReport> reports;
    BimoduleResolution resolution;
};

/* versioned cache document: parameters, repair choices, per-degree generator
   lists, sparse differentials, and the verification reports */
Json resolution_cache_to_json(const BimoduleResolution& res, int e,
                              const ResolutionRepair& repair,
                              const std::vector<VerifyReport>& reports);

/* Rebuilds the resolution against A; throws std::runtime_error on version or
   shape mismatch. */
ResolutionCache resolution_cache_from_json(const Json& j, const BoundQuiverAlgebra& A);

bool write_text_file(const std::string& path, const std::string& text);
std::optional<std::string> read_text_file(const std::string& path);

}  // namespace qsh
