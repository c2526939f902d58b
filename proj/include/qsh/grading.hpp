#pragma once
#include <vector>

namespace qsh {

/* dims[n] = dimension of the degree-n graded piece */
using GradedDims = std::vector<long long>;

inline GradedDims trim_graded(GradedDims v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

inline bool graded_equal(GradedDims a, GradedDims b) {
    return trim_graded(std::move(a)) == trim_graded(std::move(b));
}

}  // namespace qsh
