#pragma once

#include "nsurf/normal_coords.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace nsurf {

/// Which decompositions disqualify a solution from being fundamental.
enum class FundamentalMode {
    AllSolutions,        // summands may be any non-negative solutions of the matching equations
    AdmissibleSummands,  // both summands must also be admissible
};

const char* to_string(FundamentalMode mode);

struct EnumerationConfig {
    std::int64_t max_coordinate = 1;
    bool fundamental_only = false;
    bool include_zero = false;
    FundamentalMode fundamental_mode = FundamentalMode::AllSolutions;
    /// Refuse searches whose nominal admissible branch count exceeds this.
    double work_budget = 1e10;
    unsigned jobs = 1;
};

class WorkBudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Nominal size of the bounded admissible search: ((B+1)^4 (1+3B))^t.
double nominal_search_size(std::size_t tet_count, std::int64_t max_coordinate);

/// All vectors with 0 <= v <= upper (entrywise) satisfying `m`, in
/// lexicographic order. With `admissible` set, only admissible vectors are
/// visited. The visitor returns false to stop the search early.
void search_solutions(const MatchingSystem& m, std::span<const std::int64_t> upper, bool admissible,
                      const std::function<bool(const NormalVector&)>& visit);

/// Admissible solutions with entries in [0, B], lexicographically ordered.
std::vector<NormalVector> enumerate_admissible(const MatchingSystem& m, const EnumerationConfig& cfg);

/// True iff v is not the sum of two nonzero non-negative solutions (per `mode`).
bool is_fundamental(const NormalVector& v, const MatchingSystem& m, FundamentalMode mode = FundamentalMode::AllSolutions);

/// Checks v against an explicit solution list covering every vector below v.
bool is_fundamental(const NormalVector& v, const std::vector<NormalVector>& solutions);

/// Triangle coordinates of the vertex-linking sphere (or disk) around a vertex class.
NormalVector vertex_link_vector(const Skeleton& skel, std::size_t vertex);

} // namespace nsurf
