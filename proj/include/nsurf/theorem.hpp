#pragma once

#include "nsurf/decomposition.hpp"
#include "nsurf/enumeration.hpp"
#include "nsurf/surface.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nsurf {

struct Theorem1Result {
    bool vacuous = false; // F is empty
    bool holds = true;    // chi >= 2 - 7Q
    std::int64_t margin = 0;
    bool closed_surface = true;
    bool genus_applicable = false; // oriented, closed, connected
    bool genus_holds = true;       // 2g <= 7Q
    std::int64_t genus_margin = 0; // 7Q - 2g
};

Theorem1Result check_theorem1(const SurfaceInvariants& inv);

struct Theorem2Result {
    bool applicable = false; // nonempty and no vertex-linking component
    bool holds = true;       // T <= 4NQ
    std::int64_t margin = 0; // 4NQ - T
};

Theorem2Result check_theorem2(const SurfaceInvariants& inv, std::size_t max_degree);

enum class CheckStatus {
    Pass,
    Fail,          // violated where its hypotheses hold
    Caveat,        // violated outside its hypotheses (bounded surface or manifold)
    NotApplicable,
};

const char* to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::NotApplicable;
    std::string detail;
};

/// Everything computed for one normal vector.
struct TheoremReport {
    NormalVector vector;
    bool built = false;
    std::string build_error;
    std::optional<BuildError::Kind> build_error_kind;

    bool closed_manifold = true;
    bool closed_surface = true;
    bool nonempty = false;
    std::size_t max_degree = 0;

    std::optional<SurfaceInvariants> invariants;
    std::optional<Decomposition> decomposition;
    std::int64_t chi_b_prime_direct = 0; // chi of the quad subcomplex, homotopy equivalent to B'
    std::optional<GammaGraph> gamma;

    Theorem1Result theorem1;
    Theorem2Result theorem2;
    std::vector<CheckResult> checks;

    bool hard_failure() const;
    const CheckResult* check(const std::string& name) const;
};

/// Names of all per-surface checks, in report order.
const std::vector<std::string>& check_names();

TheoremReport analyze_surface(const Triangulation& tri, const Skeleton& skel, const MatchingSystem& m, const NormalVector& v);

struct CheckTally {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t caveat = 0;
    std::size_t not_applicable = 0;
};

struct Violation {
    NormalVector vector;
    std::vector<std::string> checks;
};

struct BatchSummary {
    std::size_t tet_count = 0;
    bool closed_manifold = true;
    std::size_t max_degree = 0;
    EnumerationConfig config;

    std::size_t surfaces = 0;       // nonempty vectors examined
    std::size_t zero_vectors = 0;   // skipped, theorems are vacuous for F empty
    std::size_t built = 0;
    std::vector<std::pair<NormalVector, std::string>> build_failures;
    std::size_t vertex_linking_surfaces = 0; // surfaces with a vertex-linking component
    std::map<std::string, CheckTally> tallies;
    std::optional<std::int64_t> min_theorem1_margin;
    std::optional<std::int64_t> min_theorem2_margin;
    std::vector<Violation> violations; // hard failures
    std::vector<Violation> caveats;    // failures outside the hypotheses

    bool vacuous() const { return surfaces == 0; }
    std::size_t hard_failures() const { return violations.size(); }
};

/// Enumerates, builds and checks every admissible solution in the bound.
BatchSummary verify_batch(const Triangulation& tri, const Skeleton& skel, const EnumerationConfig& cfg);

/// Aggregates already-computed reports (in order).
BatchSummary summarize(const Triangulation& tri, const Skeleton& skel, const EnumerationConfig& cfg, const std::vector<TheoremReport>& reports);

} // namespace nsurf
