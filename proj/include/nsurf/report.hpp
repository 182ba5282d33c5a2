#pragma once

#include "nsurf/theorem.hpp"

#include <json.hpp>

#include <string>

namespace nsurf {

/// Bumped whenever a field is renamed or removed.
inline constexpr int kReportSchemaVersion = 1;

/// Convention used for N in every report.
inline constexpr const char* kDegreeConvention = "corner-multiplicity";

/// "sphere", "torus", "Klein bottle", "disk", ... or a generic description.
std::string surface_name(const ComponentTopology& t);

nlohmann::ordered_json to_json(const Triangulation& tri, const Skeleton& skel);
nlohmann::ordered_json to_json(const MatchingSystem& m);
nlohmann::ordered_json to_json(const SurfaceComplex& c);
nlohmann::ordered_json to_json(const TheoremReport& r);
nlohmann::ordered_json to_json(const BatchSummary& s);

std::string human_readable(const TheoremReport& r);
std::string human_readable(const BatchSummary& s);

} // namespace nsurf
