#pragma once

// JSON reports for single wave vectors and for the standard k-families.

#include <string>
#include <vector>

#include <json.hpp>

#include "latproj/projection.hpp"

namespace latproj {

using Json = nlohmann::ordered_json;

Json scalar_json(const QuadScalar& s);
Json vector_json(const Vec& v);
Json matrix_json(const Matrix& m);

/// Holohedry dump: order plus matrices in canonical order.
Json group_report(const PointGroup& g);

/// Full projection analysis of one wave vector; k must be in the dual.
Json analysis_report(const ProjectionContext& ctx, const Vec& k);

struct KFamily {
  std::string label;  // e.g. "(a,b,0)"
  Vec k;              // simple cubic coordinates with a, b, c substituted
};

/// Families of the simple cubic tables: (a,0,0), (a,b,b), (a,a,b), (a,a,0),
/// (a,b,0), (a,b,c), (a,a,a).
std::vector<KFamily> cubic_families(long a, long b, long c);
/// Families of the rotated tables: (a,0,0), (a,b,b), (0,a,a), (a,b,0),
/// (a,b,c), (a,a,a), (a,b,a+b), (a,0,a), (a,a,2a).
std::vector<KFamily> rotated_families(long a, long b, long c);

/// sqrt2 A k.
Vec rotate_to_l2(const Vec& k);

/// Names of maps after conjugating back to simple cubic coordinates by A
/// (identity conjugation when `rotated` is false); unnamed maps print "?".
std::vector<std::string> cubic_names(const MapList& maps, bool rotated);

/// One row per family. `rotated` selects the rotated families with k
/// mapped by sqrt2 A.
Json table_report(const ProjectionContext& ctx, bool rotated, long a, long b, long c);

/// Aligned text rendering of a table report.
std::string table_text(const Json& table);
/// "key: value" lines for a flat report.
std::string report_text(const Json& report);

}  // namespace latproj
