#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "cech/constructions.hpp"
#include "cech/covering.hpp"
#include "cech/generators.hpp"
#include "cech/homotopy.hpp"
#include "cech/metric.hpp"
#include "cech/persistence.hpp"

namespace cech {

using json = nlohmann::ordered_json;

/// Input-format violation; the message names the offending field.
struct JsonError : std::runtime_error {
    explicit JsonError(const std::string& what) : std::runtime_error(what) {}
};

/// Round to 12 significant digits for stable rendered output.
double round_sig(double value, int digits = 12);
json json_number(double value);

// -- spaces ------------------------------------------------------------
// {"labels":[...], "closure":[[ascending indices, containing the row index]...]}
json space_to_json(const ClosureSpace& space);
ClosureSpace space_from_json(const json& j);

/// A space plus whatever structure the document declared. Accepted forms:
/// inline {"labels","closure"}, {"cyclic":{"n","m"}},
/// {"wedge":{"n1","m1","n2","m2"}}, {"file":"path"} or a bare string path
/// (resolved against base_dir).
struct SpaceDocument {
    ClosureSpace space;
    std::optional<CyclicSpace> cyclic;
    std::optional<WedgeSpace> wedge;
};
SpaceDocument space_document_from_json(const json& j, const std::string& base_dir);

// -- quotients ----------------------------------------------------------
// {"space": <space>, "classes":[...], "assign":[class index per point]}
QuotientMap quotient_from_json(const json& j);
json quotient_to_json(const QuotientMap& q);

// -- metric spaces -------------------------------------------------------
// {"labels":[...], "dist":[[...]]} or {"points":[[...]], "metric":"euclidean"|"circle"}
MetricSpace metric_from_json(const json& j);
json metric_to_json(const MetricSpace& ms);
MetricSpace pointcloud_from_csv(const std::string& text, bool labeled, MetricKind kind);

// -- graphs / complexes ----------------------------------------------------
// {"vertices":[...], "edges":[[u,v]...]}
Digraph graph_from_json(const json& j);
// {"vertices":[...], "simplices":[[vertex indices]...]} (faces auto-completed)
SimplicialComplex complex_from_json(const json& j);

// -- paths ----------------------------------------------------------------
// {"space": <space document>, "points":[indices]}
struct PathDocument {
    SpaceDocument space;
    DiscretePath path;
};
PathDocument path_from_json(const json& j, const std::string& base_dir);
json path_to_json(const DiscretePath& p);

// -- maps -------------------------------------------------------------
// {"domain": <space document>, "codomain": <space document>, "values":[...]}
SpaceMap space_map_from_json(const json& j, const std::string& base_dir);
MetricMap metric_map_from_json(const json& j);

// -- coverings ----------------------------------------------------------
// {"total": <space>, "base": <space>, "proj":[indices]}, or
// {"cyclic_cover": {"k":..., "n":..., "m":...}} for the finite k-fold model.
struct CoveringDocument {
    CoveringCandidate candidate;
    bool cyclic_surrogate = false;  // built from a cyclic_cover shorthand
};
CoveringDocument covering_from_json(const json& j, const std::string& base_dir);
json covering_verdict_to_json(const CoveringCandidate& cc);

// -- persistence -----------------------------------------------------------
// {"bars":[[birth, death|null]...]}
json barcode_to_json(const Barcode& bc);
json merge_tree_to_json(const MergeTree& tree, const MetricSpace& ms);

// -- homotopy -----------------------------------------------------------
json move_to_json(const Move& m);
json homotopy_result_to_json(const HomotopyResult& r);
json word_to_json(const Word& w);

json load_json_file(const std::string& path);

}  // namespace cech
