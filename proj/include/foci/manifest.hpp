#pragma once

#include <map>
#include <string>

#include "json.hpp"

#include "foci/catalog.hpp"
#include "foci/expr.hpp"
#include "foci/flow.hpp"
#include "foci/invariant.hpp"
#include "foci/pillowcase.hpp"

namespace foci {

using Json = nlohmann::ordered_json;

// A manifest bundles a knot catalog extension, named 4-manifold expressions,
// pillowcase scenes, and flow batches.  All cross-references are resolved and
// validated up front.
struct Manifest {
    KnotCatalog catalog;
    std::map<std::string, FourPtr> manifolds;
    std::map<std::string, Json> scenes;  // raw scene JSON, parsed on use
    std::map<std::string, Json> flows;   // raw flow batches
};

Manifest parse_manifest(const Json& j);
Manifest load_manifest_file(const std::string& path);

// expression parsers (knots resolve through the catalog)
ThreePtr parse_three_manifold(const Json& j, const KnotCatalog& cat);
FourPtr parse_four_manifold(const Json& j, const KnotCatalog& cat);
TorusDesc parse_torus(const Json& j, const KnotCatalog& cat);
KnotInSphere parse_knot_ref(const Json& j, const KnotCatalog& cat);

// pillowcase scene: {"planes": [...], "curves": [...], "matrices": {...},
// "checks": [...]}
struct Scene {
    std::vector<PlaneImage> planes;
    std::vector<PLCurve> curves;
    std::map<std::string, GluingMatrix> matrices;
    Json checks;  // optional list of {"type": "apply_gluing_equals", ...}
};

Scene parse_scene(const Json& j);

// flow batch: {"params": {...}, "initial": [[9 rationals], ...]}
struct FlowBatch {
    FlowParams params;
    std::vector<SuTriple> initial;
};

FlowBatch parse_flow_batch(const Json& j);

// JSON encoders shared by the CLI and the acceptance suite
Json invariant_to_json(const InvariantValue& v);
Json admissibility_to_json(const AdmissibilityReport& r);
Json trajectory_to_json(const Trajectory& t);
Json count_report_to_json(const CountReport& r);

}  // namespace foci
