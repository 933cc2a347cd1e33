#include "foci/manifest.hpp"

#include <fstream>
#include <sstream>

#include "foci/errors.hpp"

namespace foci {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ValidationError(what); }

std::string require_string(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_string()) fail(std::string("missing string field '") + key + "'");
    return j[key].get<std::string>();
}

long require_int(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        fail(std::string("missing integer field '") + key + "'");
    return j[key].get<long>();
}

Rat json_rat(const Json& j) {
    if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_float()) fail("rationals must be integers or 'p/q' strings, not floats");
    fail("expected a rational");
}

double json_double(const Json& j) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) return rat_double(parse_rat(j.get<std::string>()));
    fail("expected a number");
}

IVec3 json_ivec3(const Json& j) {
    if (!j.is_array() || j.size() != 3) fail("expected an integer 3-vector");
    return {j[0].get<long long>(), j[1].get<long long>(), j[2].get<long long>()};
}

RVec3 json_rvec3(const Json& j) {
    if (!j.is_array() || j.size() != 3) fail("expected a rational 3-vector");
    return {json_rat(j[0]), json_rat(j[1]), json_rat(j[2])};
}

IMat3 json_mat3(const Json& j) {
    if (!j.is_array() || j.size() != 3) fail("expected a 3x3 integer matrix");
    IMat3 m;
    for (int r = 0; r < 3; ++r) {
        if (!j[r].is_array() || j[r].size() != 3) fail("expected a 3x3 integer matrix");
        for (int c = 0; c < 3; ++c) m.m[r][c] = j[r][c].get<long long>();
    }
    return m;
}

SeifertMatrix json_seifert(const Json& j) {
    if (!j.is_array()) fail("seifert must be an array of rows");
    std::vector<std::vector<Int>> e;
    for (auto& row : j) {
        std::vector<Int> r;
        for (auto& x : row) {
            if (x.is_number_integer())
                r.emplace_back(static_cast<long long>(x.get<long long>()));
            else if (x.is_string())
                r.emplace_back(Int(x.get<std::string>()));
            else
                fail("seifert entries must be integers");
        }
        e.push_back(std::move(r));
    }
    return SeifertMatrix(std::move(e));
}

}  // namespace

KnotInSphere parse_knot_ref(const Json& j, const KnotCatalog& cat) {
    if (j.is_string()) {
        std::string label = j.get<std::string>();
        return make_knot(make_s3(), cat.lookup(label), label);
    }
    if (j.is_object()) {
        std::string label = require_string(j, "label");
        SeifertMatrix v = j.contains("seifert") ? json_seifert(j["seifert"]) : cat.lookup(label);
        ThreePtr ambient = j.contains("ambient") ? parse_three_manifold(j["ambient"], cat) : make_s3();
        return make_knot(std::move(ambient), std::move(v), label);
    }
    fail("knot reference must be a label or an object");
}

ThreePtr parse_three_manifold(const Json& j, const KnotCatalog& cat) {
    if (!j.is_object()) fail("3-manifold node must be an object");
    std::string type = require_string(j, "type");
    if (type == "s3") return make_s3();
    if (type == "named_sphere") {
        if (!j.contains("casson")) fail("named_sphere needs 'casson'");
        Rat c = json_rat(j["casson"]);
        if (c.denominator() != 1) fail("named_sphere casson value must be an integer");
        return make_named_sphere(require_string(j, "label"), c.numerator());
    }
    if (type == "surgery_1q") {
        if (!j.contains("base") || !j.contains("knot")) fail("surgery_1q needs 'base' and 'knot'");
        return make_surgery_1q(parse_three_manifold(j["base"], cat),
                               parse_knot_ref(j["knot"], cat), require_int(j, "q"));
    }
    if (type == "splice") {
        if (!j.contains("k1") || !j.contains("k2")) fail("splice needs 'k1' and 'k2'");
        return make_splice(parse_knot_ref(j["k1"], cat), parse_knot_ref(j["k2"], cat));
    }
    if (type == "zero_surgery") {
        if (!j.contains("knot")) fail("zero_surgery needs 'knot'");
        return make_zero_surgery(parse_knot_ref(j["knot"], cat));
    }
    fail("unknown 3-manifold node type '" + type + "'");
}

TorusDesc parse_torus(const Json& j, const KnotCatalog& cat) {
    if (!j.is_object()) fail("torus node must be an object");
    std::string type = require_string(j, "type");
    if (type == "product_torus") {
        if (!j.contains("knot")) fail("product_torus needs 'knot'");
        return TorusDesc{ProductTorus{parse_knot_ref(j["knot"], cat)}};
    }
    if (type == "mapping_torus_branch_locus") return TorusDesc{MappingTorusOfBranchLocus{}};
    if (type == "surgery_core") return TorusDesc{SurgeryCore{}};
    if (type == "abstract_torus") return TorusDesc{AbstractTorus{require_string(j, "label")}};
    fail("unknown torus type '" + type + "'");
}

FourPtr parse_four_manifold(const Json& j, const KnotCatalog& cat) {
    if (!j.is_object()) fail("4-manifold node must be an object");
    std::string type = require_string(j, "type");
    if (type == "product") {
        if (!j.contains("y")) fail("product needs 'y'");
        return make_product(parse_three_manifold(j["y"], cat));
    }
    if (type == "mapping_torus") {
        if (!j.contains("knot")) fail("mapping_torus needs 'knot'");
        return make_mapping_torus(require_int(j, "n"), parse_knot_ref(j["knot"], cat));
    }
    if (type == "torus_surgery") {
        if (!j.contains("base") || !j.contains("torus"))
            fail("torus_surgery needs 'base' and 'torus'");
        return make_torus_surgery(parse_four_manifold(j["base"], cat),
                                  parse_torus(j["torus"], cat), require_int(j, "p"),
                                  require_int(j, "q"));
    }
    if (type == "fiber_sum") {
        for (const char* k : {"a", "ta", "b", "tb"})
            if (!j.contains(k)) fail("fiber_sum needs 'a', 'ta', 'b', 'tb'");
        return make_fiber_sum(parse_four_manifold(j["a"], cat), parse_torus(j["ta"], cat),
                              parse_four_manifold(j["b"], cat), parse_torus(j["tb"], cat));
    }
    if (type == "excision") {
        for (const char* k : {"a", "ta", "b", "tb", "glue"})
            if (!j.contains(k)) fail("excision needs 'a', 'ta', 'b', 'tb', 'glue'");
        return make_excision(parse_four_manifold(j["a"], cat), parse_torus(j["ta"], cat),
                             parse_four_manifold(j["b"], cat), parse_torus(j["tb"], cat),
                             GluingMatrix(json_mat3(j["glue"])));
    }
    fail("unknown 4-manifold node type '" + type + "'");
}

Manifest parse_manifest(const Json& j) {
    Manifest m;
    if (j.contains("knots")) {
        if (!j["knots"].is_array()) fail("'knots' must be an array");
        for (auto& item : j["knots"])
            m.catalog.add(require_string(item, "label"), json_seifert(item.at("seifert")));
    }
    if (j.contains("manifolds")) {
        for (auto& [name, node] : j["manifolds"].items())
            m.manifolds.emplace(name, parse_four_manifold(node, m.catalog));
    }
    if (j.contains("scenes")) {
        for (auto& [name, node] : j["scenes"].items()) {
            parse_scene(node);  // validate eagerly
            m.scenes.emplace(name, node);
        }
    }
    if (j.contains("flows")) {
        for (auto& [name, node] : j["flows"].items()) {
            parse_flow_batch(node);  // validate eagerly
            m.flows.emplace(name, node);
        }
    }
    return m;
}

Manifest load_manifest_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open manifest '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        fail(std::string("manifest parse error: ") + e.what());
    }
    return parse_manifest(j);
}

Scene parse_scene(const Json& j) {
    Scene s;
    if (j.contains("planes")) {
        for (auto& p : j["planes"])
            s.planes.emplace_back(json_rvec3(p.at("basepoint")), json_ivec3(p.at("spanning").at(0)),
                                  json_ivec3(p.at("spanning").at(1)), json_ivec3(p.at("normal")),
                                  p.contains("label") ? p["label"].get<std::string>() : "plane");
    }
    if (j.contains("curves")) {
        for (auto& c : j["curves"]) {
            PLCurve curve;
            for (auto& v : c.at("vertices")) curve.vertices.push_back(json_rvec3(v));
            curve.closed = c.contains("closed") && c["closed"].get<bool>();
            validate_curve(curve);
            s.curves.push_back(std::move(curve));
        }
    }
    if (j.contains("matrices")) {
        for (auto& [name, mat] : j["matrices"].items())
            s.matrices.emplace(name, GluingMatrix(json_mat3(mat)));
    }
    if (j.contains("checks")) s.checks = j["checks"];
    return s;
}

FlowBatch parse_flow_batch(const Json& j) {
    FlowBatch b;
    if (j.contains("params")) {
        const Json& p = j["params"];
        if (p.contains("step")) b.params.step = json_double(p["step"]);
        if (p.contains("t_max")) b.params.t_max = json_double(p["t_max"]);
        if (p.contains("truncation_radius"))
            b.params.truncation_radius = json_double(p["truncation_radius"]);
        if (p.contains("sign_convention")) b.params.sign_convention = p["sign_convention"].get<int>();
    }
    validate_params(b.params);
    if (!j.contains("initial") || !j["initial"].is_array())
        fail("flow batch needs an 'initial' array");
    for (auto& row : j["initial"]) {
        if (!row.is_array() || row.size() != 9)
            fail("each initial condition is nine rationals (X1, X2, X3)");
        std::array<double, 9> v{};
        for (int i = 0; i < 9; ++i) v[static_cast<size_t>(i)] = json_double(row[i]);
        b.initial.push_back(SuTriple{{v[0], v[1], v[2]}, {v[3], v[4], v[5]}, {v[6], v[7], v[8]}});
    }
    return b;
}

Json invariant_to_json(const InvariantValue& v) {
    Json j;
    j["value"] = rat_str(v.value);
    j["trace"] = v.trace;
    return j;
}

Json admissibility_to_json(const AdmissibilityReport& r) {
    Json j;
    j["pass"] = r.pass;
    j["reasons"] = r.reasons;
    if (r.homology_test.has_value()) j["homology_test"] = *r.homology_test;
    if (r.homology_level_test.has_value()) j["homology_level_test"] = *r.homology_level_test;
    return j;
}

namespace {

Json vec3_json(const Vec3d& v) { return Json::array({v.x, v.y, v.z}); }

}  // namespace

Json trajectory_to_json(const Trajectory& t) {
    Json j;
    j["classification"] = flow_class_name(t.classification);
    j["end_time"] = t.end_time;
    j["end_state"] =
        Json::array({vec3_json(t.end_state.x1), vec3_json(t.end_state.x2), vec3_json(t.end_state.x3)});
    j["conserved_drift"] = t.conserved_drift;
    j["cs_max_increase"] = t.cs_max_increase;
    Json samples = Json::array();
    for (auto& s : t.samples) {
        Json row;
        row["t"] = s.t;
        row["b"] = Json::array({vec3_json(s.b.x1), vec3_json(s.b.x2), vec3_json(s.b.x3)});
        samples.push_back(std::move(row));
    }
    j["samples"] = std::move(samples);
    return j;
}

Json count_report_to_json(const CountReport& r) {
    Json j;
    j["count_p1"] = r.count_p1;
    j["count_pn"] = r.count_pn;
    j["count_p0"] = r.count_p0;
    j["identity_holds"] = r.identity_holds;
    j["boundary_sum"] = r.boundary_sum;
    return j;
}

}  // namespace foci
