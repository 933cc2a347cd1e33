#include "foci/catalog.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "foci/errors.hpp"

namespace foci {

using nlohmann::json;

SeifertMatrix torus_knot_2_seifert(long k) {
    if (k < 1) throw InvalidParams("torus knot T(2, 2k+1) requires k >= 1");
    const size_t n = static_cast<size_t>(2 * k);
    std::vector<std::vector<Int>> e(n, std::vector<Int>(n, Int(0)));
    for (size_t i = 0; i < n; ++i) {
        e[i][i] = -1;
        if (i + 1 < n) e[i][i + 1] = 1;
    }
    return SeifertMatrix(std::move(e));
}

KnotCatalog::KnotCatalog() {
    table_.emplace("unknot", SeifertMatrix());
    table_.emplace("trefoil", torus_knot_2_seifert(1));
    table_.emplace("figure_eight",
                   SeifertMatrix({{Int(1), Int(1)}, {Int(0), Int(-1)}}));
    table_.emplace("t2_5", torus_knot_2_seifert(2));
    table_.emplace("t2_7", torus_knot_2_seifert(3));
}

const SeifertMatrix& KnotCatalog::lookup(const std::string& label) const {
    auto it = table_.find(label);
    if (it == table_.end()) throw UnknownKnot("unknown knot '" + label + "'");
    return it->second;
}

void KnotCatalog::add(const std::string& label, SeifertMatrix v) {
    table_.insert_or_assign(label, std::move(v));
}

static SeifertMatrix seifert_from_json(const json& j) {
    if (!j.is_array()) throw ValidationError("seifert entry must be an array of rows");
    std::vector<std::vector<Int>> e;
    for (auto& row : j) {
        std::vector<Int> r;
        for (auto& x : row) {
            if (x.is_number_integer())
                r.emplace_back(static_cast<long long>(x.get<long long>()));
            else if (x.is_string())
                r.emplace_back(Int(x.get<std::string>()));
            else
                throw ValidationError("seifert entries must be integers");
        }
        e.push_back(std::move(r));
    }
    return SeifertMatrix(std::move(e));
}

void KnotCatalog::load_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("knot catalog parse error: ") + e.what());
    }
    if (!j.is_array()) throw ValidationError("knot catalog must be a JSON array");
    for (auto& item : j) {
        if (!item.contains("label") || !item.contains("seifert"))
            throw ValidationError("knot catalog entries need 'label' and 'seifert'");
        add(item["label"].get<std::string>(), seifert_from_json(item["seifert"]));
    }
}

void KnotCatalog::load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open knot catalog '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    load_json_text(buf.str());
}

}  // namespace foci
