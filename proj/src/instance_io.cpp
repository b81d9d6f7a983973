#include "plethysm/instance_io.hpp"

#include <set>

namespace plethysm {

using nlohmann::json;

namespace {

Composition composition_field(const json& obj, const char* key) {
    if (!obj.contains(key)) throw InstanceError(std::string("missing marginal \"") + key + "\"");
    const json& v = obj.at(key);
    if (!v.is_array()) throw InstanceError(std::string("marginal \"") + key + "\" must be an array");
    std::vector<int> parts;
    for (const json& e : v) {
        if (!e.is_number_integer()) throw InstanceError(std::string("marginal \"") + key + "\" must hold integers");
        const auto n = e.get<long long>();
        if (n < 0 || n > 1'000'000) throw InstanceError(std::string("marginal \"") + key + "\" entry out of range");
        parts.push_back(static_cast<int>(n));
    }
    return Composition(std::move(parts));
}

int r_field(const json& doc, const std::string& kind) {
    if (!doc.contains("r")) throw InstanceError(kind + " needs \"r\"");
    if (!doc.at("r").is_number_integer()) throw InstanceError("\"r\" must be an integer");
    const auto r = doc.at("r").get<long long>();
    if (r < 0 || r > 100'000) throw InstanceError("\"r\" out of range");
    return static_cast<int>(r);
}

ConeKind cone_field(const json& doc) {
    if (!doc.contains("cone")) return ConeKind::closed;
    const json& c = doc.at("cone");
    if (c == "open") return ConeKind::open;
    if (c == "closed") return ConeKind::closed;
    throw InstanceError("\"cone\" must be \"open\" or \"closed\"");
}

void check_keys(const json& obj, const std::set<std::string>& allowed, const char* where) {
    for (const auto& [key, _] : obj.items())
        if (!allowed.count(key)) throw InstanceError(std::string("unexpected key \"") + key + "\" in " + where);
}

void check_range(const Composition& c, int r, const char* what) {
    if (static_cast<int>(c.length()) > r + 1)
        throw InstanceError(std::string(what) + " has support beyond [0, r]");
}

}  // namespace

TomographyInstance parse_instance(const json& doc) {
    if (!doc.is_object()) throw InstanceError("instance must be a JSON object");
    if (!doc.contains("kind") || !doc.at("kind").is_string()) throw InstanceError("missing \"kind\"");
    const std::string kind = doc.at("kind").get<std::string>();
    if (!doc.contains("marginals") || !doc.at("marginals").is_object()) throw InstanceError("missing \"marginals\" object");
    const json& m = doc.at("marginals");

    if (kind == "2dxray") {
        check_keys(doc, {"kind", "r", "marginals"}, "2dxray instance");
        check_keys(m, {"x", "y", "z"}, "marginals");
        XRayInstance2D inst{r_field(doc, kind), composition_field(m, "x"), composition_field(m, "y"), composition_field(m, "z")};
        check_range(inst.x, inst.r, "x");
        check_range(inst.y, inst.r, "y");
        check_range(inst.z, inst.r, "z");
        return inst;
    }
    if (kind == "3dxray") {
        check_keys(doc, {"kind", "marginals"}, "3dxray instance");
        check_keys(m, {"x", "y", "z"}, "marginals");
        return XRayInstance3D{composition_field(m, "x"), composition_field(m, "y"), composition_field(m, "z")};
    }
    if (kind == "sym2d") {
        check_keys(doc, {"kind", "r", "cone", "marginals"}, "sym2d instance");
        check_keys(m, {"sum"}, "marginals");
        SymInstance inst{composition_field(m, "sum"), cone_field(doc), r_field(doc, kind)};
        check_range(inst.marginal, *inst.grid_r, "sum");
        return inst;
    }
    if (kind == "sym3d") {
        check_keys(doc, {"kind", "cone", "marginals"}, "sym3d instance");
        check_keys(m, {"sum"}, "marginals");
        return SymInstance{composition_field(m, "sum"), cone_field(doc), std::nullopt};
    }
    throw InstanceError("unknown kind \"" + kind + "\"");
}

TomographyInstance parse_instance(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InstanceError(std::string("malformed JSON: ") + e.what());
    }
    return parse_instance(doc);
}

json to_json(const Composition& c) { return c.parts(); }

json to_json(const TomographyInstance& inst) {
    return std::visit(
        [](const auto& v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, XRayInstance2D>) {
                return {{"kind", "2dxray"}, {"r", v.r}, {"marginals", {{"x", to_json(v.x)}, {"y", to_json(v.y)}, {"z", to_json(v.z)}}}};
            } else if constexpr (std::is_same_v<T, XRayInstance3D>) {
                return {{"kind", "3dxray"}, {"marginals", {{"x", to_json(v.x)}, {"y", to_json(v.y)}, {"z", to_json(v.z)}}}};
            } else {
                json out{{"kind", v.grid_r ? "sym2d" : "sym3d"}, {"cone", to_string(v.cone)}, {"marginals", {{"sum", to_json(v.marginal)}}}};
                if (v.grid_r) out["r"] = *v.grid_r;
                return out;
            }
        },
        inst);
}

json to_json(const PlethysmInstance& q) {
    return {{"variant", to_string(q.variant)}, {"lambda", to_json(q.lambda.composition())}, {"n", q.n}, {"m", q.m}};
}

json to_json(const KroneckerTriple& t) {
    return {{"mu", to_json(t.mu.composition())}, {"nu", to_json(t.nu.composition())}, {"rho", to_json(t.rho.composition())}};
}

json to_json(const PointSet& p) {
    json out = json::array();
    for (const auto& q : p) out.push_back({q.x, q.y, q.z});
    return out;
}

std::string kind_name(const TomographyInstance& inst) { return to_json(inst).at("kind").get<std::string>(); }

BigInt count(const TomographyInstance& inst, const CountOptions& opts) {
    return std::visit(
        [&](const auto& v) -> BigInt {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, XRayInstance2D>)
                return count_2dxray(v, opts);
            else if constexpr (std::is_same_v<T, XRayInstance3D>)
                return count_3dxray(v.x, v.y, v.z, opts);
            else
                return count(v, opts);
        },
        inst);
}

std::vector<PointSet> enumerate(const TomographyInstance& inst, std::size_t limit) {
    return std::visit(
        [&](const auto& v) -> std::vector<PointSet> {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, XRayInstance2D>)
                return enumerate_2dxray(v, limit);
            else if constexpr (std::is_same_v<T, XRayInstance3D>)
                throw std::invalid_argument("witness output is not available for 3dxray instances");
            else
                return enumerate_point_sets(v, limit);
        },
        inst);
}

}  // namespace plethysm
