#include "sphereval/io.hpp"

#include "sphereval/errors.hpp"

#include <fstream>

namespace sphereval {

namespace {

template <class T>
T field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("profile JSON: missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception& e) {
        throw DomainError(std::string("profile JSON: bad field '") + key + "': " + e.what());
    }
}

std::optional<int> optional_i(const Json& j) {
    if (!j.contains("i") || j.at("i").is_null()) return std::nullopt;
    return field<int>(j, "i");
}

} // namespace

Json to_json(const ZonalProfile& p, std::optional<int> degree) {
    Json j;
    j["n"] = p.n;
    j["i"] = degree ? Json(*degree) : Json(nullptr);
    j["space"] = "sphere";
    j["parity"] = to_string(detect_parity(p.coeffs));
    j["coeffs"] = p.coeffs;
    return j;
}

Json to_json(const GrassProfile& p) {
    Json j;
    j["n"] = p.n;
    j["i"] = p.i;
    j["space"] = p.side == Side::Sphere ? "sphere" : "grassmannian";
    j["parity"] = "even";
    j["coeffs"] = p.coeffs;
    return j;
}

Json to_json(const ValuationRep& v) {
    Json j = v.kind == RepKind::Generating ? to_json(v.generating, v.i) : to_json(v.grass);
    j["rep"] = to_string(v.kind);
    return j;
}

ZonalProfile zonal_from_json(const Json& j) {
    if (field<std::string>(j, "space") != "sphere") throw DomainError("profile JSON: zonal profile needs space 'sphere'");
    ZonalProfile p = make_zonal(field<int>(j, "n"), field<std::vector<double>>(j, "coeffs"));
    if (j.contains("parity")) {
        const Parity declared = parity_from_string(field<std::string>(j, "parity"));
        if (declared != Parity::Mixed && detect_parity(p.coeffs) != declared)
            throw DomainError("profile JSON: coefficients contradict declared parity '" + to_string(declared) + "'");
    }
    return p;
}

GrassProfile grass_from_json(const Json& j) {
    GrassProfile p;
    p.n = field<int>(j, "n");
    const auto i = optional_i(j);
    if (!i) throw DomainError("profile JSON: Grassmannian profile needs an integer 'i'");
    p.i = *i;
    if (p.n < 3 || p.i < 1 || p.i > p.n - 1)
        throw DomainError("profile JSON: need n >= 3 and 1 <= i <= n-1, got n=" + std::to_string(p.n) +
                          " i=" + std::to_string(p.i));
    const auto space = field<std::string>(j, "space");
    if (space != "sphere" && space != "grassmannian")
        throw DomainError("profile JSON: space must be 'sphere' or 'grassmannian'");
    p.side = space == "sphere" ? Side::Sphere : Side::Grassmannian;
    p.coeffs = field<std::vector<double>>(j, "coeffs");
    if (p.coeffs.empty()) throw DomainError("profile JSON: empty coefficient list");
    return p;
}

ValuationRep valuation_from_json(const Json& j, RepKind kind, std::optional<int> degree) {
    if (j.contains("rep") && rep_from_string(field<std::string>(j, "rep")) != kind)
        throw DomainError("profile JSON: file holds a " + field<std::string>(j, "rep") + " profile, expected " +
                          to_string(kind));
    if (kind == RepKind::Generating) {
        auto i = optional_i(j);
        if (!i) i = degree;
        if (!i) throw DomainError("profile JSON: generating profile needs a degree ('i' field or --i)");
        if (degree && *degree != *i)
            throw DomainError("profile JSON: degree " + std::to_string(*i) + " in file differs from requested " +
                              std::to_string(*degree));
        return ValuationRep::from_generating(*i, zonal_from_json(j));
    }
    GrassProfile p = grass_from_json(j);
    if (degree && *degree != p.i)
        throw DomainError("profile JSON: degree " + std::to_string(p.i) + " in file differs from requested " +
                          std::to_string(*degree));
    return kind == RepKind::Crofton ? ValuationRep::from_crofton(p) : ValuationRep::from_klain(p);
}

std::vector<Vec> vertices_from_json(const Json& j) {
    const Json& arr = j.is_object() && j.contains("vertices") ? j.at("vertices") : j;
    if (!arr.is_array() || arr.empty()) throw DomainError("polytope JSON: expected a nonempty vertex array");
    std::vector<Vec> pts;
    for (const auto& row : arr) {
        const auto x = row.get<std::vector<double>>();
        if (!pts.empty() && static_cast<int>(x.size()) != pts.front().size())
            throw DomainError("polytope JSON: vertices differ in dimension");
        pts.push_back(Eigen::Map<const Vec>(x.data(), static_cast<Eigen::Index>(x.size())));
    }
    return pts;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw DomainError("'" + path + "': " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
}

} // namespace sphereval
