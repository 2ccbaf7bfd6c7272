#include "squeeze/json_io.hpp"

#include <cmath>
#include <fstream>

namespace squeeze {

using nlohmann::json;

namespace {

double exponent_from_json(const json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "inf") return kInfiniteExponent;
        throw ValidationError("exponent strings must be \"inf\"");
    }
    if (!j.is_number()) throw ValidationError("exponents must be numbers or \"inf\"");
    return j.get<double>();
}

json exponent_to_json(double m) {
    if (std::isinf(m)) return json("inf");
    return json(m);
}

template <typename T>
std::vector<T> array_field(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array())
        throw ValidationError(std::string("missing or non-array field \"") + key + "\"");
    return j.at(key).get<std::vector<T>>();
}

} // namespace

DomainSpec domain_from_json(const json& j) {
    if (!j.is_object() || !j.contains("type") || !j.at("type").is_string())
        throw ValidationError("domain spec must be an object with a \"type\" string");
    const std::string type = j.at("type").get<std::string>();

    if (type == "ball") {
        Ball b;
        b.dim = j.at("dim").get<int>();
        b.radius = j.at("radius").get<double>();
        return validate(DomainSpec(b));
    }
    if (type == "polydisk") {
        return validate(DomainSpec(Polydisk{array_field<double>(j, "radii")}));
    }
    if (type == "gen_ellipsoid") {
        GeneralizedEllipsoid e;
        e.block_dims = array_field<int>(j, "p");
        if (!j.contains("m") || !j.at("m").is_array())
            throw ValidationError("missing or non-array field \"m\"");
        for (const auto& m : j.at("m")) e.exponents.push_back(exponent_from_json(m));
        return validate(DomainSpec(e));
    }
    if (type == "weighted_power") {
        WeightedPowerDomain w;
        w.weights = array_field<double>(j, "c");
        w.powers = array_field<double>(j, "s");
        return validate(DomainSpec(w));
    }
    if (type == "product") {
        Product p;
        if (!j.contains("factors") || !j.at("factors").is_array())
            throw ValidationError("missing or non-array field \"factors\"");
        for (const auto& f : j.at("factors")) p.factors.push_back(domain_from_json(f));
        return validate(DomainSpec(std::move(p)));
    }
    if (type == "sublevel") {
        Sublevel s;
        s.base = std::make_shared<DomainSpec>(domain_from_json(j.at("base")));
        s.level = j.at("r").get<double>();
        s.d = DVector(array_field<int>(j, "d"));
        return validate(DomainSpec(std::move(s)));
    }
    throw ValidationError("unknown domain type: " + type);
}

json domain_to_json(const DomainSpec& spec) {
    json j;
    if (const auto* b = spec.get_if<Ball>()) {
        j["type"] = "ball";
        j["dim"] = b->dim;
        j["radius"] = b->radius;
    } else if (const auto* p = spec.get_if<Polydisk>()) {
        j["type"] = "polydisk";
        j["radii"] = p->radii;
    } else if (const auto* e = spec.get_if<GeneralizedEllipsoid>()) {
        j["type"] = "gen_ellipsoid";
        j["p"] = e->block_dims;
        j["m"] = json::array();
        for (double m : e->exponents) j["m"].push_back(exponent_to_json(m));
    } else if (const auto* w = spec.get_if<WeightedPowerDomain>()) {
        j["type"] = "weighted_power";
        j["c"] = w->weights;
        j["s"] = w->powers;
    } else if (const auto* pr = spec.get_if<Product>()) {
        j["type"] = "product";
        j["factors"] = json::array();
        for (const auto& f : pr->factors) j["factors"].push_back(domain_to_json(f));
    } else if (const auto* s = spec.get_if<Sublevel>()) {
        j["type"] = "sublevel";
        j["base"] = domain_to_json(*s->base);
        j["r"] = s->level;
        j["d"] = s->d.exponents();
    }
    return j;
}

Point point_from_json(const json& j) {
    if (!j.is_object() || !j.contains("coords") || !j.at("coords").is_array())
        throw ValidationError("point must be an object with a \"coords\" array");
    const auto& arr = j.at("coords");
    ComplexVector coords(arr.size());
    for (size_t i = 0; i < arr.size(); ++i) {
        const auto& c = arr[i];
        if (!c.is_array() || c.size() != 2 || !c[0].is_number() || !c[1].is_number())
            throw ValidationError("complex coordinates must be [re, im] pairs");
        coords[static_cast<Eigen::Index>(i)] = Complex(c[0].get<double>(), c[1].get<double>());
    }
    if (j.contains("block_sizes"))
        return Point(std::move(coords), j.at("block_sizes").get<std::vector<int>>());
    return Point(std::move(coords));
}

json point_to_json(const Point& z) {
    json j;
    j["coords"] = json::array();
    for (int i = 0; i < z.dim(); ++i)
        j["coords"].push_back({z.coords()[i].real(), z.coords()[i].imag()});
    if (z.block_sizes()) j["block_sizes"] = *z.block_sizes();
    return j;
}

namespace {

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw ValidationError("invalid JSON in " + path + ": " + e.what());
    }
    return j;
}

} // namespace

DomainSpec load_domain_file(const std::string& path) { return domain_from_json(load_json_file(path)); }

Point load_point_file(const std::string& path) { return point_from_json(load_json_file(path)); }

} // namespace squeeze
