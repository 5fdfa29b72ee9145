#include "k3walls/json_io.hpp"

#include <limits>
#include <sstream>

namespace k3walls {

Json int_json(const Integer& n)
{
    if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
        return n.convert_to<std::int64_t>();
    return n.str();
}

Json rational_json(const Rational& q) { return to_string(q); }

Json slope_json(const Slope& s) { return s.infinite ? Json("inf") : rational_json(s.value); }

Json to_json(const MukaiVector& v)
{
    return {{"r", int_json(v.r)}, {"x", int_json(v.x)}, {"y", int_json(v.y)}, {"s", int_json(v.s)}};
}

Json to_json(const StabilityType& t)
{
    Json out = Json::array();
    for (const auto& p : t) out.push_back({p.e, p.m});
    return out;
}

Json to_json(const WallPoint& w)
{
    Json out{{"w", rational_json(w.w)}, {"destabilizer", to_json(w.destabilizer)}, {"kind", wall_kind_name(w.kind)}};
    if (w.e) out["e"] = int_json(*w.e);
    return out;
}

Json to_json(const SplittingType& st)
{
    Json out = Json::array();
    for (const auto& p : st) out.push_back({int_json(p.f), int_json(p.n)});
    return out;
}

Json to_json(const ChainSeries& c)
{
    Json comps = Json::array();
    for (const auto& comp : c.components)
        comps.push_back({{"a", comp.a}, {"in", comp.in}, {"out", comp.out}, {"adj_rho", int_json(comp.adj_rho)}});
    return {{"components", comps}};
}

Json to_json(const Tableau& t) { return Json(t); }

static Integer json_integer(const Json& j, const char* what)
{
    if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    if (j.is_string()) return parse_integer(j.get<std::string>());
    throw Error("invalid_argument", std::string("expected an integer for ") + what);
}

MukaiVector vector_from_json(const Json& j)
{
    if (!j.is_object()) throw Error("invalid_argument", "Mukai vector must be an object");
    for (const char* key : {"r", "x", "y", "s"})
        if (!j.contains(key)) throw Error("invalid_argument", std::string("Mukai vector lacks '") + key + "'");
    return {json_integer(j["r"], "r"), json_integer(j["x"], "x"), json_integer(j["y"], "y"), json_integer(j["s"], "s")};
}

StabilityType type_from_json(const Json& j)
{
    if (!j.is_array()) throw Error("invalid_argument", "stability type must be an array of [e,m] pairs");
    StabilityType t;
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() || !p[1].is_number_integer())
            throw Error("invalid_argument", "stability type entries must be [e,m] integer pairs");
        t.push_back({p[0].get<int>(), p[1].get<int>()});
    }
    return t;
}

SplittingType splitting_from_json(const Json& j)
{
    if (!j.is_array()) throw Error("invalid_argument", "splitting type must be an array of [f,n] pairs");
    SplittingType st;
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 2) throw Error("invalid_argument", "splitting entries must be [f,n] pairs");
        st.push_back({json_integer(p[0], "f"), json_integer(p[1], "n")});
    }
    return st;
}

MukaiVector parse_vector(const std::string& s)
{
    std::vector<Integer> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(parse_integer(item));
    if (parts.size() != 4 || (!s.empty() && s.back() == ','))
        throw Error("invalid_argument", "vector must be 'r,x,y,s', got '" + s + "'");
    return {parts[0], parts[1], parts[2], parts[3]};
}

StabilityType parse_type(const std::string& s)
{
    Json j;
    try {
        j = Json::parse(s);
    } catch (const Json::parse_error& e) {
        throw Error("invalid_argument", std::string("type is not valid JSON: ") + e.what());
    }
    return type_from_json(j);
}

}  // namespace k3walls
