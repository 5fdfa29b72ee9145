#pragma once

#include "k3walls/chains.hpp"
#include "k3walls/hbn.hpp"
#include "k3walls/stability.hpp"
#include "k3walls/strata.hpp"
#include "k3walls/tableaux.hpp"

#include <json.hpp>

#include <string>

namespace k3walls {

using Json = nlohmann::json;

// Integers fitting in 64 bits become JSON numbers, larger ones strings.
Json int_json(const Integer& n);
Json rational_json(const Rational& q);
Json slope_json(const Slope& s);

Json to_json(const MukaiVector& v);
Json to_json(const StabilityType& t);
Json to_json(const WallPoint& w);
Json to_json(const SplittingType& st);
Json to_json(const ChainSeries& c);
Json to_json(const Tableau& t);

MukaiVector vector_from_json(const Json& j);
StabilityType type_from_json(const Json& j);
SplittingType splitting_from_json(const Json& j);

// "r,x,y,s"
MukaiVector parse_vector(const std::string& s);
// JSON text such as "[[1,1],[0,1]]"
StabilityType parse_type(const std::string& s);

}  // namespace k3walls
