// JSON wire formats: rationals as "p/q" strings, polygons as edge lists,
// regions as vertex lists, domains as tagged records.
#pragma once

#include <ech/lattice.hpp>
#include <ech/rational.hpp>
#include <ech/rational_polygon.hpp>
#include <ech/t3.hpp>
#include <ech/theta.hpp>
#include <ech/toric_domain.hpp>

#include <json.hpp>

#include <string>

namespace ech {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const Theta& t);
Theta theta_from_json(const Json& j);

// {"edges":[{"x":..,"y":..},...]}; a point polygon has an empty list.
Json to_json(const LatticePolygon& p);
LatticePolygon polygon_from_json(const Json& j);

// {"edges":[{"x":..,"y":..,"label":"e|h"},...]}.
Json to_json(const t3::Generator& g);
t3::Generator generator_from_json(const Json& j);

// {"vertices":[["p/q","r/s"],...]}.
Json to_json(const RationalPolygon& p);
RationalPolygon rational_polygon_from_json(const Json& j);

Json to_json(const ToricDomain& d);
ToricDomain domain_from_json(const Json& j);

// Compact domain grammar for the command line: E(a,b), P(a,b), B(a), or
// @path to a domain JSON file.
ToricDomain parse_domain_spec(const std::string& text);

// Decimal rendering to 12 significant digits, for the CSV column that sits
// next to the exact "p/q" one.
std::string decimal12(const Rational& r);

}  // namespace ech
