#pragma once

#include "schottky/bounds.hpp"
#include "schottky/construction.hpp"
#include "schottky/geometry.hpp"
#include "schottky/schottky_system.hpp"

#include <json.hpp>

namespace schottky {

// Insertion-ordered so reports are byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);             // "p/q"
Json to_json(const AlgebraicPoint& x);       // {"base","coeff","radicand"}
Json to_json(const BoundaryPoint& x);        // "inf" or AlgebraicPoint object
Json to_json(const Semicircle& c);           // {"p","q"} (+ "interior" for lines)
Json to_json(const MobiusMap& g);            // [[a,b],[c,d]]
Json to_json(const GapInterval& gap);
Json to_json(const OrbitEntry& entry);
Json to_json(const ClassicalVerdict& verdict);
Json to_json(const BoundReport& report);
Json real_to_json(const Real& x, unsigned digits);

// Inverses; throw DomainError on malformed input.
Rational rational_from_json(const Json& j);
AlgebraicPoint algebraic_from_json(const Json& j);
BoundaryPoint boundary_from_json(const Json& j);
Semicircle semicircle_from_json(const Json& j);

// One JSON document per line, no trailing whitespace.
std::string orbit_jsonl(const std::vector<OrbitEntry>& entries);

}  // namespace schottky
