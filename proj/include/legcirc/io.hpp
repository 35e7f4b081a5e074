#pragma once

#include "legcirc/circles.hpp"
#include "legcirc/flags.hpp"
#include "legcirc/polygon.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace legcirc {

using json = nlohmann::json;

// Rationals are "p/q" or integer strings; JSON integers are also accepted.
Rational rational_from_json(const json& j, const std::string& where);
json rational_to_json(const Rational& q);
Vec4 vec_from_json(const json& j, const std::string& where);
json vec_to_json(const Vec4& v);

// { "sign": "+"|"-", "vertices": [[4 rationals], ...] }
LegendrianPolygon polygon_from_json(const json& j);
json polygon_to_json(const LegendrianPolygon& p);

// { "flags": [ [[f₁],[f₂]], ... ] }
FlagTuple flags_from_json(const json& j);
json flags_to_json(const FlagTuple& t);

// { "circles": [ {"center":[a,b], "radius":c} | {"lagrangian":[[4],[4]]}, ... ] }
std::vector<CoorientedCircle> circles_from_json(const json& j);
json circles_to_json(const std::vector<CoorientedCircle>& cs);

// Throws Error(Parse) with the parser's position, Error(Io) on file errors.
json parse_json(const std::string& text);
json read_json_file(const std::string& path);
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

// Pretty-printed with a trailing newline; key order is fixed.
std::string dump(const json& j);

}  // namespace legcirc
