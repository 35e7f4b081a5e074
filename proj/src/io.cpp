#include "legcirc/io.hpp"

#include "legcirc/error.hpp"

#include <fstream>
#include <sstream>

namespace legcirc {

namespace {

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorCode::Parse, where + ": missing field \"" + key + "\"");
  return j.at(key);
}

const json& array_of(const json& j, std::size_t size, const std::string& where) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, where + ": expected an array");
  if (size != 0 && j.size() != size)
    throw Error(ErrorCode::Parse, where + ": expected " + std::to_string(size) + " entries, got " +
                                      std::to_string(j.size()));
  return j;
}

}  // namespace

Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (!j.is_string()) throw Error(ErrorCode::Parse, where + ": expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    throw Error(ErrorCode::Parse, where + ": " + e.what());
  }
}

json rational_to_json(const Rational& q) { return to_string(q); }

Vec4 vec_from_json(const json& j, const std::string& where) {
  array_of(j, 4, where);
  Vec4 v;
  for (std::size_t i = 0; i < 4; ++i) v[i] = rational_from_json(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

json vec_to_json(const Vec4& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(rational_to_json(x));
  return out;
}

LegendrianPolygon polygon_from_json(const json& j) {
  const json& s = field(j, "sign", "polygon");
  if (!s.is_string() || (s != "+" && s != "-")) throw Error(ErrorCode::Parse, "polygon.sign: expected \"+\" or \"-\"");
  const json& vs = array_of(field(j, "vertices", "polygon"), 0, "polygon.vertices");
  std::vector<Vec4> vertices;
  for (std::size_t i = 0; i < vs.size(); ++i)
    vertices.push_back(vec_from_json(vs[i], "polygon.vertices[" + std::to_string(i) + "]"));
  return LegendrianPolygon(std::move(vertices), s == "+" ? 1 : -1);
}

json polygon_to_json(const LegendrianPolygon& p) {
  json vs = json::array();
  for (const auto& v : p.vertices()) vs.push_back(vec_to_json(v));
  return json{{"sign", p.closing_sign() > 0 ? "+" : "-"}, {"vertices", vs}};
}

FlagTuple flags_from_json(const json& j) {
  const json& fs = array_of(field(j, "flags", "document"), 0, "flags");
  FlagTuple out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const std::string where = "flags[" + std::to_string(i) + "]";
    array_of(fs[i], 2, where);
    out.emplace_back(vec_from_json(fs[i][0], where + "[0]"), vec_from_json(fs[i][1], where + "[1]"));
  }
  return out;
}

json flags_to_json(const FlagTuple& t) {
  json fs = json::array();
  for (const auto& f : t) fs.push_back(json::array({vec_to_json(f.f1()), vec_to_json(f.f2())}));
  return json{{"flags", fs}};
}

std::vector<CoorientedCircle> circles_from_json(const json& j) {
  const json& cs = array_of(field(j, "circles", "document"), 0, "circles");
  std::vector<CoorientedCircle> out;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const std::string where = "circles[" + std::to_string(i) + "]";
    const json& c = cs[i];
    if (c.is_object() && c.contains("lagrangian")) {
      const json& l = array_of(c.at("lagrangian"), 2, where + ".lagrangian");
      out.push_back(lagrangian_to_circle(
          Lagrangian(vec_from_json(l[0], where + ".lagrangian[0]"), vec_from_json(l[1], where + ".lagrangian[1]"))));
    } else {
      const json& center = array_of(field(c, "center", where), 2, where + ".center");
      const Rational a = rational_from_json(center[0], where + ".center[0]");
      const Rational b = rational_from_json(center[1], where + ".center[1]");
      const Rational r = rational_from_json(field(c, "radius", where), where + ".radius");
      out.push_back(lagrangian_to_circle(circle_to_lagrangian(a, b, r)));
    }
  }
  return out;
}

json circles_to_json(const std::vector<CoorientedCircle>& cs) {
  json arr = json::array();
  for (const auto& c : cs) {
    if (c.is_circle()) {
      arr.push_back(json{{"center", json::array({rational_to_json(c.a), rational_to_json(c.b)})},
                         {"radius", rational_to_json(c.c)}});
    } else {
      arr.push_back(json{{"lagrangian", json::array({vec_to_json(c.lagrangian.u()), vec_to_json(c.lagrangian.v())})}});
    }
  }
  return json{{"circles", arr}};
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json read_json_file(const std::string& path) {
  try {
    return parse_json(read_text_file(path));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Parse) throw Error(ErrorCode::Parse, path + ": " + e.what());
    throw;
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace legcirc
