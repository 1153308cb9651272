#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "kirchhoff/rod.hpp"

namespace kirchhoff {

namespace {

// Shortest decimal string that round-trips to the same double.
std::string format_double(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc()) throw NumericalError("format_double: to_chars failed");
  return std::string(buf, ptr);
}

double parse_double(const std::string& token, const char* context) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(),
                                   value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw InvalidInput(std::string(context) + ": bad number '" + token + "'");
  return value;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

void write_rod_text(const FramedDiscreteRod& rod, std::ostream& out) {
  for (const Vec3& p : rod.rod.points())
    out << format_double(p.x()) << ' ' << format_double(p.y()) << ' '
        << format_double(p.z()) << '\n';
  out << "#angles\n";
  for (double a : rod.angles) out << format_double(a) << '\n';
}

FramedDiscreteRod read_rod_text(std::istream& in) {
  std::vector<Vec3> points;
  std::vector<double> angles;
  bool in_angles = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(line);
    if (body.empty()) continue;
    if (body[0] == '#') {
      if (body == "#angles") in_angles = true;
      continue;  // other '#' lines are comments
    }
    std::istringstream fields(body);
    std::string a, b, c, extra;
    const std::string context = "rod text line " + std::to_string(line_no);
    if (!in_angles) {
      if (!(fields >> a >> b >> c) || (fields >> extra))
        throw InvalidInput(context + ": expected 'x y z'");
      points.emplace_back(parse_double(a, context.c_str()),
                          parse_double(b, context.c_str()),
                          parse_double(c, context.c_str()));
    } else {
      if (!(fields >> a) || (fields >> extra))
        throw InvalidInput(context + ": expected a single angle");
      angles.push_back(parse_double(a, context.c_str()));
    }
  }
  DiscreteRod rod(std::move(points));
  if (angles.empty()) angles.assign(rod.segment_count(), 0.0);
  return FramedDiscreteRod(std::move(rod), std::move(angles));
}

void write_rod_json(const FramedDiscreteRod& rod, std::ostream& out) {
  nlohmann::json doc;
  doc["points"] = nlohmann::json::array();
  for (const Vec3& p : rod.rod.points())
    doc["points"].push_back({p.x(), p.y(), p.z()});
  doc["angles"] = rod.angles;
  out << doc.dump(2) << '\n';
}

FramedDiscreteRod read_rod_json(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("rod json: parse error: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_array())
    throw InvalidInput("rod json: expected object with a 'points' array");
  std::vector<Vec3> points;
  for (const auto& entry : doc["points"]) {
    if (!entry.is_array() || entry.size() != 3)
      throw InvalidInput("rod json: each point must be an [x, y, z] triple");
    points.emplace_back(entry[0].get<double>(), entry[1].get<double>(),
                        entry[2].get<double>());
  }
  DiscreteRod rod(std::move(points));
  std::vector<double> angles;
  if (doc.contains("angles")) {
    if (!doc["angles"].is_array())
      throw InvalidInput("rod json: 'angles' must be an array");
    for (const auto& entry : doc["angles"]) angles.push_back(entry.get<double>());
  } else {
    angles.assign(rod.segment_count(), 0.0);
  }
  return FramedDiscreteRod(std::move(rod), std::move(angles));
}

namespace {

bool has_json_extension(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

}  // namespace

void save_rod(const FramedDiscreteRod& rod, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("save_rod: cannot open '" + path + "'");
  if (has_json_extension(path))
    write_rod_json(rod, out);
  else
    write_rod_text(rod, out);
  out.flush();
  if (!out) throw InvalidInput("save_rod: write to '" + path + "' failed");
}

FramedDiscreteRod load_rod(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("load_rod: cannot open '" + path + "'");
  return has_json_extension(path) ? read_rod_json(in) : read_rod_text(in);
}

}  // namespace kirchhoff
