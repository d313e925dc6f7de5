#include "cubecomb/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace cubecomb {

namespace {

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (!j.is_object()) throw ParseError(path + ": expected a JSON object");
  return j;
}

std::vector<std::string> string_list(const nlohmann::json& j,
                                     const std::string& key,
                                     const std::string& path,
                                     bool required = true) {
  if (!j.contains(key)) {
    if (required) throw ParseError(path + ": missing \"" + key + "\"");
    return {};
  }
  if (!j[key].is_array()) throw ParseError(path + ": \"" + key + "\" must be an array");
  std::vector<std::string> out;
  for (const auto& e : j[key]) {
    if (!e.is_string()) throw ParseError(path + ": \"" + key + "\" entries must be strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> pair_list(
    const nlohmann::json& j, const std::string& key, const std::string& path) {
  if (!j.contains(key)) throw ParseError(path + ": missing \"" + key + "\"");
  if (!j[key].is_array()) throw ParseError(path + ": \"" + key + "\" must be an array");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : j[key]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw ParseError(path + ": \"" + key +
                       "\" entries must be 2-element string lists");
    out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return out;
}

}  // namespace

ComplexFileData read_complex_file(const std::string& path) {
  auto j = read_json(path);
  ComplexFileData out;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError(path + ": \"name\" must be a string");
    out.name = j["name"].get<std::string>();
  }
  out.comments = string_list(j, "comments", path, /*required=*/false);
  out.vertices = string_list(j, "vertices", path);
  out.edges = pair_list(j, "edges", path);
  return out;
}

PocsetFileData read_pocset_file(const std::string& path) {
  auto j = read_json(path);
  PocsetFileData out;
  out.elements = string_list(j, "elements", path);
  out.involution = pair_list(j, "involution", path);
  out.order = pair_list(j, "order", path);
  return out;
}

Wallspace read_wall_file(const std::string& path) {
  auto j = read_json(path);
  Wallspace out;
  out.points = string_list(j, "points", path);
  if (!j.contains("walls") || !j["walls"].is_array())
    throw ParseError(path + ": missing \"walls\" array");
  for (const auto& w : j["walls"]) {
    if (!w.is_object())
      throw ParseError(path + ": wall entries must be objects");
    out.walls.emplace_back(string_list(w, "plus", path),
                           string_list(w, "minus", path));
  }
  return out;
}

SwitchFileData read_switch_file(const std::string& path) {
  auto j = read_json(path);
  SwitchFileData out;
  if (!j.contains("complex") || !j["complex"].is_string())
    throw ParseError(path + ": missing \"complex\" path");
  std::filesystem::path base = std::filesystem::path(path).parent_path();
  out.complex_path = (base / j["complex"].get<std::string>()).string();
  if (!j.contains("spacing") || !j["spacing"].is_number_integer() ||
      j["spacing"].get<int>() < 0)
    throw ParseError(path + ": \"spacing\" must be a non-negative integer");
  out.spacing = j["spacing"].get<int>();
  out.switches = pair_list(j, "switches", path);
  return out;
}

nlohmann::ordered_json complex_to_json(const CubeComplex& X,
                                       const std::string& name,
                                       const std::vector<std::string>& comments) {
  nlohmann::ordered_json j;
  if (!name.empty()) j["name"] = name;
  if (!comments.empty()) j["comments"] = comments;
  j["vertices"] = X.names();
  auto edges = nlohmann::ordered_json::array();
  for (const auto& [u, v] : X.edges())
    edges.push_back({X.name(u), X.name(v)});
  j["edges"] = std::move(edges);
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

}  // namespace cubecomb
