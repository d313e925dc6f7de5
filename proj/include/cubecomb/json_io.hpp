#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cubecomb/complex.hpp"
#include "cubecomb/duality.hpp"

namespace cubecomb {

/// Malformed or unreadable input (CLI exit code 2), as opposed to a domain
/// Error (exit code 1).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ComplexFileData {
  std::string name;
  std::vector<std::string> comments;
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
};

struct PocsetFileData {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> involution;
  std::vector<std::pair<std::string, std::string>> order;
};

struct SwitchFileData {
  std::string complex_path;  // resolved relative to the switch file
  int spacing = 0;
  std::vector<std::pair<std::string, std::string>> switches;  // hyperplane ids
};

ComplexFileData read_complex_file(const std::string& path);
PocsetFileData read_pocset_file(const std::string& path);
Wallspace read_wall_file(const std::string& path);
SwitchFileData read_switch_file(const std::string& path);

/// Canonical fixed-key-order serialization; feeds back into
/// read_complex_file unchanged.
nlohmann::ordered_json complex_to_json(const CubeComplex& X,
                                       const std::string& name,
                                       const std::vector<std::string>& comments = {});

void write_text_file(const std::string& path, const std::string& text);

}  // namespace cubecomb
