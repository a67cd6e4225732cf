#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace superpoint {

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct LayerRow {
  int k = 0;
  int dim_w = 0;
  std::optional<int> dim_h;
  std::optional<int> dim_dh;
};

/// Shared result type for dimension tables and verification runs. Rendered as
/// aligned text or as JSON with the stable key order
/// {title, n, omega, seed, samples, layers, checks, notes}.
struct Report {
  std::string title;
  int n = 0;
  std::optional<std::string> omega;
  std::optional<std::uint64_t> seed;
  std::optional<int> samples;
  std::vector<LayerRow> layers;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  void check(std::string name, bool pass, std::string detail = "");
  bool passed() const;

  std::string to_text() const;
  nlohmann::ordered_json to_json() const;
};

}  // namespace superpoint
