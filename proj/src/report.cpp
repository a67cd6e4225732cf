#include "superpoint/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace superpoint {

void Report::check(std::string name, bool pass, std::string detail) {
  checks.push_back(Check{std::move(name), pass, std::move(detail)});
}

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

std::string Report::to_text() const {
  std::ostringstream os;
  if (!title.empty()) os << title << "\n";
  os << "n = " << n;
  if (omega) os << "   omega = " << *omega;
  if (seed) os << "   seed = " << *seed;
  if (samples) os << "   samples = " << *samples;
  os << "\n";
  if (!layers.empty()) {
    os << std::setw(4) << "k" << std::setw(7) << "dimW" << std::setw(7) << "dimH"
       << std::setw(8) << "dimDH" << "\n";
    int tw = 0, th = 0, tdh = 0;
    bool all_h = true, all_dh = true;
    for (const auto& row : layers) {
      os << std::setw(4) << row.k << std::setw(7) << row.dim_w;
      if (row.dim_h)
        os << std::setw(7) << *row.dim_h;
      else
        os << std::setw(7) << "-";
      if (row.dim_dh)
        os << std::setw(8) << *row.dim_dh;
      else
        os << std::setw(8) << "-";
      os << "\n";
      tw += row.dim_w;
      all_h = all_h && row.dim_h.has_value();
      all_dh = all_dh && row.dim_dh.has_value();
      th += row.dim_h.value_or(0);
      tdh += row.dim_dh.value_or(0);
    }
    os << std::setw(4) << "all" << std::setw(7) << tw;
    if (all_h)
      os << std::setw(7) << th;
    else
      os << std::setw(7) << "-";
    if (all_dh)
      os << std::setw(8) << tdh;
    else
      os << std::setw(8) << "-";
    os << "\n";
  }
  for (const auto& c : checks) {
    os << (c.pass ? "[ ok ] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) os << " — " << c.detail;
    os << "\n";
  }
  for (const auto& note : notes) os << "note: " << note << "\n";
  if (!checks.empty()) os << "result: " << (passed() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  if (!title.empty()) j["title"] = title;
  j["n"] = n;
  if (omega) j["omega"] = *omega;
  if (seed) j["seed"] = *seed;
  if (samples) j["samples"] = *samples;
  j["layers"] = nlohmann::ordered_json::array();
  for (const auto& row : layers) {
    nlohmann::ordered_json r;
    r["k"] = row.k;
    r["dimW"] = row.dim_w;
    if (row.dim_h)
      r["dimH"] = *row.dim_h;
    else
      r["dimH"] = nullptr;
    if (row.dim_dh)
      r["dimDH"] = *row.dim_dh;
    else
      r["dimDH"] = nullptr;
    j["layers"].push_back(std::move(r));
  }
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json r;
    r["name"] = c.name;
    r["pass"] = c.pass;
    r["detail"] = c.detail;
    j["checks"].push_back(std::move(r));
  }
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

}  // namespace superpoint
