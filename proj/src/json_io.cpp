#include "superpoint/json_io.hpp"

namespace superpoint {

nlohmann::ordered_json element_to_json(const SuperElement& e) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& [m, c] : e.terms()) {
    nlohmann::ordered_json term;
    term["coeff"] = rational_text(c);
    term["even"] = m.even;
    term["odd"] = m.odd_indices();
    out.push_back(std::move(term));
  }
  return out;
}

nlohmann::ordered_json derivation_to_json(const SuperDerivation& d) {
  nlohmann::ordered_json out;
  out["n"] = d.n();
  if (auto p = d.parity())
    out["parity"] = *p;
  else
    out["parity"] = "mixed";
  if (auto k = d.z_degree())
    out["degree"] = *k;
  else
    out["degree"] = "mixed";
  out["images_xi"] = nlohmann::ordered_json::array();
  for (const auto& img : d.images_xi()) out["images_xi"].push_back(element_to_json(img));
  out["images_x"] = nlohmann::ordered_json::array();
  for (const auto& img : d.images_x()) out["images_x"].push_back(element_to_json(img));
  return out;
}

}  // namespace superpoint
