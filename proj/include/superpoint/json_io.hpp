#pragma once

#include <json.hpp>

#include "superpoint/derivation.hpp"
#include "superpoint/element.hpp"

namespace superpoint {

/// [{coeff: "p/q", even: [a1..an], odd: [i1..ik]}, ...] in canonical term order.
nlohmann::ordered_json element_to_json(const SuperElement& e);

/// {n, parity, degree (int or "mixed"), images_xi: [...], images_x: [...]}.
nlohmann::ordered_json derivation_to_json(const SuperDerivation& d);

}  // namespace superpoint
