#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "arboreal/dynamics.hpp"

namespace arboreal {

// Text form of a quadratic map and optional base point:
//   P: c0 c1 c2
//   Q: c0 c1 c2
//   x0: s t
// Blank lines and lines starting with '#' are ignored.
struct MapSpec {
    BForm<Rat> P;
    BForm<Rat> Q;
    std::optional<ProjPoint<Rat>> x0;
};

MapSpec parse_map_spec(std::string_view text);
std::string format_map_spec(const MapSpec& spec);

}  // namespace arboreal
