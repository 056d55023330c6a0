#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semiribbon/oriented_map.hpp"

namespace semiribbon::fixtures {

OrientedMap loop1();
OrientedMap loop2();
OrientedMap eight();
OrientedMap torus();
OrientedMap theta2();

// Directed triangle on the sphere.
OrientedMap triangle();
// Path a -> b -> c; no directed cycle.
OrientedMap path3();
// Triangle with a directed 2-cycle hanging off one corner.
OrientedMap triangle_with_pendant();
// Three loops at one vertex, pairwise crossing as a and b do on a torus.
OrientedMap crossed_bouquet();

std::optional<OrientedMap> by_name(const std::string& name);
std::vector<std::string> names();

}  // namespace semiribbon::fixtures
