#pragma once

#include <cstdint>
#include <vector>

#include "semiribbon/oriented_map.hpp"

namespace semiribbon {

struct CanonicalForm {
    OrientedMap map;                          // relabeled, labels dropped
    std::vector<Dart> relabeling;             // old dart -> canonical dart
    std::vector<std::uint32_t> certificate;   // equal iff isomorphic
};

// Breadth-first relabeling from `root`: darts are numbered in discovery
// order, each processed dart exposing alpha then sigma.  Returns old -> new.
std::vector<Dart> bfs_relabeling(const OrientedMap& map, Dart root);

// Throws PreconditionError on disconnected input.
CanonicalForm canonical_form(const OrientedMap& map);

bool isomorphic(const OrientedMap& a, const OrientedMap& b);

}  // namespace semiribbon
