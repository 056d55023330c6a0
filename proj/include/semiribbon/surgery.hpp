#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "semiribbon/oriented_map.hpp"

namespace semiribbon {

// Forward darts e_1..e_k with head(e_i) = tail(e_{i+1}), all tails distinct.
struct DirectedCycle {
    std::vector<Dart> edges;
    bool operator==(const DirectedCycle&) const = default;
};

// Checks simplicity and closure; throws PreconditionError otherwise.
DirectedCycle make_cycle(const OrientedMap& map, std::vector<Dart> forward_darts);

// Same cycle, rotated to start at its least dart.
DirectedCycle normalized(DirectedCycle c);

DirectedCycle find_simple_directed_cycle(const OrientedMap& map);

// Every simple directed cycle once, each starting at its least dart.
std::vector<DirectedCycle> simple_directed_cycles(const OrientedMap& map);

struct SurgeryReport {
    OrientedMap result;
    std::size_t components_before = 0;
    std::size_t components_after = 0;
    std::vector<ComponentGenus> genus_before;
    std::vector<ComponentGenus> genus_after;
    std::vector<Dart> new_punctures;  // cut: faces C1, C2; paste: the glued cycle's first edge
    std::vector<Dart> dart_map;       // old dart -> dart in result, kNoDart when removed
    std::vector<Dart> left_copy;      // cut: copy C1 (original ids); paste: glued cycle
    std::vector<Dart> right_copy;     // cut: copy C2 (new darts)
};

SurgeryReport cut_along_cycle(const OrientedMap& map, const DirectedCycle& cycle);

// Glues an all-forward hole face to an all-backward hole face.  The matching
// pairs forward darts of the two boundary cycles; empty means least-dart alignment.
SurgeryReport paste(const OrientedMap& map, Dart puncture_a, Dart puncture_b,
                    const std::vector<std::pair<Dart, Dart>>& matching = {});

bool is_separating(const OrientedMap& map, const DirectedCycle& cycle);

struct EmptyGraphOnSphere {
    unsigned extra_genus = 0;  // residual decorations of the surrounding face
    unsigned punctures = 0;
};

struct ShrinkReport {
    std::variant<OrientedMap, EmptyGraphOnSphere> result;
    std::vector<Dart> dart_map;
    std::vector<Dart> boundary;  // face walk that was shrunk

    bool empty() const { return std::holds_alternative<EmptyGraphOnSphere>(result); }
    const OrientedMap& map() const { return std::get<OrientedMap>(result); }
};

ShrinkReport shrink_disk_face(const OrientedMap& map, Dart face);

// True when the face walk is a simple directed cycle (either direction).
bool is_simple_cycle_face(const OrientedMap& map, Dart face);

struct MinimizeReport {
    OrientedMap result;
    std::vector<Dart> dart_map;
    std::size_t suppressed = 0;
};

MinimizeReport minimize_report(const OrientedMap& map);
OrientedMap minimize(const OrientedMap& map);

OrientedMap detach(const OrientedMap& map, Dart vertex, Dart sector_a, Dart sector_b);

}  // namespace semiribbon
