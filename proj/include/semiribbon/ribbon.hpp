#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semiribbon/oriented_map.hpp"

namespace semiribbon {

enum class SectorStatus { Oriented, NonOriented };

struct Sector {
    Dart at_dart;  // wedge from at_dart to sigma(at_dart)
    SectorStatus status;
};

std::vector<Sector> sector_list(const OrientedMap& map);
SectorStatus sector_status(const OrientedMap& map, Dart d);

struct HyperbolicityReport {
    bool hyperbolic = true;
    std::optional<Dart> violating_vertex;  // least dart of the first bad vertex
};

HyperbolicityReport is_hyperbolic(const OrientedMap& map);

enum class Orientation { S, Sop };

struct SmoothBoundaryTrace {
    std::vector<std::vector<Dart>> orbits;  // forward darts, each orbit from its least dart
    Orientation orientation_used = Orientation::S;
};

// S: tau(d) = sigma^-1(alpha(d)); Sop: sigma(alpha(d)).  Throws
// PreconditionError("not_hyperbolic") on non-hyperbolic input.
SmoothBoundaryTrace trace_smooth_boundary(const OrientedMap& map, Orientation o = Orientation::S);
Dart tau(const OrientedMap& map, Dart d, Orientation o = Orientation::S);

enum class SemiRibbonStatus { InS, InSop, PreOnly, NotHyperbolic };

struct SemiRibbonResult {
    SemiRibbonStatus status = SemiRibbonStatus::NotHyperbolic;
    std::optional<SmoothBoundaryTrace> trace;     // orientation S
    std::optional<SmoothBoundaryTrace> trace_op;  // orientation Sop
    std::optional<Dart> violating_vertex;

    bool semi_ribbon() const { return status == SemiRibbonStatus::InS || status == SemiRibbonStatus::InSop; }
    const SmoothBoundaryTrace* witness() const;
};

SemiRibbonResult has_semi_ribbon(const OrientedMap& map);

// Forward darts of the single boundary orbit, starting at the least one.
std::vector<Dart> eulerian_path_from_semi_ribbon(const OrientedMap& map);

std::string to_string(SectorStatus s);
std::string to_string(Orientation o);
std::string to_string(SemiRibbonStatus s);

}  // namespace semiribbon
