#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "semiribbon/oriented_map.hpp"
#include "semiribbon/ribbon.hpp"

namespace semiribbon {

inline constexpr std::size_t kDefaultEdgeBound = 6;

struct EnumerationOptions {
    std::size_t max_edges = 3;
    std::size_t min_edges = 1;
    bool hyperbolic_only = false;
    std::optional<unsigned> genus_min, genus_max;
    std::size_t bound = kDefaultEdgeBound;
};

// Every connected undecorated map with min..max edges, once per isomorphism
// class, in increasing edge count.  Throws PreconditionError past the bound.
void enumerate_maps(const EnumerationOptions& opts, const std::function<void(const OrientedMap&)>& sink);
std::vector<OrientedMap> enumerate_maps(const EnumerationOptions& opts);

struct Violation {
    std::string kind;
    std::string detail;
    std::string map;  // serialized
};

struct VerifyReport {
    // (edges, genus, status) -> count
    std::map<std::tuple<std::size_t, unsigned, std::string>, std::size_t> table;
    std::size_t maps = 0;
    std::size_t hyperbolic = 0;
    std::size_t non_hyperbolic = 0;
    std::size_t semi_ribbon = 0;
    std::vector<Violation> violations;
};

class TheoremVerifier {
public:
    void check(const OrientedMap& map);
    const VerifyReport& report() const { return report_; }

private:
    VerifyReport report_;
};

VerifyReport verify_theorem(std::size_t max_edges, std::size_t bound = kDefaultEdgeBound);

// Distinct full Eulerian paths seen as single boundary orbits, both orientations.
std::vector<std::vector<Dart>> semi_ribbon_paths(const OrientedMap& map);

}  // namespace semiribbon
