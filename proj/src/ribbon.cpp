#include "semiribbon/ribbon.hpp"

#include "semiribbon/errors.hpp"

namespace semiribbon {

SectorStatus sector_status(const OrientedMap& map, Dart d) {
    bool out = map.is_forward(d);
    bool next_in = map.is_forward(map.alpha(map.sigma(d)));
    return out && next_in ? SectorStatus::Oriented : SectorStatus::NonOriented;
}

std::vector<Sector> sector_list(const OrientedMap& map) {
    std::vector<Sector> out;
    for (Dart d = 0; d < map.dart_count(); ++d) out.push_back({d, sector_status(map, d)});
    return out;
}

HyperbolicityReport is_hyperbolic(const OrientedMap& map) {
    auto vrep = vertex_reps(map);
    for (Dart d = 0; d < map.dart_count(); ++d) {
        // consecutive darts must differ in direction
        if (map.is_forward(d) == map.is_forward(map.sigma(d))) return {false, vrep[d]};
    }
    return {true, std::nullopt};
}

Dart tau(const OrientedMap& map, Dart d, Orientation o) {
    return o == Orientation::S ? map.sigma_inv(map.alpha(d)) : map.sigma(map.alpha(d));
}

SmoothBoundaryTrace trace_smooth_boundary(const OrientedMap& map, Orientation o) {
    auto h = is_hyperbolic(map);
    if (!h.hyperbolic)
        throw PreconditionError("not_hyperbolic", "no pre-semi-ribbon: vertex " + std::to_string(*h.violating_vertex) +
                                                      " does not alternate");
    SmoothBoundaryTrace t;
    t.orientation_used = o;
    std::vector<bool> seen(map.dart_count(), false);
    for (Dart d = 0; d < map.dart_count(); ++d) {
        if (!map.is_forward(d) || seen[d]) continue;
        auto& orb = t.orbits.emplace_back();
        Dart x = d;
        do {
            seen[x] = true;
            orb.push_back(x);
            x = tau(map, x, o);
            if (!map.is_forward(x))
                throw ContradictionError("alternation_closure", "trace left the forward darts at " + std::to_string(x));
        } while (x != d);
    }
    return t;
}

const SmoothBoundaryTrace* SemiRibbonResult::witness() const {
    if (status == SemiRibbonStatus::InS) return &*trace;
    if (status == SemiRibbonStatus::InSop) return &*trace_op;
    return nullptr;
}

SemiRibbonResult has_semi_ribbon(const OrientedMap& map) {
    SemiRibbonResult r;
    auto h = is_hyperbolic(map);
    if (!h.hyperbolic) {
        r.violating_vertex = h.violating_vertex;
        return r;
    }
    r.trace = trace_smooth_boundary(map, Orientation::S);
    r.trace_op = trace_smooth_boundary(map, Orientation::Sop);
    if (r.trace->orbits.size() == 1)
        r.status = SemiRibbonStatus::InS;
    else if (r.trace_op->orbits.size() == 1)
        r.status = SemiRibbonStatus::InSop;
    else
        r.status = SemiRibbonStatus::PreOnly;
    return r;
}

std::vector<Dart> eulerian_path_from_semi_ribbon(const OrientedMap& map) {
    auto r = has_semi_ribbon(map);
    if (!r.semi_ribbon())
        throw PreconditionError(r.status == SemiRibbonStatus::PreOnly ? "pre_only" : "not_hyperbolic",
                                "map carries no semi-ribbon graph (" + to_string(r.status) + ")");
    return r.witness()->orbits.front();
}

std::string to_string(SectorStatus s) { return s == SectorStatus::Oriented ? "oriented" : "non_oriented"; }

std::string to_string(Orientation o) { return o == Orientation::S ? "S" : "S_op"; }

std::string to_string(SemiRibbonStatus s) {
    switch (s) {
        case SemiRibbonStatus::InS: return "InS";
        case SemiRibbonStatus::InSop: return "InSop";
        case SemiRibbonStatus::PreOnly: return "PreOnly";
        case SemiRibbonStatus::NotHyperbolic: return "NotHyperbolic";
    }
    return "?";
}

}  // namespace semiribbon
