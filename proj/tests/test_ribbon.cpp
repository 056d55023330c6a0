#include <doctest.h>

#include <set>

#include "semiribbon/enumerate.hpp"
#include "semiribbon/errors.hpp"
#include "semiribbon/fixtures.hpp"
#include "semiribbon/ribbon.hpp"

using namespace semiribbon;
namespace fx = semiribbon::fixtures;

using Orbits = std::vector<std::vector<Dart>>;

TEST_CASE("sector list") {
    auto l2 = sector_list(fx::loop2());
    REQUIRE(l2.size() == 4);
    // only the wedges leaving along an out-dart are oriented
    for (const auto& s : l2)
        CHECK(s.status == (s.at_dart % 2 == 0 ? SectorStatus::Oriented : SectorStatus::NonOriented));

    auto e = sector_list(fx::eight());
    REQUIRE(e.size() == 4);
    CHECK(e[0].status == SectorStatus::Oriented);
    CHECK(e[1].status == SectorStatus::NonOriented);
    CHECK(e[2].status == SectorStatus::Oriented);
    CHECK(e[3].status == SectorStatus::NonOriented);

    CHECK(sector_status(fx::torus(), 0) == SectorStatus::NonOriented);
    CHECK(sector_list(fx::theta2()).size() == 8);
}

TEST_CASE("hyperbolicity") {
    CHECK(is_hyperbolic(fx::theta2()).hyperbolic);
    auto t = is_hyperbolic(fx::torus());
    CHECK_FALSE(t.hyperbolic);
    CHECK(t.violating_vertex == Dart{0});
    CHECK(is_hyperbolic(fx::loop1()).hyperbolic);
    CHECK_FALSE(is_hyperbolic(fx::path3()).hyperbolic);
    CHECK(is_hyperbolic(fx::path3()).violating_vertex == Dart{0});
}

TEST_CASE("smooth boundary trace") {
    CHECK(trace_smooth_boundary(fx::loop2()).orbits == Orbits{{0, 2}});
    CHECK(trace_smooth_boundary(fx::eight()).orbits == Orbits{{0}, {2}});
    CHECK(trace_smooth_boundary(fx::theta2()).orbits == Orbits{{0, 6}, {2, 4}});
    CHECK(trace_smooth_boundary(fx::theta2(), Orientation::Sop).orbits == Orbits{{0, 2}, {4, 6}});
    CHECK(trace_smooth_boundary(fx::eight(), Orientation::Sop).orbits == Orbits{{0, 2}});
    CHECK(trace_smooth_boundary(fx::eight(), Orientation::Sop).orientation_used == Orientation::Sop);
    try {
        trace_smooth_boundary(fx::torus());
        FAIL("expected an error");
    } catch (const PreconditionError& e) {
        CHECK(e.reason() == "not_hyperbolic");
    }
}

TEST_CASE("semi-ribbon status") {
    CHECK(has_semi_ribbon(fx::eight()).status == SemiRibbonStatus::InSop);
    auto th = has_semi_ribbon(fx::theta2());
    CHECK(th.status == SemiRibbonStatus::PreOnly);
    CHECK(th.trace->orbits.size() == 2);
    CHECK(th.trace_op->orbits.size() == 2);
    CHECK(th.witness() == nullptr);
    CHECK(has_semi_ribbon(fx::torus()).status == SemiRibbonStatus::NotHyperbolic);
    CHECK(has_semi_ribbon(fx::loop1()).status == SemiRibbonStatus::InS);
    CHECK(has_semi_ribbon(fx::loop2()).status == SemiRibbonStatus::InS);
    CHECK(has_semi_ribbon(reverse_orientation(fx::eight())).status == SemiRibbonStatus::InS);
}

TEST_CASE("Eulerian path from the semi-ribbon") {
    CHECK(eulerian_path_from_semi_ribbon(fx::loop2()) == std::vector<Dart>{0, 2});
    CHECK(eulerian_path_from_semi_ribbon(fx::loop1()) == std::vector<Dart>{0});
    CHECK(eulerian_path_from_semi_ribbon(fx::eight()) == std::vector<Dart>{0, 2});
    CHECK_THROWS_AS(eulerian_path_from_semi_ribbon(fx::theta2()), PreconditionError);
    CHECK_THROWS_AS(eulerian_path_from_semi_ribbon(fx::torus()), PreconditionError);
}

TEST_CASE("semi-ribbon maps are connected") {
    auto two = disjoint_union(fx::loop1(), fx::loop1());
    CHECK(is_hyperbolic(two).hyperbolic);
    CHECK(has_semi_ribbon(two).status == SemiRibbonStatus::PreOnly);
}

TEST_CASE("trace properties over the enumeration") {
    EnumerationOptions o;
    o.max_edges = 5;
    std::size_t hyperbolic = 0;
    enumerate_maps(o, [&](const OrientedMap& m) {
        bool h = is_hyperbolic(m).hyperbolic;
        if (!h) {
            CHECK_THROWS_AS(trace_smooth_boundary(m), PreconditionError);
            return;
        }
        ++hyperbolic;
        auto vrep = vertex_reps(m);
        for (auto orient : {Orientation::S, Orientation::Sop}) {
            auto t = trace_smooth_boundary(m, orient);
            std::multiset<Dart> seen;
            for (const auto& orb : t.orbits) {
                seen.insert(orb.begin(), orb.end());
                for (std::size_t i = 0; i < orb.size(); ++i) {
                    Dart next = orb[(i + 1) % orb.size()];
                    CHECK(vrep[m.alpha(orb[i])] == vrep[next]);
                }
            }
            std::size_t fwd = 0;
            for (Dart d = 0; d < m.dart_count(); ++d)
                if (m.is_forward(d)) {
                    ++fwd;
                    CHECK(seen.count(d) == 1);
                }
            CHECK(seen.size() == fwd);
        }
        // each oriented sector is crossed by exactly one transition
        std::multiset<Dart> crossed;
        for (Dart d = 0; d < m.dart_count(); ++d)
            if (m.is_forward(d)) crossed.insert(tau(m, d));
        for (const auto& s : sector_list(m))
            CHECK(crossed.count(s.at_dart) == (s.status == SectorStatus::Oriented ? 1u : 0u));
    });
    CHECK(hyperbolic > 0);
}
