#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "semiribbon/canonical.hpp"
#include "semiribbon/enumerate.hpp"
#include "semiribbon/errors.hpp"
#include "semiribbon/fixtures.hpp"
#include "semiribbon/map_io.hpp"
#include "semiribbon/ribbon.hpp"

using namespace semiribbon;
namespace fx = semiribbon::fixtures;

namespace {

std::set<std::vector<std::uint32_t>> certificates(std::size_t e, bool hyperbolic_only) {
    EnumerationOptions o;
    o.min_edges = o.max_edges = e;
    o.hyperbolic_only = hyperbolic_only;
    std::set<std::vector<std::uint32_t>> out;
    enumerate_maps(o, [&](const OrientedMap& m) {
        bool fresh = out.insert(canonical_form(m).certificate).second;
        CHECK(fresh);
    });
    return out;
}

}  // namespace

TEST_CASE("one edge") {
    EnumerationOptions o;
    o.max_edges = 1;
    auto maps = enumerate_maps(o);
    REQUIRE(maps.size() == 2);
    std::size_t loops = 0;
    for (const auto& m : maps) {
        if (vertices(m).size() == 1) {
            ++loops;
            CHECK(isomorphic(m, fx::loop1()));
        } else {
            CHECK_FALSE(is_hyperbolic(m).hyperbolic);
        }
    }
    CHECK(loops == 1);
}

TEST_CASE("enumeration matches brute force") {
    for (std::size_t e = 1; e <= 3; ++e) {
        CHECK(certificates(e, false) == oracle::all_maps(e, false));
        CHECK(certificates(e, true) == oracle::all_maps(e, true));
    }
}

TEST_CASE("two edges, hyperbolic only") {
    EnumerationOptions o;
    o.min_edges = o.max_edges = 2;
    o.hyperbolic_only = true;
    auto maps = enumerate_maps(o);
    auto has = [&](const OrientedMap& f) {
        return std::any_of(maps.begin(), maps.end(), [&](const OrientedMap& m) { return isomorphic(m, f); });
    };
    CHECK(has(fx::loop2()));
    CHECK(has(fx::eight()));
    CHECK(has(reverse_orientation(fx::eight())));
    CHECK_FALSE(has(fx::torus()));
    for (const auto& m : maps) CHECK(is_hyperbolic(m).hyperbolic);
}

TEST_CASE("emitted maps are canonical and counted by edges") {
    EnumerationOptions o;
    o.max_edges = 4;
    std::set<std::vector<std::uint32_t>> seen;
    std::size_t last = 0;
    std::vector<std::size_t> per_e(5);
    enumerate_maps(o, [&](const OrientedMap& m) {
        CHECK(canonical_form(m).map == m);
        CHECK(seen.insert(canonical_form(m).certificate).second);
        CHECK(m.edge_count() >= last);
        last = m.edge_count();
        CHECK(components(m).size() == 1);
        CHECK(m.decorations().empty());
        ++per_e[m.edge_count()];
    });
    CHECK(per_e == std::vector<std::size_t>{0, 2, 13, 104, 1453});
}

TEST_CASE("filters") {
    EnumerationOptions o;
    o.max_edges = 4;
    o.genus_min = 1;
    enumerate_maps(o, [](const OrientedMap& m) { CHECK(genus(m)[0].genus >= 1); });
    o.genus_min.reset();
    o.genus_max = 0;
    o.min_edges = 3;
    enumerate_maps(o, [](const OrientedMap& m) {
        CHECK(genus(m)[0].genus == 0);
        CHECK(m.edge_count() >= 3);
    });
}

TEST_CASE("bound") {
    EnumerationOptions o;
    o.max_edges = 7;
    try {
        enumerate_maps(o, [](const OrientedMap&) {});
        FAIL("expected bound_exceeded");
    } catch (const PreconditionError& e) {
        CHECK(e.reason() == "bound_exceeded");
    }
    o.max_edges = 2;
    o.bound = 1;
    CHECK_THROWS_AS(enumerate_maps(o), PreconditionError);
}

TEST_CASE("verify at small sizes") {
    auto r = verify_theorem(3);
    CHECK(r.maps == 2 + 13 + 104);
    CHECK(r.hyperbolic + r.non_hyperbolic == r.maps);
    CHECK(r.hyperbolic == 1 + 3 + 7);
    std::size_t tabulated = 0;
    for (const auto& [key, n] : r.table) tabulated += n;
    CHECK(tabulated == r.maps);

    // the only flags at three edges come from the crossed bouquet
    for (const auto& v : r.violations) CHECK(isomorphic(parse_map(v.map), fx::crossed_bouquet()));
    CHECK(verify_theorem(2).violations.empty());
}

TEST_CASE("theta is classified pre-only at four edges") {
    auto r = verify_theorem(4);
    CHECK(r.table.count({4, 0, "PreOnly"}) == 1);
    bool found = false;
    EnumerationOptions o;
    o.min_edges = o.max_edges = 4;
    o.hyperbolic_only = true;
    enumerate_maps(o, [&](const OrientedMap& m) {
        if (isomorphic(m, fx::theta2())) {
            found = true;
            CHECK(has_semi_ribbon(m).status == SemiRibbonStatus::PreOnly);
        }
    });
    CHECK(found);
}

TEST_CASE("a mutant is counted as non-hyperbolic") {
    auto l2 = fx::loop2();
    std::vector<bool> fwd(4, false);
    fwd[1] = fwd[2] = true;
    OrientedMap mutant(l2.alpha_array(), l2.sigma_array(), fwd);
    REQUIRE(validate(mutant).ok());
    TheoremVerifier v;
    v.check(mutant);
    CHECK(v.report().non_hyperbolic == 1);
    CHECK(v.report().hyperbolic == 0);
    CHECK(v.report().violations.empty());
}

TEST_CASE("verify at three edges reports no violations") {
    auto r = verify_theorem(3);
    CHECK(r.violations.size() == 0);
}
