#include "semiribbon/fixtures.hpp"

namespace semiribbon::fixtures {

namespace {

// alpha pairs (2i, 2i+1) with 2i forward; sigma given as cycles
OrientedMap standard(std::size_t darts, const std::vector<std::vector<Dart>>& cycles, Labels labels = {}) {
    std::vector<Dart> alpha(darts), sigma(darts);
    std::vector<bool> fwd(darts);
    for (Dart d = 0; d < darts; ++d) {
        alpha[d] = d ^ 1u;
        fwd[d] = (d % 2 == 0);
    }
    for (const auto& c : cycles)
        for (std::size_t i = 0; i < c.size(); ++i) sigma[c[i]] = c[(i + 1) % c.size()];
    return OrientedMap(std::move(alpha), std::move(sigma), std::move(fwd), {}, std::move(labels));
}

}  // namespace

OrientedMap loop1() { return standard(2, {{0, 1}}, Labels{{{0, "v0"}}, {{0, "e1"}}}); }

OrientedMap loop2() {
    return standard(4, {{0, 3}, {1, 2}}, Labels{{{0, "u"}, {1, "v"}}, {{0, "e1"}, {2, "e2"}}});
}

OrientedMap eight() { return standard(4, {{0, 1, 2, 3}}, Labels{{{0, "v"}}, {{0, "e1"}, {2, "e2"}}}); }

OrientedMap torus() { return standard(4, {{0, 2, 1, 3}}, Labels{{{0, "v"}}, {{0, "m"}, {2, "l"}}}); }

OrientedMap theta2() {
    return standard(8, {{0, 7, 4, 3}, {1, 2, 5, 6}},
                    Labels{{{0, "u"}, {1, "v"}}, {{0, "a1"}, {2, "a2"}, {4, "b1"}, {6, "b2"}}});
}

OrientedMap triangle() { return standard(6, {{0, 5}, {1, 2}, {3, 4}}); }

OrientedMap path3() { return standard(4, {{0}, {1, 2}, {3}}); }

OrientedMap triangle_with_pendant() { return standard(10, {{0, 9, 6, 5}, {1, 2}, {3, 4}, {7, 8}}); }

OrientedMap crossed_bouquet() { return standard(6, {{0, 3, 4, 1, 2, 5}}); }

std::optional<OrientedMap> by_name(const std::string& name) {
    if (name == "LOOP1") return loop1();
    if (name == "LOOP2") return loop2();
    if (name == "EIGHT") return eight();
    if (name == "TORUS") return torus();
    if (name == "THETA2") return theta2();
    if (name == "TRIANGLE") return triangle();
    if (name == "PATH3") return path3();
    if (name == "TRIANGLE_PENDANT") return triangle_with_pendant();
    if (name == "CROSSED_BOUQUET") return crossed_bouquet();
    return std::nullopt;
}

std::vector<std::string> names() {
    return {"LOOP1", "LOOP2", "EIGHT", "TORUS", "THETA2", "TRIANGLE", "PATH3", "TRIANGLE_PENDANT", "CROSSED_BOUQUET"};
}

}  // namespace semiribbon::fixtures
