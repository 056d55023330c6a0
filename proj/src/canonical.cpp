#include "semiribbon/canonical.hpp"

#include <algorithm>
#include <array>
#include <tuple>

#include "semiribbon/errors.hpp"

namespace semiribbon {

std::vector<Dart> bfs_relabeling(const OrientedMap& map, Dart root) {
    const std::size_t n = map.dart_count();
    std::vector<Dart> label(n, kNoDart), order;
    order.reserve(n);
    label[root] = 0;
    order.push_back(root);
    for (std::size_t i = 0; i < order.size(); ++i) {
        Dart x = order[i];
        for (Dart y : {map.alpha(x), map.sigma(x)})
            if (label[y] == kNoDart) {
                label[y] = static_cast<Dart>(order.size());
                order.push_back(y);
            }
    }
    if (order.size() != n) throw PreconditionError("disconnected", "canonical form needs a connected map");
    return label;
}

namespace {

std::vector<std::uint32_t> code_for(const OrientedMap& map, const std::vector<Dart>& label,
                                    const std::vector<Dart>& freps) {
    const std::size_t n = map.dart_count();
    std::vector<Dart> inv(n);
    for (Dart d = 0; d < n; ++d) inv[label[d]] = d;
    std::vector<std::uint32_t> code;
    code.reserve(3 * n + 2);
    code.push_back(static_cast<std::uint32_t>(n));
    for (Dart i = 0; i < n; ++i) {
        Dart x = inv[i];
        code.push_back(label[map.alpha(x)]);
        code.push_back(label[map.sigma(x)]);
        code.push_back(map.is_forward(x) ? 1 : 0);
    }
    std::vector<std::array<std::uint32_t, 3>> decos;
    for (const auto& f : map.decorations()) {
        Dart best = kNoDart;
        for (Dart d = 0; d < n; ++d)
            if (freps[d] == f.rep) best = std::min(best, label[d]);
        decos.push_back({best, f.extra_genus, f.punctures});
    }
    std::sort(decos.begin(), decos.end());
    code.push_back(static_cast<std::uint32_t>(decos.size()));
    for (const auto& t : decos) code.insert(code.end(), t.begin(), t.end());
    return code;
}

}  // namespace

CanonicalForm canonical_form(const OrientedMap& map) {
    require_valid(map);
    auto freps = face_reps(map);
    std::vector<Dart> best_label;
    std::vector<std::uint32_t> best;
    for (Dart r = 0; r < map.dart_count(); ++r) {
        auto label = bfs_relabeling(map, r);
        auto code = code_for(map, label, freps);
        if (best.empty() || code < best) {
            best = std::move(code);
            best_label = std::move(label);
        }
    }
    auto canon = relabel(map.without_labels(), best_label);
    return CanonicalForm{std::move(canon), std::move(best_label), std::move(best)};
}

bool isomorphic(const OrientedMap& a, const OrientedMap& b) {
    if (a.dart_count() != b.dart_count()) return false;
    return canonical_form(a).certificate == canonical_form(b).certificate;
}

}  // namespace semiribbon
