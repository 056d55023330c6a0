#include "semiribbon/enumerate.hpp"

#include <algorithm>
#include <set>

#include "semiribbon/classify.hpp"
#include "semiribbon/errors.hpp"
#include "semiribbon/map_io.hpp"

namespace semiribbon {

namespace {

constexpr Dart kFree = kNoDart;

struct Generator {
    std::size_t n;
    std::vector<Dart> alpha, sigma, sigma_inv;
    std::vector<Dart> label, order;  // scratch for root comparisons
    const EnumerationOptions& opts;
    const std::function<void(const OrientedMap&)>& sink;

    Generator(std::size_t darts, const EnumerationOptions& o, const std::function<void(const OrientedMap&)>& s)
        : n(darts), alpha(darts, kFree), sigma(darts, kFree), sigma_inv(darts, kFree), label(darts), order(darts),
          opts(o), sink(s) {}

    // -1: root r gives a smaller code, 0: equal, 1: larger
    int compare_root(Dart r, const std::vector<bool>& fwd) {
        std::fill(label.begin(), label.end(), kFree);
        label[r] = 0;
        order[0] = r;
        Dart next = 1;
        for (Dart i = 0; i < n; ++i) {
            Dart x = order[i];
            Dart a = alpha[x];
            if (label[a] == kFree) {
                label[a] = next;
                order[next++] = a;
            }
            Dart s = sigma[x];
            if (label[s] == kFree) {
                label[s] = next;
                order[next++] = s;
            }
            // identity labeling is the BFS-from-0 labeling
            if (label[a] != alpha[i]) return label[a] < alpha[i] ? -1 : 1;
            if (label[s] != sigma[i]) return label[s] < sigma[i] ? -1 : 1;
            if (fwd[x] != fwd[i]) return fwd[x] ? 1 : -1;  // forward codes as 1
        }
        return 0;
    }

    void emit_masks() {
        const std::size_t e = n / 2;
        std::vector<Dart> low;  // least dart of each edge
        for (Dart d = 0; d < n; ++d)
            if (d < alpha[d]) low.push_back(d);
        std::vector<bool> fwd(n);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e); ++mask) {
            for (std::size_t j = 0; j < e; ++j) {
                bool f = (mask >> j) & 1u;
                fwd[low[j]] = f;
                fwd[alpha[low[j]]] = !f;
            }
            if (opts.hyperbolic_only) {
                bool ok = true;
                for (Dart d = 0; d < n && ok; ++d) ok = fwd[d] != fwd[sigma[d]];
                if (!ok) continue;
            }
            bool canonical = true;
            for (Dart r = 1; r < n && canonical; ++r)
                if (compare_root(r, fwd) < 0) canonical = false;
            if (!canonical) continue;
            OrientedMap m(alpha, sigma, fwd);
            if (opts.genus_min || opts.genus_max) {
                unsigned g = genus(m).front().genus;
                if (opts.genus_min && g < *opts.genus_min) continue;
                if (opts.genus_max && g > *opts.genus_max) continue;
            }
            sink(m);
        }
    }

    // position i, phase 0 assigns alpha(i), phase 1 assigns sigma(i)
    void step(Dart i, int phase, Dart next) {
        if (i == n) {
            if (next == n) emit_masks();
            return;
        }
        if (i >= next) return;  // not reachable from the root
        if (phase == 0) {
            if (alpha[i] != kFree) {
                step(i, 1, next);
                return;
            }
            for (Dart j = 0; j < next; ++j) {
                if (j == i || alpha[j] != kFree) continue;
                alpha[i] = j;
                alpha[j] = i;
                step(i, 1, next);
                alpha[i] = alpha[j] = kFree;
            }
            if (next < n) {
                alpha[i] = next;
                alpha[next] = i;
                step(i, 1, next + 1);
                alpha[i] = alpha[next] = kFree;
            }
            return;
        }
        for (Dart t = 0; t < next; ++t) {
            if (sigma_inv[t] != kFree) continue;
            sigma[i] = t;
            sigma_inv[t] = i;
            step(i + 1, 0, next);
            sigma[i] = sigma_inv[t] = kFree;
        }
        if (next < n) {
            sigma[i] = next;
            sigma_inv[next] = i;
            step(i + 1, 0, next + 1);
            sigma[i] = sigma_inv[next] = kFree;
        }
    }
};

}  // namespace

void enumerate_maps(const EnumerationOptions& opts, const std::function<void(const OrientedMap&)>& sink) {
    if (opts.max_edges > opts.bound)
        throw PreconditionError("bound_exceeded", "max_edges " + std::to_string(opts.max_edges) + " exceeds the bound " +
                                                      std::to_string(opts.bound));
    for (std::size_t e = std::max<std::size_t>(opts.min_edges, 1); e <= opts.max_edges; ++e) {
        Generator gen(2 * e, opts, sink);
        gen.step(0, 0, 1);
    }
}

std::vector<OrientedMap> enumerate_maps(const EnumerationOptions& opts) {
    std::vector<OrientedMap> out;
    enumerate_maps(opts, [&](const OrientedMap& m) { out.push_back(m); });
    return out;
}

std::vector<std::vector<Dart>> semi_ribbon_paths(const OrientedMap& map) {
    std::set<std::vector<Dart>> paths;
    if (!is_hyperbolic(map).hyperbolic) return {};
    for (auto o : {Orientation::S, Orientation::Sop}) {
        auto t = trace_smooth_boundary(map, o);
        if (t.orbits.size() == 1) paths.insert(t.orbits.front());
    }
    return {paths.begin(), paths.end()};
}

void TheoremVerifier::check(const OrientedMap& map) {
    auto& r = report_;
    ++r.maps;
    const std::size_t e = map.edge_count();
    auto bad = [&](const std::string& kind, const std::string& detail) {
        r.violations.push_back({kind, detail, print_map(map)});
    };
    try {
        unsigned g = genus(map).front().genus;
        auto res = classify(map);
        r.table[{e, g, to_string(res.status)}] += 1;
        if (res.status == SemiRibbonStatus::NotHyperbolic) {
            ++r.non_hyperbolic;
            return;
        }
        ++r.hyperbolic;
        bool semi = res.status == SemiRibbonStatus::InS || res.status == SemiRibbonStatus::InSop;
        if (semi) ++r.semi_ribbon;
        for (const auto& c : res.contradictions) bad("contradiction", c);

        auto rec = recognize_cactus_boundary(map);
        if (semi != rec.has_value())
            bad("semi_ribbon_vs_cactus", "status " + to_string(res.status) + " but cactus recognition " +
                                             (rec ? "succeeds" : "fails"));
        if (semi && !res.decomposition && res.contradictions.empty())
            bad("missing_decomposition", "semi-ribbon map without decomposition");
        if (rec && res.decomposition && rec->orientation != res.decomposition->orientation)
            bad("orientation_mismatch", "classify and recognition disagree on the orientation");
        if (semi) {
            auto paths = semi_ribbon_paths(map);
            if (paths.size() != 1)
                bad("eulerian_path_not_unique", std::to_string(paths.size()) + " distinct semi-ribbon Eulerian paths");
        }
    } catch (const Error& ex) {
        bad("exception:" + ex.reason(), ex.what());
    }
}

VerifyReport verify_theorem(std::size_t max_edges, std::size_t bound) {
    EnumerationOptions opts;
    opts.max_edges = max_edges;
    opts.bound = bound;
    TheoremVerifier v;
    enumerate_maps(opts, [&](const OrientedMap& m) { v.check(m); });
    return v.report();
}

}  // namespace semiribbon
