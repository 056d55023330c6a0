#include "semiribbon/surgery.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "semiribbon/errors.hpp"

namespace semiribbon {

namespace {

std::string ds(Dart d) { return std::to_string(d); }

std::vector<Dart> arc(const OrientedMap& map, Dart from, Dart stop) {
    std::vector<Dart> out;
    for (Dart x = from; x != stop; x = map.sigma(x)) out.push_back(x);
    return out;
}

}  // namespace

DirectedCycle make_cycle(const OrientedMap& map, std::vector<Dart> darts) {
    if (darts.empty()) throw PreconditionError("cycle_empty", "cycle has no edges");
    const auto n = map.dart_count();
    for (Dart d : darts)
        if (d >= n || !map.is_forward(d))
            throw PreconditionError("cycle_edge_not_in_map", "dart " + ds(d) + " is not a forward dart of the map");
    auto vrep = vertex_reps(map);
    std::set<Dart> tails;
    for (std::size_t i = 0; i < darts.size(); ++i) {
        Dart e = darts[i], next = darts[(i + 1) % darts.size()];
        if (vrep[map.alpha(e)] != vrep[next])
            throw PreconditionError("cycle_not_closed", "head of " + ds(e) + " is not the tail of " + ds(next));
        if (!tails.insert(vrep[e]).second)
            throw PreconditionError("cycle_not_simple", "cycle visits vertex " + ds(vrep[e]) + " twice");
    }
    return DirectedCycle{std::move(darts)};
}

DirectedCycle normalized(DirectedCycle c) {
    auto it = std::min_element(c.edges.begin(), c.edges.end());
    std::rotate(c.edges.begin(), it, c.edges.end());
    return c;
}

DirectedCycle find_simple_directed_cycle(const OrientedMap& map) {
    require_valid(map);
    const auto n = map.dart_count();
    auto vrep = vertex_reps(map);
    std::map<Dart, Dart> lowest_out;
    std::set<Dart> has_in;
    for (Dart d = 0; d < n; ++d) {
        if (map.is_forward(d)) {
            if (!lowest_out.count(vrep[d])) lowest_out[vrep[d]] = d;
        } else {
            has_in.insert(vrep[d]);
        }
    }
    for (Dart d = 0; d < n; ++d) {
        if (vrep[d] != d) continue;
        if (!lowest_out.count(d)) throw PreconditionError("source_or_sink", "vertex " + ds(d) + " has no outgoing edge");
        if (!has_in.count(d)) throw PreconditionError("source_or_sink", "vertex " + ds(d) + " has no incoming edge");
    }
    std::vector<Dart> path;
    std::map<Dart, std::size_t> at;
    Dart v = vrep[lowest_out.begin()->second];
    while (!at.count(v)) {
        at[v] = path.size();
        Dart e = lowest_out[v];
        path.push_back(e);
        v = vrep[map.alpha(e)];
    }
    // loop-erase: keep the tail of the walk from the first revisit
    std::vector<Dart> cyc(path.begin() + static_cast<long>(at[v]), path.end());
    return make_cycle(map, std::move(cyc));
}

std::vector<DirectedCycle> simple_directed_cycles(const OrientedMap& map) {
    const auto n = map.dart_count();
    auto vrep = vertex_reps(map);
    std::map<Dart, std::vector<Dart>> out_of;
    for (Dart d = 0; d < n; ++d)
        if (map.is_forward(d)) out_of[vrep[d]].push_back(d);

    std::vector<DirectedCycle> result;
    std::vector<Dart> path;
    std::set<Dart> used;
    for (Dart e = 0; e < n; ++e) {
        if (!map.is_forward(e)) continue;
        const Dart start = vrep[e];
        path.assign(1, e);
        used = {start};
        std::function<void(Dart)> dfs = [&](Dart v) {
            if (v == start) {
                result.push_back(DirectedCycle{path});
                return;
            }
            if (used.count(v)) return;
            used.insert(v);
            for (Dart f : out_of[v]) {
                if (f <= e) continue;
                path.push_back(f);
                dfs(vrep[map.alpha(f)]);
                path.pop_back();
            }
            used.erase(v);
        };
        dfs(vrep[map.alpha(e)]);
    }
    return result;
}

SurgeryReport cut_along_cycle(const OrientedMap& map, const DirectedCycle& cycle_in) {
    require_valid(map);
    const DirectedCycle cycle = make_cycle(map, cycle_in.edges);
    const auto& f = cycle.edges;
    const std::size_t n = map.dart_count(), k = f.size();

    SurgeryReport rep;
    rep.components_before = components(map).size();
    rep.genus_before = genus(map);

    std::vector<Dart> alpha = map.alpha_array(), sigma = map.sigma_array();
    std::vector<bool> fwd = map.forward_array();
    alpha.resize(n + 2 * k);
    sigma.resize(n + 2 * k);
    fwd.resize(n + 2 * k);
    auto rf = [&](std::size_t j) { return static_cast<Dart>(n + 2 * (j % k)); };
    auto rb = [&](std::size_t j) { return static_cast<Dart>(n + 2 * (j % k) + 1); };
    for (std::size_t j = 0; j < k; ++j) {
        alpha[rf(j)] = rb(j);
        alpha[rb(j)] = rf(j);
        fwd[rf(j)] = true;
        fwd[rb(j)] = false;
    }

    // right arcs are read before any vertex is rewired
    std::vector<std::vector<Dart>> right(k);
    for (std::size_t j = 0; j < k; ++j) {
        Dart o = f[j], i = map.alpha(f[(j + k - 1) % k]);
        right[j] = arc(map, map.sigma(i), o);
    }
    for (std::size_t j = 0; j < k; ++j) {
        Dart o = f[j], i = map.alpha(f[(j + k - 1) % k]);
        sigma[i] = o;
        Dart i_r = rb(j + k - 1), o_r = rf(j);
        const auto& R = right[j];
        if (R.empty()) {
            sigma[i_r] = o_r;
        } else {
            sigma[i_r] = R.front();
            sigma[R.back()] = o_r;
        }
        sigma[o_r] = i_r;
    }

    std::vector<Dart> carrier(n);
    for (Dart d = 0; d < n; ++d) carrier[d] = d;
    for (std::size_t j = 0; j < k; ++j) carrier[f[j]] = rf(j);

    std::vector<FaceDecoration> holes = {{f[0], 0, 1}, {rb(0), 0, 1}};
    auto built = detail::rebuild(map, std::move(alpha), std::move(sigma), std::move(fwd),
                                 std::vector<bool>(n + 2 * k, false), carrier, holes);
    rep.result = std::move(built.map);
    rep.components_after = components(rep.result).size();
    rep.genus_after = genus(rep.result);
    auto frep = face_reps(rep.result);
    rep.new_punctures = {frep[f[0]], frep[rb(0)]};
    rep.dart_map.resize(n);
    for (Dart d = 0; d < n; ++d) rep.dart_map[d] = d;
    rep.left_copy = f;
    for (std::size_t j = 0; j < k; ++j) rep.right_copy.push_back(rf(j));
    return rep;
}

SurgeryReport paste(const OrientedMap& map, Dart puncture_a, Dart puncture_b,
                    const std::vector<std::pair<Dart, Dart>>& matching) {
    require_valid(map);
    const auto n = map.dart_count();
    if (puncture_a >= n || puncture_b >= n) throw PreconditionError("not_a_face", "puncture dart out of range");
    auto frep = face_reps(map);
    Dart fa = frep[puncture_a], fb = frep[puncture_b];
    if (fa == fb) throw PreconditionError("same_face", "paste needs two distinct faces");

    auto walk_a = face_walk(map, fa), walk_b = face_walk(map, fb);
    auto all_fwd = [&](const std::vector<Dart>& w) {
        return std::all_of(w.begin(), w.end(), [&](Dart d) { return map.is_forward(d); });
    };
    auto all_bwd = [&](const std::vector<Dart>& w) {
        return std::none_of(w.begin(), w.end(), [&](Dart d) { return map.is_forward(d); });
    };
    bool swapped = false;
    if (all_bwd(walk_a) && all_fwd(walk_b)) {
        std::swap(fa, fb);
        std::swap(walk_a, walk_b);
        swapped = true;
    }
    if (!all_fwd(walk_a) || !all_bwd(walk_b))
        throw PreconditionError("direction_mismatch", "paste needs one all-forward and one all-backward hole face");
    if (walk_a.size() != walk_b.size())
        throw PreconditionError("length_mismatch", "hole boundaries have " + std::to_string(walk_a.size()) + " and " +
                                                       std::to_string(walk_b.size()) + " edges");
    for (Dart h : {fa, fb}) {
        auto deco = map.decoration_of(h);
        if (deco.punctures != 1 || deco.extra_genus != 0)
            throw PreconditionError("not_a_puncture", "face " + ds(h) + " is not a bare puncture");
    }

    const std::size_t k = walk_a.size();
    // B boundary in travel direction
    std::vector<Dart> g;
    for (std::size_t j = 0; j < k; ++j) g.push_back(map.alpha(walk_b[(k - j) % k]));
    g = normalized(DirectedCycle{g}).edges;
    const auto& a = walk_a;  // starts at the least dart already

    auto vrep = vertex_reps(map);
    std::set<Dart> va, vb;
    for (std::size_t j = 0; j < k; ++j) {
        va.insert(vrep[a[j]]);
        vb.insert(vrep[g[j]]);
    }
    if (va.size() != k || vb.size() != k) throw PreconditionError("cycle_not_simple", "hole boundary is not simple");
    for (Dart v : va)
        if (vb.count(v)) throw PreconditionError("holes_share_vertex", "hole boundaries meet at vertex " + ds(v));

    std::size_t shift = 0;
    if (!matching.empty()) {
        if (matching.size() != k) throw PreconditionError("matching_mismatch", "matching must pair every boundary edge");
        std::map<Dart, std::size_t> ia, ig;
        for (std::size_t j = 0; j < k; ++j) {
            ia[a[j]] = j;
            ig[g[j]] = j;
        }
        std::optional<std::size_t> s;
        std::set<Dart> seen_a;
        for (auto [x, y] : matching) {
            if (swapped) std::swap(x, y);
            if (!ia.count(x) || !ig.count(y) || !seen_a.insert(x).second)
                throw PreconditionError("matching_mismatch", "matching pair (" + ds(x) + "," + ds(y) + ") is not on the holes");
            std::size_t sj = (ig[y] + k - ia[x]) % k;
            if (s && *s != sj) throw PreconditionError("matching_mismatch", "matching is not a cyclic shift");
            s = sj;
        }
        shift = *s;
    }

    SurgeryReport rep;
    rep.components_before = components(map).size();
    rep.genus_before = genus(map);

    std::vector<Dart> alpha = map.alpha_array(), sigma = map.sigma_array();
    std::vector<bool> fwd = map.forward_array();
    std::vector<bool> removed(n, false);
    std::vector<Dart> carrier(n);
    for (Dart d = 0; d < n; ++d) carrier[d] = d;
    for (std::size_t j = 0; j < k; ++j) {
        Dart gj = g[(j + shift) % k], gprev = g[(j + shift + k - 1) % k];
        Dart oa = a[j], ia = map.alpha(a[(j + k - 1) % k]);
        Dart ob = gj, ib = map.alpha(gprev);
        auto R = arc(map, map.sigma(ib), ob);
        if (!R.empty()) {
            sigma[ia] = R.front();
            sigma[R.back()] = oa;
        }
        removed[gj] = removed[map.alpha(gj)] = true;
        carrier[gj] = oa;
        carrier[a[j]] = kNoDart;
    }

    // hole faces vanish; their bare punctures go with them
    std::vector<FaceDecoration> kept;
    for (const auto& deco : map.decorations())
        if (deco.rep != fa && deco.rep != fb) kept.push_back(deco);
    OrientedMap source = map.with_decorations(kept);
    for (Dart d : walk_b) carrier[d] = kNoDart;

    auto built = detail::rebuild(source, std::move(alpha), std::move(sigma), std::move(fwd), removed, carrier);
    rep.result = std::move(built.map);
    rep.dart_map = built.compact;
    rep.components_after = components(rep.result).size();
    rep.genus_after = genus(rep.result);
    for (Dart d : a) rep.left_copy.push_back(built.compact[d]);
    rep.new_punctures = {rep.left_copy.front()};
    return rep;
}

bool is_separating(const OrientedMap& map, const DirectedCycle& cycle) {
    auto rep = cut_along_cycle(map, cycle);
    return rep.components_after > rep.components_before;
}

bool is_simple_cycle_face(const OrientedMap& map, Dart face) {
    auto w = face_walk(map, face);
    bool f0 = map.is_forward(w.front());
    auto vrep = vertex_reps(map);
    std::set<Dart> vs;
    for (Dart d : w) {
        if (map.is_forward(d) != f0) return false;
        if (!vs.insert(vrep[d]).second) return false;
    }
    return true;
}

ShrinkReport shrink_disk_face(const OrientedMap& map, Dart face) {
    require_valid(map);
    const auto n = map.dart_count();
    if (face >= n) throw PreconditionError("not_a_face", "face dart out of range");
    Dart rep_dart = face_reps(map)[face];
    auto deco = map.decoration_of(rep_dart);
    if (deco.extra_genus != 0 || deco.punctures != 0)
        throw PreconditionError("decorated_face", "face " + ds(rep_dart) + " carries decorations");
    auto w = face_walk(map, rep_dart);
    if (!is_simple_cycle_face(map, rep_dart))
        throw PreconditionError("not_simple_cycle", "boundary of face " + ds(rep_dart) + " is not a simple directed cycle");

    const std::size_t k = w.size();
    std::vector<std::vector<Dart>> arcs(k);
    bool all_empty = true;
    for (std::size_t j = 0; j < k; ++j) {
        arcs[j] = arc(map, map.sigma(w[j]), map.alpha(w[(j + k - 1) % k]));
        all_empty = all_empty && arcs[j].empty();
    }

    ShrinkReport out;
    out.boundary = w;
    if (all_empty) {
        if (components(map).size() != 1)
            throw PreconditionError("would_empty_component", "shrinking face " + ds(rep_dart) + " deletes a whole component");
        EmptyGraphOnSphere token;
        for (const auto& d : map.decorations()) {
            token.extra_genus += d.extra_genus;
            token.punctures += d.punctures;
        }
        out.result = token;
        out.dart_map.assign(n, kNoDart);
        return out;
    }

    std::vector<Dart> merged;
    for (std::size_t j = k; j-- > 0;) merged.insert(merged.end(), arcs[j].begin(), arcs[j].end());
    std::vector<Dart> sigma = map.sigma_array();
    for (std::size_t i = 0; i < merged.size(); ++i) sigma[merged[i]] = merged[(i + 1) % merged.size()];

    std::vector<bool> removed(n, false);
    std::vector<Dart> carrier(n);
    for (Dart d = 0; d < n; ++d) carrier[d] = d;
    for (Dart d : w) {
        removed[d] = removed[map.alpha(d)] = true;
        carrier[d] = carrier[map.alpha(d)] = kNoDart;
    }
    auto built = detail::rebuild(map, map.alpha_array(), std::move(sigma), map.forward_array(), removed, carrier);
    out.result = std::move(built.map);
    out.dart_map = std::move(built.compact);
    return out;
}

MinimizeReport minimize_report(const OrientedMap& map) {
    require_valid(map);
    const auto n = map.dart_count();
    std::vector<Dart> alpha = map.alpha_array();
    const auto& sigma = map.sigma_array();
    std::vector<bool> removed(n, false);
    MinimizeReport out;
    for (bool changed = true; changed;) {
        changed = false;
        for (Dart d = 0; d < n && !changed; ++d) {
            if (removed[d]) continue;
            Dart e = sigma[d];
            if (e == d || sigma[e] != d) continue;
            if (map.is_forward(d) == map.is_forward(e)) continue;
            if (alpha[d] == e) continue;  // a loop is already minimal
            Dart x = map.is_forward(d) ? e : d;  // arriving end
            Dart y = map.is_forward(d) ? d : e;  // leaving end
            Dart p = alpha[x], q = alpha[y];
            alpha[p] = q;
            alpha[q] = p;
            removed[x] = removed[y] = true;
            ++out.suppressed;
            changed = true;
        }
    }
    std::vector<Dart> carrier(n);
    for (Dart d = 0; d < n; ++d) carrier[d] = removed[d] ? kNoDart : d;
    auto built = detail::rebuild(map, std::move(alpha), sigma, map.forward_array(), removed, carrier);
    out.result = std::move(built.map);
    out.dart_map = std::move(built.compact);
    return out;
}

OrientedMap minimize(const OrientedMap& map) { return minimize_report(map).result; }

OrientedMap detach(const OrientedMap& map, Dart vertex, Dart sector_a, Dart sector_b) {
    require_valid(map);
    const auto n = map.dart_count();
    if (vertex >= n || sector_a >= n || sector_b >= n) throw PreconditionError("dart_out_of_range", "dart out of range");
    auto vrep = vertex_reps(map);
    if (vrep[sector_a] != vrep[vertex] || vrep[sector_b] != vrep[vertex])
        throw PreconditionError("sector_not_at_vertex", "sectors must lie at vertex " + ds(vrep[vertex]));
    if (sector_a == sector_b) throw PreconditionError("same_sector", "detach needs two distinct sectors");
    for (Dart s : {sector_a, sector_b}) {
        Dart nxt = map.sigma(s);
        if (map.is_forward(s) && map.is_forward(map.alpha(nxt)))
            throw PreconditionError("oriented_sector", "sector at " + ds(s) + " is oriented");
    }
    std::vector<Dart> sigma = map.sigma_array();
    Dart pa = map.sigma_inv(sector_a), pb = map.sigma_inv(sector_b);
    sigma[pb] = sector_a;
    sigma[pa] = sector_b;
    std::vector<Dart> carrier(n);
    for (Dart d = 0; d < n; ++d) carrier[d] = d;
    return detail::rebuild(map, map.alpha_array(), std::move(sigma), map.forward_array(),
                           std::vector<bool>(n, false), carrier)
        .map;
}

}  // namespace semiribbon
