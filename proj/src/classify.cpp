#include "semiribbon/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "semiribbon/errors.hpp"

namespace semiribbon {

std::vector<std::size_t> CactusDecomposition::disk_lengths() const {
    std::vector<std::size_t> out;
    for (const auto& d : disks) out.push_back(d.edges.size());
    return out;
}

namespace {

// Edge sets (forward darts) of the biconnected blocks; loops stand alone.
std::vector<std::vector<Dart>> blocks(const OrientedMap& map) {
    auto vrep = vertex_reps(map);
    std::map<Dart, std::vector<std::pair<Dart, Dart>>> adj;  // vertex -> (edge, neighbour)
    std::vector<std::vector<Dart>> out;
    for (const auto& e : edges(map)) {
        Dart u = vrep[e.forward], w = vrep[e.backward];
        if (u == w) {
            out.push_back({e.forward});
            continue;
        }
        adj[u].push_back({e.forward, w});
        adj[w].push_back({e.forward, u});
    }
    std::map<Dart, int> disc, low;
    std::vector<Dart> stack;
    int timer = 0;
    std::function<void(Dart, Dart)> dfs = [&](Dart v, Dart parent_edge) {
        disc[v] = low[v] = timer++;
        for (auto [e, w] : adj[v]) {
            if (e == parent_edge) continue;
            if (!disc.count(w)) {
                stack.push_back(e);
                dfs(w, e);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    auto& b = out.emplace_back();
                    Dart x;
                    do {
                        x = stack.back();
                        stack.pop_back();
                        b.push_back(x);
                    } while (x != e);
                }
            } else if (disc[w] < disc[v]) {
                stack.push_back(e);
                low[v] = std::min(low[v], disc[w]);
            }
        }
    };
    for (auto& [v, list] : adj)
        if (!disc.count(v)) dfs(v, kNoDart);
    for (auto& b : out) std::sort(b.begin(), b.end());
    std::sort(out.begin(), out.end());
    return out;
}

// Directed cycle through exactly the given edges, or nothing.
std::optional<DirectedCycle> block_cycle(const OrientedMap& map, const std::vector<Dart>& block,
                                         const std::vector<Dart>& vrep) {
    std::map<Dart, Dart> out_at;
    std::map<Dart, int> in_count;
    for (Dart f : block) {
        if (!out_at.emplace(vrep[f], f).second) return std::nullopt;
        if (++in_count[vrep[map.alpha(f)]] > 1) return std::nullopt;
    }
    std::vector<Dart> cyc;
    Dart e = block.front();
    do {
        cyc.push_back(e);
        auto it = out_at.find(vrep[map.alpha(e)]);
        if (it == out_at.end()) return std::nullopt;
        e = it->second;
    } while (e != block.front() && cyc.size() <= block.size());
    if (cyc.size() != block.size()) return std::nullopt;
    return DirectedCycle{cyc};
}

std::vector<SharedVertex> shared_vertices_of(const OrientedMap& map, const std::vector<DirectedCycle>& disks) {
    auto vrep = vertex_reps(map);
    std::map<Dart, std::vector<std::size_t>> at;
    for (std::size_t i = 0; i < disks.size(); ++i)
        for (Dart f : disks[i].edges) at[vrep[f]].push_back(i);
    std::vector<SharedVertex> out;
    for (auto& [v, ds] : at)
        if (ds.size() > 1) out.push_back({v, ds});
    return out;
}

bool sorted_disks_less(const DirectedCycle& a, const DirectedCycle& b) { return a.edges.front() < b.edges.front(); }

}  // namespace

std::optional<CactusDecomposition> recognize_cactus_boundary(const OrientedMap& map) {
    require_valid(map);
    if (components(map).size() != 1) throw PreconditionError("disconnected", "cactus recognition needs a connected map");
    if (genus(map).front().map_genus != 0) return std::nullopt;

    auto vrep = vertex_reps(map);
    auto frep = face_reps(map);
    std::vector<DirectedCycle> disks;
    for (const auto& b : blocks(map)) {
        auto c = block_cycle(map, b, vrep);
        if (!c) return std::nullopt;
        disks.push_back(normalized(*c));
    }
    std::sort(disks.begin(), disks.end(), sorted_disks_less);

    // each disk must be exactly one face on the chosen side
    auto bounds_faces = [&](Orientation o, std::vector<Dart>& face_of) {
        face_of.clear();
        for (const auto& d : disks) {
            std::set<Dart> side;
            for (Dart f : d.edges) side.insert(o == Orientation::S ? f : map.alpha(f));
            Dart r = frep[*side.begin()];
            auto w = face_walk(map, r);
            if (std::set<Dart>(w.begin(), w.end()) != side) return false;
            face_of.push_back(r);
        }
        return true;
    };
    CactusDecomposition dec;
    if (bounds_faces(Orientation::S, dec.disk_faces))
        dec.orientation = Orientation::S;
    else if (bounds_faces(Orientation::Sop, dec.disk_faces))
        dec.orientation = Orientation::Sop;
    else
        return std::nullopt;
    dec.disks = std::move(disks);
    dec.shared_vertices = shared_vertices_of(map, dec.disks);
    dec.summand_faces = map.decorations();
    return dec;
}

namespace {

struct Workspace {
    OrientedMap work;
    std::vector<Dart> origin;  // working dart -> input dart
};

std::vector<Dart> to_original(const Workspace& ws, const std::vector<Dart>& darts) {
    std::vector<Dart> out;
    for (Dart d : darts) out.push_back(ws.origin[d]);
    return out;
}

void remap(Workspace& ws, OrientedMap next, const std::vector<Dart>& dart_map) {
    std::vector<Dart> origin(next.dart_count(), kNoDart);
    for (Dart d = 0; d < dart_map.size(); ++d)
        if (dart_map[d] != kNoDart && d < ws.origin.size()) origin[dart_map[d]] = ws.origin[d];
    ws.work = std::move(next);
    ws.origin = std::move(origin);
}

long euler_char(const OrientedMap& m) {
    return static_cast<long>(vertices(m).size()) - static_cast<long>(m.edge_count()) + static_cast<long>(faces(m).size());
}

// Lowest undecorated all-forward face whose boundary is a simple cycle.
std::optional<Dart> clockwise_disk_face(const OrientedMap& m) {
    for (const auto& f : faces(m)) {
        Dart r = f.front();
        if (!m.is_forward(r)) continue;
        auto deco = m.decoration_of(r);
        if (deco.extra_genus || deco.punctures) continue;
        if (is_simple_cycle_face(m, r)) return r;
    }
    return std::nullopt;
}

// Keeps only the components that contain no dart of `drop`.
std::pair<OrientedMap, std::vector<Dart>> drop_components(const OrientedMap& m, const std::vector<Dart>& drop) {
    auto crep = component_reps(m);
    std::set<Dart> gone;
    for (Dart d : drop) gone.insert(crep[d]);
    std::vector<bool> removed(m.dart_count());
    std::vector<Dart> carrier(m.dart_count());
    std::vector<FaceDecoration> kept;
    for (Dart d = 0; d < m.dart_count(); ++d) {
        removed[d] = gone.count(crep[d]) > 0;
        carrier[d] = removed[d] ? kNoDart : d;
    }
    for (const auto& f : m.decorations())
        if (!removed[f.rep]) kept.push_back(f);
    auto built = detail::rebuild(m.with_decorations(kept), m.alpha_array(), m.sigma_array(), m.forward_array(), removed,
                                 carrier);
    return {std::move(built.map), std::move(built.compact)};
}

}  // namespace

ClassificationResult classify(const OrientedMap& map) {
    require_valid(map);
    if (components(map).size() != 1) throw PreconditionError("disconnected", "classify needs a connected map");

    ClassificationResult res;
    auto sr = has_semi_ribbon(map);
    res.status = sr.status;
    if (!sr.semi_ribbon()) return res;

    const Orientation orient = sr.status == SemiRibbonStatus::InS ? Orientation::S : Orientation::Sop;
    auto flag = [&](const std::string& why) { res.contradictions.push_back(why); };

    Workspace ws;
    ws.work = map.without_decorations().without_labels();
    if (orient == Orientation::Sop) ws.work = reverse_orientation(ws.work);
    ws.origin.resize(map.dart_count());
    std::iota(ws.origin.begin(), ws.origin.end(), 0);

    std::vector<DirectedCycle> disks, since_cut;
    Workspace summand = ws;  // state after the latest cut
    const std::size_t guard = map.edge_count() + total_genus(genus(map)) + 2;
    bool finished = false;

    for (std::size_t iter = 0; iter < guard && !finished; ++iter) {
        if (auto rec = recognize_cactus_boundary(ws.work); rec && rec->orientation == Orientation::S) {
            for (const auto& d : rec->disks) since_cut.push_back(normalized(DirectedCycle{to_original(ws, d.edges)}));
            finished = true;
            break;
        }
        DirectedCycle cyc;
        try {
            cyc = find_simple_directed_cycle(ws.work);
        } catch (const PreconditionError& e) {
            flag(std::string("no directed cycle in a hyperbolic map: ") + e.what());
            return res;
        }
        SurgeryReport cut = cut_along_cycle(ws.work, cyc);

        if (cut.components_after > cut.components_before) {
            auto face = clockwise_disk_face(ws.work);
            if (!face) {
                flag("separating branch: no clockwise disk face");
                return res;
            }
            const long chi = euler_char(ws.work);
            SurgeryStep step;
            step.kind = SurgeryStep::Kind::Shrink;
            step.face = *face;
            step.darts = face_walk(ws.work, *face);
            step.original_edges = to_original(ws, step.darts);
            since_cut.push_back(normalized(DirectedCycle{step.original_edges}));
            for (Dart d : step.darts)
                if (sector_status(ws.work, ws.work.alpha(d)) != SectorStatus::NonOriented)
                    flag("disk corner at " + std::to_string(ws.origin[d]) + " lies on the strip side");
            auto sh = shrink_disk_face(ws.work, *face);
            res.surgery_log.push_back(step);
            if (sh.empty()) {
                finished = true;
                break;
            }
            const auto& next = sh.map();
            if (euler_char(next) != chi) flag("shrink changed the Euler characteristic");
            if (!is_hyperbolic(next).hyperbolic) flag("shrink broke hyperbolicity");
            else if (trace_smooth_boundary(next).orbits.size() != 1) flag("shrink changed the boundary orbit count");
            remap(ws, next, sh.dart_map);
            if (res.contradiction()) return res;
            continue;
        }

        // non-separating: the genus must drop and one copy must be left untraversed
        SurgeryStep step;
        step.kind = SurgeryStep::Kind::Cut;
        step.darts = cyc.edges;
        step.original_edges = to_original(ws, cyc.edges);
        res.surgery_log.push_back(step);
        if (total_genus(cut.genus_after) + 1 != total_genus(cut.genus_before)) {
            flag("connected cut did not lower the genus by one");
            return res;
        }
        const auto& cm = cut.result;
        auto trace = trace_smooth_boundary(cm);
        std::set<Dart> copies(cut.left_copy.begin(), cut.left_copy.end());
        copies.insert(cut.right_copy.begin(), cut.right_copy.end());
        Dart probe = cut.left_copy.front();
        for (Dart d = 0; d < cm.dart_count(); ++d)
            if (cm.is_forward(d) && !copies.count(d)) {
                probe = d;
                break;
            }
        std::set<Dart> surviving;
        for (const auto& o : trace.orbits)
            if (std::find(o.begin(), o.end(), probe) != o.end()) surviving.insert(o.begin(), o.end());
        auto contained = [&](const std::vector<Dart>& c) {
            return std::all_of(c.begin(), c.end(), [&](Dart d) { return surviving.count(d) > 0; });
        };
        auto disjoint = [&](const std::vector<Dart>& c) {
            return std::none_of(c.begin(), c.end(), [&](Dart d) { return surviving.count(d) > 0; });
        };
        bool drop_left = disjoint(cut.left_copy) && contained(cut.right_copy);
        bool drop_right = disjoint(cut.right_copy) && contained(cut.left_copy);
        if (drop_left == drop_right) {
            flag("non-separating cut: neither cycle copy vanishes from the surviving boundary orbit");
            return res;
        }
        const auto& dropped = drop_left ? cut.left_copy : cut.right_copy;
        for (Dart d : dropped)
            if (vertex_darts(cm, d).size() != 2) {
                flag("non-separating cut: discarded copy still carries edges at vertex of dart " + std::to_string(d));
                return res;
            }
        res.surgery_log.back().discarded_left = drop_left;
        Workspace cut_ws;
        cut_ws.work = cm;
        cut_ws.origin.assign(cm.dart_count(), kNoDart);
        for (Dart d = 0; d < ws.origin.size(); ++d) cut_ws.origin[d] = ws.origin[d];
        for (std::size_t j = 0; j < cut.right_copy.size(); ++j) {
            Dart fj = cyc.edges[j];
            cut_ws.origin[cut.right_copy[j]] = ws.origin[fj];
            cut_ws.origin[cm.alpha(cut.right_copy[j])] = ws.origin[ws.work.alpha(fj)];
        }
        auto [kept, compact] = drop_components(cm, dropped);
        ws = std::move(cut_ws);
        remap(ws, std::move(kept), compact);
        summand = ws;
        disks.insert(disks.end(), since_cut.begin(), since_cut.end());
        since_cut.clear();
    }
    if (!finished) {
        flag("classification did not terminate within its iteration bound");
        return res;
    }

    // everything found since the latest cut must be the cactus of that summand
    std::sort(since_cut.begin(), since_cut.end(), sorted_disks_less);
    auto rec = recognize_cactus_boundary(summand.work);
    if (!rec || rec->orientation != Orientation::S) {
        flag("sphere summand is not recognized as a clockwise cactus boundary");
        return res;
    }
    std::vector<DirectedCycle> rec_disks;
    for (const auto& d : rec->disks) rec_disks.push_back(normalized(DirectedCycle{to_original(summand, d.edges)}));
    std::sort(rec_disks.begin(), rec_disks.end(), sorted_disks_less);
    if (rec_disks != since_cut) {
        flag("shrunk disks disagree with the recognized cactus blocks");
        return res;
    }
    disks.insert(disks.end(), since_cut.begin(), since_cut.end());
    std::sort(disks.begin(), disks.end(), sorted_disks_less);

    CactusDecomposition dec;
    dec.orientation = orient;
    dec.disks = disks;
    auto frep = face_reps(map);
    for (const auto& d : disks)
        dec.disk_faces.push_back(frep[orient == Orientation::S ? d.edges.front() : map.alpha(d.edges.front())]);
    dec.shared_vertices = shared_vertices_of(map, disks);
    dec.summand_faces = map.decorations();
    res.decomposition = std::move(dec);
    return res;
}

bool replay_surgery_log(const OrientedMap& map, const ClassificationResult& result) {
    if (!result.decomposition) return false;
    OrientedMap work = map.without_decorations().without_labels();
    if (result.decomposition->orientation == Orientation::Sop) work = reverse_orientation(work);
    for (const auto& step : result.surgery_log) {
        if (step.kind == SurgeryStep::Kind::Shrink) {
            if (face_walk(work, step.face) != step.darts) return false;
            auto sh = shrink_disk_face(work, step.face);
            if (sh.empty()) return &step == &result.surgery_log.back();
            work = sh.map();
        } else {
            auto cut = cut_along_cycle(work, DirectedCycle{step.darts});
            work = drop_components(cut.result, step.discarded_left ? cut.left_copy : cut.right_copy).first;
        }
    }
    auto rec = recognize_cactus_boundary(work);
    return rec && rec->orientation == Orientation::S;
}

CactusSpec cactus_spec_from_json(const nlohmann::json& j) {
    auto bad = [](const std::string& w) { throw InvalidMapError("bad_cactus_spec", w, {w}); };
    if (!j.is_object()) bad("cactus spec nodes are objects");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "length" && it.key() != "at" && it.key() != "children") bad("unknown cactus field '" + it.key() + "'");
    CactusSpec s;
    if (!j.contains("length") || !j.at("length").is_number_integer() || j.at("length").get<long long>() < 1)
        bad("cactus node needs a length >= 1");
    s.length = j.at("length").get<unsigned>();
    if (j.contains("at")) {
        if (!j.at("at").is_number_integer() || j.at("at").get<long long>() < 0) bad("'at' must be a non-negative integer");
        s.at = j.at("at").get<unsigned>();
    }
    if (j.contains("children")) {
        if (!j.at("children").is_array()) bad("'children' must be a list");
        for (const auto& c : j.at("children")) s.children.push_back(cactus_spec_from_json(c));
    }
    return s;
}

nlohmann::ordered_json cactus_spec_to_json(const CactusSpec& spec) {
    nlohmann::ordered_json j;
    j["length"] = spec.length;
    if (spec.at) j["at"] = *spec.at;
    if (!spec.children.empty()) {
        j["children"] = nlohmann::ordered_json::array();
        for (const auto& c : spec.children) j["children"].push_back(cactus_spec_to_json(c));
    }
    return j;
}

namespace {

struct FlatDisk {
    unsigned length;
    std::size_t parent;  // SIZE_MAX for the root
    unsigned at;
};

void flatten(const CactusSpec& s, std::size_t parent, unsigned default_at, std::vector<FlatDisk>& out) {
    std::size_t me = out.size();
    unsigned at = s.at.value_or(default_at);
    if (parent != SIZE_MAX && at >= out[parent].length)
        throw InvalidMapError("bad_cactus_spec", "child attaches at position " + std::to_string(at) +
                                                     " of a cycle of length " + std::to_string(out[parent].length));
    out.push_back({s.length, parent, at});
    const unsigned first = parent == SIZE_MAX ? 0 : 1;
    for (std::size_t i = 0; i < s.children.size(); ++i)
        flatten(s.children[i], me, static_cast<unsigned>((first + i) % s.length), out);
}

// Groups (disk, position) into points shared by attached disks.
std::vector<std::size_t> point_classes(const std::vector<FlatDisk>& disks, std::vector<std::size_t>& offset) {
    offset.assign(disks.size() + 1, 0);
    for (std::size_t i = 0; i < disks.size(); ++i) offset[i + 1] = offset[i] + disks[i].length;
    std::vector<std::size_t> parent(offset.back());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (std::size_t i = 0; i < disks.size(); ++i)
        if (disks[i].parent != SIZE_MAX) {
            std::size_t a = find(offset[i]), b = find(offset[disks[i].parent] + disks[i].at);
            if (a < b) std::swap(a, b);
            parent[a] = b;
        }
    std::vector<std::size_t> cls(parent.size());
    for (std::size_t x = 0; x < parent.size(); ++x) cls[x] = find(x);
    return cls;
}

std::string tree_signature(const std::vector<std::string>& label, const std::vector<std::vector<std::size_t>>& adj) {
    const std::size_t n = label.size();
    if (n == 1) return "(" + label[0] + ")";
    std::vector<std::size_t> deg(n);
    std::vector<std::size_t> layer;
    for (std::size_t v = 0; v < n; ++v) {
        deg[v] = adj[v].size();
        if (deg[v] <= 1) layer.push_back(v);
    }
    std::size_t left = n;
    while (left > 2) {
        left -= layer.size();
        std::vector<std::size_t> next;
        for (auto v : layer)
            for (auto w : adj[v])
                if (--deg[w] == 1) next.push_back(w);
        layer = std::move(next);
    }
    std::function<std::string(std::size_t, std::size_t)> enc = [&](std::size_t v, std::size_t from) {
        std::vector<std::string> parts;
        for (auto w : adj[v])
            if (w != from) parts.push_back(enc(w, v));
        std::sort(parts.begin(), parts.end());
        std::string s = "(" + label[v];
        for (auto& p : parts) s += p;
        return s + ")";
    };
    std::string best;
    for (auto c : layer) {
        auto s = enc(c, SIZE_MAX);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

std::string bipartite_signature(const std::vector<std::size_t>& lengths,
                                const std::vector<std::vector<std::size_t>>& shared) {
    std::vector<std::string> label;
    for (auto l : lengths) label.push_back("D" + std::to_string(l));
    std::vector<std::vector<std::size_t>> adj(lengths.size());
    for (const auto& point : shared) {
        std::size_t p = label.size();
        label.push_back("V");
        adj.emplace_back();
        for (auto d : point) {
            adj[p].push_back(d);
            adj[d].push_back(p);
        }
    }
    return tree_signature(label, adj);
}

}  // namespace

OrientedMap generate_cactus(const CactusSpec& spec) {
    std::vector<FlatDisk> disks;
    flatten(spec, SIZE_MAX, 0, disks);
    std::vector<std::size_t> offset;
    auto cls = point_classes(disks, offset);

    // edge (disk i, position p) runs from position p to p + 1; darts 2e, 2e + 1
    const std::size_t edges_total = offset.back();
    auto edge_id = [&](std::size_t i, std::size_t p) { return offset[i] + p % disks[i].length; };
    std::map<std::size_t, std::vector<Dart>> rotation;  // point -> darts
    for (std::size_t i = 0; i < disks.size(); ++i)
        for (std::size_t p = 0; p < disks[i].length; ++p) {
            auto& r = rotation[cls[offset[i] + p]];
            r.push_back(static_cast<Dart>(2 * edge_id(i, p + disks[i].length - 1) + 1));
            r.push_back(static_cast<Dart>(2 * edge_id(i, p)));
        }
    const std::size_t n = 2 * edges_total;
    std::vector<Dart> alpha(n), sigma(n);
    std::vector<bool> fwd(n);
    for (Dart d = 0; d < n; ++d) {
        alpha[d] = d ^ 1u;
        fwd[d] = d % 2 == 0;
    }
    for (auto& [pt, r] : rotation)
        for (std::size_t i = 0; i < r.size(); ++i) sigma[r[i]] = r[(i + 1) % r.size()];
    return OrientedMap(std::move(alpha), std::move(sigma), std::move(fwd));
}

std::string cactus_tree_signature(const CactusSpec& spec) {
    std::vector<FlatDisk> disks;
    flatten(spec, SIZE_MAX, 0, disks);
    std::vector<std::size_t> offset;
    auto cls = point_classes(disks, offset);
    std::map<std::size_t, std::set<std::size_t>> at;
    for (std::size_t i = 0; i < disks.size(); ++i)
        for (std::size_t p = 0; p < disks[i].length; ++p) at[cls[offset[i] + p]].insert(i);
    std::vector<std::size_t> lengths;
    for (const auto& d : disks) lengths.push_back(d.length);
    std::vector<std::vector<std::size_t>> shared;
    for (auto& [pt, ds] : at)
        if (ds.size() > 1) shared.emplace_back(ds.begin(), ds.end());
    return bipartite_signature(lengths, shared);
}

std::string cactus_tree_signature(const CactusDecomposition& dec) {
    std::vector<std::vector<std::size_t>> shared;
    for (const auto& s : dec.shared_vertices) shared.push_back(s.disks);
    return bipartite_signature(dec.disk_lengths(), shared);
}

}  // namespace semiribbon
