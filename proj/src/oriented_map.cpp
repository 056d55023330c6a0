#include "semiribbon/oriented_map.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "semiribbon/errors.hpp"

namespace semiribbon {

namespace {

std::vector<Dart> orbit_reps(std::size_t n, auto&& step) {
    std::vector<Dart> rep(n, kNoDart);
    for (Dart d = 0; d < n; ++d) {
        if (rep[d] != kNoDart) continue;
        Dart x = d;
        do {
            rep[x] = d;
            x = step(x);
        } while (x != d);
    }
    return rep;
}

std::vector<std::vector<Dart>> orbits(std::size_t n, auto&& step) {
    std::vector<std::vector<Dart>> out;
    std::vector<bool> seen(n, false);
    for (Dart d = 0; d < n; ++d) {
        if (seen[d]) continue;
        auto& orb = out.emplace_back();
        Dart x = d;
        do {
            seen[x] = true;
            orb.push_back(x);
            x = step(x);
        } while (x != d);
    }
    return out;
}

std::vector<FaceDecoration> normalized(std::vector<FaceDecoration> decos) {
    std::sort(decos.begin(), decos.end());
    return decos;
}

}  // namespace

OrientedMap::OrientedMap(std::vector<Dart> alpha, std::vector<Dart> sigma, std::vector<bool> forward,
                         std::vector<FaceDecoration> decorations, Labels labels)
    : alpha_(std::move(alpha)),
      sigma_(std::move(sigma)),
      forward_(std::move(forward)),
      decorations_(normalized(std::move(decorations))),
      labels_(std::move(labels)) {
    // inverse is only meaningful for a permutation; validate() reports the rest
    sigma_inv_.assign(sigma_.size(), kNoDart);
    for (Dart d = 0; d < sigma_.size(); ++d)
        if (sigma_[d] < sigma_.size()) sigma_inv_[sigma_[d]] = d;
}

FaceDecoration OrientedMap::decoration_of(Dart face_rep) const {
    auto it = std::lower_bound(decorations_.begin(), decorations_.end(), face_rep,
                               [](const FaceDecoration& f, Dart r) { return f.rep < r; });
    if (it != decorations_.end() && it->rep == face_rep) return *it;
    return FaceDecoration{face_rep, 0, 0};
}

OrientedMap OrientedMap::without_decorations() const {
    return OrientedMap(alpha_, sigma_, forward_, {}, labels_);
}

OrientedMap OrientedMap::with_decorations(std::vector<FaceDecoration> decorations) const {
    return OrientedMap(alpha_, sigma_, forward_, std::move(decorations), labels_);
}

OrientedMap OrientedMap::without_labels() const {
    return OrientedMap(alpha_, sigma_, forward_, decorations_, {});
}

bool OrientedMap::operator==(const OrientedMap& o) const {
    return alpha_ == o.alpha_ && sigma_ == o.sigma_ && forward_ == o.forward_ &&
           decorations_ == o.decorations_ && labels_ == o.labels_;
}

ValidationReport validate(const OrientedMap& map) {
    ValidationReport rep;
    auto& v = rep.violations;
    const std::size_t n = map.dart_count();
    const auto& alpha = map.alpha_array();
    const auto& sigma = map.sigma_array();
    const auto& fwd = map.forward_array();

    if (n == 0) {
        v.push_back("map has no darts");
        return rep;
    }
    if (sigma.size() != n) v.push_back("sigma has " + std::to_string(sigma.size()) + " entries, expected " + std::to_string(n));
    if (fwd.size() != n) v.push_back("forward marking has wrong length");
    if (!v.empty()) return rep;

    bool alpha_ok = true;
    for (Dart d = 0; d < n; ++d) {
        if (alpha[d] >= n) {
            v.push_back("alpha(" + std::to_string(d) + ") out of range");
            alpha_ok = false;
        } else if (alpha[d] == d) {
            v.push_back("alpha has fixed point " + std::to_string(d));
            alpha_ok = false;
        } else if (alpha[alpha[d]] != d) {
            v.push_back("alpha is not an involution at " + std::to_string(d));
            alpha_ok = false;
        }
    }

    bool sigma_ok = true;
    std::vector<int> hits(n, 0);
    for (Dart d = 0; d < n; ++d) {
        if (sigma[d] >= n) {
            v.push_back("sigma(" + std::to_string(d) + ") out of range");
            sigma_ok = false;
        } else {
            ++hits[sigma[d]];
        }
    }
    if (sigma_ok)
        for (Dart d = 0; d < n; ++d)
            if (hits[d] != 1) {
                v.push_back("dart " + std::to_string(d) + " appears " + std::to_string(hits[d]) + " times in sigma");
                sigma_ok = false;
            }

    if (alpha_ok)
        for (Dart d = 0; d < n; ++d) {
            Dart e = alpha[d];
            if (d > e) continue;
            std::string edge = "edge {" + std::to_string(d) + "," + std::to_string(e) + "}";
            if (fwd[d] && fwd[e]) v.push_back(edge + " has two forward darts");
            if (!fwd[d] && !fwd[e]) v.push_back(edge + " has no forward dart");
        }

    std::vector<Dart> freps;
    if (alpha_ok && sigma_ok) freps = face_reps(map);
    Dart prev = kNoDart;
    for (const auto& f : map.decorations()) {
        std::string tag = "decoration on " + std::to_string(f.rep);
        if (f.rep >= n) {
            v.push_back(tag + " names no dart");
        } else if (!freps.empty() && freps[f.rep] != f.rep) {
            v.push_back(tag + " is not a face representative (face rep is " + std::to_string(freps[f.rep]) + ")");
        }
        if (f.rep == prev) v.push_back(tag + " is duplicated");
        prev = f.rep;
    }

    for (const auto& [d, name] : map.labels().vertices)
        if (d >= n) v.push_back("vertex label '" + name + "' names no dart");
    for (const auto& [d, name] : map.labels().edges)
        if (d >= n) v.push_back("edge label '" + name + "' names no dart");
    return rep;
}

void require_valid(const OrientedMap& map) {
    auto rep = validate(map);
    if (rep.ok()) return;
    std::ostringstream os;
    os << "invalid map: " << rep.violations.front();
    if (rep.violations.size() > 1) os << " (+" << rep.violations.size() - 1 << " more)";
    throw InvalidMapError("invalid_map", os.str(), rep.violations);
}

std::vector<std::vector<Dart>> vertices(const OrientedMap& map) {
    return orbits(map.dart_count(), [&](Dart d) { return map.sigma(d); });
}

std::vector<Edge> edges(const OrientedMap& map) {
    std::vector<Edge> out;
    for (Dart d = 0; d < map.dart_count(); ++d) {
        Dart e = map.alpha(d);
        if (d > e) continue;
        out.push_back(map.is_forward(d) ? Edge{d, e} : Edge{e, d});
    }
    return out;
}

std::vector<std::vector<Dart>> faces(const OrientedMap& map) {
    return orbits(map.dart_count(), [&](Dart d) { return map.phi(d); });
}

std::vector<Dart> vertex_reps(const OrientedMap& map) {
    return orbit_reps(map.dart_count(), [&](Dart d) { return map.sigma(d); });
}

std::vector<Dart> face_reps(const OrientedMap& map) {
    return orbit_reps(map.dart_count(), [&](Dart d) { return map.phi(d); });
}

std::vector<Dart> component_reps(const OrientedMap& map) {
    const std::size_t n = map.dart_count();
    std::vector<Dart> rep(n, kNoDart);
    std::vector<Dart> stack;
    for (Dart s = 0; s < n; ++s) {
        if (rep[s] != kNoDart) continue;
        rep[s] = s;
        stack.push_back(s);
        while (!stack.empty()) {
            Dart d = stack.back();
            stack.pop_back();
            for (Dart e : {map.alpha(d), map.sigma(d), map.sigma_inv(d)})
                if (rep[e] == kNoDart) {
                    rep[e] = s;
                    stack.push_back(e);
                }
        }
    }
    return rep;
}

std::vector<std::vector<Dart>> components(const OrientedMap& map) {
    auto rep = component_reps(map);
    std::map<Dart, std::vector<Dart>> by;
    for (Dart d = 0; d < rep.size(); ++d) by[rep[d]].push_back(d);
    std::vector<std::vector<Dart>> out;
    for (auto& [r, ds] : by) out.push_back(std::move(ds));
    return out;
}

std::vector<ComponentGenus> genus(const OrientedMap& map) {
    auto crep = component_reps(map);
    auto vrep = vertex_reps(map);
    auto frep = face_reps(map);
    std::map<Dart, ComponentGenus> acc;
    for (Dart d = 0; d < map.dart_count(); ++d) {
        auto& g = acc[crep[d]];
        g.rep = crep[d];
        if (vrep[d] == d) ++g.vertices;
        if (frep[d] == d) ++g.faces;
        if (map.is_forward(d)) ++g.edges;
    }
    for (const auto& f : map.decorations()) {
        auto& g = acc[crep[f.rep]];
        g.genus += f.extra_genus;
        g.punctures += f.punctures;
    }
    std::vector<ComponentGenus> out;
    for (auto& [r, g] : acc) {
        long defect = 2 - static_cast<long>(g.vertices) + static_cast<long>(g.edges) - static_cast<long>(g.faces);
        if (defect < 0 || defect % 2 != 0)
            throw InvalidMapError("odd_euler_defect", "Euler defect " + std::to_string(defect) +
                                                          " in component of dart " + std::to_string(r));
        g.map_genus = static_cast<unsigned>(defect / 2);
        g.genus += g.map_genus;
        out.push_back(g);
    }
    return out;
}

unsigned total_genus(const std::vector<ComponentGenus>& gs) {
    unsigned t = 0;
    for (const auto& g : gs) t += g.genus;
    return t;
}

OrientedMap reverse_orientation(const OrientedMap& map) {
    const std::size_t n = map.dart_count();
    std::vector<Dart> sigma(n);
    for (Dart d = 0; d < n; ++d) sigma[d] = map.sigma_inv(d);
    OrientedMap bare(map.alpha_array(), sigma, map.forward_array());
    // the face through alpha(rep) in the reversed map is the mirror of the old face
    auto nrep = face_reps(bare);
    std::vector<FaceDecoration> decos;
    for (auto f : map.decorations()) {
        f.rep = nrep[map.alpha(f.rep)];
        decos.push_back(f);
    }
    return OrientedMap(map.alpha_array(), std::move(sigma), map.forward_array(), std::move(decos), map.labels());
}

OrientedMap relabel(const OrientedMap& map, const std::vector<Dart>& perm) {
    const std::size_t n = map.dart_count();
    std::vector<Dart> alpha(n), sigma(n);
    std::vector<bool> fwd(n);
    for (Dart d = 0; d < n; ++d) {
        alpha[perm[d]] = perm[map.alpha(d)];
        sigma[perm[d]] = perm[map.sigma(d)];
        fwd[perm[d]] = map.is_forward(d);
    }
    OrientedMap bare(alpha, sigma, fwd);
    auto nrep = face_reps(bare);
    std::vector<FaceDecoration> decos;
    for (auto f : map.decorations()) {
        f.rep = nrep[perm[f.rep]];
        decos.push_back(f);
    }
    Labels labels;
    for (const auto& [d, s] : map.labels().vertices) labels.vertices[perm[d]] = s;
    for (const auto& [d, s] : map.labels().edges) labels.edges[perm[d]] = s;
    return OrientedMap(std::move(alpha), std::move(sigma), std::move(fwd), std::move(decos), std::move(labels));
}

OrientedMap disjoint_union(const OrientedMap& a, const OrientedMap& b) {
    const Dart off = static_cast<Dart>(a.dart_count());
    std::vector<Dart> alpha = a.alpha_array(), sigma = a.sigma_array();
    std::vector<bool> fwd = a.forward_array();
    for (Dart d = 0; d < b.dart_count(); ++d) {
        alpha.push_back(b.alpha(d) + off);
        sigma.push_back(b.sigma(d) + off);
        fwd.push_back(b.is_forward(d));
    }
    auto decos = a.decorations();
    for (auto f : b.decorations()) {
        f.rep += off;
        decos.push_back(f);
    }
    return OrientedMap(std::move(alpha), std::move(sigma), std::move(fwd), std::move(decos));
}

std::vector<Dart> face_walk(const OrientedMap& map, Dart d) {
    std::vector<Dart> out;
    Dart x = d;
    do {
        out.push_back(x);
        x = map.phi(x);
    } while (x != d);
    return out;
}

std::vector<Dart> vertex_darts(const OrientedMap& map, Dart d) {
    std::vector<Dart> out;
    Dart x = d;
    do {
        out.push_back(x);
        x = map.sigma(x);
    } while (x != d);
    return out;
}

namespace detail {

Rebuilt rebuild(const OrientedMap& old_map, std::vector<Dart> alpha, std::vector<Dart> sigma,
                std::vector<bool> forward, const std::vector<bool>& removed,
                const std::vector<Dart>& carrier, const std::vector<FaceDecoration>& extra) {
    const std::size_t m = alpha.size();
    std::vector<Dart> compact(m, kNoDart);
    Dart next = 0;
    for (Dart d = 0; d < m; ++d)
        if (!removed[d]) compact[d] = next++;

    std::vector<Dart> a(next), s(next);
    std::vector<bool> f(next);
    for (Dart d = 0; d < m; ++d) {
        if (removed[d]) continue;
        a[compact[d]] = compact[alpha[d]];
        s[compact[d]] = compact[sigma[d]];
        f[compact[d]] = forward[d];
    }
    OrientedMap bare(a, s, f);
    auto nrep = face_reps(bare);

    std::map<Dart, FaceDecoration> acc;
    auto add = [&](Dart new_dart, unsigned eg, unsigned p) {
        if (eg == 0 && p == 0) return;
        auto& slot = acc[nrep[new_dart]];
        slot.rep = nrep[new_dart];
        slot.extra_genus += eg;
        slot.punctures += p;
    };
    for (const auto& deco : old_map.decorations()) {
        Dart x = deco.rep;
        Dart landing = kNoDart;
        do {
            if (carrier[x] != kNoDart && compact[carrier[x]] != kNoDart) {
                landing = compact[carrier[x]];
                break;
            }
            x = old_map.phi(x);
        } while (x != deco.rep);
        if (landing == kNoDart)
            throw PreconditionError("decoration_lost", "decoration on face " + std::to_string(deco.rep) +
                                                           " has no surviving face");
        add(landing, deco.extra_genus, deco.punctures);
    }
    for (const auto& deco : extra) add(compact[deco.rep], deco.extra_genus, deco.punctures);

    std::vector<FaceDecoration> decos;
    for (auto& [r, deco] : acc) decos.push_back(deco);
    return Rebuilt{OrientedMap(std::move(a), std::move(s), std::move(f), std::move(decos)), std::move(compact)};
}

}  // namespace detail

}  // namespace semiribbon
