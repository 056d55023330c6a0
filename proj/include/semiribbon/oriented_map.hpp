#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <vector>

namespace semiribbon {

using Dart = std::uint32_t;
inline constexpr Dart kNoDart = std::numeric_limits<Dart>::max();

struct FaceDecoration {
    Dart rep = 0;  // least dart of the decorated face
    unsigned extra_genus = 0;
    unsigned punctures = 0;

    auto operator<=>(const FaceDecoration&) const = default;
};

// Presentation-only names, keyed by any dart of the vertex / edge.
struct Labels {
    std::map<Dart, std::string> vertices;
    std::map<Dart, std::string> edges;

    bool empty() const { return vertices.empty() && edges.empty(); }
    bool operator==(const Labels&) const = default;
};

// Rotation system: alpha pairs the two ends of an edge, sigma turns
// counterclockwise around a vertex, forward marks the tail end of each edge.
class OrientedMap {
public:
    OrientedMap() = default;
    OrientedMap(std::vector<Dart> alpha, std::vector<Dart> sigma, std::vector<bool> forward,
                std::vector<FaceDecoration> decorations = {}, Labels labels = {});

    std::size_t dart_count() const { return alpha_.size(); }
    std::size_t edge_count() const { return alpha_.size() / 2; }

    Dart alpha(Dart d) const { return alpha_[d]; }
    Dart sigma(Dart d) const { return sigma_[d]; }
    Dart sigma_inv(Dart d) const { return sigma_inv_[d]; }
    Dart phi(Dart d) const { return sigma_[alpha_[d]]; }
    bool is_forward(Dart d) const { return forward_[d]; }

    const std::vector<Dart>& alpha_array() const { return alpha_; }
    const std::vector<Dart>& sigma_array() const { return sigma_; }
    const std::vector<bool>& forward_array() const { return forward_; }
    const std::vector<FaceDecoration>& decorations() const { return decorations_; }
    const Labels& labels() const { return labels_; }

    // Zero decoration when the face carries none.
    FaceDecoration decoration_of(Dart face_rep) const;
    bool has_decorations() const { return !decorations_.empty(); }

    OrientedMap without_decorations() const;
    OrientedMap with_decorations(std::vector<FaceDecoration> decorations) const;
    OrientedMap without_labels() const;

    bool operator==(const OrientedMap& other) const;

private:
    std::vector<Dart> alpha_;
    std::vector<Dart> sigma_;
    std::vector<Dart> sigma_inv_;
    std::vector<bool> forward_;
    std::vector<FaceDecoration> decorations_;  // sorted by rep
    Labels labels_;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate(const OrientedMap& map);
// Throws InvalidMapError listing every violation.
void require_valid(const OrientedMap& map);

struct Edge {
    Dart forward;
    Dart backward;
};

std::vector<std::vector<Dart>> vertices(const OrientedMap& map);
std::vector<Edge> edges(const OrientedMap& map);
std::vector<std::vector<Dart>> faces(const OrientedMap& map);

// Representative (least dart) of the sigma / phi orbit containing each dart.
std::vector<Dart> vertex_reps(const OrientedMap& map);
std::vector<Dart> face_reps(const OrientedMap& map);

std::vector<std::vector<Dart>> components(const OrientedMap& map);
std::vector<Dart> component_reps(const OrientedMap& map);

struct ComponentGenus {
    Dart rep = 0;  // least dart of the component
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::size_t faces = 0;
    unsigned map_genus = 0;
    unsigned genus = 0;  // map genus plus decorations
    unsigned punctures = 0;
};

// Throws InvalidMapError on an odd Euler defect.
std::vector<ComponentGenus> genus(const OrientedMap& map);
unsigned total_genus(const std::vector<ComponentGenus>& gs);

OrientedMap reverse_orientation(const OrientedMap& map);

// Darts of `map` relabeled by old -> new permutation.
OrientedMap relabel(const OrientedMap& map, const std::vector<Dart>& perm);

OrientedMap disjoint_union(const OrientedMap& a, const OrientedMap& b);

// Face orbit of a dart, starting at it.
std::vector<Dart> face_walk(const OrientedMap& map, Dart d);
std::vector<Dart> vertex_darts(const OrientedMap& map, Dart d);

namespace detail {

// Rebuilds a map after a surgery.  `removed` darts are compacted away;
// decorations of `old_map` travel along `carrier` (old dart -> dart of the
// uncompacted new arrays, kNoDart when gone).  Returns old -> final ids.
struct Rebuilt {
    OrientedMap map;
    std::vector<Dart> compact;  // uncompacted id -> final id
};

Rebuilt rebuild(const OrientedMap& old_map, std::vector<Dart> alpha, std::vector<Dart> sigma,
                std::vector<bool> forward, const std::vector<bool>& removed,
                const std::vector<Dart>& carrier,
                const std::vector<FaceDecoration>& extra = {});

}  // namespace detail

}  // namespace semiribbon
