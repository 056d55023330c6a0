#include "semiribbon/euler.hpp"

#include <functional>
#include <map>
#include <numeric>

#include "semiribbon/errors.hpp"

namespace semiribbon {

DirectedGraphView DirectedGraphView::from_map(const OrientedMap& map) {
    DirectedGraphView g;
    auto vrep = vertex_reps(map);
    std::map<Dart, std::size_t> index;
    for (Dart d = 0; d < map.dart_count(); ++d)
        if (vrep[d] == d) index[d] = index.size();
    g.vertex_count = index.size();
    for (const auto& e : edges(map)) {
        g.tail.push_back(index[vrep[e.forward]]);
        g.head.push_back(index[vrep[e.backward]]);
        g.edge_dart.push_back(e.forward);
    }
    return g;
}

DirectedGraphView DirectedGraphView::from_edges(std::size_t vertex_count,
                                                const std::vector<std::pair<std::size_t, std::size_t>>& arcs) {
    DirectedGraphView g;
    g.vertex_count = vertex_count;
    for (auto [t, h] : arcs) {
        if (t >= vertex_count || h >= vertex_count) throw PreconditionError("vertex_out_of_range", "arc endpoint out of range");
        g.tail.push_back(t);
        g.head.push_back(h);
    }
    return g;
}

std::size_t DirectedGraphView::edge_of_dart(Dart d) const {
    for (std::size_t i = 0; i < edge_dart.size(); ++i)
        if (edge_dart[i] == d) return i;
    throw PreconditionError("not_an_edge", "dart " + std::to_string(d) + " is not a forward dart");
}

bool is_eulerian(const DirectedGraphView& g) {
    if (g.vertex_count == 0) return false;
    std::vector<long> balance(g.vertex_count, 0);
    std::vector<std::size_t> parent(g.vertex_count);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        ++balance[g.tail[i]];
        --balance[g.head[i]];
        parent[find(g.tail[i])] = find(g.head[i]);
    }
    for (std::size_t v = 0; v < g.vertex_count; ++v) {
        if (balance[v] != 0) return false;
        if (find(v) != find(0)) return false;
    }
    return true;
}

BigInt determinant_bareiss(std::vector<std::vector<BigInt>> m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    BigInt sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

BigInt count_arborescences(const DirectedGraphView& g, std::size_t root) {
    const std::size_t n = g.vertex_count;
    if (root >= n) throw PreconditionError("vertex_out_of_range", "root out of range");
    // out-degree Laplacian: arborescences directed toward the root
    std::vector<std::vector<BigInt>> lap(n, std::vector<BigInt>(n, 0));
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
        std::size_t t = g.tail[i], h = g.head[i];
        if (t == h) continue;
        lap[t][t] += 1;
        lap[t][h] -= 1;
    }
    std::vector<std::vector<BigInt>> reduced;
    for (std::size_t r = 0; r < n; ++r) {
        if (r == root) continue;
        auto& row = reduced.emplace_back();
        for (std::size_t c = 0; c < n; ++c)
            if (c != root) row.push_back(lap[r][c]);
    }
    return determinant_bareiss(std::move(reduced));
}

BigInt count_eulerian_circuits_best(const DirectedGraphView& g, std::size_t start_edge) {
    if (!is_eulerian(g)) throw PreconditionError("not_eulerian", "graph is not Eulerian");
    if (start_edge >= g.edge_count()) throw PreconditionError("not_an_edge", "start edge out of range");
    BigInt count = count_arborescences(g, g.tail[start_edge]);
    std::vector<std::size_t> outdeg(g.vertex_count, 0);
    for (auto t : g.tail) ++outdeg[t];
    for (auto d : outdeg)
        for (std::size_t f = 2; f < d; ++f) count *= f;
    return count;
}

CircuitEnumeration enumerate_eulerian_circuits(const DirectedGraphView& g, std::size_t start_edge, std::size_t limit) {
    if (!is_eulerian(g)) throw PreconditionError("not_eulerian", "graph is not Eulerian");
    if (start_edge >= g.edge_count()) throw PreconditionError("not_an_edge", "start edge out of range");
    const std::size_t m = g.edge_count();
    std::vector<std::vector<std::size_t>> out_of(g.vertex_count);
    for (std::size_t i = 0; i < m; ++i) out_of[g.tail[i]].push_back(i);

    CircuitEnumeration res;
    std::vector<bool> used(m, false);
    std::vector<std::size_t> path{start_edge};
    used[start_edge] = true;
    const std::size_t origin = g.tail[start_edge];
    std::function<bool(std::size_t)> go = [&](std::size_t v) {
        if (path.size() == m) {
            if (v != origin) return true;
            if (res.count == limit) {
                res.truncated = true;
                return false;
            }
            ++res.count;
            res.circuits.push_back(path);
            return true;
        }
        for (std::size_t e : out_of[v]) {
            if (used[e]) continue;
            used[e] = true;
            path.push_back(e);
            bool more = go(g.head[e]);
            path.pop_back();
            used[e] = false;
            if (!more) return false;
        }
        return true;
    };
    go(g.head[start_edge]);
    return res;
}

}  // namespace semiribbon
