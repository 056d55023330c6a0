#pragma once

#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "semiribbon/oriented_map.hpp"

namespace semiribbon {

using BigInt = boost::multiprecision::cpp_int;

// Underlying digraph; edge i is the i-th edge of edges(map).
struct DirectedGraphView {
    std::size_t vertex_count = 0;
    std::vector<std::size_t> tail, head;
    std::vector<Dart> edge_dart;  // forward dart, empty for hand-built graphs

    static DirectedGraphView from_map(const OrientedMap& map);
    static DirectedGraphView from_edges(std::size_t vertex_count,
                                        const std::vector<std::pair<std::size_t, std::size_t>>& arcs);

    std::size_t edge_count() const { return tail.size(); }
    std::size_t edge_of_dart(Dart d) const;  // throws if d is no forward dart
};

bool is_eulerian(const DirectedGraphView& g);

// Fraction-free elimination; the matrix is taken by value.
BigInt determinant_bareiss(std::vector<std::vector<BigInt>> m);

// Spanning arborescences oriented toward `root`.
BigInt count_arborescences(const DirectedGraphView& g, std::size_t root);

// Eulerian circuits whose first edge is start_edge.
BigInt count_eulerian_circuits_best(const DirectedGraphView& g, std::size_t start_edge);

struct CircuitEnumeration {
    std::vector<std::vector<std::size_t>> circuits;  // edge indices, first = start_edge
    std::size_t count = 0;
    bool truncated = false;
};

// Backtracking in increasing edge order.  At most `limit` circuits are
// stored; counting stops once limit + 1 would be reached (truncated).
CircuitEnumeration enumerate_eulerian_circuits(const DirectedGraphView& g, std::size_t start_edge,
                                               std::size_t limit);

}  // namespace semiribbon
