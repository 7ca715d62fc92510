#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gjs/graph.hpp"

namespace gjs {

// A path is a start vertex followed by a sequence of composable edges.
// vertices[i] is the vertex reached after i edges.
struct Path {
  std::vector<int> vertices;
  std::vector<int> edges;

  int length() const { return static_cast<int>(edges.size()); }
  int start() const { return vertices.front(); }
  int finish() const { return vertices.back(); }
  bool is_loop() const { return start() == finish(); }

  // 1-based edge access, matching the usual xi_1 ... xi_n labelling.
  int edge_at(int i) const { return edges[static_cast<std::size_t>(i - 1)]; }

  friend bool operator==(const Path& a, const Path& b) {
    return a.vertices.front() == b.vertices.front() && a.edges == b.edges;
  }
  // Length first, then start vertex, then edges lexicographically.
  friend std::strong_ordering operator<=>(const Path& a, const Path& b);
};

Path trivial_path(int v);
// Validates composability; throws InputError otherwise.
Path make_path(const Graph& g, int start, const std::vector<int>& edges);
// Path through the given vertices; with parallel edges pick[i] selects which.
Path path_through(const Graph& g, const std::vector<int>& vertices,
                  const std::vector<int>& pick = {});
Path reverse(const Graph& g, const Path& p);
// Concatenation; throws PreconditionError if p.finish != q.start.
Path concat(const Path& p, const Path& q);
// The subpath between vertex positions i <= j.
Path subpath(const Path& p, int i, int j);

// All paths of the given length, optionally with fixed endpoints, in order.
std::vector<Path> enumerate_paths(const Graph& g, int length,
                                  std::optional<int> start = std::nullopt,
                                  std::optional<int> finish = std::nullopt);
std::vector<Path> enumerate_paths_upto(const Graph& g, int max_length,
                                       std::optional<int> start = std::nullopt,
                                       std::optional<int> finish = std::nullopt);

std::string to_string(const Graph& g, const Path& p);

}  // namespace gjs
