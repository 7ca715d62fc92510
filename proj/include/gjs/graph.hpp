#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "gjs/errors.hpp"

namespace gjs {

enum class Parity { Even, Odd };

struct Vertex {
  std::string id;
  Parity parity;
  double mu2;
};

// Directed edge. Every edge has a reversal with swapped endpoints.
struct Edge {
  int start;
  int finish;
  int reversal;
};

struct VertexSpec {
  std::string id;
  Parity parity = Parity::Even;
  std::optional<double> weight2;
};

struct EdgeSpec {
  std::string u;
  std::string v;
  int mult = 1;
};

struct GraphSpec {
  std::vector<VertexSpec> vertices;
  std::vector<EdgeSpec> edges;
  std::optional<std::string> star;
};

// Weighted bipartite multigraph. Weights satisfy sum(mu2) == 1.
//
// Each undirected edge of multiplicity k yields k pairs of directed edges.
// Edge 2j always runs even -> odd and edge 2j+1 is its reversal.
class Graph {
 public:
  Graph() = default;

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int undirected_edge_count() const { return edge_count() / 2; }

  const Vertex& vertex(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }
  const Edge& edge(int e) const { return edges_.at(static_cast<std::size_t>(e)); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  int vertex_index(std::string_view id) const;
  bool has_vertex(std::string_view id) const;

  double mu2(int v) const { return vertex(v).mu2; }
  double mu(int v) const;
  Parity parity(int v) const { return vertex(v).parity; }
  int reversal(int e) const { return edge(e).reversal; }

  // Outgoing edges of v in increasing id order.
  std::span<const int> out_edges(int v) const;
  // Number of edges v -> w.
  int multiplicity(int v, int w) const;
  int degree(int v) const { return static_cast<int>(out_edges(v).size()); }

  std::optional<int> star() const { return star_; }
  Graph with_star(int v) const;
  // Replace weights; the input is renormalized to sum 1.
  Graph with_weights(std::span<const double> mu2) const;

  bool is_connected() const;
  std::vector<std::vector<int>> components() const;
  std::vector<int> vertices_of(Parity p) const;

  friend Graph build_graph(const GraphSpec& spec);

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_;
  std::unordered_map<std::string, int> index_;
  std::optional<int> star_;
};

using GraphPtr = std::shared_ptr<const Graph>;

// Builds a graph. If no vertex carries weight2 the weighting is
// Perron-Frobenius; if all do they are normalized; a mix is an error.
Graph build_graph(const GraphSpec& spec);
GraphPtr make_graph(const GraphSpec& spec);
// Spec reproducing g exactly, weights included.
GraphSpec to_spec(const Graph& g);

struct PFWeighting {
  Graph graph;
  double delta;
  int iterations;
};

// Perron-Frobenius weighting of a connected graph by power iteration.
PFWeighting pf_weighting(const Graph& g, double tol = 1e-12, int max_iter = 100000);

// delta(v) = sum over edges v->w of (mu(w)/mu(v))^2.
double delta_at(const Graph& g, int v);
double max_delta(const Graph& g);
// True if delta(v) is constant over all vertices up to tol.
bool is_pf_weighted(const Graph& g, double tol = 1e-9);

struct Subgraph {
  Graph graph;
  // Sum of the parent weights of the kept vertices.
  double gamma;
  // Parent vertex index of each kept vertex.
  std::vector<int> parent_vertex;
};

// Induced subgraph on the even vertices together with w, renormalized.
Subgraph star_subgraph(const Graph& g, int w);
// Induced subgraph on an arbitrary vertex set, renormalized.
Subgraph induced_subgraph(const Graph& g, std::span<const int> keep);

namespace graphs {
// Path graph on n vertices, first vertex even, PF weighted.
GraphPtr a_n(int n);
// One odd centre joined to n even leaves, PF weighted.
GraphPtr k1n(int n);
// One even vertex and one odd vertex joined by q edges, weights alpha, beta.
GraphPtr omega(int q, double alpha, double beta);
// v1 =2= w -- v2, PF weighted.
GraphPtr double_edge();
// Line v1 - w1 - v2 - w2 - v3, PF weighted; has two odd vertices.
GraphPtr two_odd_line();
}  // namespace graphs

}  // namespace gjs
