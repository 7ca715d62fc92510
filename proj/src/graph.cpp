#include "gjs/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace gjs {

int Graph::vertex_index(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) throw InputError("unknown vertex '" + std::string(id) + "'");
  return it->second;
}

bool Graph::has_vertex(std::string_view id) const {
  return index_.count(std::string(id)) != 0;
}

double Graph::mu(int v) const { return std::sqrt(mu2(v)); }

std::span<const int> Graph::out_edges(int v) const {
  return out_.at(static_cast<std::size_t>(v));
}

int Graph::multiplicity(int v, int w) const {
  int n = 0;
  for (int e : out_edges(v))
    if (edges_[e].finish == w) ++n;
  return n;
}

Graph Graph::with_star(int v) const {
  if (v < 0 || v >= vertex_count()) throw InputError("star vertex out of range");
  Graph g = *this;
  g.star_ = v;
  return g;
}

Graph Graph::with_weights(std::span<const double> mu2) const {
  if (static_cast<int>(mu2.size()) != vertex_count())
    throw InputError("weight vector has wrong length");
  double total = 0;
  for (double w : mu2) {
    if (!(w > 0) || !std::isfinite(w)) throw InputError("weights must be positive and finite");
    total += w;
  }
  Graph g = *this;
  for (int v = 0; v < vertex_count(); ++v) g.vertices_[v].mu2 = mu2[v] / total;
  return g;
}

std::vector<std::vector<int>> Graph::components() const {
  std::vector<int> comp(vertices_.size(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < members.size(); ++k)
      for (int e : out_[members[k]]) {
        int w = edges_[e].finish;
        if (comp[w] < 0) {
          comp[w] = comp[s];
          members.push_back(w);
        }
      }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool Graph::is_connected() const { return components().size() <= 1; }

std::vector<int> Graph::vertices_of(Parity p) const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v)
    if (vertices_[v].parity == p) out.push_back(v);
  return out;
}

Graph build_graph(const GraphSpec& spec) {
  Graph g;
  if (spec.vertices.empty()) throw InputError("graph has no vertices");
  std::size_t with_weight = 0;
  for (const auto& vs : spec.vertices) {
    if (vs.id.empty()) throw InputError("vertex id must be non-empty");
    if (g.index_.count(vs.id)) throw InputError("duplicate vertex id '" + vs.id + "'");
    g.index_[vs.id] = static_cast<int>(g.vertices_.size());
    g.vertices_.push_back({vs.id, vs.parity, 0.0});
    if (vs.weight2) ++with_weight;
  }
  if (with_weight != 0 && with_weight != spec.vertices.size())
    throw InputError("either every vertex or no vertex may carry weight2");
  g.out_.assign(g.vertices_.size(), {});
  for (const auto& es : spec.edges) {
    int a = g.vertex_index(es.u);
    int b = g.vertex_index(es.v);
    if (es.mult < 1) throw InputError("edge multiplicity must be positive");
    if (g.vertices_[a].parity == g.vertices_[b].parity)
      throw InputError("edge " + es.u + "-" + es.v + " joins vertices of equal parity");
    if (g.vertices_[a].parity == Parity::Odd) std::swap(a, b);
    for (int k = 0; k < es.mult; ++k) {
      int e = static_cast<int>(g.edges_.size());
      g.edges_.push_back({a, b, e + 1});
      g.edges_.push_back({b, a, e});
      g.out_[a].push_back(e);
      g.out_[b].push_back(e + 1);
    }
  }
  if (spec.star) g.star_ = g.vertex_index(*spec.star);
  if (with_weight == 0) {
    if (!g.is_connected())
      throw InputError("Perron-Frobenius weighting requires a connected graph");
    std::vector<double> ones(g.vertices_.size(), 1.0);
    g = g.with_weights(ones);
    return pf_weighting(g).graph;
  }
  std::vector<double> w;
  for (const auto& vs : spec.vertices) w.push_back(*vs.weight2);
  return g.with_weights(w);
}

GraphPtr make_graph(const GraphSpec& spec) {
  return std::make_shared<const Graph>(build_graph(spec));
}

GraphSpec to_spec(const Graph& g) {
  GraphSpec s;
  for (const auto& v : g.vertices()) s.vertices.push_back({v.id, v.parity, v.mu2});
  for (int e = 0; e < g.edge_count(); e += 2) {
    const auto& ed = g.edge(e);
    const std::string& u = g.vertex(ed.start).id;
    const std::string& w = g.vertex(ed.finish).id;
    if (!s.edges.empty() && s.edges.back().u == u && s.edges.back().v == w)
      ++s.edges.back().mult;
    else
      s.edges.push_back({u, w, 1});
  }
  if (g.star()) s.star = g.vertex(*g.star()).id;
  return s;
}

PFWeighting pf_weighting(const Graph& g, double tol, int max_iter) {
  if (!g.is_connected())
    throw PreconditionError("Perron-Frobenius weighting requires a connected graph");
  const int n = g.vertex_count();
  std::vector<std::vector<std::pair<int, double>>> adj(n);
  for (int v = 0; v < n; ++v) {
    std::vector<int> targets;
    for (int e : g.out_edges(v)) targets.push_back(g.edge(e).finish);
    std::sort(targets.begin(), targets.end());
    for (std::size_t i = 0; i < targets.size();) {
      std::size_t j = i;
      while (j < targets.size() && targets[j] == targets[i]) ++j;
      adj[v].push_back({targets[i], static_cast<double>(j - i)});
      i = j;
    }
  }
  // The spectrum of a bipartite adjacency matrix is symmetric, so iterate
  // with A + I to make the Perron root strictly dominant.
  std::vector<double> x(n, 1.0 / n), y(n);
  double lambda = 0;
  int it = 0;
  for (; it < max_iter; ++it) {
    for (int v = 0; v < n; ++v) {
      double s = x[v];
      for (auto [w, m] : adj[v]) s += m * x[w];
      y[v] = s;
    }
    double total = std::accumulate(y.begin(), y.end(), 0.0);
    for (double& t : y) t /= total;
    double num = 0, den = 0, resid = 0;
    for (int v = 0; v < n; ++v) {
      double ax = 0;
      for (auto [w, m] : adj[v]) ax += m * y[w];
      num += ax * y[v];
      den += y[v] * y[v];
    }
    lambda = num / den;
    for (int v = 0; v < n; ++v) {
      double ax = 0;
      for (auto [w, m] : adj[v]) ax += m * y[w];
      resid = std::max(resid, std::abs(ax - lambda * y[v]));
    }
    x.swap(y);
    if (resid < tol) break;
  }
  if (it == max_iter) throw NumericalError("power iteration did not converge");
  for (double v : x)
    if (!(v > 0)) throw NumericalError("Perron-Frobenius vector is not positive");
  return {g.with_weights(x), lambda, it + 1};
}

double delta_at(const Graph& g, int v) {
  double s = 0;
  for (int e : g.out_edges(v)) s += g.mu2(g.edge(e).finish);
  return s / g.mu2(v);
}

double max_delta(const Graph& g) {
  double d = 0;
  for (int v = 0; v < g.vertex_count(); ++v) d = std::max(d, delta_at(g, v));
  return d;
}

bool is_pf_weighted(const Graph& g, double tol) {
  if (!g.is_connected()) return false;
  double d0 = delta_at(g, 0);
  for (int v = 1; v < g.vertex_count(); ++v)
    if (std::abs(delta_at(g, v) - d0) > tol * std::max(1.0, d0)) return false;
  return true;
}

Subgraph induced_subgraph(const Graph& g, std::span<const int> keep) {
  std::vector<int> ks(keep.begin(), keep.end());
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  if (ks.empty()) throw InputError("induced subgraph on no vertices");
  std::set<int> kept(ks.begin(), ks.end());
  GraphSpec s;
  double gamma = 0;
  for (int v : ks) {
    s.vertices.push_back({g.vertex(v).id, g.parity(v), g.mu2(v)});
    gamma += g.mu2(v);
  }
  for (int e = 0; e < g.edge_count(); e += 2) {
    const auto& ed = g.edge(e);
    if (kept.count(ed.start) && kept.count(ed.finish))
      s.edges.push_back({g.vertex(ed.start).id, g.vertex(ed.finish).id, 1});
  }
  if (g.star() && kept.count(*g.star())) s.star = g.vertex(*g.star()).id;
  return {build_graph(s), gamma, ks};
}

Subgraph star_subgraph(const Graph& g, int w) {
  std::vector<int> keep = g.vertices_of(Parity::Even);
  keep.push_back(w);
  return induced_subgraph(g, keep);
}

namespace graphs {

GraphPtr a_n(int n) {
  if (n < 1) throw InputError("A_n needs n >= 1");
  GraphSpec s;
  for (int i = 1; i <= n; ++i)
    s.vertices.push_back({"v" + std::to_string(i), i % 2 ? Parity::Even : Parity::Odd, {}});
  for (int i = 1; i < n; ++i)
    s.edges.push_back({"v" + std::to_string(i), "v" + std::to_string(i + 1), 1});
  return make_graph(s);
}

GraphPtr k1n(int n) {
  if (n < 1) throw InputError("K(1,n) needs n >= 1");
  GraphSpec s;
  s.vertices.push_back({"c", Parity::Odd, {}});
  for (int i = 1; i <= n; ++i) {
    s.vertices.push_back({"l" + std::to_string(i), Parity::Even, {}});
    s.edges.push_back({"l" + std::to_string(i), "c", 1});
  }
  return make_graph(s);
}

GraphPtr omega(int q, double alpha, double beta) {
  GraphSpec s;
  s.vertices = {{"v", Parity::Even, alpha}, {"w", Parity::Odd, beta}};
  s.edges = {{"v", "w", q}};
  return make_graph(s);
}

GraphPtr double_edge() {
  GraphSpec s;
  s.vertices = {{"v1", Parity::Even, {}}, {"w", Parity::Odd, {}}, {"v2", Parity::Even, {}}};
  s.edges = {{"v1", "w", 2}, {"w", "v2", 1}};
  return make_graph(s);
}

GraphPtr two_odd_line() {
  GraphSpec s;
  s.vertices = {{"v1", Parity::Even, {}},
                {"w1", Parity::Odd, {}},
                {"v2", Parity::Even, {}},
                {"w2", Parity::Odd, {}},
                {"v3", Parity::Even, {}}};
  s.edges = {{"v1", "w1", 1}, {"w1", "v2", 1}, {"v2", "w2", 1}, {"w2", "v3", 1}};
  return make_graph(s);
}

}  // namespace graphs

}  // namespace gjs
