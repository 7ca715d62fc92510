#pragma once

#include <map>
#include <string>

#include "gjs/graph.hpp"
#include "gjs/path.hpp"

namespace gjs {

// Finite real linear combination of paths of one graph. Used both for Gr
// and for F since they share the vector space; only the product differs.
class Element {
 public:
  using Terms = std::map<Path, double>;

  Element() = default;
  explicit Element(GraphPtr g) : g_(std::move(g)) {}
  static Element basis(GraphPtr g, Path p, double c = 1.0);
  // e_v, the trivial path at v.
  static Element vertex_unit(GraphPtr g, int v);
  // 1 = sum of all e_v.
  static Element unit(GraphPtr g);

  const Graph& graph() const { return *g_; }
  const GraphPtr& graph_ptr() const { return g_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add(const Path& p, double c);
  double coefficient(const Path& p) const;
  // Component of a single path length.
  Element degree_part(int n) const;
  int max_degree() const;
  // Drop coefficients with |c| <= tol.
  Element pruned(double tol) const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(double s);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(Element a, double s) { return a *= s; }
  friend Element operator*(double s, Element a) { return a *= s; }

  // Largest coefficient magnitude.
  double sup_norm() const;

 private:
  void same_graph(const Element& o) const;
  GraphPtr g_;
  Terms terms_;
};

// Sup-norm distance between coefficient vectors.
double distance(const Element& a, const Element& b);
std::string to_string(const Element& x);

}  // namespace gjs
