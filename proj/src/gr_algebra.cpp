#include "gjs/gr_algebra.hpp"

#include <cmath>

namespace gjs {

Element bullet(const Element& x, const Element& y) {
  if (x.graph_ptr() != y.graph_ptr()) throw InputError("elements belong to different graphs");
  Element out(x.graph_ptr());
  for (const auto& [p, a] : x.terms())
    for (const auto& [q, b] : y.terms())
      if (p.finish() == q.start()) out.add(concat(p, q), a * b);
  return out;
}

Element star(const Element& x) {
  Element out(x.graph_ptr());
  for (const auto& [p, a] : x.terms()) out.add(reverse(x.graph(), p), a);
  return out;
}

double tau_path(const Graph& g, const Path& xi) {
  const int n = xi.length();
  if (n == 0) return g.mu2(xi.start());
  if (n % 2 || !xi.is_loop()) return 0.0;
  double total = 0;
  for (const auto& row : tl_table(n)) {
    bool consistent = true;
    for (const auto& b : row.pairing.partition().blocks())
      if (xi.edge_at(b[0]) != g.reversal(xi.edge_at(b[1]))) {
        consistent = false;
        break;
      }
    if (!consistent) continue;
    double term = 1;
    for (const auto& c : row.complement.blocks())
      term *= std::pow(g.mu(xi.vertices[c.front()]), 2 - static_cast<int>(c.size()));
    total += term;
  }
  return total;
}

double tau(const Element& x) {
  double s = 0;
  for (const auto& [p, a] : x.terms()) s += a * tau_path(x.graph(), p);
  return s;
}

namespace {

bool in_corner(const Graph& g, int v, Corner c) {
  switch (c.kind) {
    case Corner::Kind::Vertex:
      return v == c.vertex;
    case Corner::Kind::Even:
      return g.parity(v) == Parity::Even;
    case Corner::Kind::Odd:
      return g.parity(v) == Parity::Odd;
  }
  return false;
}

}  // namespace

Element corner(const Element& x, Corner c) {
  Element out(x.graph_ptr());
  for (const auto& [p, a] : x.terms())
    if (in_corner(x.graph(), p.start(), c) && in_corner(x.graph(), p.finish(), c)) out.add(p, a);
  return out;
}

double corner_weight(const Graph& g, Corner c) {
  double w = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (in_corner(g, v, c)) w += g.mu2(v);
  return w;
}

double corner_trace(const Element& x, Corner c) {
  double w = corner_weight(x.graph(), c);
  if (w == 0) throw PreconditionError("corner has zero weight");
  return tau(corner(x, c)) / w;
}

}  // namespace gjs
