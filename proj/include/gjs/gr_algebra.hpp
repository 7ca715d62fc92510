#pragma once

#include <optional>

#include "gjs/element.hpp"
#include "gjs/noncross.hpp"

namespace gjs {

// Graded product: concatenation of composable paths, 0 otherwise.
Element bullet(const Element& x, const Element& y);
// Reversal of paths; coefficients are real so no conjugation is needed.
Element star(const Element& x);

// tau on a single path: sum over TL pairings T of
// prod delta(xi_i, rev xi_j) * prod_{C in K(T)} mu(v_C)^(2 - |C|).
double tau_path(const Graph& g, const Path& xi);
double tau(const Element& x);

// Which idempotent a corner is cut down by.
struct Corner {
  enum class Kind { Vertex, Even, Odd } kind = Kind::Vertex;
  int vertex = 0;
  static Corner at(int v) { return {Kind::Vertex, v}; }
  static Corner even() { return {Kind::Even, 0}; }
  static Corner odd() { return {Kind::Odd, 0}; }
};

// p x p for the idempotent p of the corner.
Element corner(const Element& x, Corner c);
// tau restricted to the corner, divided by tau(p).
double corner_trace(const Element& x, Corner c);
double corner_weight(const Graph& g, Corner c);

}  // namespace gjs
