#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "gjs/element.hpp"
#include "gjs/noncross.hpp"

namespace gjs {

// Basis element of P_n: two paths of length n from the base vertex with
// the same finish. They multiply as matrix units.
struct PathPair {
  Path plus;
  Path minus;
  friend bool operator==(const PathPair&, const PathPair&) = default;
  friend std::strong_ordering operator<=>(const PathPair& a, const PathPair& b) {
    if (auto c = a.plus <=> b.plus; c != 0) return c;
    return a.minus <=> b.minus;
  }
};

// Element of a single level P_n of the path tower.
class TowerElement {
 public:
  using Terms = std::map<PathPair, double>;
  TowerElement() = default;
  explicit TowerElement(int level) : level_(level) {}

  int level() const { return level_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const PathPair& p, double c);
  double coefficient(const PathPair& p) const;

  TowerElement& operator+=(const TowerElement& o);
  TowerElement& operator-=(const TowerElement& o);
  TowerElement& operator*=(double s);
  friend TowerElement operator+(TowerElement a, const TowerElement& b) { return a += b; }
  friend TowerElement operator-(TowerElement a, const TowerElement& b) { return a -= b; }
  friend TowerElement operator*(TowerElement a, double s) { return a *= s; }
  friend TowerElement operator*(double s, TowerElement a) { return a *= s; }
  double sup_norm() const;

 private:
  void same_level(const TowerElement& o) const;
  int level_ = 0;
  Terms terms_;
};

double distance(const TowerElement& a, const TowerElement& b);

// Path model of the subfactor planar algebra of a Perron-Frobenius
// weighted graph with a distinguished base vertex.
class PathTower {
 public:
  // Needs a connected PF weighted graph with a star vertex.
  explicit PathTower(GraphPtr g);

  const Graph& graph() const { return *g_; }
  const GraphPtr& graph_ptr() const { return g_; }
  int star() const { return star_; }
  double delta() const { return delta_; }

  std::vector<PathPair> basis(int n) const;
  TowerElement identity(int n) const;
  TowerElement mult(const TowerElement& a, const TowerElement& b) const;
  TowerElement adjoint(const TowerElement& a) const;
  // P_n -> P_{n+1}: append every edge out of the common finish.
  TowerElement include(const TowerElement& a) const;
  TowerElement include_to(const TowerElement& a, int level) const;
  // Trace-preserving conditional expectation P_{n+1} -> P_n.
  TowerElement cond_exp(const TowerElement& a) const;
  // Normalized picture trace: tr((xi, xi)) = delta^-n mu^2(f) / mu^2(*).
  double trace(const TowerElement& a) const;

  // Jones projection e_n in P_n, n >= 2.
  TowerElement jones(int n) const;
  // delta * e_{t+1} included to the given level; caps strands t, t+1.
  TowerElement tl_generator(int t, int level) const;
  // Image of the TL tangle T in TL(2n), as an element of P_n. Top points are
  // 1..n, bottom point 2n+1-i sits below top point i.
  TowerElement ztl(const TLPairing& t) const;

  // Action of the annular tangle of S^{2n}_i on P_n, landing in P_{n-1}.
  TowerElement annular_cap(int i, const TowerElement& x) const;

  // Loop of length 2n at the star <-> pair at level n.
  PathPair pair_from_loop(const Path& loop) const;
  Path loop_from_pair(const PathPair& p) const;

  // Gr(Gamma, *) -> Gr_0(P); x must be homogeneous.
  TowerElement theta(const Element& x) const;
  // Product of Gr_0(P) from the closed path formula.
  TowerElement gr0_mul(const TowerElement& a, const TowerElement& b) const;
  // Same product from inclusions and a TL tangle.
  TowerElement gr0_mul_tangle(const TowerElement& a, const TowerElement& b) const;
  // Trace of Gr_0(P): sum over TL tangles closing off the top strands.
  double gr0_trace(const TowerElement& x) const;

  // -Gr_1 picture for a graph used as the dual principal graph: v is a
  // neighbour of the star and nu the least edge from the star to v.
  TowerElement theta1(const Element& x, int v) const;
  TowerElement gr1_mul(const TowerElement& a, const TowerElement& b) const;
  double gr1_trace(const TowerElement& x) const;

 private:
  void require_pair(const PathPair& p, int level) const;
  GraphPtr g_;
  int star_;
  double delta_;
};

// TL(2n) diagram composition matching the product of P_n: a * b places b on
// top of a. Returns the number of closed loops.
int tl_compose(const TLPairing& a, const TLPairing& b, TLPairing& out);
// Number of loops in the trace closure of T.
int tl_closure_loops(const TLPairing& t);

}  // namespace gjs
