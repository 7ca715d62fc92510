#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gjs/element.hpp"

namespace gjs {

// Interval [lo, lo+len-1] of positive integers; len == 0 is the empty set.
struct Interval {
  int lo = 1;
  int len = 0;

  static Interval closed(int a, int b) { return b < a ? Interval{1, 0} : Interval{a, b - a + 1}; }
  int hi() const { return lo + len - 1; }
  bool empty() const { return len == 0; }
  bool contains(int i) const { return len > 0 && lo <= i && i <= hi(); }
  friend bool operator==(const Interval& a, const Interval& b) {
    return a.len == b.len && (a.len == 0 || a.lo == b.lo);
  }
};

Interval intersect(const Interval& a, const Interval& b);

// Morphism T(P,Q)^m_n : [n] -> [m] of the category C(delta). The pairs of
// points indexed by Q pass through to those indexed by P; all other points
// are capped (bottom) or cupped (top) off in adjacent non-nested pairs.
class TPQMorphism {
 public:
  TPQMorphism() = default;
  TPQMorphism(int target, int source, Interval p, Interval q);

  static TPQMorphism identity(int n);
  static TPQMorphism a_minus(int n);  // [n] -> [n-1], cap at the left
  static TPQMorphism a_plus(int n);   // [n] -> [n-1], cap at the right
  static TPQMorphism c_minus(int n);  // [n] -> [n+1], cup at the left
  static TPQMorphism c_plus(int n);   // [n] -> [n+1], cup at the right

  int target() const { return m_; }
  int source() const { return n_; }
  const Interval& p() const { return p_; }
  const Interval& q() const { return q_; }

  friend bool operator==(const TPQMorphism& a, const TPQMorphism& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.p_ == b.p_ && a.q_ == b.q_;
  }

 private:
  int m_ = 0;
  int n_ = 0;
  Interval p_;
  Interval q_;
};

std::string to_string(const TPQMorphism& t);

// f o g = delta^power * morphism.
struct TPQProduct {
  int delta_power;
  TPQMorphism morphism;
};
TPQProduct tpq_compose(const TPQMorphism& f, const TPQMorphism& g);

// delta(v)^((n+m)/2 - |P|).
double weight_functional(const TPQMorphism& t, double delta);

// Generators of C(delta) acting on P_{2n}(Gamma, v). Every term of x must be
// a loop at v of length 2 * (source object).
Element apply_a_minus(const Element& x, int v);
Element apply_a_plus(const Element& x, int v);
Element apply_c_minus(const Element& x, int v);
Element apply_c_plus(const Element& x, int v);
// Action of T(P,Q) as caps first, then cups.
Element tpq_act(const TPQMorphism& t, const Element& x, int v);

// c = C^0_-(e_v), and c_{2n} = C^{n-1}_- ... C^0_-(e_v).
Element c_element(const GraphPtr& g, int v);
Element c_power(const GraphPtr& g, int v, int n);
// d = sum mu(x)/mu(v) [v rho w zeta x rev(zeta) w rev(rho) v].
Element d_element(const GraphPtr& g, int v);
// C^p A^q on x in P_{2j}(Gamma, v), with j - q >= 0.
Element cp_aq(const Element& x, int v, int p, int q);

// Inner product of H(Gamma, v): loops at v are orthonormal.
double local_inner(const Element& x, const Element& y, int v);

// x_m = sum_{n=0}^{m} (-1)^n c_{2n}.
Element zv_truncation(const GraphPtr& g, int v, int m);

// For z = (c # x - x # c)_{2n+2} with x in P_{2n}(Gamma, v) orthogonal to
// c_{2n}, reconstructs x.
Element commutator_inverse(const Element& z, int v, int n);

// Matrix of a linear map P_{2a}(Gamma, v) -> P_{2b}(Gamma, v) in the
// orthonormal loop bases.
Eigen::MatrixXd local_operator_matrix(const GraphPtr& g, int v, int from_half, int to_half,
                                      const std::function<Element(const Element&)>& f);

struct CenterReport {
  int vertex;
  double delta_v;
  int center_dim;
  std::optional<double> atom_trace;
};
// Centre of the corner at v. Needs a connected graph with >= 2 edges.
CenterReport center_report(const Graph& g, int v);

struct AtomEntry {
  int vertex;
  double trace;
};
// Minimal central projections of M(Gamma) of type I.
std::vector<AtomEntry> atom_list(const Graph& g, double tol = 1e-12);

}  // namespace gjs
