#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gjs/element.hpp"
#include "gjs/noncross.hpp"

namespace gjs {

// Element of P_0(Gamma): coefficient of e_v at index v.
using BElement = std::vector<double>;

BElement b_zero(const Graph& g);
double b_distance(const BElement& a, const BElement& b);
// x * b and b * x for the bimodule structure over P_0.
Element right_mul(const Element& x, const BElement& b);
Element left_mul(const BElement& b, const Element& x);

// Conditional expectation Gr -> P_0: every term of length 2n is mapped by
// the sum over Hom([2n],[0]).
BElement expectation(const Element& y);
// phi_n(x1, ..., xn) = E(x1 * ... * xn) in the graded product.
BElement moment(std::span<const Element> xs);
// The same moment read off the degree-0 part of phi(x1) # ... # phi(xn).
BElement moment_fpicture(std::span<const Element> xs);

// A family of B-multilinear maps, one for each arity.
using BMap = std::function<BElement(std::span<const Element>)>;

enum class IntervalChoice { First, Last };
// Multiplicative extension of a family of maps along pi in NC(n) by
// repeatedly peeling off an interval block.
BElement multiplicative_extension(const BMap& f, const Partition& pi, std::span<const Element> xs,
                                  IntervalChoice choice = IntervalChoice::First);

// kappa_n = sum over pi of mu(pi, 1_n) phi_pi.
BElement cumulant_mobius(std::span<const Element> xs);
// Closed form on length-2 basis paths: non-zero only for starry composites.
BElement cumulant_closed_form(const Graph& g, std::span<const Path> xis);
// S(pi) acting on the composite of the xis.
BElement s_pi_action(const Graph& g, const Partition& pi, std::span<const Path> xis);
// The per-class product expression for the same quantity.
BElement s_pi_product(const Graph& g, const Partition& pi, std::span<const Path> xis);

struct FreenessReport {
  int max_order = 0;
  std::uint64_t tuples_checked = 0;
  std::uint64_t mixed_tuples = 0;
  double max_mixed = 0;
  // Largest deviation between Moebius and closed-form cumulants.
  double max_closed_form_gap = 0;
  std::string worst_witness;
  bool pass = true;
};

// Checks that every mixed cumulant of length-2 generators vanishes up to
// the given order, over all composable tuples.
FreenessReport freeness_certificate(const GraphPtr& g, int max_order, double tol = 1e-10);

}  // namespace gjs
