#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "gjs/element.hpp"
#include "gjs/epitl.hpp"

namespace gjs {

// The # product of F(Gamma). For paths of lengths m, n its component in
// degree m+n-2k applies k successive middle caps to the concatenation.
Element sharp(const Element& x, const Element& y);
// Sum of coefficient(e_v) * mu(v)^2 over the trivial paths.
double t_functional(const Element& x);
// <x, y> = t(y* # x), computed from the degree-0 part only.
double inner(const Element& x, const Element& y);

// phi on Gr -> F: sum of all of Hom([n],[m]) on degree n.
Element phi(const Element& x);
// Inverse of phi: signed sum over non-nested morphisms.
Element psi(const Element& x);

// Matrix of x -> a # x on the span of paths of length <= max_len, in the
// orthonormal basis {xi}. If base is set only loops at base are used.
struct TruncatedOperator {
  Eigen::MatrixXd matrix;
  std::vector<Path> basis;
};
TruncatedOperator truncated_left_mult(const Element& a, int max_len,
                                      std::optional<int> base = std::nullopt);
double operator_norm(const Eigen::MatrixXd& m);
// Upper bound for ||lambda(a)|| from the term-wise (2m+1)K estimate.
// a must be homogeneous.
double left_mult_bound(const Element& a);

// Coordinates of x in the orthonormal basis {xi} for the given basis list.
Eigen::VectorXd orthonormal_coords(const Element& x, const std::vector<Path>& basis);

}  // namespace gjs
