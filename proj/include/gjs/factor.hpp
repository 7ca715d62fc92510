#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gjs/cdelta.hpp"
#include "gjs/graph.hpp"

namespace gjs {

// Interpolated free group factor LF(parameter) carrying trace weight.
struct DiffuseSummand {
  double parameter;
  double weight;
};

// Finite direct sum of one-dimensional atoms C_alpha and summands LF(t)_gamma
// with total trace 1.
struct AlgDesc {
  std::vector<double> atoms;
  std::vector<DiffuseSummand> diffuse;
  // Set when the diffuse part may be hyperfinite rather than LF.
  bool hyperfinite_possible = false;

  static AlgDesc lf(double t) { return {{}, {{t, 1.0}}, false}; }
  // Throws InputError unless weights are positive, sum to 1, and t >= 1.
  void validate(double tol = 1e-9) const;
};

std::string to_string(const AlgDesc& a);
// Significant-digit formatting used in all reports.
std::string format_number(double x, int digits = 12);

// Free dimension sum gamma_j^2 (t_j - 1) + 1 - sum alpha_i^2.
double fdim(const AlgDesc& a);
// Free product of two descriptions: atoms alpha + beta - 1 when positive,
// one diffuse summand whose parameter is fixed by additivity of fdim.
AlgDesc free_product(const AlgDesc& a, const AlgDesc& b, double tol = 1e-12);
AlgDesc free_product(std::span<const AlgDesc> parts, double tol = 1e-12);

// LF(r) cut down by a projection of trace t is LF(1 + (r - 1) / t^2).
double compress_factor(double r, double t);

enum class CornerParity { Even, Odd };
// Corner of M(Omega) for one even vertex of weight alpha and one odd vertex
// of weight beta joined by q edges, normalized on the corner.
AlgDesc prop_line(int q, double alpha, double beta, CornerParity corner);

struct OmegaFactor {
  bool is_factor;
  std::optional<double> parameter;
};
OmegaFactor omega_factor(int q, double alpha, double beta);

// Odd corner of a graph with one odd vertex of weight b joined by q_i edges
// to even vertices of weight a_i. Closed form.
AlgDesc star_m1(std::span<const int> q, std::span<const double> a, double b);
// Same corner as a free product of two-vertex corners.
AlgDesc star_m1_pipeline(std::span<const int> q, std::span<const double> a, double b);

struct OtherSummand {
  std::string description;
  double weight;
};

struct MGammaReport {
  std::vector<AtomEntry> atoms;
  // Parameter is NaN when its existence is known but the value is not.
  std::vector<DiffuseSummand> diffuse;
  std::vector<OtherSummand> other;
  std::string verdict;
  std::vector<std::string> notes;
};

MGammaReport m_gamma_report(const Graph& g, double tol = 1e-9);

}  // namespace gjs
