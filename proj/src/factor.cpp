#include "gjs/factor.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace gjs {

std::string format_number(double x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

void AlgDesc::validate(double tol) const {
  double total = 0;
  for (double a : atoms) {
    if (!(a > 0)) throw InputError("atom weights must be positive");
    total += a;
  }
  for (const auto& d : diffuse) {
    if (!(d.weight > 0)) throw InputError("diffuse weights must be positive");
    if (!std::isnan(d.parameter) && d.parameter < 1 - tol)
      throw InputError("LF parameter must be at least 1");
    total += d.weight;
  }
  if (std::abs(total - 1) > tol) throw InputError("weights of an algebra description must sum to 1");
}

std::string to_string(const AlgDesc& a) {
  std::string s;
  auto sep = [&]() {
    if (!s.empty()) s += " + ";
  };
  for (double t : a.atoms) {
    sep();
    s += "C_" + format_number(t);
  }
  for (const auto& d : a.diffuse) {
    sep();
    s += "LF(" + (std::isnan(d.parameter) ? std::string("s") : format_number(d.parameter)) + ")";
    if (std::abs(d.weight - 1) > 1e-15) s += "_" + format_number(d.weight);
  }
  if (a.hyperfinite_possible) s += " [diffuse part may be hyperfinite]";
  return s.empty() ? "0" : s;
}

double fdim(const AlgDesc& a) {
  double f = 1;
  for (double t : a.atoms) f -= t * t;
  for (const auto& d : a.diffuse) {
    if (std::isnan(d.parameter)) throw UnsupportedError("free dimension of an undetermined summand");
    f += d.weight * d.weight * (d.parameter - 1);
  }
  return f;
}

AlgDesc free_product(const AlgDesc& a, const AlgDesc& b, double tol) {
  a.validate();
  b.validate();
  AlgDesc out;
  for (double x : a.atoms)
    for (double y : b.atoms)
      if (x + y - 1 > tol) out.atoms.push_back(x + y - 1);
  double atom_mass = std::accumulate(out.atoms.begin(), out.atoms.end(), 0.0);
  double gamma = 1 - atom_mass;
  if (gamma > tol) {
    double sq = 0;
    for (double t : out.atoms) sq += t * t;
    double s = 1 + (fdim(a) + fdim(b) - 1 + sq) / (gamma * gamma);
    if (s < 1 - 1e-9) throw UnsupportedError("free product outside the range of the dimension formula");
    out.diffuse.push_back({std::max(s, 1.0), gamma});
  }
  out.hyperfinite_possible =
      (a.diffuse.empty() && b.diffuse.empty()) || a.hyperfinite_possible || b.hyperfinite_possible;
  return out;
}

AlgDesc free_product(std::span<const AlgDesc> parts, double tol) {
  if (parts.empty()) throw InputError("free product of no algebras");
  AlgDesc acc = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) acc = free_product(acc, parts[i], tol);
  return acc;
}

double compress_factor(double r, double t) {
  if (!(t > 0) || t > 1 + 1e-12) throw InputError("compression needs a trace in (0, 1]");
  return 1 + (r - 1) / (t * t);
}

AlgDesc prop_line(int q, double alpha, double beta, CornerParity corner) {
  if (q < 1) throw InputError("q must be positive");
  if (!(alpha > 0) || !(beta > 0)) throw InputError("weights must be positive");
  if (std::abs(alpha + beta - 1) > 1e-9) throw InputError("weights must sum to 1");
  // Even corner is the odd corner of the graph with parities swapped.
  double ratio = corner == CornerParity::Odd ? alpha / beta : beta / alpha;
  const double qd = q;
  if (ratio > qd) return AlgDesc::lf(qd * qd);
  if (ratio >= 1 / qd) return AlgDesc::lf(2 * qd * ratio - ratio * ratio);
  AlgDesc d;
  d.atoms.push_back(1 - qd * ratio);
  d.diffuse.push_back({2 - 1 / (qd * qd), qd * ratio});
  return d;
}

OmegaFactor omega_factor(int q, double alpha, double beta) {
  double ratio = alpha / beta;
  if (q > 1 && ratio >= 1.0 / q && ratio <= q)
    return {true, 1 + 2 * q * alpha * beta - alpha * alpha - beta * beta};
  return {false, std::nullopt};
}

namespace {

void check_star(std::span<const int> q, std::span<const double> a, double b) {
  if (q.empty() || q.size() != a.size()) throw InputError("need matching q and a lists");
  if (!(b > 0)) throw InputError("weights must be positive");
  for (std::size_t i = 0; i < q.size(); ++i)
    if (q[i] < 1 || !(a[i] > 0)) throw InputError("multiplicities and weights must be positive");
}

}  // namespace

AlgDesc star_m1(std::span<const int> q, std::span<const double> a, double b) {
  check_star(q, a, b);
  double qa = 0;
  for (std::size_t i = 0; i < q.size(); ++i) qa += q[i] * a[i];
  if (b <= qa) {
    double s = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      double r = a[i] / b;
      s += q[i] * b < a[i] ? double(q[i]) * q[i] : 2 * q[i] * r - r * r;
    }
    return AlgDesc::lf(s);
  }
  double sq = 0;
  for (double x : a) sq += x * x;
  AlgDesc d;
  d.atoms.push_back(1 - qa / b);
  d.diffuse.push_back({2 - sq / (qa * qa), qa / b});
  return d;
}

AlgDesc star_m1_pipeline(std::span<const int> q, std::span<const double> a, double b) {
  check_star(q, a, b);
  std::vector<AlgDesc> parts;
  for (std::size_t i = 0; i < q.size(); ++i)
    parts.push_back(prop_line(q[i], a[i] / (a[i] + b), b / (a[i] + b), CornerParity::Odd));
  return free_product(parts);
}

namespace {

const double kNaN = std::numeric_limits<double>::quiet_NaN();

// Parameter of the factor summand of a connected component with a single
// vertex of one parity, or NaN.
double single_centre_parameter(const Graph& c, double atom_mass, std::vector<std::string>& notes) {
  std::vector<int> odd = c.vertices_of(Parity::Odd), even = c.vertices_of(Parity::Even);
  int centre = -1;
  if (odd.size() == 1)
    centre = odd[0];
  else if (even.size() == 1)
    centre = even[0];
  if (centre < 0) return kNaN;
  std::vector<int> q;
  std::vector<double> a;
  for (int v = 0; v < c.vertex_count(); ++v) {
    if (v == centre) continue;
    q.push_back(c.multiplicity(centre, v));
    a.push_back(c.mu2(v));
  }
  const double b = c.mu2(centre);
  AlgDesc corner = star_m1(q, a, b);
  const DiffuseSummand& lf = corner.diffuse.front();
  const double corner_trace = lf.weight * b;
  const double factor_trace = 1 - atom_mass;
  notes.push_back("corner at " + c.vertex(centre).id + " is " + to_string(corner));
  return 1 + (lf.parameter - 1) * std::pow(corner_trace / factor_trace, 2);
}

}  // namespace

MGammaReport m_gamma_report(const Graph& g, double tol) {
  MGammaReport rep;
  const bool pf = is_pf_weighted(g, tol);
  std::string verdict;
  auto add_verdict = [&](const std::string& s) {
    if (!verdict.empty()) verdict += " + ";
    verdict += s;
  };
  for (const auto& comp : g.components()) {
    Subgraph sub = induced_subgraph(g, comp);
    const Graph& c = sub.graph;
    const double gamma = sub.gamma;
    if (c.vertex_count() == 1) {
      rep.atoms.push_back({comp[0], gamma});
      rep.notes.push_back("isolated vertex " + g.vertex(comp[0]).id + " splits off an atom");
      add_verdict("C_" + format_number(gamma));
      continue;
    }
    if (c.undirected_edge_count() == 1) {
      // Both corners are computed from the two-vertex formulas.
      int v = c.vertices_of(Parity::Even)[0], w = c.vertices_of(Parity::Odd)[0];
      double lo = std::min(c.mu2(v), c.mu2(w));
      double hi = std::max(c.mu2(v), c.mu2(w));
      if (hi - lo > tol) {
        int big = c.mu2(v) > c.mu2(w) ? v : w;
        rep.atoms.push_back({sub.parent_vertex[static_cast<std::size_t>(big)], (hi - lo) * gamma});
        add_verdict("C_" + format_number((hi - lo) * gamma));
      }
      rep.other.push_back({"M2(L(Z))", 2 * lo * gamma});
      add_verdict("M2(L(Z))_" + format_number(2 * lo * gamma));
      rep.notes.push_back("single-edge component: not a factor");
      continue;
    }
    double atom_mass = 0;
    for (const auto& a : atom_list(c, tol)) {
      rep.atoms.push_back({sub.parent_vertex[static_cast<std::size_t>(a.vertex)], a.trace * gamma});
      atom_mass += a.trace;
      add_verdict("C_" + format_number(a.trace * gamma));
    }
    double s = single_centre_parameter(c, atom_mass, rep.notes);
    const double weight = (1 - atom_mass) * gamma;
    rep.diffuse.push_back({s, weight});
    if (!std::isnan(s)) {
      add_verdict("LF(" + format_number(s) + ")_" + format_number(weight));
    } else if (pf) {
      add_verdict("LF(s)_" + format_number(weight));
      rep.notes.push_back("LF(s) with 1 < s < infinity: exists, not computed");
    } else {
      add_verdict("II_1 factor_" + format_number(weight));
      rep.notes.push_back("II_1 factor summand: parameter exists, not computed");
    }
  }
  if (rep.atoms.empty() && rep.diffuse.empty() && rep.other.size() == 1 &&
      std::abs(rep.other[0].weight - 1) < tol)
    verdict = rep.other[0].description;
  if (rep.atoms.empty() && rep.other.empty() && rep.diffuse.size() == 1 &&
      std::abs(rep.diffuse[0].weight - 1) < tol) {
    verdict = std::isnan(rep.diffuse[0].parameter) ? (pf ? "LF(s)" : "II_1 factor")
                                                   : "LF(" + format_number(rep.diffuse[0].parameter) + ")";
  }
  rep.verdict = verdict;
  return rep;
}

}  // namespace gjs
