#include "gjs/cdelta.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "gjs/graph.hpp"

namespace gjs {

Interval intersect(const Interval& a, const Interval& b) {
  if (a.empty() || b.empty()) return {};
  return Interval::closed(std::max(a.lo, b.lo), std::min(a.hi(), b.hi()));
}

TPQMorphism::TPQMorphism(int target, int source, Interval p, Interval q)
    : m_(target), n_(source), p_(p), q_(q) {
  if (m_ < 0 || n_ < 0) throw InputError("objects of C(delta) are non-negative");
  if (p_.len != q_.len) throw InputError("|P| must equal |Q|");
  if (p_.len < 0) throw InputError("negative interval length");
  if (p_.empty()) {
    p_ = {};
    q_ = {};
    return;
  }
  if (p_.lo < 1 || p_.hi() > m_) throw InputError("P is not inside [m]");
  if (q_.lo < 1 || q_.hi() > n_) throw InputError("Q is not inside [n]");
}

TPQMorphism TPQMorphism::identity(int n) {
  return TPQMorphism(n, n, Interval::closed(1, n), Interval::closed(1, n));
}
TPQMorphism TPQMorphism::a_minus(int n) {
  return TPQMorphism(n - 1, n, Interval::closed(1, n - 1), Interval::closed(2, n));
}
TPQMorphism TPQMorphism::a_plus(int n) {
  return TPQMorphism(n - 1, n, Interval::closed(1, n - 1), Interval::closed(1, n - 1));
}
TPQMorphism TPQMorphism::c_minus(int n) {
  return TPQMorphism(n + 1, n, Interval::closed(2, n + 1), Interval::closed(1, n));
}
TPQMorphism TPQMorphism::c_plus(int n) {
  return TPQMorphism(n + 1, n, Interval::closed(1, n), Interval::closed(1, n));
}

std::string to_string(const TPQMorphism& t) {
  auto iv = [](const Interval& i) {
    return i.empty() ? std::string("{}") : "[" + std::to_string(i.lo) + "," + std::to_string(i.hi()) + "]";
  };
  return "T(" + iv(t.p()) + "," + iv(t.q()) + ")^" + std::to_string(t.target()) + "_" +
         std::to_string(t.source());
}

TPQProduct tpq_compose(const TPQMorphism& f, const TPQMorphism& g) {
  if (f.source() != g.target()) throw InputError("morphisms of C(delta) are not composable");
  const Interval& q = f.q();
  const Interval& r = g.p();
  Interval qr = intersect(q, r);
  const int n = f.source();
  const int power = n - (q.len + r.len - qr.len);
  Interval y, z;
  if (!qr.empty()) {
    y = {qr.lo - q.lo + f.p().lo, qr.len};
    z = {qr.lo - r.lo + g.q().lo, qr.len};
  }
  return {power, TPQMorphism(f.target(), g.source(), y, z)};
}

double weight_functional(const TPQMorphism& t, double delta) {
  return std::pow(delta, (t.source() + t.target()) / 2.0 - t.p().len);
}

namespace {

void require_loops(const Element& x, int v) {
  for (const auto& [p, c] : x.terms())
    if (p.start() != v || p.finish() != v || p.length() % 2)
      throw PreconditionError("element is not in P_{2n}(Gamma, v)");
}

int half_degree(const Element& x) {
  int d = -1;
  for (const auto& [p, c] : x.terms()) {
    if (d >= 0 && p.length() != d) throw PreconditionError("element is not homogeneous");
    d = p.length();
  }
  return d < 0 ? -1 : d / 2;
}

}  // namespace

Element apply_a_minus(const Element& x, int v) {
  require_loops(x, v);
  const Graph& g = x.graph();
  Element out(x.graph_ptr());
  for (const auto& [p, c] : x.terms()) {
    if (p.length() < 2) throw PreconditionError("A_- needs degree >= 2");
    if (p.edge_at(1) != g.reversal(p.edge_at(2))) continue;
    out.add(subpath(p, 2, p.length()), c * g.mu(p.vertices[1]) / g.mu(v));
  }
  return out;
}

Element apply_a_plus(const Element& x, int v) {
  require_loops(x, v);
  const Graph& g = x.graph();
  Element out(x.graph_ptr());
  for (const auto& [p, c] : x.terms()) {
    const int len = p.length();
    if (len < 2) throw PreconditionError("A_+ needs degree >= 2");
    if (p.edge_at(len - 1) != g.reversal(p.edge_at(len))) continue;
    out.add(subpath(p, 0, len - 2), c * g.mu(p.vertices[len - 1]) / g.mu(v));
  }
  return out;
}

Element apply_c_minus(const Element& x, int v) {
  require_loops(x, v);
  const Graph& g = x.graph();
  Element out(x.graph_ptr());
  for (int e : g.out_edges(v)) {
    int w = g.edge(e).finish;
    Path cup = make_path(g, v, {e, g.reversal(e)});
    for (const auto& [p, c] : x.terms()) out.add(concat(cup, p), c * g.mu(w) / g.mu(v));
  }
  return out;
}

Element apply_c_plus(const Element& x, int v) {
  require_loops(x, v);
  const Graph& g = x.graph();
  Element out(x.graph_ptr());
  for (int e : g.out_edges(v)) {
    int w = g.edge(e).finish;
    Path cup = make_path(g, v, {e, g.reversal(e)});
    for (const auto& [p, c] : x.terms()) out.add(concat(p, cup), c * g.mu(w) / g.mu(v));
  }
  return out;
}

Element tpq_act(const TPQMorphism& t, const Element& x, int v) {
  require_loops(x, v);
  int d = half_degree(x);
  if (d >= 0 && d != t.source()) throw PreconditionError("element degree does not match morphism source");
  const int n = t.source(), m = t.target();
  int caps_left = 0, caps_right = n, cups_left = 0, cups_right = m;
  if (!t.q().empty()) {
    caps_left = t.q().lo - 1;
    caps_right = n - t.q().hi();
    cups_left = t.p().lo - 1;
    cups_right = m - t.p().hi();
  }
  Element y = x;
  for (int i = 0; i < caps_left; ++i) y = apply_a_minus(y, v);
  for (int i = 0; i < caps_right; ++i) y = apply_a_plus(y, v);
  for (int i = 0; i < cups_left; ++i) y = apply_c_minus(y, v);
  for (int i = 0; i < cups_right; ++i) y = apply_c_plus(y, v);
  return y;
}

Element c_element(const GraphPtr& g, int v) { return c_power(g, v, 1); }

Element c_power(const GraphPtr& g, int v, int n) {
  Element x = Element::vertex_unit(g, v);
  for (int k = 0; k < n; ++k) x = apply_c_minus(x, v);
  return x;
}

Element d_element(const GraphPtr& g, int v) {
  Element out(g);
  for (int r : g->out_edges(v)) {
    int w = g->edge(r).finish;
    for (int z : g->out_edges(w)) {
      int x = g->edge(z).finish;
      Path p = make_path(*g, v, {r, z, g->reversal(z), g->reversal(r)});
      out.add(p, g->mu(x) / g->mu(v));
    }
  }
  return out;
}

Element cp_aq(const Element& x, int v, int p, int q) {
  Element y = x;
  for (int i = 0; i < q; ++i) y = apply_a_minus(y, v);
  for (int i = 0; i < p; ++i) y = apply_c_minus(y, v);
  return y;
}

double local_inner(const Element& x, const Element& y, int v) {
  require_loops(x, v);
  require_loops(y, v);
  double s = 0;
  for (const auto& [p, a] : x.terms()) s += a * y.coefficient(p);
  return s;
}

Element zv_truncation(const GraphPtr& g, int v, int m) {
  Element x(g);
  Element c = Element::vertex_unit(g, v);
  for (int n = 0; n <= m; ++n) {
    x += (n % 2 ? -1.0 : 1.0) * c;
    c = apply_c_minus(c, v);
  }
  return x;
}

Element commutator_inverse(const Element& z, int v, int n) {
  const double dv = delta_at(z.graph(), v);
  Element x(z.graph_ptr());
  for (int t = 1; t <= n; ++t) {
    TPQMorphism f(n, n + 1, Interval::closed(1, n + 1 - t), Interval::closed(t + 1, n + 1));
    x += std::pow(dv, -t) * tpq_act(f, z, v);
  }
  return x;
}

Eigen::MatrixXd local_operator_matrix(const GraphPtr& g, int v, int from_half, int to_half,
                                      const std::function<Element(const Element&)>& f) {
  auto src = enumerate_paths(*g, 2 * from_half, v, v);
  auto dst = enumerate_paths(*g, 2 * to_half, v, v);
  std::map<Path, Eigen::Index> row;
  for (std::size_t i = 0; i < dst.size(); ++i) row[dst[i]] = static_cast<Eigen::Index>(i);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(dst.size()),
                                            static_cast<Eigen::Index>(src.size()));
  for (std::size_t j = 0; j < src.size(); ++j) {
    Element y = f(Element::basis(g, src[j]));
    for (const auto& [p, c] : y.terms()) {
      auto it = row.find(p);
      if (it == row.end()) throw PreconditionError("operator leaves the target degree");
      m(it->second, static_cast<Eigen::Index>(j)) = c;
    }
  }
  return m;
}

CenterReport center_report(const Graph& g, int v) {
  if (!g.is_connected()) throw PreconditionError("centre report needs a connected graph");
  if (g.undirected_edge_count() < 2) throw PreconditionError("centre report needs at least two edges");
  double dv = delta_at(g, v);
  CenterReport r{v, dv, 1, std::nullopt};
  if (dv < 1.0) {
    r.center_dim = 2;
    r.atom_trace = (1.0 - dv) * g.mu2(v);
  }
  return r;
}

std::vector<AtomEntry> atom_list(const Graph& g, double tol) {
  std::vector<AtomEntry> out;
  for (int v = 0; v < g.vertex_count(); ++v) {
    double dv = delta_at(g, v);
    if (dv < 1.0 - tol) out.push_back({v, (1.0 - dv) * g.mu2(v)});
  }
  return out;
}

}  // namespace gjs
