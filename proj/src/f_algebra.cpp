#include "gjs/f_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

#include "gjs/gr_algebra.hpp"

namespace gjs {

namespace {

// Morphism capping the k innermost pairs of a concatenation of lengths m, n.
const EpiMorphism& middle_caps(int m, int n, int k) {
  static std::mutex mtx;
  static std::map<std::tuple<int, int, int>, EpiMorphism> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_tuple(m, n, k);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<int> caps;
  for (int j = 1; j <= k; ++j) caps.push_back(m - k + j);
  return cache.emplace(key, EpiMorphism(m + n, m + n - 2 * k, caps)).first->second;
}

double basis_scale(const Graph& g, const Path& p) {
  return std::sqrt(g.mu(p.start()) * g.mu(p.finish()));
}

}  // namespace

Element sharp(const Element& x, const Element& y) {
  if (x.graph_ptr() != y.graph_ptr()) throw InputError("elements belong to different graphs");
  const Graph& g = x.graph();
  Element out(x.graph_ptr());
  Path image;
  double c = 0;
  for (const auto& [p, a] : x.terms())
    for (const auto& [q, b] : y.terms()) {
      if (p.finish() != q.start()) continue;
      Path pq = concat(p, q);
      const int m = p.length(), n = q.length();
      for (int k = 0; k <= std::min(m, n); ++k)
        if (act_on_path(g, middle_caps(m, n, k), pq, image, c)) out.add(image, a * b * c);
    }
  return out;
}

double t_functional(const Element& x) {
  double s = 0;
  for (const auto& [p, a] : x.terms()) {
    if (p.length() > 0) break;
    s += a * x.graph().mu2(p.start());
  }
  return s;
}

double inner(const Element& x, const Element& y) {
  if (x.graph_ptr() != y.graph_ptr()) throw InputError("elements belong to different graphs");
  const Graph& g = x.graph();
  double s = 0;
  Path image;
  double c = 0;
  for (const auto& [q, b] : y.terms()) {
    Path qr = reverse(g, q);
    for (const auto& [p, a] : x.terms()) {
      if (p.length() != q.length() || p.start() != q.start()) continue;
      const int m = p.length();
      if (act_on_path(g, middle_caps(m, m, m), concat(qr, p), image, c))
        s += a * b * c * g.mu2(image.start());
    }
  }
  return s;
}

Element phi(const Element& x) {
  Element out(x.graph_ptr());
  Path image;
  double c = 0;
  for (const auto& [p, a] : x.terms()) {
    const int n = p.length();
    for (int m = n; m >= 0; m -= 2)
      for (const auto& s : hom_set(n, m))
        if (act_on_path(x.graph(), s, p, image, c)) out.add(image, a * c);
  }
  return out;
}

Element psi(const Element& x) {
  Element out(x.graph_ptr());
  Path image;
  double c = 0;
  for (const auto& [p, a] : x.terms()) {
    const int n = p.length();
    for (int m = n; m >= 0; m -= 2) {
      const double sign = ((n - m) / 2) % 2 ? -1.0 : 1.0;
      for (const auto& s : hom_set(n, m, true))
        if (act_on_path(x.graph(), s, p, image, c)) out.add(image, sign * a * c);
    }
  }
  return out;
}

Eigen::VectorXd orthonormal_coords(const Element& x, const std::vector<Path>& basis) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    v[static_cast<Eigen::Index>(i)] = x.coefficient(basis[i]) * basis_scale(x.graph(), basis[i]);
  return v;
}

TruncatedOperator truncated_left_mult(const Element& a, int max_len, std::optional<int> base) {
  const Graph& g = a.graph();
  TruncatedOperator out;
  out.basis = enumerate_paths_upto(g, max_len, base, base);
  std::map<Path, Eigen::Index> index;
  for (std::size_t i = 0; i < out.basis.size(); ++i)
    index[out.basis[i]] = static_cast<Eigen::Index>(i);
  const auto n = static_cast<Eigen::Index>(out.basis.size());
  out.matrix = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Path& eta = out.basis[static_cast<std::size_t>(j)];
    Element col = sharp(a, Element::basis(a.graph_ptr(), eta, 1.0 / basis_scale(g, eta)));
    for (const auto& [p, c] : col.terms()) {
      auto it = index.find(p);
      if (it != index.end()) out.matrix(it->second, j) = c * basis_scale(g, p);
    }
  }
  return out;
}

double operator_norm(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  return svd.singularValues()(0);
}

double left_mult_bound(const Element& a) {
  const Graph& g = a.graph();
  const double delta = max_delta(g);
  int m = -1;
  double bound = 0;
  for (const auto& [p, c] : a.terms()) {
    if (m >= 0 && p.length() != m) throw PreconditionError("left_mult_bound needs a homogeneous element");
    m = p.length();
    double k = std::max(1.0, std::pow(delta, m / 2.0)) / g.mu(p.finish());
    bound += std::abs(c) * basis_scale(g, p) * (2 * m + 1) * k;
  }
  return bound;
}

}  // namespace gjs
