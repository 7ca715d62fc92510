#include "gjs/planar.hpp"

#include <cmath>

namespace gjs {

void TowerElement::add(const PathPair& p, double c) {
  if (c == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

double TowerElement::coefficient(const PathPair& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0.0 : it->second;
}

void TowerElement::same_level(const TowerElement& o) const {
  if (level_ != o.level_ && !terms_.empty() && !o.terms_.empty())
    throw InputError("tower elements live at different levels");
}

TowerElement& TowerElement::operator+=(const TowerElement& o) {
  same_level(o);
  if (terms_.empty()) level_ = o.level_;
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

TowerElement& TowerElement::operator-=(const TowerElement& o) {
  same_level(o);
  if (terms_.empty()) level_ = o.level_;
  for (const auto& [p, c] : o.terms_) add(p, -c);
  return *this;
}

TowerElement& TowerElement::operator*=(double s) {
  if (s == 0.0) terms_.clear();
  for (auto& [p, c] : terms_) c *= s;
  return *this;
}

double TowerElement::sup_norm() const {
  double m = 0;
  for (const auto& [p, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

double distance(const TowerElement& a, const TowerElement& b) { return (a - b).sup_norm(); }

PathTower::PathTower(GraphPtr g) : g_(std::move(g)) {
  if (!g_->star()) throw PreconditionError("path tower needs a star vertex");
  if (!is_pf_weighted(*g_)) throw PreconditionError("path tower needs a Perron-Frobenius weighting");
  star_ = *g_->star();
  delta_ = delta_at(*g_, star_);
}

void PathTower::require_pair(const PathPair& p, int level) const {
  if (p.plus.length() != level || p.minus.length() != level || p.plus.start() != star_ ||
      p.minus.start() != star_ || p.plus.finish() != p.minus.finish())
    throw PreconditionError("not a basis pair of the requested level");
}

std::vector<PathPair> PathTower::basis(int n) const {
  std::vector<PathPair> out;
  auto paths = enumerate_paths(*g_, n, star_);
  for (const auto& a : paths)
    for (const auto& b : paths)
      if (a.finish() == b.finish()) out.push_back({a, b});
  return out;
}

TowerElement PathTower::identity(int n) const {
  TowerElement x(n);
  for (const auto& p : enumerate_paths(*g_, n, star_)) x.add({p, p}, 1.0);
  return x;
}

TowerElement PathTower::mult(const TowerElement& a, const TowerElement& b) const {
  if (a.level() != b.level() && !a.is_zero() && !b.is_zero())
    throw InputError("product of elements at different levels");
  TowerElement out(a.is_zero() ? b.level() : a.level());
  std::map<Path, std::vector<std::pair<const Path*, double>>> by_plus;
  for (const auto& [p, c] : b.terms()) by_plus[p.plus].push_back({&p.minus, c});
  for (const auto& [p, c] : a.terms()) {
    auto it = by_plus.find(p.minus);
    if (it == by_plus.end()) continue;
    for (const auto& [minus, d] : it->second) out.add({p.plus, *minus}, c * d);
  }
  return out;
}

TowerElement PathTower::adjoint(const TowerElement& a) const {
  TowerElement out(a.level());
  for (const auto& [p, c] : a.terms()) out.add({p.minus, p.plus}, c);
  return out;
}

TowerElement PathTower::include(const TowerElement& a) const {
  TowerElement out(a.level() + 1);
  for (const auto& [p, c] : a.terms())
    for (int e : g_->out_edges(p.plus.finish())) {
      Path step = make_path(*g_, p.plus.finish(), {e});
      out.add({concat(p.plus, step), concat(p.minus, step)}, c);
    }
  return out;
}

TowerElement PathTower::include_to(const TowerElement& a, int level) const {
  if (level < a.level()) throw InputError("cannot include into a lower level");
  TowerElement x = a;
  while (x.level() < level) x = include(x);
  return x;
}

TowerElement PathTower::cond_exp(const TowerElement& a) const {
  if (a.level() < 1) throw PreconditionError("conditional expectation below level 0");
  const int n = a.level() - 1;
  TowerElement out(n);
  for (const auto& [p, c] : a.terms()) {
    if (p.plus.edges.back() != p.minus.edges.back()) continue;
    double w = g_->mu2(p.plus.finish()) / (delta_ * g_->mu2(p.plus.vertices[static_cast<std::size_t>(n)]));
    out.add({subpath(p.plus, 0, n), subpath(p.minus, 0, n)}, c * w);
  }
  return out;
}

double PathTower::trace(const TowerElement& a) const {
  double s = 0;
  for (const auto& [p, c] : a.terms())
    if (p.plus == p.minus)
      s += c * std::pow(delta_, -a.level()) * g_->mu2(p.plus.finish()) / g_->mu2(star_);
  return s;
}

TowerElement PathTower::jones(int n) const {
  if (n < 2) throw InputError("Jones projections start at level 2");
  TowerElement e(n);
  for (const auto& p : basis(n)) {
    const Path& a = p.plus;
    const Path& b = p.minus;
    bool prefix = true;
    for (int i = 1; i <= n - 2; ++i)
      if (a.edge_at(i) != b.edge_at(i)) prefix = false;
    if (!prefix || a.edge_at(n - 1) != g_->reversal(a.edge_at(n)) ||
        b.edge_at(n - 1) != g_->reversal(b.edge_at(n)))
      continue;
    double c = g_->mu(a.vertices[static_cast<std::size_t>(n - 1)]) *
               g_->mu(b.vertices[static_cast<std::size_t>(n - 1)]) / (delta_ * g_->mu2(a.finish()));
    e.add(p, c);
  }
  return e;
}

TowerElement PathTower::tl_generator(int t, int level) const {
  if (t < 1 || t >= level) throw InputError("TL generator index out of range");
  return include_to(jones(t + 1), level) * delta_;
}

TowerElement PathTower::ztl(const TLPairing& t) const {
  const int n = t.size() / 2;
  TowerElement out(n);
  auto pairs = t.pairs();
  for (const auto& p : basis(n)) {
    const Path& plus = p.plus;
    const Path& minus = p.minus;
    double c = 1;
    for (auto [a, b] : pairs) {
      if (b <= n) {
        if (minus.edge_at(a) != g_->reversal(minus.edge_at(b))) {
          c = 0;
          break;
        }
        c *= g_->mu(minus.vertices[static_cast<std::size_t>(a)]) /
             g_->mu(minus.vertices[static_cast<std::size_t>(b)]);
      } else if (a > n) {
        int i1 = 2 * n + 1 - b, i2 = 2 * n + 1 - a;
        if (plus.edge_at(i1) != g_->reversal(plus.edge_at(i2))) {
          c = 0;
          break;
        }
        c *= g_->mu(plus.vertices[static_cast<std::size_t>(i1)]) /
             g_->mu(plus.vertices[static_cast<std::size_t>(i2)]);
      } else if (minus.edge_at(a) != plus.edge_at(2 * n + 1 - b)) {
        c = 0;
        break;
      }
    }
    out.add(p, c);
  }
  return out;
}

TowerElement PathTower::annular_cap(int i, const TowerElement& x) const {
  const int n = x.level();
  if (i < 1 || i >= 2 * n) throw InputError("cap index out of range");
  TowerElement y = x;
  if (i <= n) {
    for (int t = i + 1; t <= n; ++t) y = mult(y, tl_generator(t - 1, n));
  } else {
    for (int t = 2 * n - i + 1; t <= n; ++t) y = mult(tl_generator(t - 1, n), y);
  }
  return cond_exp(y) * delta_;
}

PathPair PathTower::pair_from_loop(const Path& loop) const {
  const int len = loop.length();
  if (len % 2 || loop.start() != star_ || loop.finish() != star_)
    throw PreconditionError("not an even loop at the star");
  const int n = len / 2;
  return {reverse(*g_, subpath(loop, n, len)), subpath(loop, 0, n)};
}

Path PathTower::loop_from_pair(const PathPair& p) const {
  return concat(p.minus, reverse(*g_, p.plus));
}

TowerElement PathTower::theta(const Element& x) const {
  int n = -1;
  TowerElement out;
  for (const auto& [p, c] : x.terms()) {
    if (n >= 0 && p.length() != 2 * n) throw PreconditionError("theta needs a homogeneous element");
    n = p.length() / 2;
    if (out.is_zero()) out = TowerElement(n);
    out.add(pair_from_loop(p), c * g_->mu(star_) / g_->mu(p.vertices[static_cast<std::size_t>(n)]));
  }
  return out;
}

TowerElement PathTower::gr0_mul(const TowerElement& a, const TowerElement& b) const {
  const int m = a.level(), n = b.level();
  TowerElement out(m + n);
  for (const auto& [p, c] : a.terms())
    for (const auto& [q, d] : b.terms()) {
      Path xi = loop_from_pair(p), eta = loop_from_pair(q);
      Path both = concat(xi, eta);
      double w = g_->mu(xi.vertices[static_cast<std::size_t>(m)]) *
                 g_->mu(eta.vertices[static_cast<std::size_t>(n)]) /
                 (g_->mu(both.vertices[static_cast<std::size_t>(m + n)]) * g_->mu(star_));
      out.add(pair_from_loop(both), c * d * w);
    }
  return out;
}

TowerElement PathTower::gr0_mul_tangle(const TowerElement& a, const TowerElement& b) const {
  const int m = a.level(), n = b.level();
  if (m < n) return adjoint(gr0_mul_tangle(adjoint(b), adjoint(a)));
  const int big = m + n;
  std::vector<Block> blocks;
  for (int i = 1; i <= m - n; ++i) blocks.push_back({i, 2 * m + 1 - i});
  for (int k = 1; k <= n; ++k) blocks.push_back({m - n + k, m + n + 1 - k});
  for (int k = 1; k <= n; ++k) blocks.push_back({2 * m + k, 2 * big + 1 - k});
  TowerElement tangle = ztl(TLPairing(Partition(2 * big, blocks)));
  return mult(mult(include_to(b, big), tangle), include_to(a, big));
}

double PathTower::gr0_trace(const TowerElement& x) const {
  const int n = x.level();
  double s = 0;
  for (const auto& t : enumerate_tl(2 * n)) s += trace(mult(ztl(t), x));
  return s * std::pow(delta_, n);
}

TowerElement PathTower::theta1(const Element& x, int v) const {
  int nu = -1;
  for (int e : g_->out_edges(star_))
    if (g_->edge(e).finish == v) {
      nu = e;
      break;
    }
  if (nu < 0) throw PreconditionError("vertex is not adjacent to the star");
  Path in = make_path(*g_, star_, {nu});
  Path out_path = make_path(*g_, v, {g_->reversal(nu)});
  TowerElement out;
  int n = -1;
  for (const auto& [p, c] : x.terms()) {
    if (p.start() != v || p.finish() != v || p.length() % 2)
      throw PreconditionError("theta1 needs even loops at v");
    if (n >= 0 && p.length() != 2 * n) throw PreconditionError("theta1 needs a homogeneous element");
    n = p.length() / 2;
    if (out.is_zero()) out = TowerElement(n + 1);
    Path loop = concat(concat(in, p), out_path);
    out.add(pair_from_loop(loop), c * g_->mu(v) / g_->mu(p.vertices[static_cast<std::size_t>(n)]));
  }
  return out;
}

TowerElement PathTower::gr1_mul(const TowerElement& a, const TowerElement& b) const {
  const int m = a.level(), n = b.level();
  if (m < 1 || n < 1) throw PreconditionError("-Gr_1 lives in levels >= 1");
  TowerElement out(m + n - 1);
  for (const auto& [p, c] : a.terms())
    for (const auto& [q, d] : b.terms()) {
      Path xi = loop_from_pair(p), eta = loop_from_pair(q);
      if (xi.edge_at(2 * m) != g_->reversal(eta.edge_at(1))) continue;
      Path zeta = concat(subpath(xi, 0, 2 * m - 1), subpath(eta, 1, 2 * n));
      double w = g_->mu(xi.vertices[static_cast<std::size_t>(m)]) *
                 g_->mu(eta.vertices[static_cast<std::size_t>(n)]) /
                 (g_->mu(zeta.vertices[static_cast<std::size_t>(m + n - 1)]) * g_->mu(eta.vertices[1]));
      out.add(pair_from_loop(zeta), c * d * w);
    }
  return out;
}

double PathTower::gr1_trace(const TowerElement& x) const {
  const int k = x.level();
  if (k < 1) throw PreconditionError("-Gr_1 lives in levels >= 1");
  double s = 0;
  for (const auto& t : enumerate_tl(2 * k - 2)) {
    std::vector<Block> blocks{{1, 2 * k}};
    for (auto [a, b] : t.pairs()) blocks.push_back({a + 1, b + 1});
    s += trace(mult(ztl(TLPairing(Partition(2 * k, blocks))), x));
  }
  return s * std::pow(delta_, k - 1);
}

namespace {

struct Node {
  int side;  // 0 = lower diagram, 1 = upper diagram
  int idx;
};

}  // namespace

int tl_compose(const TLPairing& a, const TLPairing& b, TLPairing& out) {
  if (a.size() != b.size()) throw InputError("TL diagrams of different sizes");
  const int two_n = a.size(), n = two_n / 2;
  auto external = [&](Node x) { return x.side == 0 ? x.idx > n : x.idx <= n; };
  auto partner = [&](Node x) { return Node{x.side, x.side == 0 ? a.partner(x.idx) : b.partner(x.idx)}; };
  auto glue = [&](Node x) { return Node{1 - x.side, two_n + 1 - x.idx}; };
  // Result labels: upper diagram top keeps 1..n, lower diagram bottom keeps n+1..2n.
  std::vector<int> partners(static_cast<std::size_t>(two_n), 0);
  std::vector<bool> seen_mid(static_cast<std::size_t>(two_n + 1), false);
  auto walk = [&](Node start) {
    Node cur = partner(start);
    while (!external(cur)) {
      if (cur.side == 0) seen_mid[static_cast<std::size_t>(cur.idx)] = true;
      cur = partner(glue(cur));
    }
    return cur.idx;
  };
  for (int i = 1; i <= n; ++i) partners[static_cast<std::size_t>(i - 1)] = walk({1, i});
  for (int i = n + 1; i <= two_n; ++i) partners[static_cast<std::size_t>(i - 1)] = walk({0, i});
  int loops = 0;
  for (int i = 1; i <= n; ++i) {
    if (seen_mid[static_cast<std::size_t>(i)]) continue;
    ++loops;
    Node cur{0, i};
    while (!seen_mid[static_cast<std::size_t>(cur.idx)]) {
      Node across = partner(cur);
      seen_mid[static_cast<std::size_t>(cur.idx)] = true;
      seen_mid[static_cast<std::size_t>(across.idx)] = true;
      cur = glue(partner(glue(across)));
    }
  }
  out = TLPairing::from_partners(partners);
  return loops;
}

int tl_closure_loops(const TLPairing& t) {
  const int two_n = t.size();
  std::vector<bool> seen(static_cast<std::size_t>(two_n + 1), false);
  int loops = 0;
  for (int i = 1; i <= two_n; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    ++loops;
    int cur = i;
    while (!seen[static_cast<std::size_t>(cur)]) {
      seen[static_cast<std::size_t>(cur)] = true;
      int p = t.partner(cur);
      seen[static_cast<std::size_t>(p)] = true;
      cur = two_n + 1 - p;
    }
  }
  return loops;
}

}  // namespace gjs
