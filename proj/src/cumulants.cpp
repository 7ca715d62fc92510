#include "gjs/cumulants.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "gjs/epitl.hpp"
#include "gjs/f_algebra.hpp"
#include "gjs/gr_algebra.hpp"

namespace gjs {

BElement b_zero(const Graph& g) { return BElement(static_cast<std::size_t>(g.vertex_count()), 0.0); }

double b_distance(const BElement& a, const BElement& b) {
  if (a.size() != b.size()) throw InputError("B elements of different graphs");
  double d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

Element right_mul(const Element& x, const BElement& b) {
  Element out(x.graph_ptr());
  for (const auto& [p, c] : x.terms()) out.add(p, c * b[static_cast<std::size_t>(p.finish())]);
  return out;
}

Element left_mul(const BElement& b, const Element& x) {
  Element out(x.graph_ptr());
  for (const auto& [p, c] : x.terms()) out.add(p, c * b[static_cast<std::size_t>(p.start())]);
  return out;
}

BElement expectation(const Element& y) {
  BElement out = b_zero(y.graph());
  Path image;
  double c = 0;
  for (const auto& [p, a] : y.terms()) {
    if (p.length() % 2) continue;
    for (const auto& s : hom_set(p.length(), 0))
      if (act_on_path(y.graph(), s, p, image, c)) out[static_cast<std::size_t>(image.start())] += a * c;
  }
  return out;
}

BElement moment(std::span<const Element> xs) {
  if (xs.empty()) throw InputError("moment of no arguments");
  Element y = xs[0];
  for (std::size_t i = 1; i < xs.size(); ++i) y = bullet(y, xs[i]);
  return expectation(y);
}

BElement moment_fpicture(std::span<const Element> xs) {
  if (xs.empty()) throw InputError("moment of no arguments");
  Element y = phi(xs[0]);
  for (std::size_t i = 1; i < xs.size(); ++i) y = sharp(y, phi(xs[i]));
  BElement out = b_zero(y.graph());
  const Element bottom = y.degree_part(0);
  for (const auto& [p, a] : bottom.terms()) out[static_cast<std::size_t>(p.start())] += a;
  return out;
}

BElement multiplicative_extension(const BMap& f, const Partition& pi, std::span<const Element> xs,
                                  IntervalChoice choice) {
  const int n = pi.size();
  if (static_cast<int>(xs.size()) != n) throw InputError("partition size does not match arguments");
  if (pi.block_count() == 1) return f(xs);
  std::vector<int> interval_blocks;
  for (int k = 0; k < pi.block_count(); ++k) {
    const auto& b = pi.blocks()[static_cast<std::size_t>(k)];
    if (b.back() - b.front() + 1 == static_cast<int>(b.size())) interval_blocks.push_back(k);
  }
  if (interval_blocks.empty()) throw PreconditionError("partition has no interval block");
  const Block& b =
      pi.blocks()[static_cast<std::size_t>(choice == IntervalChoice::First ? interval_blocks.front()
                                                                           : interval_blocks.back())];
  const int lo = b.front(), hi = b.back();
  BElement inner = f(xs.subspan(static_cast<std::size_t>(lo - 1), b.size()));
  std::vector<Element> rest;
  for (int i = 1; i <= n; ++i)
    if (i < lo || i > hi) rest.push_back(xs[static_cast<std::size_t>(i - 1)]);
  if (lo > 1)
    rest[static_cast<std::size_t>(lo - 2)] = right_mul(rest[static_cast<std::size_t>(lo - 2)], inner);
  else
    rest[0] = left_mul(inner, rest[0]);
  std::vector<Block> blocks;
  for (const auto& c : pi.blocks()) {
    if (c.front() == lo) continue;
    Block d;
    for (int i : c) d.push_back(i > hi ? i - static_cast<int>(b.size()) : i);
    blocks.push_back(std::move(d));
  }
  return multiplicative_extension(f, Partition(n - static_cast<int>(b.size()), blocks), rest, choice);
}

BElement cumulant_mobius(std::span<const Element> xs) {
  const int n = static_cast<int>(xs.size());
  if (n == 0) throw InputError("cumulant of no arguments");
  const Graph& g = xs[0].graph();
  BElement out = b_zero(g);
  BMap mom = [](std::span<const Element> ys) { return moment(ys); };
  const Partition top = Partition::one(n);
  for (const auto& pi : nc_table(n)) {
    long long mu = mobius_nc(pi, top);
    if (mu == 0) continue;
    BElement term = multiplicative_extension(mom, pi, xs);
    for (std::size_t v = 0; v < out.size(); ++v) out[v] += static_cast<double>(mu) * term[v];
  }
  return out;
}

namespace {

bool composite(const Graph& g, std::span<const Path> xis, Path& out) {
  (void)g;
  if (xis.empty()) return false;
  out = xis[0];
  for (std::size_t i = 1; i < xis.size(); ++i) {
    if (out.finish() != xis[i].start()) return false;
    out = concat(out, xis[i]);
  }
  return true;
}

void require_length_two(std::span<const Path> xis) {
  for (const auto& p : xis)
    if (p.length() != 2) throw PreconditionError("cumulant arguments must be paths of length 2");
}

}  // namespace

BElement cumulant_closed_form(const Graph& g, std::span<const Path> xis) {
  require_length_two(xis);
  BElement out = b_zero(g);
  Path xi;
  if (!composite(g, xis, xi) || !is_starry(g, xi)) return out;
  const int n = static_cast<int>(xis.size());
  const int v = xi.start(), w = xi.vertices[1];
  double num = 1;
  for (int i = 1; i < n; ++i) num *= g.mu(xi.vertices[static_cast<std::size_t>(2 * i)]);
  out[static_cast<std::size_t>(v)] = num / (std::pow(g.mu(w), n - 2) * g.mu(v));
  return out;
}

BElement s_pi_action(const Graph& g, const Partition& pi, std::span<const Path> xis) {
  require_length_two(xis);
  BElement out = b_zero(g);
  Path xi, image;
  double c = 0;
  if (!composite(g, xis, xi)) return out;
  EpiMorphism s = EpiMorphism::from_pairing(double_bijection(pi));
  if (act_on_path(g, s, xi, image, c)) out[static_cast<std::size_t>(image.start())] = c;
  return out;
}

BElement s_pi_product(const Graph& g, const Partition& pi, std::span<const Path> xis) {
  require_length_two(xis);
  BElement out = b_zero(g);
  Path xi;
  if (!composite(g, xis, xi)) return out;
  auto x = [&](int c) -> const Path& { return xis[static_cast<std::size_t>(c - 1)]; };
  double val = 1;
  for (const auto& cls : pi.blocks()) {
    const int t = static_cast<int>(cls.size());
    const Path& first = x(cls.front());
    const Path& last = x(cls.back());
    if (last.edge_at(2) != g.reversal(first.edge_at(1))) return out;
    val *= g.mu(first.vertices[1]) / g.mu(last.vertices[2]);
    for (int p = 0; p + 1 < t; ++p) {
      const Path& a = x(cls[static_cast<std::size_t>(p)]);
      const Path& b = x(cls[static_cast<std::size_t>(p + 1)]);
      if (a.edge_at(2) != g.reversal(b.edge_at(1))) return out;
      val *= g.mu(a.vertices[2]) / g.mu(b.vertices[1]);
    }
  }
  out[static_cast<std::size_t>(xis[0].start())] = val;
  return out;
}

FreenessReport freeness_certificate(const GraphPtr& g, int max_order, double tol) {
  FreenessReport rep;
  rep.max_order = max_order;
  std::vector<Path> gens;
  for (const auto& p : enumerate_paths(*g, 2))
    if (g->parity(p.start()) == Parity::Even) gens.push_back(p);
  std::vector<Path> chain;
  std::vector<Element> args;
  auto visit = [&]() {
    BElement kappa = cumulant_mobius(args);
    BElement closed = cumulant_closed_form(*g, chain);
    ++rep.tuples_checked;
    rep.max_closed_form_gap = std::max(rep.max_closed_form_gap, b_distance(kappa, closed));
    bool mixed = false;
    for (const auto& p : chain)
      if (p.vertices[1] != chain.front().vertices[1]) mixed = true;
    if (!mixed) return;
    ++rep.mixed_tuples;
    double size = 0;
    for (double k : kappa) size = std::max(size, std::abs(k));
    if (size > rep.max_mixed) {
      rep.max_mixed = size;
      rep.worst_witness.clear();
      for (const auto& p : chain) rep.worst_witness += to_string(*g, p);
    }
  };
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth > 0) visit();
    if (depth == max_order) return;
    for (const auto& p : gens) {
      if (!chain.empty() && chain.back().finish() != p.start()) continue;
      chain.push_back(p);
      args.push_back(Element::basis(g, p));
      self(self, depth + 1);
      chain.pop_back();
      args.pop_back();
    }
  };
  rec(rec, 0);
  rep.pass = rep.max_mixed <= tol && rep.max_closed_form_gap <= tol;
  return rep;
}

}  // namespace gjs
