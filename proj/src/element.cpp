#include "gjs/element.hpp"

#include <cmath>
#include <sstream>

namespace gjs {

Element Element::basis(GraphPtr g, Path p, double c) {
  Element x(std::move(g));
  x.add(p, c);
  return x;
}

Element Element::vertex_unit(GraphPtr g, int v) { return basis(std::move(g), trivial_path(v)); }

Element Element::unit(GraphPtr g) {
  Element x(g);
  for (int v = 0; v < g->vertex_count(); ++v) x.add(trivial_path(v), 1.0);
  return x;
}

void Element::add(const Path& p, double c) {
  if (c == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

double Element::coefficient(const Path& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? 0.0 : it->second;
}

Element Element::degree_part(int n) const {
  Element out(g_);
  for (const auto& [p, c] : terms_)
    if (p.length() == n) out.terms_.emplace_hint(out.terms_.end(), p, c);
  return out;
}

int Element::max_degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.length();
}

Element Element::pruned(double tol) const {
  Element out(g_);
  for (const auto& [p, c] : terms_)
    if (std::abs(c) > tol) out.terms_.emplace_hint(out.terms_.end(), p, c);
  return out;
}

void Element::same_graph(const Element& o) const {
  if (g_ && o.g_ && g_ != o.g_) throw InputError("elements belong to different graphs");
}

Element& Element::operator+=(const Element& o) {
  same_graph(o);
  if (!g_) g_ = o.g_;
  for (const auto& [p, c] : o.terms_) add(p, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  same_graph(o);
  if (!g_) g_ = o.g_;
  for (const auto& [p, c] : o.terms_) add(p, -c);
  return *this;
}

Element& Element::operator*=(double s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, c] : terms_) c *= s;
  return *this;
}

double Element::sup_norm() const {
  double m = 0;
  for (const auto& [p, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

double distance(const Element& a, const Element& b) { return (a - b).sup_norm(); }

std::string to_string(const Element& x) {
  if (x.is_zero()) return "0";
  std::ostringstream os;
  os.precision(12);
  bool first = true;
  for (const auto& [p, c] : x.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c << "*" << to_string(x.graph(), p);
  }
  return os.str();
}

}  // namespace gjs
