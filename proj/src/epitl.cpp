#include "gjs/epitl.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

namespace gjs {

EpiMorphism::EpiMorphism(int source, int target, std::vector<int> caps)
    : source_(source), target_(target), caps_(std::move(caps)) {
  if (target < 0 || source < target || (source - target) % 2)
    throw InputError("Hom([" + std::to_string(source) + "],[" + std::to_string(target) +
                     "]) is empty");
  const int k = (source - target) / 2;
  if (static_cast<int>(caps_.size()) != k) throw InputError("wrong number of caps");
  for (int j = 1; j <= k; ++j) {
    int ij = caps_[j - 1];
    if (ij < 1 || ij > target + 2 * j - 1) throw InputError("cap index out of range");
    if (j > 1 && ij <= caps_[j - 2]) throw InputError("cap indices must increase");
  }
  std::vector<int> labels;
  for (int i = 1; i <= source; ++i) labels.push_back(i);
  for (int j = k; j >= 1; --j) {
    auto pos = labels.begin() + (caps_[j - 1] - 1);
    pairs_.push_back({*pos, *(pos + 1)});
    labels.erase(pos, pos + 2);
  }
  std::sort(pairs_.begin(), pairs_.end());
  through_ = std::move(labels);
}

EpiMorphism EpiMorphism::identity(int n) { return EpiMorphism(n, n, {}); }

EpiMorphism EpiMorphism::generator(int n, int i) {
  if (i < 1 || i >= n) throw InputError("generator index out of range");
  return EpiMorphism(n, n - 2, {i});
}

EpiMorphism EpiMorphism::from_pairing(const TLPairing& t) {
  return from_cap_pairs(t.size(), t.pairs());
}

EpiMorphism EpiMorphism::from_cap_pairs(int source, std::vector<std::pair<int, int>> pairs) {
  std::vector<int> caps;
  for (auto& [a, b] : pairs) {
    if (a > b) std::swap(a, b);
    caps.push_back(a);
  }
  std::sort(caps.begin(), caps.end());
  std::sort(pairs.begin(), pairs.end());
  EpiMorphism s(source, source - 2 * static_cast<int>(pairs.size()), caps);
  if (s.pairs_ != pairs) throw InputError("cap pairs do not form an epi TL morphism");
  return s;
}

bool EpiMorphism::nonnested() const {
  for (std::size_t j = 1; j < caps_.size(); ++j)
    if (caps_[j] < caps_[j - 1] + 2) return false;
  return true;
}

std::string to_string(const EpiMorphism& s) {
  if (s.caps().empty()) return "id_" + std::to_string(s.source());
  std::string out;
  const int k = static_cast<int>(s.caps().size());
  for (int j = 1; j <= k; ++j) {
    if (j > 1) out += " ";
    out += "S^" + std::to_string(s.target() + 2 * j) + "_" + std::to_string(s.caps()[j - 1]);
  }
  return out;
}

EpiMorphism compose(const EpiMorphism& f, const EpiMorphism& g) {
  if (g.target() != f.source()) throw InputError("morphisms are not composable");
  std::vector<std::pair<int, int>> pairs = g.cap_pairs();
  const auto& tg = g.through();
  for (auto [a, b] : f.cap_pairs()) pairs.push_back({tg[a - 1], tg[b - 1]});
  return EpiMorphism::from_cap_pairs(g.source(), std::move(pairs));
}

std::vector<EpiMorphism> enumerate_hom(int n, int m, bool nonnested_only) {
  std::vector<EpiMorphism> out;
  if (m < 0 || n < m || (n - m) % 2) return out;
  const int k = (n - m) / 2;
  std::vector<int> caps;
  auto rec = [&](auto&& self, int j) -> void {
    if (j > k) {
      out.emplace_back(n, m, caps);
      return;
    }
    int lo = caps.empty() ? 1 : caps.back() + (nonnested_only ? 2 : 1);
    for (int i = lo; i <= m + 2 * j - 1; ++i) {
      caps.push_back(i);
      self(self, j + 1);
      caps.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

const std::vector<EpiMorphism>& hom_set(int n, int m, bool nonnested_only) {
  static std::mutex mtx;
  static std::map<std::tuple<int, int, bool>, std::vector<EpiMorphism>> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_tuple(n, m, nonnested_only);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  return cache.emplace(key, enumerate_hom(n, m, nonnested_only)).first->second;
}

bool act_on_path(const Graph& g, const EpiMorphism& s, const Path& xi, Path& image,
                 double& coeff) {
  if (xi.length() != s.source())
    throw PreconditionError("morphism source does not match path length");
  coeff = 1.0;
  for (auto [i, j] : s.cap_pairs()) {
    if (xi.edge_at(i) != g.reversal(xi.edge_at(j))) return false;
    coeff *= g.mu(xi.vertices[i]) / g.mu(xi.vertices[j]);
  }
  const auto& t = s.through();
  if (t.empty()) {
    image = trivial_path(xi.finish());
    return true;
  }
  image.edges.clear();
  image.vertices.clear();
  image.vertices.push_back(g.edge(xi.edge_at(t.front())).start);
  for (int p : t) {
    int e = xi.edge_at(p);
    image.edges.push_back(e);
    image.vertices.push_back(g.edge(e).finish);
  }
  return true;
}

Element act(const EpiMorphism& s, const Element& x) {
  Element out(x.graph_ptr());
  Path image;
  double c = 0;
  for (const auto& [p, a] : x.terms())
    if (act_on_path(x.graph(), s, p, image, c)) out.add(image, a * c);
  return out;
}

}  // namespace gjs
