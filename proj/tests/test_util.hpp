#pragma once

#include <optional>
#include <random>
#include <vector>

#include "gjs/element.hpp"

namespace gjs::testing {

inline Element random_element(const GraphPtr& g, const std::vector<Path>& pool, std::mt19937_64& rng,
                              int terms) {
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_real_distribution<double> coef(-1, 1);
  Element x(g);
  for (int i = 0; i < terms; ++i) x.add(pool[pick(rng)], coef(rng));
  return x;
}

inline std::vector<Path> loops_upto(const Graph& g, int max_len, std::optional<int> at = std::nullopt) {
  std::vector<Path> out;
  for (int len = 0; len <= max_len; len += 2)
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (at && *at != v) continue;
      for (auto& p : enumerate_paths(g, len, v, v)) out.push_back(std::move(p));
    }
  return out;
}

inline Element path_element(const GraphPtr& g, const std::vector<int>& vertices,
                            const std::vector<int>& pick = {}) {
  return Element::basis(g, path_through(*g, vertices, pick));
}

}  // namespace gjs::testing
