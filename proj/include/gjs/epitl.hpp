#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gjs/element.hpp"
#include "gjs/noncross.hpp"

namespace gjs {

// Morphism [n] -> [m] of the epi Temperley-Lieb category.
//
// Stored in canonical form S^{m+2}_{i_1} S^{m+4}_{i_2} ... S^{m+2k}_{i_k}
// with i_1 < ... < i_k and i_j <= m + 2j - 1. The i_j are the left ends
// of the caps on the bottom row.
class EpiMorphism {
 public:
  EpiMorphism() = default;
  // Throws InputError unless caps is a valid canonical tuple.
  EpiMorphism(int source, int target, std::vector<int> caps);

  static EpiMorphism identity(int n);
  // The generator S^n_i : [n] -> [n-2], 1 <= i < n.
  static EpiMorphism generator(int n, int i);
  // The element of Hom([2n], [0]) with the given cap pairing.
  static EpiMorphism from_pairing(const TLPairing& t);
  // Build from an arbitrary set of cap pairs whose inner points are capped.
  static EpiMorphism from_cap_pairs(int source, std::vector<std::pair<int, int>> pairs);

  int source() const { return source_; }
  int target() const { return target_; }
  const std::vector<int>& caps() const { return caps_; }
  // Cap pairs (i, j), i < j, ordered by i.
  const std::vector<std::pair<int, int>>& cap_pairs() const { return pairs_; }
  // Bottom points joined to the top row, increasing.
  const std::vector<int>& through() const { return through_; }
  // Caps side by side, none inside another.
  bool nonnested() const;

  friend bool operator==(const EpiMorphism& a, const EpiMorphism& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.caps_ == b.caps_;
  }
  friend auto operator<=>(const EpiMorphism& a, const EpiMorphism& b) {
    if (auto c = a.source_ <=> b.source_; c != 0) return c;
    if (auto c = a.target_ <=> b.target_; c != 0) return c;
    return a.caps_ <=> b.caps_;
  }

 private:
  int source_ = 0;
  int target_ = 0;
  std::vector<int> caps_;
  std::vector<std::pair<int, int>> pairs_;
  std::vector<int> through_;
};

std::string to_string(const EpiMorphism& s);

// f o g, defined when g.target() == f.source().
EpiMorphism compose(const EpiMorphism& f, const EpiMorphism& g);

// Hom([n], [m]) in canonical order; optionally only the non-nested ones.
std::vector<EpiMorphism> enumerate_hom(int n, int m, bool nonnested_only = false);
// Cached version of enumerate_hom.
const std::vector<EpiMorphism>& hom_set(int n, int m, bool nonnested_only = false);

// Coefficient and image of S[xi] for a single path. Returns false if zero.
bool act_on_path(const Graph& g, const EpiMorphism& s, const Path& xi, Path& image,
                 double& coeff);
// The action on Gr(Gamma). Throws PreconditionError if x has a component
// whose length differs from s.source().
Element act(const EpiMorphism& s, const Element& x);

}  // namespace gjs
