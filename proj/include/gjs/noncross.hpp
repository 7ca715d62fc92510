#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "gjs/graph.hpp"
#include "gjs/path.hpp"

namespace gjs {

using Block = std::vector<int>;

// Partition of {1..n}. Blocks are sorted internally and ordered by minimum.
class Partition {
 public:
  Partition() = default;
  // Canonicalizes and validates that the blocks partition {1..n}.
  Partition(int n, std::vector<Block> blocks);

  int size() const { return n_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  const std::vector<Block>& blocks() const { return blocks_; }
  // Index of the block containing i (1-based element).
  int block_of(int i) const { return owner_[static_cast<std::size_t>(i - 1)]; }

  bool is_noncrossing() const;
  // True if every block of *this lies inside a block of other.
  bool refines(const Partition& other) const;

  static Partition one(int n);
  static Partition zero(int n);

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_;
  }
  friend auto operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.blocks_ <=> b.blocks_;
  }

 private:
  int n_ = 0;
  std::vector<Block> blocks_;
  std::vector<int> owner_;
};

std::string to_string(const Partition& p);

// Non-crossing pairing of {1..2n}.
class TLPairing {
 public:
  TLPairing() = default;
  explicit TLPairing(Partition p);
  // Build from a partner table on {1..2n} (partner[i-1] = j).
  static TLPairing from_partners(const std::vector<int>& partner);

  int size() const { return p_.size(); }
  const Partition& partition() const { return p_; }
  int partner(int i) const { return partner_[static_cast<std::size_t>(i - 1)]; }
  // Pairs (i, j) with i < j ordered by i.
  std::vector<std::pair<int, int>> pairs() const;

  friend bool operator==(const TLPairing& a, const TLPairing& b) { return a.p_ == b.p_; }
  friend auto operator<=>(const TLPairing& a, const TLPairing& b) { return a.p_ <=> b.p_; }

 private:
  Partition p_;
  std::vector<int> partner_;
};

std::uint64_t catalan(int n);

// All non-crossing partitions of {1..n}, without repetition.
std::vector<Partition> enumerate_nc(int n);
// All non-crossing pairings of {1..two_n}; empty result for odd sizes.
std::vector<TLPairing> enumerate_tl(int two_n);

// Cached TL(two_n) together with the Kreweras complement of each pairing.
struct TLWithComplement {
  TLPairing pairing;
  Partition complement;
};
const std::vector<TLWithComplement>& tl_table(int two_n);
const std::vector<Partition>& nc_table(int n);

// Kreweras complement: the largest sigma on the interleaved points
// 1 < 1' < 2 < 2' < ... such that pi and sigma together stay non-crossing.
Partition kreweras(const Partition& pi);

struct CheckResult {
  bool pass = true;
  std::string witness;
};

// Every class of K(S) has one parity and {a_i + 1, a_{i+1}} is in S.
CheckResult kreweras_class_structure(const TLPairing& s);
// Sum of the signed class indicators: 2-|C| unless 2n is in C, then -|C|.
CheckResult epsilon_identity_check(const TLPairing& s);

// Moebius function of the lattice NC(n) on the interval [pi, tau].
long long mobius_nc(const Partition& pi, const Partition& tau);

// The pairing S(pi) of {1..2n} built from pi in NC(n).
TLPairing double_bijection(const Partition& pi);

// xi_{2i} = rev(xi_{2i+1}) for i = 1..n, indices mod 2n.
bool is_starry(const Graph& g, const Path& xi);

}  // namespace gjs
