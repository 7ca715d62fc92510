#include "gjs/noncross.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

namespace gjs {

Partition::Partition(int n, std::vector<Block> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n < 0) throw InputError("partition size must be non-negative");
  owner_.assign(static_cast<std::size_t>(n), -1);
  for (auto& b : blocks_) {
    if (b.empty()) throw InputError("partition has an empty block");
    std::sort(b.begin(), b.end());
  }
  std::sort(blocks_.begin(), blocks_.end());
  for (std::size_t k = 0; k < blocks_.size(); ++k)
    for (int i : blocks_[k]) {
      if (i < 1 || i > n) throw InputError("partition element out of range");
      if (owner_[i - 1] >= 0) throw InputError("partition element repeated");
      owner_[i - 1] = static_cast<int>(k);
    }
  for (int o : owner_)
    if (o < 0) throw InputError("partition does not cover {1..n}");
}

bool Partition::is_noncrossing() const {
  // a < b < c < d with a, c in one block and b, d in another.
  for (int a = 1; a <= n_; ++a)
    for (int b = a + 1; b <= n_; ++b) {
      if (block_of(a) == block_of(b)) continue;
      for (int c = b + 1; c <= n_; ++c) {
        if (block_of(c) != block_of(a)) continue;
        for (int d = c + 1; d <= n_; ++d)
          if (block_of(d) == block_of(b)) return false;
      }
    }
  return true;
}

bool Partition::refines(const Partition& other) const {
  if (n_ != other.n_) return false;
  for (const auto& b : blocks_)
    for (int i : b)
      if (other.block_of(i) != other.block_of(b.front())) return false;
  return true;
}

Partition Partition::one(int n) {
  Block b;
  for (int i = 1; i <= n; ++i) b.push_back(i);
  return n == 0 ? Partition(0, {}) : Partition(n, {b});
}

Partition Partition::zero(int n) {
  std::vector<Block> bs;
  for (int i = 1; i <= n; ++i) bs.push_back({i});
  return Partition(n, bs);
}

std::string to_string(const Partition& p) {
  std::string s = "{";
  for (std::size_t k = 0; k < p.blocks().size(); ++k) {
    if (k) s += ",";
    s += "{";
    for (std::size_t j = 0; j < p.blocks()[k].size(); ++j) {
      if (j) s += ",";
      s += std::to_string(p.blocks()[k][j]);
    }
    s += "}";
  }
  return s + "}";
}

TLPairing::TLPairing(Partition p) : p_(std::move(p)) {
  if (p_.size() % 2) throw InputError("pairing of an odd number of points");
  partner_.assign(static_cast<std::size_t>(p_.size()), 0);
  for (const auto& b : p_.blocks()) {
    if (b.size() != 2) throw InputError("pairing block of size other than 2");
    partner_[b[0] - 1] = b[1];
    partner_[b[1] - 1] = b[0];
  }
  if (!p_.is_noncrossing()) throw InputError("pairing is crossing");
}

TLPairing TLPairing::from_partners(const std::vector<int>& partner) {
  std::vector<Block> bs;
  for (std::size_t i = 0; i < partner.size(); ++i) {
    int a = static_cast<int>(i) + 1, b = partner[i];
    if (b < 1 || b > static_cast<int>(partner.size()) || partner[b - 1] != a)
      throw InputError("partner table is not an involution");
    if (a < b) bs.push_back({a, b});
    if (a == b) throw InputError("partner table has a fixed point");
  }
  return TLPairing(Partition(static_cast<int>(partner.size()), bs));
}

std::vector<std::pair<int, int>> TLPairing::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (const auto& b : p_.blocks()) out.push_back({b[0], b[1]});
  return out;
}

std::uint64_t catalan(int n) {
  std::uint64_t c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

std::vector<Partition> enumerate_nc(int n) {
  std::vector<Partition> out;
  if (n == 0) {
    out.push_back(Partition(0, {}));
    return out;
  }
  // Open blocks live on a stack; joining a block closes everything above it.
  std::vector<Block> blocks;
  std::vector<int> stack;
  std::function<void(int)> rec = [&](int i) {
    if (i > n) {
      out.emplace_back(n, blocks);
      return;
    }
    blocks.push_back({i});
    stack.push_back(static_cast<int>(blocks.size()) - 1);
    rec(i + 1);
    stack.pop_back();
    blocks.pop_back();
    for (std::size_t p = 0; p < stack.size(); ++p) {
      std::vector<int> saved(stack.begin() + static_cast<long>(p) + 1, stack.end());
      stack.resize(p + 1);
      blocks[stack[p]].push_back(i);
      rec(i + 1);
      blocks[stack[p]].pop_back();
      stack.insert(stack.end(), saved.begin(), saved.end());
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TLPairing> enumerate_tl(int two_n) {
  std::vector<TLPairing> out;
  if (two_n < 0 || two_n % 2) return out;
  std::vector<int> partner(static_cast<std::size_t>(two_n), 0);
  std::function<void()> rec = [&]() {
    auto it = std::find(partner.begin(), partner.end(), 0);
    if (it == partner.end()) {
      out.push_back(TLPairing::from_partners(partner));
      return;
    }
    int a = static_cast<int>(it - partner.begin()) + 1;
    // a pairs with b if the points strictly between can be paired among themselves.
    for (int b = a + 1; b <= two_n; b += 2) {
      bool free = true;
      for (int c = a + 1; c < b; ++c)
        if (partner[c - 1] && (partner[c - 1] < a || partner[c - 1] > b)) free = false;
      if (partner[b - 1] || !free) continue;
      partner[a - 1] = b;
      partner[b - 1] = a;
      rec();
      partner[a - 1] = partner[b - 1] = 0;
    }
  };
  rec();
  std::sort(out.begin(), out.end());
  return out;
}

const std::vector<TLWithComplement>& tl_table(int two_n) {
  static std::mutex m;
  static std::map<int, std::vector<TLWithComplement>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(two_n);
  if (it != cache.end()) return it->second;
  std::vector<TLWithComplement> rows;
  for (auto& t : enumerate_tl(two_n)) {
    Partition k = kreweras(t.partition());
    rows.push_back({std::move(t), std::move(k)});
  }
  return cache.emplace(two_n, std::move(rows)).first->second;
}

const std::vector<Partition>& nc_table(int n) {
  static std::mutex m;
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  return cache.emplace(n, enumerate_nc(n)).first->second;
}

Partition kreweras(const Partition& pi) {
  const int n = pi.size();
  if (n == 0) return Partition(0, {});
  // As permutations, K(pi) = pi^{-1} gamma with gamma = (1 2 ... n) and each
  // block of pi read as an increasing cycle.
  std::vector<int> pinv(static_cast<std::size_t>(n + 1));
  for (const auto& b : pi.blocks())
    for (std::size_t k = 0; k < b.size(); ++k) pinv[b[(k + 1) % b.size()]] = b[k];
  std::vector<int> sigma(static_cast<std::size_t>(n + 1));
  for (int i = 1; i <= n; ++i) sigma[i] = pinv[i % n + 1];
  std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
  std::vector<Block> blocks;
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    Block b;
    for (int j = i; !seen[j]; j = sigma[j]) {
      seen[j] = true;
      b.push_back(j);
    }
    blocks.push_back(std::move(b));
  }
  return Partition(n, std::move(blocks));
}

CheckResult kreweras_class_structure(const TLPairing& s) {
  const int two_n = s.size();
  Partition k = kreweras(s.partition());
  for (const auto& c : k.blocks()) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      if ((c[i] - c[0]) % 2)
        return {false, "mixed parity class in K(" + to_string(s.partition()) + ")"};
      int next = c[i] % two_n + 1;
      int want = c[(i + 1) % c.size()];
      if (s.partner(next) != want)
        return {false, "pair {" + std::to_string(next) + "," + std::to_string(want) +
                           "} missing from " + to_string(s.partition())};
    }
  }
  return {};
}

CheckResult epsilon_identity_check(const TLPairing& s) {
  const int two_n = s.size();
  Partition k = kreweras(s.partition());
  for (const auto& c : k.blocks()) {
    int sum = 0;
    for (int i : c) sum += i < s.partner(i) ? 1 : -1;
    bool external = std::find(c.begin(), c.end(), two_n) != c.end();
    int want = external ? -static_cast<int>(c.size()) : 2 - static_cast<int>(c.size());
    if (sum != want)
      return {false, "class sum " + std::to_string(sum) + " != " + std::to_string(want) +
                         " for " + to_string(s.partition())};
  }
  return {};
}

long long mobius_nc(const Partition& pi, const Partition& tau) {
  if (pi.size() != tau.size()) throw InputError("mobius on partitions of different sizes");
  if (!pi.refines(tau)) return 0;
  std::vector<const Partition*> interval;
  for (const auto& s : nc_table(pi.size()))
    if (pi.refines(s) && s.refines(tau)) interval.push_back(&s);
  // Coarser partitions first, so mu(sigma, tau) is known for all sigma above.
  std::sort(interval.begin(), interval.end(), [](const Partition* a, const Partition* b) {
    return a->block_count() < b->block_count();
  });
  std::vector<long long> mu(interval.size(), 0);
  for (std::size_t i = 0; i < interval.size(); ++i) {
    if (*interval[i] == tau) {
      mu[i] = 1;
      continue;
    }
    long long s = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (interval[i]->refines(*interval[j]) && !(*interval[i] == *interval[j])) s += mu[j];
    mu[i] = -s;
    if (*interval[i] == pi) return mu[i];
  }
  return mu.back();
}

TLPairing double_bijection(const Partition& pi) {
  std::vector<Block> bs;
  for (const auto& c : pi.blocks()) {
    const std::size_t t = c.size();
    for (std::size_t p = 0; p < t; ++p) bs.push_back({2 * c[p], 2 * c[(p + 1) % t] - 1});
  }
  return TLPairing(Partition(2 * pi.size(), bs));
}

bool is_starry(const Graph& g, const Path& xi) {
  const int len = xi.length();
  if (len == 0 || len % 2) return false;
  for (int i = 2; i <= len; i += 2)
    if (xi.edge_at(i) != g.reversal(xi.edge_at(i % len + 1))) return false;
  return true;
}

}  // namespace gjs
