#include "gjs/path.hpp"

#include <functional>

namespace gjs {

std::strong_ordering operator<=>(const Path& a, const Path& b) {
  if (auto c = a.edges.size() <=> b.edges.size(); c != 0) return c;
  if (auto c = a.vertices.front() <=> b.vertices.front(); c != 0) return c;
  return a.edges <=> b.edges;
}

Path trivial_path(int v) { return Path{{v}, {}}; }

Path make_path(const Graph& g, int start, const std::vector<int>& edges) {
  if (start < 0 || start >= g.vertex_count()) throw InputError("path start out of range");
  Path p{{start}, edges};
  p.vertices.reserve(edges.size() + 1);
  int cur = start;
  for (int e : edges) {
    if (e < 0 || e >= g.edge_count()) throw InputError("edge index out of range");
    if (g.edge(e).start != cur) throw InputError("edges do not compose");
    cur = g.edge(e).finish;
    p.vertices.push_back(cur);
  }
  return p;
}

Path path_through(const Graph& g, const std::vector<int>& vertices, const std::vector<int>& pick) {
  if (vertices.empty()) throw InputError("empty vertex sequence");
  std::vector<int> edges;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    int which = i < pick.size() ? pick[i] : 0;
    int found = -1;
    for (int e : g.out_edges(vertices[i]))
      if (g.edge(e).finish == vertices[i + 1] && which-- == 0) {
        found = e;
        break;
      }
    if (found < 0)
      throw InputError("no edge " + g.vertex(vertices[i]).id + " -> " + g.vertex(vertices[i + 1]).id);
    edges.push_back(found);
  }
  return make_path(g, vertices.front(), edges);
}

Path reverse(const Graph& g, const Path& p) {
  Path r;
  r.vertices.assign(p.vertices.rbegin(), p.vertices.rend());
  r.edges.reserve(p.edges.size());
  for (auto it = p.edges.rbegin(); it != p.edges.rend(); ++it) r.edges.push_back(g.reversal(*it));
  return r;
}

Path concat(const Path& p, const Path& q) {
  if (p.finish() != q.start()) throw PreconditionError("paths do not compose");
  Path r = p;
  r.edges.insert(r.edges.end(), q.edges.begin(), q.edges.end());
  r.vertices.insert(r.vertices.end(), q.vertices.begin() + 1, q.vertices.end());
  return r;
}

Path subpath(const Path& p, int i, int j) {
  if (i < 0 || j < i || j > p.length()) throw InputError("subpath bounds out of range");
  Path r;
  r.vertices.assign(p.vertices.begin() + i, p.vertices.begin() + j + 1);
  r.edges.assign(p.edges.begin() + i, p.edges.begin() + j);
  return r;
}

std::vector<Path> enumerate_paths(const Graph& g, int length, std::optional<int> start,
                                  std::optional<int> finish) {
  std::vector<Path> out;
  if (length < 0) return out;
  Path cur;
  std::function<void()> grow = [&]() {
    if (cur.length() == length) {
      if (!finish || cur.finish() == *finish) out.push_back(cur);
      return;
    }
    for (int e : g.out_edges(cur.finish())) {
      cur.edges.push_back(e);
      cur.vertices.push_back(g.edge(e).finish);
      grow();
      cur.edges.pop_back();
      cur.vertices.pop_back();
    }
  };
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (start && v != *start) continue;
    cur = trivial_path(v);
    grow();
  }
  return out;
}

std::vector<Path> enumerate_paths_upto(const Graph& g, int max_length, std::optional<int> start,
                                       std::optional<int> finish) {
  std::vector<Path> out;
  for (int n = 0; n <= max_length; ++n) {
    auto ps = enumerate_paths(g, n, start, finish);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

std::string to_string(const Graph& g, const Path& p) {
  std::string s = "[" + g.vertex(p.start()).id;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    s += " -";
    int par = g.multiplicity(p.vertices[i], p.vertices[i + 1]);
    if (par > 1) s += std::to_string(p.edges[i]);
    s += "> " + g.vertex(p.vertices[i + 1]).id;
  }
  return s + "]";
}

}  // namespace gjs
