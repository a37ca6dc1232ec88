#pragma once

// Quivers, paths and relation sets. Vertices are 1-based. Paths compose left
// to right: p.q means "traverse p, then q", so arrows of a path satisfy
// target(a_k) = source(a_{k+1}).

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrep/field.hpp"

namespace qrep {

struct QuiverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Arrow {
  std::string name;
  int source = 0;
  int target = 0;
};

struct Quiver {
  int vertex_count = 0;
  std::vector<Arrow> arrows;

  Quiver() = default;
  Quiver(int n, std::vector<Arrow> arr) : vertex_count(n), arrows(std::move(arr)) { validate(); }

  void validate() const {
    if (vertex_count < 1) throw QuiverError("quiver needs at least one vertex");
    std::set<std::string> names;
    for (const Arrow& a : arrows) {
      if (a.source < 1 || a.source > vertex_count || a.target < 1 || a.target > vertex_count)
        throw QuiverError("arrow " + a.name + " has endpoint out of range");
      if (!a.name.empty() && !names.insert(a.name).second)
        throw QuiverError("duplicate arrow name " + a.name);
    }
  }

  std::optional<int> arrow_index(const std::string& name) const {
    for (size_t i = 0; i < arrows.size(); ++i)
      if (arrows[i].name == name) return static_cast<int>(i);
    return std::nullopt;
  }

  // Connectivity of the underlying undirected graph.
  bool connected() const {
    if (vertex_count == 0) return true;
    std::vector<char> seen(static_cast<size_t>(vertex_count) + 1, 0);
    std::vector<int> stack = {1};
    seen[1] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const Arrow& a : arrows) {
        int w = -1;
        if (a.source == v) w = a.target;
        else if (a.target == v) w = a.source;
        if (w > 0 && !seen[static_cast<size_t>(w)]) {
          seen[static_cast<size_t>(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    for (int v = 1; v <= vertex_count; ++v)
      if (!seen[static_cast<size_t>(v)]) return false;
    return true;
  }

  Quiver reversed() const {
    Quiver q;
    q.vertex_count = vertex_count;
    q.arrows.reserve(arrows.size());
    for (const Arrow& a : arrows) q.arrows.push_back({a.name, a.target, a.source});
    return q;
  }
};

// A path is a composable arrow-index sequence; the empty sequence is the
// trivial path e_v at its designated vertex.
struct Path {
  int source = 0;
  std::vector<int> arrows;

  static Path trivial(int v) { return Path{v, {}}; }

  int length() const { return static_cast<int>(arrows.size()); }
  bool is_trivial() const { return arrows.empty(); }

  int target(const Quiver& q) const {
    return arrows.empty() ? source : q.arrows[static_cast<size_t>(arrows.back())].target;
  }

  bool composable_with(const Path& next, const Quiver& q) const { return target(q) == next.sourceOf(q); }

  int sourceOf(const Quiver& q) const {
    return arrows.empty() ? source : q.arrows[static_cast<size_t>(arrows.front())].source;
  }

  Path concat(const Path& next) const {
    Path p;
    p.source = source;
    p.arrows = arrows;
    p.arrows.insert(p.arrows.end(), next.arrows.begin(), next.arrows.end());
    return p;
  }

  // The same arrow indices traversed backwards, as a path of the reversed
  // quiver. q is the original quiver.
  Path reversed(const Quiver& q) const {
    Path p;
    p.source = target(q);
    p.arrows.assign(arrows.rbegin(), arrows.rend());
    return p;
  }

  void check(const Quiver& q) const {
    if (arrows.empty()) {
      if (source < 1 || source > q.vertex_count) throw QuiverError("trivial path vertex out of range");
      return;
    }
    for (size_t i = 0; i < arrows.size(); ++i) {
      if (arrows[i] < 0 || arrows[i] >= static_cast<int>(q.arrows.size()))
        throw QuiverError("path refers to unknown arrow");
      if (i + 1 < arrows.size() &&
          q.arrows[static_cast<size_t>(arrows[i])].target != q.arrows[static_cast<size_t>(arrows[i + 1])].source)
        throw QuiverError("path arrows do not compose");
    }
  }

  // Global deterministic order: by length, trivial paths by vertex, others
  // lexicographically by arrow ids.
  friend bool operator<(const Path& a, const Path& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    if (a.arrows.empty()) return a.source < b.source;
    return a.arrows < b.arrows;
  }
  friend bool operator==(const Path& a, const Path& b) {
    return a.length() == b.length() && (a.arrows.empty() ? a.source == b.source : a.arrows == b.arrows);
  }
};

inline std::string path_to_string(const Path& p, const Quiver& q) {
  if (p.is_trivial()) return "e" + std::to_string(p.source);
  std::string s;
  for (size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += "*";
    s += q.arrows[static_cast<size_t>(p.arrows[i])].name;
  }
  return s;
}

// All paths of exactly the given length, in the global order.
inline std::vector<Path> enumerate_paths(const Quiver& q, int len) {
  std::vector<Path> out;
  if (len == 0) {
    for (int v = 1; v <= q.vertex_count; ++v) out.push_back(Path::trivial(v));
    return out;
  }
  std::vector<int> stack;
  auto rec = [&](auto&& self, int at_vertex, int remaining) -> void {
    if (remaining == 0) {
      Path p;
      p.source = q.arrows[static_cast<size_t>(stack.front())].source;
      p.arrows = stack;
      out.push_back(std::move(p));
      return;
    }
    for (size_t i = 0; i < q.arrows.size(); ++i) {
      if (q.arrows[i].source != at_vertex) continue;
      stack.push_back(static_cast<int>(i));
      self(self, q.arrows[i].target, remaining - 1);
      stack.pop_back();
    }
  };
  for (size_t i = 0; i < q.arrows.size(); ++i) {
    stack.push_back(static_cast<int>(i));
    rec(rec, q.arrows[i].target, len - 1);
    stack.pop_back();
  }
  return out;
}

// A relation is a linear combination of parallel paths. rad_power(m) marks
// the full set of length-m paths as relations.
template <class Scalar>
struct Relation {
  std::vector<std::pair<Scalar, Path>> terms;

  // Shared (source, target) of all terms; throws if terms are not parallel.
  std::pair<int, int> endpoints(const Quiver& q) const {
    if (terms.empty()) throw QuiverError("empty relation");
    int s = terms.front().second.sourceOf(q);
    int t = terms.front().second.target(q);
    for (const auto& [c, p] : terms) {
      if (p.sourceOf(q) != s || p.target(q) != t) throw QuiverError("relation terms are not parallel paths");
    }
    return {s, t};
  }
};

template <class Scalar>
struct RelationSet {
  std::vector<Relation<Scalar>> relations;
  std::optional<int> rad_power;

  bool empty() const { return relations.empty() && !rad_power; }

  RelationSet<Scalar> reversed(const Quiver& q) const {
    RelationSet<Scalar> r;
    r.rad_power = rad_power;
    for (const auto& rel : relations) {
      Relation<Scalar> rr;
      for (const auto& [c, p] : rel.terms) rr.terms.emplace_back(c, p.reversed(q));
      r.relations.push_back(std::move(rr));
    }
    return r;
  }
};

}  // namespace qrep
