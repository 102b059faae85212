#include "dgc/geometry.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace dgc {

IncidenceStructure IncidenceStructure::make(int points,
                                            std::vector<std::vector<int>> lines,
                                            std::string name) {
  IncidenceStructure s;
  s.points = points;
  s.name = std::move(name);
  std::set<std::vector<int>> seen;
  for (std::vector<int>& line : lines) {
    std::sort(line.begin(), line.end());
    if (line.size() < 2) throw std::invalid_argument("line with fewer than 2 points");
    if (std::adjacent_find(line.begin(), line.end()) != line.end())
      throw std::invalid_argument("repeated point in line");
    if (line.front() < 0 || line.back() >= points)
      throw std::invalid_argument("line point out of range");
    if (!seen.insert(line).second) throw std::invalid_argument("duplicate line");
  }
  s.lines.assign(seen.begin(), seen.end());
  return s;
}

bool operator==(const IncidenceStructure& a, const IncidenceStructure& b) {
  return a.points == b.points && a.lines == b.lines;
}

std::vector<std::vector<int>> IncidenceStructure::lines_through(int p) const {
  std::vector<std::vector<int>> out;
  for (const auto& line : lines)
    if (std::binary_search(line.begin(), line.end(), p)) out.push_back(line);
  return out;
}

std::vector<std::vector<char>> IncidenceStructure::collinearity() const {
  std::vector<std::vector<char>> adj(points, std::vector<char>(points, 0));
  for (const auto& line : lines)
    for (std::size_t i = 0; i < line.size(); ++i)
      for (std::size_t j = i + 1; j < line.size(); ++j)
        adj[line[i]][line[j]] = adj[line[j]][line[i]] = 1;
  return adj;
}

namespace {

std::vector<std::vector<int>> components_of(const IncidenceStructure& s) {
  auto adj = s.collinearity();
  std::vector<int> comp(s.points, -1);
  std::vector<std::vector<int>> out;
  for (int p = 0; p < s.points; ++p) {
    if (comp[p] != -1) continue;
    std::vector<int> queue = {p};
    comp[p] = static_cast<int>(out.size());
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (int q = 0; q < s.points; ++q)
        if (adj[queue[i]][q] && comp[q] == -1) {
          comp[q] = comp[p];
          queue.push_back(q);
        }
    std::sort(queue.begin(), queue.end());
    out.push_back(std::move(queue));
  }
  return out;
}

// Incidence graph: vertices 0..points-1 are points, points+i the lines.
std::vector<std::vector<int>> incidence_graph(const IncidenceStructure& s) {
  std::vector<std::vector<int>> adj(s.points + s.lines.size());
  for (std::size_t li = 0; li < s.lines.size(); ++li)
    for (int p : s.lines[li]) {
      adj[p].push_back(s.points + static_cast<int>(li));
      adj[s.points + li].push_back(p);
    }
  return adj;
}

int graph_diameter(const std::vector<std::vector<int>>& adj) {
  int n = static_cast<int>(adj.size());
  int diameter = 0;
  std::vector<int> dist(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::vector<int> queue = {s};
    dist[s] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (int t : adj[queue[i]])
        if (dist[t] == -1) {
          dist[t] = dist[queue[i]] + 1;
          queue.push_back(t);
        }
    for (int d : dist) {
      if (d == -1) return -1;  // disconnected
      diameter = std::max(diameter, d);
    }
  }
  return diameter;
}

// Exact girth by BFS from every vertex; -1 for forests.
int graph_girth(const std::vector<std::vector<int>>& adj) {
  int n = static_cast<int>(adj.size());
  int girth = -1;
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::vector<int> queue = {s};
    dist[s] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      int u = queue[i];
      for (int v : adj[u]) {
        if (dist[v] == -1) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (v != parent[u]) {
          int cycle = dist[u] + dist[v] + 1;
          if (girth == -1 || cycle < girth) girth = cycle;
        }
      }
    }
  }
  return girth;
}

}  // namespace

bool IncidenceStructure::connected() const { return components_of(*this).size() <= 1; }

PolygonCheckResult polygon_check(const IncidenceStructure& s, int gon, int line_size_s,
                                 int point_degree_t) {
  auto comps = components_of(s);
  if (comps.size() > 1) {
    std::string msg = "disconnected structure; components:";
    for (const auto& comp : comps) {
      msg += " {";
      for (std::size_t i = 0; i < comp.size(); ++i)
        msg += (i ? "," : "") + std::to_string(comp[i] + 1);
      msg += "}";
    }
    throw std::invalid_argument(msg);
  }
  PolygonCheckResult res;
  for (const auto& line : s.lines)
    if (static_cast<int>(line.size()) != line_size_s + 1) {
      res.violation = "line with " + std::to_string(line.size()) + " points, expected " +
                      std::to_string(line_size_s + 1);
      return res;
    }
  for (int p = 0; p < s.points; ++p) {
    int deg = static_cast<int>(s.lines_through(p).size());
    if (deg != point_degree_t + 1) {
      res.violation = "point " + std::to_string(p + 1) + " on " + std::to_string(deg) +
                      " lines, expected " + std::to_string(point_degree_t + 1);
      return res;
    }
  }
  auto adj = incidence_graph(s);
  res.diameter = graph_diameter(adj);
  res.girth = graph_girth(adj);
  if (res.diameter != gon) {
    res.violation = "incidence diameter " + std::to_string(res.diameter) + ", expected " +
                    std::to_string(gon);
    return res;
  }
  if (res.girth != 2 * gon) {
    res.violation = "incidence girth " + std::to_string(res.girth) + ", expected " +
                    std::to_string(2 * gon);
    return res;
  }
  res.pass = true;
  return res;
}

// ---------------------------------------------------------------------------
// isomorphism
// ---------------------------------------------------------------------------

namespace {

// Pair multiplicity matrix: number of lines through each point pair.
std::vector<std::vector<int>> pair_counts(const IncidenceStructure& s) {
  std::vector<std::vector<int>> m(s.points, std::vector<int>(s.points, 0));
  for (const auto& line : s.lines)
    for (std::size_t i = 0; i < line.size(); ++i)
      for (std::size_t j = i + 1; j < line.size(); ++j) {
        ++m[line[i]][line[j]];
        ++m[line[j]][line[i]];
      }
  return m;
}

std::vector<long> refine_colors(const IncidenceStructure& s) {
  // Initial color: (degree, multiset of line sizes through the point),
  // refined by multisets of neighbour colors until stable.
  std::vector<std::vector<int>> through(s.points);
  for (std::size_t li = 0; li < s.lines.size(); ++li)
    for (int p : s.lines[li]) through[p].push_back(static_cast<int>(li));
  std::map<std::vector<long>, long> palette;
  std::vector<long> color(s.points);
  for (int p = 0; p < s.points; ++p) {
    std::vector<long> sig = {static_cast<long>(through[p].size())};
    std::vector<long> sizes;
    for (int li : through[p]) sizes.push_back(static_cast<long>(s.lines[li].size()));
    std::sort(sizes.begin(), sizes.end());
    sig.insert(sig.end(), sizes.begin(), sizes.end());
    auto [it, _] = palette.emplace(sig, static_cast<long>(palette.size()));
    color[p] = it->second;
  }
  for (int round = 0; round < s.points; ++round) {
    std::map<std::vector<long>, long> next_palette;
    std::vector<long> next(s.points);
    for (int p = 0; p < s.points; ++p) {
      std::vector<long> sig = {color[p]};
      std::vector<std::vector<long>> line_sigs;
      for (int li : through[p]) {
        std::vector<long> ls;
        for (int q : s.lines[li])
          if (q != p) ls.push_back(color[q]);
        std::sort(ls.begin(), ls.end());
        line_sigs.push_back(std::move(ls));
      }
      std::sort(line_sigs.begin(), line_sigs.end());
      for (const auto& ls : line_sigs) {
        sig.push_back(-1);
        sig.insert(sig.end(), ls.begin(), ls.end());
      }
      auto [it, _] = next_palette.emplace(sig, static_cast<long>(next_palette.size()));
      next[p] = it->second;
    }
    bool changed = next != color;
    color = std::move(next);
    if (!changed) break;
  }
  return color;
}

struct IsoSearch {
  const IncidenceStructure& s1;
  const IncidenceStructure& s2;
  std::vector<std::vector<int>> pc1, pc2;
  std::vector<long> col1, col2;
  std::set<std::vector<int>> lines2;
  std::vector<std::vector<int>> through1;  // line indices through each s1 point
  std::vector<int> mapping;                // s1 point -> s2 point or -1
  std::vector<char> used;                  // s2 points already hit
  std::vector<int> order;                  // s1 points in assignment order

  bool extend(std::size_t idx) {
    if (idx == order.size()) return true;
    int p = order[idx];
    for (int q = 0; q < s2.points; ++q) {
      if (used[q] || col2[q] != col1[p]) continue;
      bool ok = true;
      for (int r = 0; r < s1.points && ok; ++r)
        if (mapping[r] != -1 && pc1[p][r] != pc2[q][mapping[r]]) ok = false;
      if (!ok) continue;
      mapping[p] = q;
      used[q] = 1;
      if (lines_consistent(p) && extend(idx + 1)) return true;
      mapping[p] = -1;
      used[q] = 0;
    }
    return false;
  }

  // every fully-mapped line through p must land on a line of s2
  bool lines_consistent(int p) {
    for (int li : through1[p]) {
      std::vector<int> image;
      image.reserve(s1.lines[li].size());
      bool complete = true;
      for (int r : s1.lines[li]) {
        if (mapping[r] == -1) { complete = false; break; }
        image.push_back(mapping[r]);
      }
      if (!complete) continue;
      std::sort(image.begin(), image.end());
      if (!lines2.count(image)) return false;
    }
    return true;
  }
};

}  // namespace

IsoResult isomorphic(const IncidenceStructure& s1, const IncidenceStructure& s2) {
  IsoResult out;
  if (s1.points != s2.points || s1.lines.size() != s2.lines.size()) return out;
  IsoSearch search{s1, s2};
  search.pc1 = pair_counts(s1);
  search.pc2 = pair_counts(s2);
  search.col1 = refine_colors(s1);
  search.col2 = refine_colors(s2);
  // color class sizes must agree
  std::map<long, int> h1, h2;
  for (long c : search.col1) ++h1[c];
  for (long c : search.col2) ++h2[c];
  if (h1 != h2) return out;
  search.lines2.insert(s2.lines.begin(), s2.lines.end());
  search.through1.resize(s1.points);
  for (std::size_t li = 0; li < s1.lines.size(); ++li)
    for (int p : s1.lines[li]) search.through1[p].push_back(static_cast<int>(li));
  search.mapping.assign(s1.points, -1);
  search.used.assign(s2.points, 0);
  // assignment order: rarest color first, then greedily maximise the
  // number of collinear already-ordered points so line pruning fires early
  {
    auto pc = pair_counts(s1);
    std::vector<char> chosen(s1.points, 0);
    int first = 0;
    for (int p = 1; p < s1.points; ++p)
      if (h1[search.col1[p]] < h1[search.col1[first]]) first = p;
    search.order.push_back(first);
    chosen[first] = 1;
    while (static_cast<int>(search.order.size()) < s1.points) {
      int best = -1, best_links = -1;
      for (int p = 0; p < s1.points; ++p) {
        if (chosen[p]) continue;
        int links = 0;
        for (int q : search.order) links += pc[p][q] > 0;
        if (links > best_links ||
            (links == best_links && h1[search.col1[p]] < h1[search.col1[best]])) {
          best = p;
          best_links = links;
        }
      }
      search.order.push_back(best);
      chosen[best] = 1;
    }
  }
  if (search.extend(0)) {
    out.isomorphic = true;
    out.bijection = search.mapping;
  }
  return out;
}

// ---------------------------------------------------------------------------
// hyperplanes
// ---------------------------------------------------------------------------

namespace {

std::vector<PointSet> line_masks(const IncidenceStructure& s) {
  if (s.points > 64) throw std::invalid_argument("hyperplane bitsets need points <= 64");
  std::vector<PointSet> masks;
  masks.reserve(s.lines.size());
  for (const auto& line : s.lines) {
    PointSet m = 0;
    for (int p : line) m |= PointSet{1} << p;
    masks.push_back(m);
  }
  return masks;
}

}  // namespace

bool is_hyperplane(const IncidenceStructure& s, PointSet h) {
  PointSet all = s.points == 64 ? ~PointSet{0} : ((PointSet{1} << s.points) - 1);
  if ((h & ~all) || h == all) return false;  // must be a proper subset
  for (PointSet line : line_masks(s)) {
    PointSet cap = h & line;
    if (cap != line && std::popcount(cap) != 1) return false;
  }
  return true;
}

std::vector<PointSet> hyperplanes_brute(const IncidenceStructure& s) {
  if (s.points > 25) throw std::invalid_argument("brute hyperplane search needs <= 25 points");
  std::vector<PointSet> lines = line_masks(s);
  PointSet all = (PointSet{1} << s.points) - 1;
  std::vector<PointSet> out;
  for (PointSet h = 0; h < all; ++h) {
    bool ok = true;
    for (PointSet line : lines) {
      PointSet cap = h & line;
      if (cap != line && std::popcount(cap) != 1) { ok = false; break; }
    }
    if (ok) out.push_back(h);
  }
  return out;
}

int collinearity_distance(const IncidenceStructure& s, int p, int q) {
  if (p < 0 || p >= s.points || q < 0 || q >= s.points)
    throw std::invalid_argument("point out of range");
  auto adj = s.collinearity();
  std::vector<int> dist(s.points, -1);
  std::vector<int> queue = {p};
  dist[p] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (int t = 0; t < s.points; ++t)
      if (adj[queue[i]][t] && dist[t] == -1) {
        dist[t] = dist[queue[i]] + 1;
        queue.push_back(t);
      }
  return dist[q];
}

std::vector<PointSet> ovoids(const IncidenceStructure& s) {
  if (s.points > 64) throw std::invalid_argument("ovoid search needs points <= 64");
  std::vector<PointSet> lines = line_masks(s);
  std::vector<PointSet> out;
  // exact cover: every line exactly one chosen point
  std::vector<int> chosen;
  PointSet picked = 0, excluded = 0;
  auto rec = [&](auto&& self) -> void {
    // most-constrained uncovered line
    int best = -1;
    int best_options = 65;
    for (std::size_t li = 0; li < lines.size(); ++li) {
      if (lines[li] & picked) continue;  // covered
      int options = std::popcount(static_cast<PointSet>(lines[li] & ~excluded));
      if (options < best_options) {
        best_options = options;
        best = static_cast<int>(li);
      }
    }
    if (best == -1) {
      out.push_back(picked);
      return;
    }
    if (best_options == 0) return;
    PointSet candidates = lines[best] & ~excluded;
    while (candidates) {
      int p = std::countr_zero(candidates);
      candidates &= candidates - 1;
      PointSet pbit = PointSet{1} << p;
      // picking p rules out every other point of every line through p
      PointSet newly_excluded = 0;
      for (PointSet line : lines)
        if (line & pbit) newly_excluded |= line & ~pbit;
      PointSet saved_excluded = excluded;
      picked |= pbit;
      excluded |= newly_excluded | pbit;
      self(self);
      picked &= ~pbit;
      excluded = saved_excluded | pbit;  // exclude p from later branches
    }
  };
  rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PointSet> hyperplanes_veldkamp(const IncidenceStructure& s) {
  int gon = -1;
  for (int candidate : {4, 6, 8}) {
    // determine the polygon parameters from the structure itself
    int ls = static_cast<int>(s.lines.at(0).size()) - 1;
    int pd = static_cast<int>(s.lines_through(0).size()) - 1;
    PolygonCheckResult r = polygon_check(s, candidate, ls, pd);
    if (r.pass) { gon = candidate; break; }
  }
  if (gon == -1)
    throw std::invalid_argument("Veldkamp closure needs a generalized polygon");

  int radius = gon / 2 - 1;
  auto adj = s.collinearity();
  std::vector<PointSet> seeds;
  for (int p = 0; p < s.points; ++p) {
    std::vector<int> dist(s.points, -1);
    std::vector<int> queue = {p};
    dist[p] = 0;
    PointSet ball = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      ball |= PointSet{1} << queue[i];
      if (dist[queue[i]] == radius) continue;
      for (int t = 0; t < s.points; ++t)
        if (adj[queue[i]][t] && dist[t] == -1) {
          dist[t] = dist[queue[i]] + 1;
          queue.push_back(t);
        }
    }
    seeds.push_back(ball);
  }
  for (PointSet ovoid : ovoids(s)) seeds.push_back(ovoid);

  std::vector<PointSet> lines = line_masks(s);
  auto test = [&](PointSet h) {
    PointSet all = s.points == 64 ? ~PointSet{0} : ((PointSet{1} << s.points) - 1);
    if (h == all) return false;
    for (PointSet line : lines) {
      PointSet cap = h & line;
      if (cap != line && std::popcount(cap) != 1) return false;
    }
    return true;
  };

  std::unordered_set<PointSet> known, rejected;
  std::vector<PointSet> work;
  for (PointSet seed : seeds)
    if (test(seed) && known.insert(seed).second) work.push_back(seed);
  for (std::size_t i = 0; i < work.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      PointSet sum = hyperplane_sum(work[i], work[j], s.points);
      if (known.count(sum) || rejected.count(sum)) continue;
      if (test(sum)) {
        known.insert(sum);
        work.push_back(sum);
      } else {
        rejected.insert(sum);
      }
    }
  }
  std::sort(work.begin(), work.end());
  return work;
}

IncidenceStructure double_of(const IncidenceStructure& s, std::string name) {
  std::vector<std::vector<int>> lines;
  for (std::size_t li = 0; li < s.lines.size(); ++li)
    for (int p : s.lines[li])
      lines.push_back({p, s.points + static_cast<int>(li)});
  return IncidenceStructure::make(s.points + static_cast<int>(s.lines.size()),
                                  std::move(lines), std::move(name));
}

IncidenceStructure dual_of(const IncidenceStructure& s, std::string name) {
  std::vector<std::vector<int>> lines(s.points);
  for (std::size_t li = 0; li < s.lines.size(); ++li)
    for (int p : s.lines[li]) lines[p].push_back(static_cast<int>(li));
  return IncidenceStructure::make(static_cast<int>(s.lines.size()), std::move(lines),
                                  std::move(name));
}

}  // namespace dgc
