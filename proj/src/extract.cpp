#include "dgc/extract.hpp"

#include <algorithm>
#include <bit>

namespace dgc {

namespace {

// Maximal cliques of size >= 2 via Bron-Kerbosch with pivoting, on at most
// 64 vertices.
void bron_kerbosch(std::uint64_t r, std::uint64_t p, std::uint64_t x,
                   const std::vector<std::uint64_t>& adj,
                   std::vector<std::uint64_t>& out) {
  if (p == 0 && x == 0) {
    if (std::popcount(r) >= 2) out.push_back(r);
    return;
  }
  std::uint64_t px = p | x;
  int pivot = std::countr_zero(px);
  std::uint64_t best = p & ~adj[pivot];
  int best_count = std::popcount(p & adj[pivot]);
  for (std::uint64_t m = px; m;) {
    int v = std::countr_zero(m);
    m &= m - 1;
    int count = std::popcount(p & adj[v]);
    if (count > best_count) {
      best_count = count;
      best = p & ~adj[v];
    }
  }
  for (std::uint64_t m = best; m;) {
    int v = std::countr_zero(m);
    m &= m - 1;
    std::uint64_t vbit = std::uint64_t{1} << v;
    bron_kerbosch(r | vbit, p & adj[v], x & adj[v], adj, out);
    p &= ~vbit;
    x |= vbit;
  }
}

}  // namespace

std::vector<StabilizerGeometry> extract_geometries(const Dessin& d) {
  const int n = d.degree();
  if (n > 64) throw std::invalid_argument("extraction supports at most 64 edges");
  PermGroup group(n, {d.g0(), d.g1()});

  // key id per unordered pair
  std::map<SubgroupKey, int> key_ids;
  std::vector<std::uint64_t> key_orders;
  std::vector<std::string> key_hints;
  std::map<std::pair<int, int>, int> pair_key;
  for (int p = 0; p < n; ++p) {
    PermGroup stab_p = group.point_stabilizer(p);
    for (int q = p + 1; q < n; ++q) {
      PermGroup stab_pq = stab_p.point_stabilizer(q);
      SubgroupKey key = subgroup_key(stab_pq);
      auto [it, inserted] = key_ids.emplace(key, static_cast<int>(key_ids.size()));
      if (inserted) {
        key_orders.push_back(key.order);
        key_hints.push_back(group_name_hint(stab_pq));
      }
      pair_key[{p, q}] = it->second;
    }
  }

  // per key: clique graph -> candidate lines
  std::map<std::uint64_t, StabilizerGeometry> by_order;
  std::map<std::uint64_t, std::vector<std::vector<int>>> lines_by_order;
  for (int kid = 0; kid < static_cast<int>(key_orders.size()); ++kid) {
    std::vector<std::uint64_t> adj(n, 0);
    bool any = false;
    for (const auto& [pq, id] : pair_key) {
      if (id != kid) continue;
      adj[pq.first] |= std::uint64_t{1} << pq.second;
      adj[pq.second] |= std::uint64_t{1} << pq.first;
      any = true;
    }
    if (!any) continue;
    std::uint64_t vertices = 0;
    for (int v = 0; v < n; ++v)
      if (adj[v]) vertices |= std::uint64_t{1} << v;
    std::vector<std::uint64_t> cliques;
    bron_kerbosch(0, vertices, 0, adj, cliques);
    auto& lines = lines_by_order[key_orders[kid]];
    for (std::uint64_t clique : cliques) {
      std::vector<int> line;
      for (std::uint64_t m = clique; m;) {
        line.push_back(std::countr_zero(m));
        m &= m - 1;
      }
      lines.push_back(std::move(line));
    }
    StabilizerGeometry& geo = by_order[key_orders[kid]];
    geo.stab_order = key_orders[kid];
    if (geo.name_hint.empty()) geo.name_hint = key_hints[kid];
    for (const auto& [pq, id] : pair_key)
      if (id == kid) geo.pair_key_ids[pq] = id;
  }

  std::vector<StabilizerGeometry> out;
  for (auto& [order, geo] : by_order) {
    geo.label = class_label(order);
    geo.structure = IncidenceStructure::make(n, lines_by_order[order],
                                             "stabilizer " + class_label(order));
    out.push_back(std::move(geo));
  }
  return out;
}

}  // namespace dgc
