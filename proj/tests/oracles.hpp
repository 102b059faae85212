#pragma once

// Test-only oracles, kept independent of the library's enumeration and
// search code paths so they can serve as ground truth.

#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "dgc/coset_table.hpp"
#include "dgc/perm.hpp"
#include "dgc/words.hpp"

namespace oracles {

// Flattened BFS-standardised table of a transitive pair, based at `base`.
// Letter order a, a^-1, b, b^-1 matches the library's scan order, but the
// computation here goes through raw permutation images only.
inline std::vector<int> standardised_pair_table(const std::array<dgc::Perm, 4>& act,
                                                int base) {
  int n = act[0].degree();
  std::vector<int> new_of_old(n, -1), old_of_new;
  new_of_old[base] = 0;
  old_of_new.push_back(base);
  std::vector<int> flat;
  for (std::size_t head = 0; head < old_of_new.size(); ++head) {
    for (int x = 0; x < 4; ++x) {
      int t = act[x](old_of_new[head]);
      if (new_of_old[t] == -1) {
        new_of_old[t] = static_cast<int>(old_of_new.size());
        old_of_new.push_back(t);
      }
      flat.push_back(new_of_old[t]);
    }
  }
  return flat;
}

struct PairCounts {
  std::size_t transitive_pairs = 0;
  std::size_t subgroups = 0;          // distinct based actions
  std::size_t conjugacy_classes = 0;  // distinct actions up to relabelling
  std::set<std::vector<int>> subgroup_tables;
  std::set<std::vector<int>> class_tables;
};

// Brute force over all pairs (g0, g1) in S_n x S_n that kill every relator,
// keeping the transitive ones.
inline PairCounts count_transitive_pairs(const dgc::Presentation& p, int n) {
  using dgc::Perm;
  std::vector<Perm> all;
  {
    std::vector<int> images(n);
    for (int i = 0; i < n; ++i) images[i] = i;
    do {
      all.push_back(Perm::from_images(images));
    } while (std::next_permutation(images.begin(), images.end()));
  }

  PairCounts counts;
  std::set<std::vector<int>>& subgroup_tables = counts.subgroup_tables;
  std::set<std::vector<int>>& class_tables = counts.class_tables;
  std::vector<char> seen(n);
  std::vector<int> queue;
  for (const Perm& g0 : all) {
    for (const Perm& g1 : all) {
      bool ok = true;
      for (const dgc::Word& r : p.relators)
        if (!dgc::evaluate(r, g0, g1).is_identity()) { ok = false; break; }
      if (!ok) continue;

      std::array<Perm, 4> act = {g0, g0.inverse(), g1, g1.inverse()};
      std::fill(seen.begin(), seen.end(), 0);
      queue.assign(1, 0);
      seen[0] = 1;
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (const Perm& g : act) {
          int t = g(queue[i]);
          if (!seen[t]) { seen[t] = 1; queue.push_back(t); }
        }
      if (queue.size() != static_cast<std::size_t>(n)) continue;

      ++counts.transitive_pairs;
      std::vector<int> based = standardised_pair_table(act, 0);
      std::vector<int> best = based;
      for (int base = 1; base < n; ++base)
        best = std::min(best, standardised_pair_table(act, base));
      subgroup_tables.insert(std::move(based));
      class_tables.insert(std::move(best));
    }
  }
  counts.subgroups = subgroup_tables.size();
  counts.conjugacy_classes = class_tables.size();
  return counts;
}

}  // namespace oracles
