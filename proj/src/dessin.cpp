#include "dgc/dessin.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dgc {

namespace {

std::vector<Word> bfs_labels(const Perm& g0, const Perm& g1,
                             const std::vector<Letter>& priority) {
  int n = g0.degree();
  const Perm acts[kNumLetters] = {g0, g0.inverse(), g1, g1.inverse()};
  std::vector<Word> labels(n);
  std::vector<char> seen(n, 0);
  std::vector<int> queue = {0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int p = queue[head];
    for (Letter x : priority) {
      int q = acts[x](p);
      if (!seen[q]) {
        seen[q] = 1;
        labels[q] = labels[p] * Word::from_letters({x});
        queue.push_back(q);
      }
    }
  }
  return labels;
}

std::string orbit_partition_string(const Perm& g0, const Perm& g1) {
  int n = g0.degree();
  std::vector<int> comp(n, -1);
  int parts = 0;
  std::string out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    std::vector<int> queue = {s};
    comp[s] = parts;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const Perm* g : {&g0, &g1}) {
        int t = (*g)(queue[i]);
        int u = g->inverse()(queue[i]);
        if (comp[t] == -1) { comp[t] = parts; queue.push_back(t); }
        if (comp[u] == -1) { comp[u] = parts; queue.push_back(u); }
      }
    std::sort(queue.begin(), queue.end());
    if (parts) out += " | ";
    for (std::size_t i = 0; i < queue.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(queue[i] + 1);
    }
    ++parts;
  }
  return out;
}

}  // namespace

std::string Passport::str() const {
  auto one = [](const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(v[i]);
    }
    return s + "}";
  };
  return "(" + one(black) + "," + one(white) + "," + one(faces) + ")";
}

Dessin Dessin::from_pair(const Perm& g0, const Perm& g1) {
  if (g0.degree() != g1.degree()) throw std::invalid_argument("degree mismatch");
  if (g0.degree() == 0) throw std::invalid_argument("empty dessin");
  Dessin d;
  d.g0_ = g0;
  d.g1_ = g1;
  d.g_inf_ = (g0 * g1).inverse();
  d.labels_ = bfs_labels(g0, g1, {kA, kAinv, kB, kBinv});
  // transitivity: BFS must have reached everything
  {
    std::vector<char> reached(g0.degree(), 0);
    reached[0] = 1;
    int count = 1;
    for (int p = 1; p < g0.degree(); ++p)
      if (!d.labels_[p].empty()) { reached[p] = 1; ++count; }
    // labels_[p] empty for p != 0 exactly when p was never reached
    if (count != g0.degree())
      throw std::invalid_argument("pair is not transitive; orbits: " +
                                  orbit_partition_string(g0, g1));
  }
  d.black_ = g0.num_cycles();
  d.white_ = g1.num_cycles();
  d.faces_ = d.g_inf_.num_cycles();
  int defect = d.black_ + d.white_ + d.faces_ - g0.degree();
  if ((2 - defect) % 2 != 0 || defect > 2)
    throw std::logic_error("impossible Euler characteristic");
  d.genus_ = (2 - defect) / 2;
  return d;
}

Dessin Dessin::from_table(const CosetTable& table) {
  auto [g0, g1] = table.coset_action();
  Dessin d = from_pair(g0, g1);
  d.labels_ = table.transversal();
  return d;
}

Passport Dessin::passport() const {
  return Passport{g0_.cycle_type(), g1_.cycle_type(), g_inf_.cycle_type()};
}

std::vector<std::vector<Word>> Dessin::labels_variants() const {
  static const std::vector<std::vector<Letter>> orders = {
      {kA, kAinv, kB, kBinv}, {kA, kB, kAinv, kBinv}, {kAinv, kA, kB, kBinv},
      {kAinv, kB, kA, kBinv}, {kB, kA, kAinv, kBinv}, {kB, kAinv, kA, kBinv}};
  std::vector<std::vector<Word>> out;
  for (const auto& priority : orders) {
    std::vector<Word> labels = bfs_labels(g0_, g1_, priority);
    if (std::find(out.begin(), out.end(), labels) == out.end())
      out.push_back(std::move(labels));
  }
  return out;
}

std::vector<int> Dessin::canonical() const {
  int n = degree();
  const Perm acts[kNumLetters] = {g0_, g0_.inverse(), g1_, g1_.inverse()};
  std::vector<int> best;
  std::vector<int> new_of_old(n), old_of_new(n);
  for (int base = 0; base < n; ++base) {
    std::fill(new_of_old.begin(), new_of_old.end(), -1);
    new_of_old[base] = 0;
    old_of_new[0] = base;
    int count = 1;
    std::vector<int> flat;
    flat.reserve(static_cast<std::size_t>(n) * kNumLetters);
    for (int nc = 0; nc < count; ++nc)
      for (Letter x = 0; x < kNumLetters; ++x) {
        int t = acts[x](old_of_new[nc]);
        if (new_of_old[t] == -1) {
          new_of_old[t] = count;
          old_of_new[count++] = t;
        }
        flat.push_back(new_of_old[t]);
      }
    if (best.empty() || flat < best) best = std::move(flat);
  }
  return best;
}

bool Dessin::isomorphic_to(const Dessin& other) const {
  if (degree() != other.degree()) return false;
  return canonical() == other.canonical();
}

Dessin Dessin::conjugated(const Perm& relabel) const {
  Perm inv = relabel.inverse();
  return from_pair(inv * g0_ * relabel, inv * g1_ * relabel);
}

}  // namespace dgc
