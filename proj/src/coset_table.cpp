#include "dgc/coset_table.hpp"

#include <algorithm>
#include <set>

namespace dgc {

namespace {

Word letter_word(Letter x) { return Word::from_letters({x}); }

}  // namespace

CosetTable::CosetTable(std::array<std::vector<int>, kNumLetters> action,
                       std::vector<Word> transversal)
    : action_(std::move(action)), transversal_(std::move(transversal)) {}

CosetTable CosetTable::from_action(
    const std::array<std::vector<int>, kNumLetters>& action) {
  int n = static_cast<int>(action[0].size());
  for (const auto& col : action)
    if (static_cast<int>(col.size()) != n)
      throw std::invalid_argument("ragged action table");

  // BFS standardisation from coset 0, letter priority a, a^-1, b, b^-1.
  std::vector<int> new_of_old(n, -1), old_of_new;
  std::vector<Word> transversal;
  old_of_new.reserve(n);
  new_of_old[0] = 0;
  old_of_new.push_back(0);
  transversal.push_back(Word());
  for (std::size_t head = 0; head < old_of_new.size(); ++head) {
    int old_c = old_of_new[head];
    for (Letter x = 0; x < kNumLetters; ++x) {
      int t = action[x][old_c];
      if (t < 0 || t >= n) throw std::invalid_argument("target out of range");
      if (new_of_old[t] == -1) {
        new_of_old[t] = static_cast<int>(old_of_new.size());
        old_of_new.push_back(t);
        transversal.push_back(transversal[head] * letter_word(x));
      }
    }
  }
  if (static_cast<int>(old_of_new.size()) != n)
    throw std::invalid_argument("action not transitive");

  std::array<std::vector<int>, kNumLetters> cols;
  for (Letter x = 0; x < kNumLetters; ++x) {
    cols[x].resize(n);
    for (int c = 0; c < n; ++c) cols[x][c] = new_of_old[action[x][old_of_new[c]]];
  }
  return CosetTable(std::move(cols), std::move(transversal));
}

std::pair<Perm, Perm> CosetTable::coset_action() const {
  return {Perm::from_images(action_[kA]), Perm::from_images(action_[kB])};
}

int CosetTable::trace(int coset, const Word& w) const {
  for (Letter x : w.letters()) coset = action_[x][coset];
  return coset;
}

void CosetTable::validate(const Presentation& p) const {
  int n = size();
  if (n <= 0) throw std::logic_error("empty table");
  for (Letter x = 0; x < kNumLetters; ++x) {
    if (static_cast<int>(action_[x].size()) != n) throw std::logic_error("ragged table");
    for (int c = 0; c < n; ++c) {
      int t = action_[x][c];
      if (t < 0 || t >= n) throw std::logic_error("target out of range");
      if (action_[inverse_letter(x)][t] != c)
        throw std::logic_error("inverse action inconsistent");
    }
  }
  for (const Word& r : p.relators)
    for (int c = 0; c < n; ++c)
      if (trace(c, r) != c) throw std::logic_error("relator does not fix coset");
  if (static_cast<int>(transversal_.size()) != n)
    throw std::logic_error("transversal size mismatch");
  if (!transversal_[0].empty()) throw std::logic_error("transversal[0] != e");
  for (int c = 0; c < n; ++c)
    if (trace(0, transversal_[c]) != c)
      throw std::logic_error("transversal word lands on wrong coset");
  // transitivity is implied by the transversal property
}

std::vector<int> CosetTable::flattened() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()) * kNumLetters);
  for (int c = 0; c < size(); ++c)
    for (Letter x = 0; x < kNumLetters; ++x) out.push_back(action_[x][c]);
  return out;
}

std::vector<Word> CosetTable::schreier_generators(const Presentation& p) const {
  std::set<Word> out;
  for (int c = 0; c < size(); ++c)
    for (Letter x : {kA, kB}) {
      Word g = reduce(transversal_[c] * letter_word(x) *
                          transversal_[action_[x][c]].inverse(),
                      p);
      if (!g.empty()) out.insert(g);
    }
  return {out.begin(), out.end()};
}

// ---------------------------------------------------------------------------
// HLT Todd-Coxeter
// ---------------------------------------------------------------------------

namespace {

class Hlt {
 public:
  Hlt(const Presentation& p, std::span<const Word> subgroup_gens, std::size_t max_cosets)
      : max_cosets_(max_cosets) {
    for (const Word& r : p.relators) {
      if (r.empty()) continue;
      relators_.push_back(r.letters());
    }
    for (const Word& w : subgroup_gens) {
      Word rw = reduce(w, p);
      if (!rw.empty()) sub_gens_.push_back(rw.letters());
    }
  }

  std::array<std::vector<int>, kNumLetters> run() {
    new_coset();
    for (const auto& w : sub_gens_) scan_cycle(0, w);
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (rep(static_cast<int>(c)) != static_cast<int>(c)) continue;
      for (const auto& r : relators_) {
        scan_cycle(static_cast<int>(c), r);
        if (rep(static_cast<int>(c)) != static_cast<int>(c)) break;
      }
      if (rep(static_cast<int>(c)) != static_cast<int>(c)) continue;
      for (Letter x = 0; x < kNumLetters; ++x) {
        if (table_[c].t[x] == -1) {
          int d = new_coset();
          table_[c].t[x] = d;
          table_[d].t[inverse_letter(x)] = static_cast<int>(c);
        }
      }
    }
    return compress();
  }

 private:
  struct Row {
    std::array<int, kNumLetters> t{-1, -1, -1, -1};
  };

  std::vector<Row> table_;
  std::vector<int> parent_;
  std::vector<std::vector<Letter>> relators_;
  std::vector<std::vector<Letter>> sub_gens_;
  std::size_t max_cosets_;

  int rep(int c) {
    while (parent_[c] != c) {
      parent_[c] = parent_[parent_[c]];
      c = parent_[c];
    }
    return c;
  }

  int new_coset() {
    if (table_.size() >= max_cosets_)
      throw ResourceLimitError("coset limit exceeded (subgroup may have infinite index)");
    table_.push_back(Row{});
    parent_.push_back(static_cast<int>(table_.size()) - 1);
    return static_cast<int>(table_.size()) - 1;
  }

  void merge(int a, int b, std::vector<int>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    queue.push_back(b);
  }

  void install_edge(int c, Letter x, int d, std::vector<int>& queue) {
    c = rep(c);
    d = rep(d);
    int fwd = table_[c].t[x];
    if (fwd != -1) {
      if (rep(fwd) != d) merge(fwd, d, queue);
      return;
    }
    int bwd = table_[d].t[inverse_letter(x)];
    if (bwd != -1 && rep(bwd) != c) merge(bwd, c, queue);
    c = rep(c);
    d = rep(d);
    if (table_[c].t[x] == -1) {
      table_[c].t[x] = d;
      if (table_[d].t[inverse_letter(x)] == -1) table_[d].t[inverse_letter(x)] = c;
    }
  }

  // Transfers the rows of merged-away cosets, cascading further merges.
  void process_queue(std::vector<int>& queue) {
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int dead = queue[qi];
      for (Letter x = 0; x < kNumLetters; ++x) {
        int e = table_[dead].t[x];
        if (e == -1) continue;
        table_[dead].t[x] = -1;
        if (table_[e].t[inverse_letter(x)] == dead) table_[e].t[inverse_letter(x)] = -1;
        install_edge(rep(dead), x, rep(e), queue);
      }
    }
  }

  void coincide(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    process_queue(queue);
  }

  // Scans the relator cycle based at c, filling gaps with fresh cosets and
  // forcing the closing edge, until the cycle is verified closed.
  void scan_cycle(int c, const std::vector<Letter>& w) {
    const int len = static_cast<int>(w.size());
    while (true) {
      c = rep(c);
      int f = c, i = 0;
      while (i < len) {
        int t = table_[f].t[w[i]];
        if (t == -1) break;
        f = rep(t);
        ++i;
      }
      if (i == len) {
        if (f != c) { coincide(f, c); continue; }
        return;
      }
      int b = c, j = len;
      while (j > i) {
        int t = table_[b].t[inverse_letter(w[j - 1])];
        if (t == -1) break;
        b = rep(t);
        --j;
      }
      if (j == i) {
        if (f != b) { coincide(f, b); continue; }
        return;
      }
      if (j == i + 1) {
        std::vector<int> queue;
        install_edge(f, w[i], b, queue);
        process_queue(queue);
        continue;
      }
      // gap of two or more: fill the first hole with a new coset
      int d = new_coset();
      table_[f].t[w[i]] = d;
      table_[d].t[inverse_letter(w[i])] = f;
    }
  }

  std::array<std::vector<int>, kNumLetters> compress() {
    std::vector<int> live;
    std::vector<int> live_index(table_.size(), -1);
    for (std::size_t c = 0; c < table_.size(); ++c)
      if (rep(static_cast<int>(c)) == static_cast<int>(c)) {
        live_index[c] = static_cast<int>(live.size());
        live.push_back(static_cast<int>(c));
      }
    std::array<std::vector<int>, kNumLetters> cols;
    for (Letter x = 0; x < kNumLetters; ++x) {
      cols[x].resize(live.size());
      for (std::size_t i = 0; i < live.size(); ++i) {
        int t = table_[live[i]].t[x];
        if (t == -1) throw std::logic_error("incomplete table after enumeration");
        cols[x][i] = live_index[rep(t)];
      }
    }
    return cols;
  }
};

}  // namespace

CosetTable todd_coxeter(const Presentation& p, std::span<const Word> subgroup_gens,
                        std::size_t max_cosets) {
  Hlt hlt(p, subgroup_gens, max_cosets);
  return CosetTable::from_action(hlt.run());
}

}  // namespace dgc
