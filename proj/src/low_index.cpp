#include <algorithm>
#include <atomic>
#include <thread>

#include "dgc/coset_table.hpp"

namespace dgc {

namespace {

// Partial-table conjugacy pruning is a heuristic: correctness of the
// classes output rests on the complete-table test alone.
constexpr bool kPartialClassTest = true;

// Backtracking enumeration of complete transitive coset tables of index
// exactly n, in standard form (cosets numbered by first appearance under
// row-major scan order with letters a, a^-1, b, b^-1). Relators are forced
// incrementally: defining an edge scans every relator instance through it,
// deducing the closing edge of any instance with a single gap and rejecting
// the branch on any closure mismatch. Conjugacy reduction follows Sims'
// first-in-class test: a node is pruned when relabelling the partial table
// from some other base point is lexicographically smaller on the commonly
// defined prefix.
class LowIndexSearch {
 public:
  LowIndexSearch(const Presentation& p, int n, bool classes)
      : n_(n), classes_(classes) {
    for (const Word& r : p.relators) {
      if (r.empty()) continue;
      relators_.push_back(r.letters());
    }
    for (int ri = 0; ri < static_cast<int>(relators_.size()); ++ri)
      for (int pos = 0; pos < static_cast<int>(relators_[ri].size()); ++pos)
        occurrences_[relators_[ri][pos]].push_back({ri, pos});
  }

  struct State {
    std::vector<int> table;       // n*4 cells, -1 undefined
    int rows = 1;
    std::vector<int> trail;       // set cells, encoded (c<<2)|x
    std::vector<std::array<int, 3>> queue;  // deduction scratch
    std::vector<int> scratch_new_of_old;
    std::vector<int> scratch_old_of_new;

    explicit State(int n)
        : table(static_cast<std::size_t>(n) * kNumLetters, -1),
          scratch_new_of_old(n),
          scratch_old_of_new(n) {}
  };

  std::vector<std::vector<int>> run(int jobs) {
    std::vector<std::vector<int>> results;
    State root(n_);
    if (jobs <= 1) {
      dfs(root, 0, results);
    } else {
      // Expand a frontier of branch states breadth-first, then let workers
      // exhaust the subtrees; results are merged and sorted afterwards.
      std::vector<State> frontier;
      expand_frontier(root, static_cast<std::size_t>(jobs) * 16, frontier, results);
      std::atomic<std::size_t> next{0};
      std::vector<std::vector<std::vector<int>>> local(jobs);
      std::vector<std::thread> workers;
      workers.reserve(jobs);
      for (int t = 0; t < jobs; ++t)
        workers.emplace_back([&, t] {
          while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= frontier.size()) break;
            State st = frontier[i];
            dfs(st, first_undefined(st), local[t]);
          }
        });
      for (auto& w : workers) w.join();
      for (auto& chunk : local)
        results.insert(results.end(), chunk.begin(), chunk.end());
    }
    std::sort(results.begin(), results.end());
    return results;
  }

 private:
  int n_;
  bool classes_;
  std::vector<std::vector<Letter>> relators_;
  std::array<std::vector<std::pair<int, int>>, kNumLetters> occurrences_;

  static int cell(int c, Letter x) { return (c << 2) | x; }

  int first_undefined(const State& st) const {
    int total = st.rows * kNumLetters;
    for (int i = 0; i < total; ++i)
      if (st.table[i] == -1) return i;
    return total;
  }

  bool set_cell(State& st, int c, Letter x, int d) {
    int idx = cell(c, x);
    if (st.table[idx] != -1) return st.table[idx] == d;
    st.table[idx] = d;
    st.trail.push_back(idx);
    return true;
  }

  // Defines c.x = d together with the inverse edge and propagates all
  // forced deductions; false means the branch is contradictory.
  bool try_define(State& st, int c, Letter x, int d) {
    std::vector<std::array<int, 3>>& queue = st.queue;
    queue.clear();
    if (!push_edge(st, c, x, d, queue)) return false;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      auto [c0, x0, d0] = queue[qi];
      for (auto [ri, pos] : occurrences_[x0])
        if (!scan_instance(st, ri, pos, c0, d0, queue)) return false;
      for (auto [ri, pos] : occurrences_[inverse_letter(x0)])
        if (!scan_instance(st, ri, pos, d0, c0, queue)) return false;
    }
    return true;
  }

  bool push_edge(State& st, int c, Letter x, int d,
                 std::vector<std::array<int, 3>>& queue) {
    int fwd = st.table[cell(c, x)];
    if (fwd != -1) return fwd == d;
    int bwd = st.table[cell(d, inverse_letter(x))];
    if (bwd != -1 && bwd != c) return false;
    set_cell(st, c, x, d);
    set_cell(st, d, inverse_letter(x), c);
    queue.push_back({c, static_cast<int>(x), d});
    return true;
  }

  // Scans the relator instance whose position `pos` runs along the edge
  // u -> v. Rejects on closure mismatch, deduces a single-gap edge.
  bool scan_instance(State& st, int ri, int pos, int u, int v,
                     std::vector<std::array<int, 3>>& queue) {
    const std::vector<Letter>& rel = relators_[ri];
    const int len = static_cast<int>(rel.size());
    int f = v, i = pos + 1;
    while (i < len) {
      int t = st.table[cell(f, rel[i])];
      if (t == -1) break;
      f = t;
      ++i;
    }
    int b = u, j = pos;
    while (j > 0) {
      int t = st.table[cell(b, inverse_letter(rel[j - 1]))];
      if (t == -1) break;
      b = t;
      --j;
    }
    int gap = (len - i) + j;
    if (gap == 0) return f == b;  // cycle closed; ends must agree
    if (gap == 1) {
      Letter missing = rel[i == len ? 0 : i];
      if (!push_edge(st, f, missing, b, queue)) return false;
    }
    return true;
  }

  void undo(State& st, std::size_t mark) {
    while (st.trail.size() > mark) {
      st.table[st.trail.back()] = -1;
      st.trail.pop_back();
    }
  }

  enum class Cmp { Less, Other };

  // Lexicographic comparison of the BFS relabelling based at beta against
  // the identity labelling, over the commonly defined prefix.
  Cmp compare_rebased(State& st, int beta) const {
    std::vector<int>& new_of_old = st.scratch_new_of_old;
    std::vector<int>& old_of_new = st.scratch_old_of_new;
    std::fill(new_of_old.begin(), new_of_old.begin() + st.rows, -1);
    new_of_old[beta] = 0;
    old_of_new[0] = beta;
    int count = 1;
    for (int nc = 0; nc < count; ++nc) {
      int old_c = old_of_new[nc];
      for (Letter x = 0; x < kNumLetters; ++x) {
        int t_new = st.table[cell(old_c, x)];
        int t_root = st.table[cell(nc, x)];
        if (t_new == -1 || t_root == -1) return Cmp::Other;
        int lab = new_of_old[t_new];
        if (lab == -1) {
          lab = count;
          new_of_old[t_new] = lab;
          old_of_new[count++] = t_new;
        }
        if (lab != t_root) return lab < t_root ? Cmp::Less : Cmp::Other;
      }
    }
    return Cmp::Other;
  }

  bool pruned_by_class_test(State& st) const {
    for (int beta = 1; beta < st.rows; ++beta)
      if (compare_rebased(st, beta) == Cmp::Less) return true;
    return false;
  }

  void emit(const State& st, std::vector<std::vector<int>>& results) const {
    std::vector<int> flat(st.table.begin(),
                          st.table.begin() + static_cast<std::size_t>(n_) * kNumLetters);
    results.push_back(std::move(flat));
  }

  void dfs(State& st, int from_cell, std::vector<std::vector<int>>& results) {
    int total = st.rows * kNumLetters;
    int branch = from_cell;
    while (branch < total && st.table[branch] != -1) ++branch;
    if (branch == total) {
      if (st.rows == n_ && (!classes_ || !pruned_by_class_test(st))) emit(st, results);
      return;
    }
    int c = branch >> 2;
    Letter x = static_cast<Letter>(branch & 3);
    for (int d = 0; d <= st.rows && d < n_; ++d) {
      bool fresh = d == st.rows;
      if (!fresh && st.table[cell(d, inverse_letter(x))] != -1) continue;
      std::size_t mark = st.trail.size();
      if (fresh) ++st.rows;
      if (try_define(st, c, x, d) &&
          (!classes_ || !kPartialClassTest || !pruned_by_class_test(st)))
        dfs(st, branch, results);
      undo(st, mark);
      if (fresh) --st.rows;
    }
  }

  // Breadth-limited expansion used to seed parallel workers. Subtrees are
  // cut at branch sites once the frontier is large enough; shallow complete
  // tables are emitted directly into `results`.
  void expand_frontier(State& st, std::size_t want, std::vector<State>& frontier,
                       std::vector<std::vector<int>>& results) {
    std::vector<State> layer = {st};
    std::size_t cursor = 0;  // states in `layer` before this index are final
    while (layer.size() - cursor > 0 && layer.size() - cursor < want) {
      State cur = layer[cursor++];
      int total = cur.rows * kNumLetters;
      int branch = first_undefined(cur);
      if (branch == total) {
        if (cur.rows == n_ && (!classes_ || !pruned_by_class_test(cur)))
          emit(cur, results);
        continue;
      }
      int c = branch >> 2;
      Letter x = static_cast<Letter>(branch & 3);
      for (int d = 0; d <= cur.rows && d < n_; ++d) {
        bool fresh = d == cur.rows;
        if (!fresh && cur.table[cell(d, inverse_letter(x))] != -1) continue;
        State child = cur;
        child.trail.clear();
        if (fresh) ++child.rows;
        if (try_define(child, c, x, d) && (!classes_ || !pruned_by_class_test(child)))
          layer.push_back(std::move(child));
      }
    }
    frontier.assign(layer.begin() + cursor, layer.end());
  }
};

}  // namespace

std::vector<CosetTable> low_index_subgroups(const Presentation& p, int n,
                                            bool up_to_conjugacy, int jobs) {
  if (n < 1) throw std::invalid_argument("index must be at least 1");
  LowIndexSearch search(p, n, up_to_conjugacy);
  std::vector<std::vector<int>> flats = search.run(jobs);
  std::vector<CosetTable> out;
  out.reserve(flats.size());
  for (const auto& flat : flats) {
    std::array<std::vector<int>, kNumLetters> cols;
    for (Letter x = 0; x < kNumLetters; ++x) {
      cols[x].resize(n);
      for (int c = 0; c < n; ++c) cols[x][c] = flat[(c << 2) | x];
    }
    out.push_back(CosetTable::from_action(cols));
  }
  return out;
}

}  // namespace dgc
