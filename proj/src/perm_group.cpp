#include "dgc/perm_group.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace dgc {

PermGroup::PermGroup(int degree, std::vector<Perm> generators,
                     std::vector<int> base_prefix)
    : degree_(degree), base_prefix_(std::move(base_prefix)) {
  for (const Perm& g : generators) {
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");
    if (!g.is_identity()) gens_.push_back(g);
  }
  for (int b : base_prefix_)
    if (b < 0 || b >= degree) throw std::invalid_argument("base point out of range");
  build();
}

void PermGroup::extend_orbit(Level& level, std::size_t first_new_gen) {
  // Incremental closure: old points only need rescanning with the new
  // generators; points discovered here are scanned with everything.
  // Existing transversal entries never change, which keeps previously
  // verified Schreier pairs valid.
  std::size_t old_count = level.orbit_order.size();
  for (std::size_t idx = 0; idx < level.orbit_order.size(); ++idx) {
    int p = level.orbit_order[idx];
    std::size_t gen_start = idx < old_count ? first_new_gen : 0;
    for (std::size_t gi = gen_start; gi < level.gens.size(); ++gi) {
      int q = level.gens[gi](p);
      if (!level.transversal[q].has_value()) {
        level.transversal[q] = *level.transversal[p] * level.gens[gi];
        level.orbit_order.push_back(q);
      }
    }
  }
}

Perm PermGroup::sift(Perm g, std::size_t from_level, std::size_t* stop_level) const {
  std::size_t i = from_level;
  for (; i < levels_.size(); ++i) {
    if (g.is_identity()) break;
    const Level& level = levels_[i];
    int img = g(level.base);
    if (!level.transversal[img].has_value()) break;
    g = g * level.transversal[img]->inverse();
  }
  if (stop_level) *stop_level = i;
  return g;
}

void PermGroup::ensure_level(std::size_t idx, const Perm& mover) {
  while (levels_.size() <= idx) {
    std::size_t i = levels_.size();
    Level level;
    if (i < base_prefix_.size()) {
      level.base = base_prefix_[i];
    } else {
      level.base = 0;
      for (int p = 0; p < degree_; ++p)
        if (mover(p) != p) { level.base = p; break; }
    }
    level.transversal.assign(degree_, std::nullopt);
    level.transversal[level.base] = Perm(degree_);
    level.orbit_order = {level.base};
    levels_.push_back(std::move(level));
  }
}

void PermGroup::append_generator(std::size_t level_idx, const Perm& g) {
  Level& level = levels_[level_idx];
  if (std::find(level.gens.begin(), level.gens.end(), g) != level.gens.end()) return;
  level.gens.push_back(g);
  extend_orbit(level, level.gens.size() - 1);
}

void PermGroup::build() {
  if (!base_prefix_.empty()) ensure_level(base_prefix_.size() - 1, Perm(degree_));
  for (const Perm& g : gens_) {
    // A generator participates in every level whose preceding bases it fixes.
    std::size_t lvl = 0;
    while (lvl < base_prefix_.size() && g(base_prefix_[lvl]) == base_prefix_[lvl]) ++lvl;
    ensure_level(lvl, g);
    for (std::size_t j = 0; j <= lvl; ++j) append_generator(j, g);
  }
  if (levels_.empty()) return;

  // Verification sweep: every Schreier generator of level i must sift to
  // the identity through the deeper chain; a non-trivial residue becomes a
  // strong generator one level down and the sweep resumes there. Completed
  // pairs stay settled because orbits and transversals only grow.
  std::size_t i = 0;
  while (true) {
    bool descended = false;
    for (std::size_t pi = 0; pi < levels_[i].orbit_order.size() && !descended; ++pi) {
      for (std::size_t gi = 0; gi < levels_[i].gens.size() && !descended; ++gi) {
        if (pi < levels_[i].checked_points && gi < levels_[i].checked_gens) continue;
        const Level& level = levels_[i];
        int p = level.orbit_order[pi];
        const Perm& s = level.gens[gi];
        Perm schreier = *level.transversal[p] * s * level.transversal[s(p)]->inverse();
        Perm residue = sift(std::move(schreier), i + 1, nullptr);
        if (!residue.is_identity()) {
          ensure_level(i + 1, residue);
          append_generator(i + 1, residue);
          i = i + 1;
          descended = true;
        }
      }
    }
    if (descended) continue;
    levels_[i].checked_points = levels_[i].orbit_order.size();
    levels_[i].checked_gens = levels_[i].gens.size();
    if (i == 0) break;
    --i;
  }
}

std::uint64_t PermGroup::order() const {
  unsigned __int128 ord = 1;
  for (const Level& level : levels_) {
    ord *= level.orbit_order.size();
    if (ord > UINT64_MAX) throw std::overflow_error("group order exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(ord);
}

std::vector<int> PermGroup::orbit(int p) const {
  if (p < 0 || p >= degree_) throw std::invalid_argument("point out of range");
  std::vector<char> seen(degree_, 0);
  std::vector<int> queue = {p};
  seen[p] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const Perm& g : gens_) {
      int q = g(queue[i]);
      if (!seen[q]) { seen[q] = 1; queue.push_back(q); }
    }
  std::sort(queue.begin(), queue.end());
  return queue;
}

bool PermGroup::contains(const Perm& g) const {
  if (g.degree() != degree_) return false;
  return sift(g, 0, nullptr).is_identity();
}

std::vector<Perm> PermGroup::stabilizer_generators_below(std::size_t level_idx) const {
  std::set<Perm> out;
  for (std::size_t i = level_idx; i < levels_.size(); ++i)
    for (const Perm& g : levels_[i].gens)
      if (!g.is_identity()) {
        bool fixes = true;
        for (std::size_t j = 0; j < level_idx && j < levels_.size(); ++j)
          if (g(levels_[j].base) != levels_[j].base) { fixes = false; break; }
        if (fixes) out.insert(g);
      }
  return {out.begin(), out.end()};
}

PermGroup PermGroup::point_stabilizer(int p) const {
  if (p < 0 || p >= degree_) throw std::invalid_argument("point out of range");
  PermGroup chain(degree_, gens_, {p});
  return PermGroup(degree_, chain.stabilizer_generators_below(1));
}

PermGroup PermGroup::two_point_stabilizer(int p, int q) const {
  if (p == q) throw std::invalid_argument("two_point_stabilizer needs distinct points");
  if (p < 0 || p >= degree_ || q < 0 || q >= degree_)
    throw std::invalid_argument("point out of range");
  PermGroup chain(degree_, gens_, {p, q});
  return PermGroup(degree_, chain.stabilizer_generators_below(2));
}

std::vector<Perm> PermGroup::elements(std::uint64_t bound) const {
  if (order() > bound) throw std::runtime_error("element enumeration above bound");
  std::vector<Perm> out = {Perm(degree_)};
  // g factors as u_deepest * ... * u_0 over transversal choices.
  for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
    std::vector<Perm> next;
    next.reserve(out.size() * it->orbit_order.size());
    for (const Perm& tail : out)
      for (int p : it->orbit_order) next.push_back(tail * *it->transversal[p]);
    out = std::move(next);
  }
  return out;
}

bool PermGroup::is_transitive() const {
  if (degree_ == 0) return false;
  return static_cast<int>(orbit(0).size()) == degree_;
}

SubgroupKey subgroup_key(const PermGroup& g, std::uint64_t bound) {
  SubgroupKey key;
  key.order = g.order();
  if (key.order <= bound) {
    std::vector<Perm> elems = g.elements(bound);
    std::vector<std::string> rows;
    rows.reserve(elems.size());
    for (const Perm& e : elems) {
      std::string row(e.degree(), '\0');
      for (int i = 0; i < e.degree(); ++i) row[i] = static_cast<char>(e(i));
      rows.push_back(std::move(row));
    }
    std::sort(rows.begin(), rows.end());
    key.exact = true;
    for (const std::string& row : rows) key.digest += row;
  } else {
    key.exact = false;
    std::vector<std::string> types;
    for (const Perm& gen : g.generators()) {
      std::string t;
      for (int len : gen.cycle_type()) t += std::to_string(len) + ".";
      types.push_back(t);
    }
    std::sort(types.begin(), types.end());
    for (const std::string& t : types) key.digest += t + "|";
  }
  return key;
}

std::string class_label(std::uint64_t order) {
  return "order=" + std::to_string(order);
}

std::string group_name_hint(const PermGroup& g) {
  std::uint64_t order = g.order();
  if (order == 1) return "Z1";
  if (order == 2) return "Z2";
  if (order == 3) return "Z3";
  if (order > 100000) return "";
  std::map<long, int> profile;
  for (const Perm& e : g.elements()) ++profile[e.order()];
  auto is = [&](std::initializer_list<std::pair<const long, int>> expect) {
    return profile == std::map<long, int>(expect);
  };
  if (order == 12 && is({{1, 1}, {2, 3}, {3, 8}})) return "A4";
  if (order == 32 && is({{1, 1}, {2, 19}, {4, 12}})) return "E32+";
  if (order == 168 && is({{1, 1}, {2, 21}, {3, 56}, {4, 42}, {7, 48}}))
    return "PSL(2,7)";
  if (order == 2520 &&
      is({{1, 1}, {2, 105}, {3, 350}, {4, 630}, {5, 504}, {6, 210}, {7, 720}}))
    return "A7";
  return "";
}

}  // namespace dgc
