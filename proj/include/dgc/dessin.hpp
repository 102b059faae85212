#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgc/coset_table.hpp"
#include "dgc/perm.hpp"
#include "dgc/words.hpp"

namespace dgc {

/// Cycle-length multisets of (g0, g1, g_inf), each sorted descending.
struct Passport {
  std::vector<int> black, white, faces;

  friend bool operator==(const Passport&, const Passport&) = default;
  std::string str() const;
};

/// Bicolored map encoded by a transitive permutation pair acting on edges
/// 1..n: black vertices are the cycles of g0, white vertices the cycles of
/// g1, faces the cycles of g_inf = (g0 g1)^-1.
class Dessin {
 public:
  /// Throws std::invalid_argument (listing the orbit partition) when the
  /// pair is intransitive or degrees mismatch.
  static Dessin from_pair(const Perm& g0, const Perm& g1);
  static Dessin from_table(const CosetTable& table);

  int degree() const { return g0_.degree(); }
  const Perm& g0() const { return g0_; }
  const Perm& g1() const { return g1_; }
  const Perm& g_inf() const { return g_inf_; }

  int black_vertices() const { return black_; }
  int white_vertices() const { return white_; }
  int faces() const { return faces_; }
  int genus() const { return genus_; }

  Passport passport() const;

  /// Edge labels: label[0] = e and evaluate(label[k]) maps edge 0 to k.
  /// Default BFS letter priority a, a^-1, b, b^-1.
  const std::vector<Word>& labels() const { return labels_; }

  /// BFS label sequences for the six letter-priority orders over
  /// {a, a^-1, b} (b^-1 trailing), deduplicated, default order first.
  std::vector<std::vector<Word>> labels_variants() const;

  /// Minimal simultaneous relabelling over all base points; equal exactly
  /// for isomorphic dessins.
  std::vector<int> canonical() const;
  bool isomorphic_to(const Dessin& other) const;

  Dessin conjugated(const Perm& relabel) const;

 private:
  Perm g0_, g1_, g_inf_;
  int black_ = 0, white_ = 0, faces_ = 0, genus_ = 0;
  std::vector<Word> labels_;
};

}  // namespace dgc
