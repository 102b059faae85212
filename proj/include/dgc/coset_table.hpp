#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "dgc/perm.hpp"
#include "dgc/words.hpp"

namespace dgc {

struct ResourceLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Complete right-coset table of a finite-index subgroup. Coset 0 is the
/// subgroup itself; rows are numbered in BFS discovery order from coset 0
/// with letter priority a, a^-1, b, b^-1. External formats are 1-based.
class CosetTable {
 public:
  CosetTable() = default;
  CosetTable(std::array<std::vector<int>, kNumLetters> action,
             std::vector<Word> transversal);

  /// Rebuilds a table from raw action columns (0-based targets),
  /// standardising the numbering and recomputing the transversal.
  static CosetTable from_action(const std::array<std::vector<int>, kNumLetters>& action);

  int size() const { return static_cast<int>(action_[0].size()); }
  int action(int coset, Letter l) const { return action_[l][coset]; }
  const std::array<std::vector<int>, kNumLetters>& columns() const { return action_; }
  const std::vector<Word>& transversal() const { return transversal_; }

  /// Right action of a and b on cosets.
  std::pair<Perm, Perm> coset_action() const;

  int trace(int coset, const Word& w) const;

  /// Checks totality, consistency of inverse pairs, relator closure, the
  /// transversal property and transitivity; throws on violation.
  void validate(const Presentation& p) const;

  /// Row-major flattening (letter order a, a^-1, b, b^-1), used for
  /// deterministic ordering of enumeration output.
  std::vector<int> flattened() const;

  /// Schreier generators of the subgroup: rep(c) x rep(c.x)^-1 over all
  /// cosets c and letters x, reduced, deduplicated, identity dropped.
  std::vector<Word> schreier_generators(const Presentation& p) const;

  friend bool operator==(const CosetTable&, const CosetTable&) = default;

 private:
  std::array<std::vector<int>, kNumLetters> action_;
  std::vector<Word> transversal_;
};

/// HLT-style Todd-Coxeter enumeration of the cosets of the subgroup
/// generated by `subgroup_gens`. Throws ResourceLimitError if more than
/// `max_cosets` rows would be required (possibly infinite index).
CosetTable todd_coxeter(const Presentation& p, std::span<const Word> subgroup_gens,
                        std::size_t max_cosets = 1'000'000);

/// All complete transitive coset tables of index exactly `n`, in
/// lexicographic order of their flattened form. With `up_to_conjugacy`,
/// exactly one representative per simultaneous-conjugacy class (the
/// lexicographically minimal standardised table) is returned.
/// `jobs` <= 1 runs serially; larger values fan subtrees out to threads.
std::vector<CosetTable> low_index_subgroups(const Presentation& p, int n,
                                            bool up_to_conjugacy, int jobs = 1);

}  // namespace dgc
