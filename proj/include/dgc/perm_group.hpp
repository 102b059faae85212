#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dgc/perm.hpp"

namespace dgc {

/// Permutation group with a deterministic Schreier-Sims stabilizer chain.
/// Base points are taken from `base_prefix` first (in order, whether or not
/// their orbits are trivial), then extended with the smallest moved point,
/// so chains and the derived stabilizer generators are reproducible.
class PermGroup {
 public:
  PermGroup(int degree, std::vector<Perm> generators,
            std::vector<int> base_prefix = {});

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  std::uint64_t order() const;
  std::vector<int> orbit(int p) const;  // sorted
  bool contains(const Perm& g) const;

  /// Subgroup fixing p, generated by sifted Schreier generators.
  PermGroup point_stabilizer(int p) const;
  /// Pointwise stabilizer of {p, q}; throws if p == q.
  PermGroup two_point_stabilizer(int p, int q) const;

  /// All elements, enumerated from the chain. Throws if order() > bound.
  std::vector<Perm> elements(std::uint64_t bound = 1'000'000) const;

  bool is_transitive() const;

 private:
  struct Level {
    int base = -1;
    std::vector<int> orbit_order;           // discovery order, starts with base
    std::vector<std::optional<Perm>> transversal;  // indexed by point
    std::vector<Perm> gens;                  // generating set of this level's group
    std::size_t checked_points = 0;          // Schreier verification watermark
    std::size_t checked_gens = 0;
  };

  void build();
  void extend_orbit(Level& level, std::size_t first_new_gen);
  Perm sift(Perm g, std::size_t from_level, std::size_t* stop_level) const;
  void ensure_level(std::size_t idx, const Perm& mover);
  void append_generator(std::size_t level_idx, const Perm& g);
  std::vector<Perm> stabilizer_generators_below(std::size_t level_idx) const;

  int degree_;
  std::vector<Perm> gens_;
  std::vector<int> base_prefix_;
  std::vector<Level> levels_;
};

/// Canonical identity for a subgroup of a fixed parent group. Below the
/// element bound the digest is the sorted element list, so keys are equal
/// exactly when the subgroups coincide as sets; above it the key degrades
/// to (order, generator cycle types) and is marked inexact.
struct SubgroupKey {
  std::uint64_t order = 1;
  bool exact = true;
  std::string digest;

  friend bool operator==(const SubgroupKey&, const SubgroupKey&) = default;
  friend auto operator<=>(const SubgroupKey&, const SubgroupKey&) = default;
};

SubgroupKey subgroup_key(const PermGroup& g, std::uint64_t bound = 1'000'000);

/// Groups keys of the same abstract order together for reporting.
std::string class_label(std::uint64_t order);

/// Best-effort conventional name ("Z1", "Z2", "A4", ...) when the order and
/// element-order profile pin it down in this context; empty otherwise.
std::string group_name_hint(const PermGroup& g);

}  // namespace dgc
