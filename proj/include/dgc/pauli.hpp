#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dgc/geometry.hpp"

namespace dgc {

/// n-qubit Pauli operator i^phase * prod_j X^{x_j} Z^{z_j}, phase mod 4,
/// with the convention Y = i X Z. Text form is an optional prefix from
/// {"", "i", "-", "-i"} followed by n letters of {I,X,Y,Z}.
class PauliOp {
 public:
  PauliOp() = default;
  PauliOp(int qubits, std::uint64_t x_bits, std::uint64_t z_bits, int phase = 0);

  static PauliOp identity(int qubits);
  static PauliOp parse(std::string_view text);

  int qubits() const { return qubits_; }
  std::uint64_t x_bits() const { return x_; }
  std::uint64_t z_bits() const { return z_; }
  int phase() const { return phase_; }

  PauliOp operator*(const PauliOp& rhs) const;
  bool commutes_with(const PauliOp& rhs) const;  // symplectic criterion
  bool is_hermitian() const;
  bool is_identity_up_to_sign() const { return x_ == 0 && z_ == 0 && phase_ % 2 == 0; }
  /// +1 or -1 for phase-real scalar operators; throws otherwise.
  int sign() const;

  PauliOp with_phase(int phase) const;
  /// The +1-phase Hermitian representative with the same X/Z pattern.
  PauliOp hermitian_rep() const;

  std::string str() const;

  friend bool operator==(const PauliOp&, const PauliOp&) = default;
  friend auto operator<=>(const PauliOp&, const PauliOp&) = default;

 private:
  int qubits_ = 0;
  std::uint64_t x_ = 0, z_ = 0;
  int phase_ = 0;  // exponent of i
};

struct MerminSquareVerdict {
  bool valid = false;
  std::string violation;
  std::array<int, 3> row_signs{};  // +1 / -1
  std::array<int, 3> col_signs{};
  int negative_lines = 0;
};

/// Rows and columns must each be mutually commuting with product +-I, and
/// the number of -I lines must be odd.
MerminSquareVerdict verify_mermin_square(const std::array<std::array<PauliOp, 3>, 3>& ops);

struct PentagramVerdict {
  bool valid = false;
  std::string violation;
  std::vector<int> line_signs;
  int negative_lines = 0;
};

/// Each of the five 4-point lines must be mutually commuting with product
/// +-I, oddly many -I. Every point must lie on exactly two lines.
PentagramVerdict verify_pentagram(const std::vector<PauliOp>& ops,
                                  const std::vector<std::vector<int>>& lines);

/// Deterministic bounded search for a Mermin square over the nontrivial
/// two-qubit observables.
std::array<std::array<PauliOp, 3>, 3> find_mermin_square();

/// Deterministic search for a pentagram labelling on the standard
/// five-line template; returns the operators in template point order.
std::vector<PauliOp> find_pentagram(const std::vector<std::vector<int>>& lines);

struct MaxCommutingSet {
  IncidenceStructure structure;  // isomorphic to PG(n-1,2)
  std::vector<PauliOp> labels;   // one per point
  std::vector<int> line_signs;
};

/// The 2^n - 1 products of n independent, mutually commuting generators,
/// with the triads {A, B, AB} as lines.
MaxCommutingSet max_commuting_geometry(const std::vector<PauliOp>& generators);

}  // namespace dgc
