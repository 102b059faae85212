#include "dgc/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace dgc {

PauliOp::PauliOp(int qubits, std::uint64_t x_bits, std::uint64_t z_bits, int phase)
    : qubits_(qubits), x_(x_bits), z_(z_bits), phase_(((phase % 4) + 4) % 4) {
  if (qubits < 1 || qubits > 63) throw std::invalid_argument("qubit count out of range");
  std::uint64_t mask = (std::uint64_t{1} << qubits) - 1;
  if ((x_ & ~mask) || (z_ & ~mask)) throw std::invalid_argument("bits out of range");
}

PauliOp PauliOp::identity(int qubits) { return PauliOp(qubits, 0, 0, 0); }

PauliOp PauliOp::parse(std::string_view text) {
  int phase = 0;
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    if (text[i] == '-') phase += 2;
    ++i;
  }
  if (i < text.size() && text[i] == 'i') {
    phase += 1;
    ++i;
  }
  std::uint64_t x = 0, z = 0;
  int qubits = 0;
  int extra_phase = 0;
  for (; i < text.size(); ++i) {
    std::uint64_t bit = std::uint64_t{1} << qubits;
    switch (text[i]) {
      case 'I': break;
      case 'X': x |= bit; break;
      case 'Z': z |= bit; break;
      case 'Y':
        x |= bit;
        z |= bit;
        extra_phase += 1;  // Y = i X Z
        break;
      default:
        throw std::invalid_argument(std::string("unknown Pauli letter '") + text[i] + "'");
    }
    ++qubits;
  }
  if (qubits == 0) throw std::invalid_argument("empty Pauli operator");
  return PauliOp(qubits, x, z, phase + extra_phase);
}

PauliOp PauliOp::operator*(const PauliOp& rhs) const {
  if (qubits_ != rhs.qubits_) throw std::invalid_argument("qubit count mismatch");
  // Z^z X^x = (-1)^{z.x} X^x Z^z per factor
  int swaps = std::popcount(z_ & rhs.x_);
  return PauliOp(qubits_, x_ ^ rhs.x_, z_ ^ rhs.z_, phase_ + rhs.phase_ + 2 * swaps);
}

bool PauliOp::commutes_with(const PauliOp& rhs) const {
  if (qubits_ != rhs.qubits_) throw std::invalid_argument("qubit count mismatch");
  return ((std::popcount(x_ & rhs.z_) + std::popcount(z_ & rhs.x_)) & 1) == 0;
}

bool PauliOp::is_hermitian() const {
  // i^k prod X^x Z^z is Hermitian exactly when k = x.z (mod 2)
  return ((phase_ - std::popcount(x_ & z_)) & 1) == 0;
}

int PauliOp::sign() const {
  if (x_ != 0 || z_ != 0 || phase_ % 2 != 0)
    throw std::logic_error("sign of a non-scalar operator");
  return phase_ == 0 ? 1 : -1;
}

PauliOp PauliOp::with_phase(int phase) const { return PauliOp(qubits_, x_, z_, phase); }

PauliOp PauliOp::hermitian_rep() const {
  // phase i^{#Y} renders every Y factor Hermitian and the prefix +1
  return PauliOp(qubits_, x_, z_, std::popcount(x_ & z_));
}

std::string PauliOp::str() const {
  int ys = std::popcount(x_ & z_);
  int prefix = ((phase_ - ys) % 4 + 4) % 4;
  static const char* prefixes[4] = {"", "i", "-", "-i"};
  std::string out = prefixes[prefix];
  for (int q = 0; q < qubits_; ++q) {
    bool xb = (x_ >> q) & 1, zb = (z_ >> q) & 1;
    out += xb && zb ? 'Y' : xb ? 'X' : zb ? 'Z' : 'I';
  }
  return out;
}

namespace {

struct LineCheck {
  bool ok = false;
  int sign = 0;
  std::string violation;
};

LineCheck check_line(const std::vector<PauliOp>& ops) {
  LineCheck out;
  for (std::size_t i = 0; i < ops.size(); ++i)
    for (std::size_t j = i + 1; j < ops.size(); ++j)
      if (!ops[i].commutes_with(ops[j])) {
        out.violation = ops[i].str() + " and " + ops[j].str() + " do not commute";
        return out;
      }
  PauliOp prod = ops[0];
  for (std::size_t i = 1; i < ops.size(); ++i) prod = prod * ops[i];
  if (prod.x_bits() != 0 || prod.z_bits() != 0 || prod.phase() % 2 != 0) {
    out.violation = "product " + prod.str() + " is not +-identity";
    return out;
  }
  out.ok = true;
  out.sign = prod.sign();
  return out;
}

}  // namespace

MerminSquareVerdict verify_mermin_square(const std::array<std::array<PauliOp, 3>, 3>& ops) {
  MerminSquareVerdict v;
  for (int r = 0; r < 3; ++r) {
    LineCheck c = check_line({ops[r][0], ops[r][1], ops[r][2]});
    if (!c.ok) {
      v.violation = "row " + std::to_string(r + 1) + ": " + c.violation;
      return v;
    }
    v.row_signs[r] = c.sign;
  }
  for (int cidx = 0; cidx < 3; ++cidx) {
    LineCheck c = check_line({ops[0][cidx], ops[1][cidx], ops[2][cidx]});
    if (!c.ok) {
      v.violation = "column " + std::to_string(cidx + 1) + ": " + c.violation;
      return v;
    }
    v.col_signs[cidx] = c.sign;
  }
  for (int s : v.row_signs) v.negative_lines += s < 0;
  for (int s : v.col_signs) v.negative_lines += s < 0;
  if (v.negative_lines % 2 == 0) {
    v.violation = "even number of -identity lines (" + std::to_string(v.negative_lines) + ")";
    return v;
  }
  v.valid = true;
  return v;
}

PentagramVerdict verify_pentagram(const std::vector<PauliOp>& ops,
                                  const std::vector<std::vector<int>>& lines) {
  PentagramVerdict v;
  std::vector<int> degree(ops.size(), 0);
  for (const auto& line : lines)
    for (int p : line) {
      if (p < 0 || p >= static_cast<int>(ops.size())) {
        v.violation = "line point out of range";
        return v;
      }
      ++degree[p];
    }
  for (std::size_t p = 0; p < degree.size(); ++p)
    if (degree[p] != 2) {
      v.violation = "point " + std::to_string(p + 1) + " lies on " +
                    std::to_string(degree[p]) + " lines, expected 2";
      return v;
    }
  for (std::size_t li = 0; li < lines.size(); ++li) {
    std::vector<PauliOp> line_ops;
    for (int p : lines[li]) line_ops.push_back(ops[p]);
    LineCheck c = check_line(line_ops);
    if (!c.ok) {
      v.violation = "line " + std::to_string(li + 1) + ": " + c.violation;
      return v;
    }
    v.line_signs.push_back(c.sign);
    v.negative_lines += c.sign < 0;
  }
  if (v.negative_lines % 2 == 0) {
    v.violation = "even number of -identity lines (" + std::to_string(v.negative_lines) + ")";
    return v;
  }
  v.valid = true;
  return v;
}

namespace {

std::vector<PauliOp> nontrivial_observables(int qubits) {
  std::vector<PauliOp> out;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << qubits); ++x)
    for (std::uint64_t z = 0; z < (std::uint64_t{1} << qubits); ++z) {
      if (x == 0 && z == 0) continue;
      out.push_back(PauliOp(qubits, x, z, std::popcount(x & z)));
    }
  return out;
}

}  // namespace

std::array<std::array<PauliOp, 3>, 3> find_mermin_square() {
  std::vector<PauliOp> pool = nontrivial_observables(2);
  std::array<std::array<PauliOp, 3>, 3> grid;
  std::array<int, 9> pick{};

  // cell order row-major; constraints checked as soon as available
  auto cell_ok = [&](int idx) {
    int r = idx / 3, c = idx % 3;
    const PauliOp& op = grid[r][c];
    for (int cc = 0; cc < c; ++cc)
      if (!grid[r][cc].commutes_with(op)) return false;
    for (int rr = 0; rr < r; ++rr)
      if (!grid[rr][c].commutes_with(op)) return false;
    if (c == 2) {
      PauliOp prod = grid[r][0] * grid[r][1] * grid[r][2];
      if (prod.x_bits() || prod.z_bits() || prod.phase() % 2) return false;
    }
    if (r == 2) {
      PauliOp prod = grid[0][c] * grid[1][c] * grid[2][c];
      if (prod.x_bits() || prod.z_bits() || prod.phase() % 2) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, int idx) -> bool {
    if (idx == 9) return verify_mermin_square(grid).valid;
    for (pick[idx] = 0; pick[idx] < static_cast<int>(pool.size()); ++pick[idx]) {
      bool repeated = false;
      for (int prev = 0; prev < idx; ++prev)
        if (pick[prev] == pick[idx]) repeated = true;
      if (repeated) continue;
      grid[idx / 3][idx % 3] = pool[pick[idx]];
      if (cell_ok(idx) && self(self, idx + 1)) return true;
    }
    return false;
  };
  if (!rec(rec, 0)) throw std::runtime_error("no Mermin square found");
  return grid;
}

std::vector<PauliOp> find_pentagram(const std::vector<std::vector<int>>& lines) {
  std::vector<PauliOp> pool = nontrivial_observables(3);
  int points = 0;
  for (const auto& line : lines)
    for (int p : line) points = std::max(points, p + 1);
  std::vector<PauliOp> ops(points, PauliOp::identity(3));
  std::vector<int> pick(points, -1);

  auto partial_ok = [&](int idx) {
    for (const auto& line : lines) {
      bool complete = true;
      std::vector<PauliOp> assigned;
      for (int p : line) {
        if (p > idx) { complete = false; continue; }
        assigned.push_back(ops[p]);
      }
      for (std::size_t i = 0; i < assigned.size(); ++i)
        for (std::size_t j = i + 1; j < assigned.size(); ++j)
          if (!assigned[i].commutes_with(assigned[j])) return false;
      if (complete) {
        PauliOp prod = assigned[0];
        for (std::size_t i = 1; i < assigned.size(); ++i) prod = prod * assigned[i];
        if (prod.x_bits() || prod.z_bits() || prod.phase() % 2) return false;
      }
    }
    return true;
  };

  auto rec = [&](auto&& self, int idx) -> bool {
    if (idx == points) return verify_pentagram(ops, lines).valid;
    for (pick[idx] = 0; pick[idx] < static_cast<int>(pool.size()); ++pick[idx]) {
      bool repeated = false;
      for (int prev = 0; prev < idx; ++prev)
        if (pick[prev] == pick[idx]) repeated = true;
      if (repeated) continue;
      ops[idx] = pool[pick[idx]];
      if (partial_ok(idx) && self(self, idx + 1)) return true;
    }
    return false;
  };
  if (!rec(rec, 0)) throw std::runtime_error("no pentagram labelling found");
  return ops;
}

MaxCommutingSet max_commuting_geometry(const std::vector<PauliOp>& generators) {
  if (generators.empty()) throw std::invalid_argument("need at least one generator");
  int qubits = generators[0].qubits();
  int n = static_cast<int>(generators.size());
  for (const PauliOp& g : generators) {
    if (g.qubits() != qubits) throw std::invalid_argument("qubit count mismatch");
    if (g.x_bits() == 0 && g.z_bits() == 0)
      throw std::invalid_argument("identity generator is dependent");
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!generators[i].commutes_with(generators[j]))
        throw std::invalid_argument("generators must commute");
  // GF(2) independence of the (x|z) rows
  {
    std::vector<std::uint64_t> rows;
    for (const PauliOp& g : generators)
      rows.push_back(g.x_bits() | (g.z_bits() << qubits));
    std::vector<std::uint64_t> basis;
    for (std::uint64_t row : rows) {
      for (std::uint64_t b : basis) row = std::min(row, row ^ b);
      if (row == 0) throw std::invalid_argument("generators are GF(2)-dependent");
      basis.push_back(row);
    }
  }

  int count = (1 << n) - 1;
  std::vector<PauliOp> labels;
  labels.reserve(count);
  for (int mask = 1; mask <= count; ++mask) {
    PauliOp prod = PauliOp::identity(qubits);
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) prod = prod * generators[i];
    labels.push_back(prod.hermitian_rep());
  }
  std::vector<std::vector<int>> lines;
  std::vector<int> signs;
  for (int m1 = 1; m1 <= count; ++m1)
    for (int m2 = m1 + 1; m2 <= count; ++m2) {
      int m3 = m1 ^ m2;
      if (m3 < m2) continue;
      lines.push_back({m1 - 1, m2 - 1, m3 - 1});
      PauliOp prod = labels[m1 - 1] * labels[m2 - 1] * labels[m3 - 1];
      signs.push_back(prod.sign());
    }
  MaxCommutingSet out;
  out.structure = IncidenceStructure::make(count, lines, "maxset");
  out.labels = std::move(labels);
  out.line_signs = std::move(signs);
  return out;
}

}  // namespace dgc
