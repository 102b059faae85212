#include <random>

#include "dgc/catalog.hpp"
#include "dgc/pauli.hpp"
#include "doctest.h"
#include "pauli_matrix_oracle.hpp"

using namespace dgc;
using oracles::Mat;
using oracles::mat_equal;
using oracles::mat_mul;
using oracles::pauli_matrix;

namespace {

std::vector<PauliOp> all_ops(int qubits) {
  std::vector<PauliOp> out;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << qubits); ++x)
    for (std::uint64_t z = 0; z < (std::uint64_t{1} << qubits); ++z)
      for (int k = 0; k < 4; ++k) out.push_back(PauliOp(qubits, x, z, k));
  return out;
}

}  // namespace

TEST_CASE("parse and print") {
  CHECK(PauliOp::parse("XI").str() == "XI");
  CHECK(PauliOp::parse("-YY").str() == "-YY");
  CHECK(PauliOp::parse("iXZ").str() == "iXZ");
  CHECK(PauliOp::parse("-iZ").str() == "-iZ");
  CHECK(PauliOp::parse("Y") == PauliOp(1, 1, 1, 1));  // Y = iXZ
  CHECK(PauliOp::parse("Y").is_hermitian());
  CHECK_FALSE(PauliOp::parse("iX").is_hermitian());
  CHECK_THROWS_AS(PauliOp::parse("Q"), std::invalid_argument);
  for (const PauliOp& op : all_ops(2)) CHECK(PauliOp::parse(op.str()) == op);
}

TEST_CASE("multiply basics") {
  CHECK(PauliOp::parse("X") * PauliOp::parse("X") == PauliOp::identity(1));
  CHECK((PauliOp::parse("X") * PauliOp::parse("Z")).str() == "-iY");
  CHECK((PauliOp::parse("XX") * PauliOp::parse("ZZ")).str() == "-YY");
}

TEST_CASE("multiply and commute agree with the matrix oracle exhaustively (n<=2)") {
  for (int qubits : {1, 2}) {
    auto ops = all_ops(qubits);
    for (const PauliOp& a : ops)
      for (const PauliOp& b : ops) {
        Mat prod = mat_mul(pauli_matrix(a), pauli_matrix(b));
        CHECK(mat_equal(prod, pauli_matrix(a * b)));
        bool commutes = mat_equal(prod, mat_mul(pauli_matrix(b), pauli_matrix(a)));
        CHECK(commutes == a.commutes_with(b));
      }
  }
}

TEST_CASE("n=3: oracle agreement and associativity on random triples") {
  std::mt19937 rng(90210);
  std::uniform_int_distribution<std::uint64_t> bits(0, 7);
  std::uniform_int_distribution<int> phase(0, 3);
  auto random_op = [&] { return PauliOp(3, bits(rng), bits(rng), phase(rng)); };
  for (int trial = 0; trial < 10000; ++trial) {
    PauliOp a = random_op(), b = random_op(), c = random_op();
    CHECK(mat_equal(mat_mul(pauli_matrix(a), pauli_matrix(b)), pauli_matrix(a * b)));
    CHECK(a.commutes_with(b) ==
          mat_equal(mat_mul(pauli_matrix(a), pauli_matrix(b)),
                    mat_mul(pauli_matrix(b), pauli_matrix(a))));
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("associativity for larger operators") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::uint64_t> bits(0, 31);
  std::uniform_int_distribution<int> phase(0, 3);
  for (int trial = 0; trial < 2000; ++trial) {
    PauliOp a(5, bits(rng), bits(rng), phase(rng));
    PauliOp b(5, bits(rng), bits(rng), phase(rng));
    PauliOp c(5, bits(rng), bits(rng), phase(rng));
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("mermin square verification") {
  auto grid = [](std::initializer_list<const char*> names) {
    std::array<std::array<PauliOp, 3>, 3> g;
    int i = 0;
    for (const char* n : names) {
      g[i / 3][i % 3] = PauliOp::parse(n);
      ++i;
    }
    return g;
  };
  // the classic square
  auto square = grid({"XI", "IX", "XX", "IZ", "ZI", "ZZ", "XZ", "ZX", "YY"});
  MerminSquareVerdict v = verify_mermin_square(square);
  CHECK(v.valid);
  CHECK(v.negative_lines == 1);
  // cross-check all six line products against the matrix oracle
  for (int r = 0; r < 3; ++r) {
    Mat prod = mat_mul(mat_mul(pauli_matrix(square[r][0]), pauli_matrix(square[r][1])),
                       pauli_matrix(square[r][2]));
    Mat expect = pauli_matrix(PauliOp(2, 0, 0, v.row_signs[r] == 1 ? 0 : 2));
    CHECK(mat_equal(prod, expect));
  }
  for (int c = 0; c < 3; ++c) {
    Mat prod = mat_mul(mat_mul(pauli_matrix(square[0][c]), pauli_matrix(square[1][c])),
                       pauli_matrix(square[2][c]));
    Mat expect = pauli_matrix(PauliOp(2, 0, 0, v.col_signs[c] == 1 ? 0 : 2));
    CHECK(mat_equal(prod, expect));
  }

  // all-identity grid: products +1 everywhere, zero -1 lines, fails
  auto flat = grid({"II", "II", "II", "II", "II", "II", "II", "II", "II"});
  CHECK_FALSE(verify_mermin_square(flat).valid);
  // an anticommuting pair in a row is rejected with a location
  auto broken = grid({"XI", "ZI", "XX", "IZ", "ZI", "ZZ", "XZ", "ZX", "YY"});
  MerminSquareVerdict b = verify_mermin_square(broken);
  CHECK_FALSE(b.valid);
  CHECK(b.violation.find("row 1") != std::string::npos);
}

TEST_CASE("mermin square search finds a valid square") {
  auto square = find_mermin_square();
  MerminSquareVerdict v = verify_mermin_square(square);
  CHECK(v.valid);
  CHECK(v.negative_lines % 2 == 1);
}

TEST_CASE("pentagram verification and search") {
  IncidenceStructure tmpl = build_geometry("pentagram");
  // the standard X/Y pentagram on the template's line structure
  // template points are unordered line pairs {i,j}
  std::vector<PauliOp> ops = find_pentagram(tmpl.lines);
  PentagramVerdict v = verify_pentagram(ops, tmpl.lines);
  CHECK(v.valid);
  CHECK(v.negative_lines % 2 == 1);
  // matrix oracle on every line product
  for (std::size_t li = 0; li < tmpl.lines.size(); ++li) {
    Mat prod = pauli_matrix(ops[tmpl.lines[li][0]]);
    for (std::size_t k = 1; k < tmpl.lines[li].size(); ++k)
      prod = mat_mul(prod, pauli_matrix(ops[tmpl.lines[li][k]]));
    Mat expect = pauli_matrix(PauliOp(3, 0, 0, v.line_signs[li] == 1 ? 0 : 2));
    CHECK(mat_equal(prod, expect));
  }
  // flipping one operator's sign flips exactly the two lines through it,
  // so the parity of -identity lines (and the verdict) is preserved
  std::vector<PauliOp> flipped = ops;
  flipped[0] = flipped[0].with_phase(flipped[0].phase() + 2);
  PentagramVerdict fv = verify_pentagram(flipped, tmpl.lines);
  CHECK(fv.valid);
  CHECK(fv.negative_lines % 2 == 1);
  {
    int changed = 0;
    for (std::size_t li = 0; li < tmpl.lines.size(); ++li)
      changed += fv.line_signs[li] != v.line_signs[li];
    CHECK(changed == 2);
  }
  // a line product of +-i must be rejected: replace a line with ops whose
  // product is iZZZ-like; easiest is a template degree violation instead
  CHECK_FALSE(verify_pentagram(ops, {{0, 1, 2, 3}, {0, 1, 2, 4}, {5, 6, 7, 8},
                                     {5, 6, 7, 9}, {3, 4, 8, 9}})
                  .valid);
}

TEST_CASE("known hermitian X/Y pentagram passes") {
  // lines: {XII,IYI,IIY,XYY}, {YII,IXI,IIY,YXY}, {YII,IYI,IIX,YYX},
  //        {XII,IXI,IIX,XXX}, {XYY,YXY,YYX,XXX}
  std::vector<PauliOp> ops = {
      PauliOp::parse("XII"), PauliOp::parse("IYI"), PauliOp::parse("IIY"),
      PauliOp::parse("YII"), PauliOp::parse("IXI"), PauliOp::parse("IIX"),
      PauliOp::parse("XYY"), PauliOp::parse("YXY"), PauliOp::parse("YYX"),
      PauliOp::parse("XXX")};
  std::vector<std::vector<int>> lines = {
      {0, 1, 2, 6}, {3, 4, 2, 7}, {3, 1, 5, 8}, {0, 4, 5, 9}, {6, 7, 8, 9}};
  PentagramVerdict v = verify_pentagram(ops, lines);
  CHECK(v.valid);
  CHECK(v.negative_lines == 1);
}

TEST_CASE("maximal commuting sets give projective spaces") {
  // n = 2: triangle
  auto tri = max_commuting_geometry({PauliOp::parse("ZI"), PauliOp::parse("IZ")});
  CHECK(tri.structure.points == 3);
  CHECK(tri.structure.line_count() == 1);
  CHECK(isomorphic(tri.structure, build_geometry("triangle")).isomorphic);

  // n = 3: Fano plane with all triad products +identity
  auto fano = max_commuting_geometry(
      {PauliOp::parse("ZII"), PauliOp::parse("IZI"), PauliOp::parse("IIZ")});
  CHECK(fano.structure.points == 7);
  CHECK(fano.structure.line_count() == 7);
  CHECK(isomorphic(fano.structure, build_geometry("PG(2,2)")).isomorphic);
  for (int s : fano.line_signs) CHECK(s == 1);

  // n = 4: PG(3,2) with 35 triads, products +-identity
  auto pg32 = max_commuting_geometry({PauliOp::parse("ZIII"), PauliOp::parse("IZII"),
                                      PauliOp::parse("IIZI"), PauliOp::parse("IIIZ")});
  CHECK(pg32.structure.points == 15);
  CHECK(pg32.structure.line_count() == 35);
  CHECK(isomorphic(pg32.structure, build_geometry("PG(3,2)")).isomorphic);

  // a mixed commuting set
  auto mixed = max_commuting_geometry(
      {PauliOp::parse("XX"), PauliOp::parse("ZZ")});
  CHECK(mixed.structure.points == 3);
  for (const PauliOp& op : mixed.labels) CHECK(op.is_hermitian());

  CHECK_THROWS_AS(
      max_commuting_geometry({PauliOp::parse("X"), PauliOp::parse("Z")}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      max_commuting_geometry({PauliOp::parse("XX"), PauliOp::parse("XX")}),
      std::invalid_argument);
}
