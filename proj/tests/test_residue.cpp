#include "arith/dsl/parser.hpp"
#include "arith/residue.hpp"

#include <gtest/gtest.h>

#include <set>

using arith::Int;
using arith::ResidueSet;
using arith::dsl::parse_term;

namespace {

std::vector<Int> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

ResidueSet image(const char* expr, const char* var, int m) { return arith::residue_image(parse_term(expr), var, m); }

}  // namespace

TEST(ResidueRow, TableRows) {
  EXPECT_EQ(arith::residue_row(parse_term("x^2"), "x", 7).values, ints({0, 1, 4, 2, 2, 4, 1}));
  EXPECT_EQ(arith::residue_row(parse_term("x^3"), "x", 7).values, ints({0, 1, 1, 6, 1, 6, 6}));
  EXPECT_EQ(arith::residue_row(parse_term("x"), "x", 5).values, ints({0, 1, 2, 3, 4}));
  EXPECT_EQ(arith::residue_row(parse_term("-x - 1"), "x", 3).values, ints({2, 1, 0}));
  EXPECT_EQ(arith::residue_row(parse_term("x^(2 + 1)"), "x", 7).values, ints({0, 1, 1, 6, 1, 6, 6}));
}

TEST(ResidueImage, Examples) {
  EXPECT_EQ(image("k^2", "k", 7), (ResidueSet{7, ints({0, 1, 2, 4})}));
  EXPECT_EQ(image("q^3", "q", 7), (ResidueSet{7, ints({0, 1, 6})}));
  EXPECT_EQ(image("2*x", "x", 2), (ResidueSet{2, ints({0})}));
}

TEST(Intersect, Examples) {
  const ResidueSet squares = image("k^2", "k", 7);
  const ResidueSet cubes = image("q^3", "q", 7);
  EXPECT_EQ(arith::intersect(squares, cubes), (ResidueSet{7, ints({0, 1})}));
  EXPECT_EQ(arith::intersect(squares, squares), squares);
  EXPECT_EQ(arith::intersect(squares, ResidueSet{7, {}}), (ResidueSet{7, {}}));
  EXPECT_THROW(arith::intersect(squares, image("x", "x", 5)), std::invalid_argument);
  EXPECT_EQ(arith::to_string(arith::intersect(squares, cubes)), "{0, 1}");
  EXPECT_EQ(arith::to_string(ResidueSet{7, {}}), "{}");
}

TEST(ResidueRow, RejectsExpressionsOutsideThePolynomialFragment) {
  struct Case {
    const char* expr;
    const char* names;
  };
  for (const auto& [expr, names] : {Case{"x div 2", "'div'"}, Case{"x mod 3", "'mod'"}, Case{"fact(x)", "fact()"},
                                    Case{"binom(x, 2)", "binom()"}, Case{"sum(i, 0, x, i)", "sum()"},
                                    Case{"x + y", "variable 'y'"}, Case{"x^x", "a non-constant exponent"},
                                    Case{"gcd(x, 4)", "gcd()"}, Case{"abs(x)", "abs()"}}) {
    try {
      arith::residue_row(parse_term(expr), "x", 7);
      ADD_FAILURE() << expr << " was accepted";
    } catch (const arith::dsl::ParseError& e) {
      EXPECT_EQ(e.kind(), arith::dsl::ErrorKind::NotResidueCompatible) << expr;
      EXPECT_NE(std::string(e.what()).find(names), std::string::npos) << e.what();
    }
  }
}

TEST(ResidueRow, DiagnosticPointsAtTheOffendingNode) {
  try {
    arith::residue_row(parse_term("x^2 + x div 2"), "x", 7);
    FAIL();
  } catch (const arith::dsl::ParseError& e) {
    EXPECT_EQ(e.span().column, 7);
  }
}

TEST(ResidueRow, ModulusBounds) {
  EXPECT_THROW(arith::residue_row(parse_term("x"), "x", 1), arith::DomainError);
  EXPECT_THROW(arith::residue_row(parse_term("x"), "x", 0), arith::DomainError);
  EXPECT_THROW(arith::residue_row(parse_term("x"), "x", -7), arith::DomainError);
  EXPECT_THROW(arith::residue_row(parse_term("x"), "x", 1'000'001), arith::DomainError);
  EXPECT_EQ(arith::residue_row(parse_term("x^2"), "x", 2).values, ints({0, 1}));
}

TEST(ResidueRow, NegativeConstantExponentIsADomainError) {
  EXPECT_THROW(arith::residue_row(parse_term("x^(0 - 1)"), "x", 7), arith::dsl::EvalError);
}

TEST(ResidueRow, SoundForEveryX) {
  for (const char* text : {"x^2", "x^3", "3*x^2 - 5*x + 11", "(x + 1)^7 - x", "-x^5", "x^100 + 2"}) {
    const auto expr = parse_term(text);
    for (int m : {2, 3, 7, 10, 13, 64}) {
      const auto row = arith::residue_row(expr, "x", m);
      ASSERT_EQ(row.values.size(), static_cast<std::size_t>(m));
      for (int x = 0; x <= 500; ++x) {
        const Int direct = arith::floor_mod(arith::dsl::eval_term(expr, arith::dsl::Env{{"x", Int(x)}}), m);
        ASSERT_EQ(direct, row.values[static_cast<std::size_t>(x % m)]) << text << " mod " << m << " at x=" << x;
      }
      // Completeness: each member of the image is attained.
      for (const Int& v : arith::image_of(row).members) {
        ASSERT_GE(v, 0);
        ASSERT_LT(v, m);
        ASSERT_NE(std::find(row.values.begin(), row.values.end(), v), row.values.end());
      }
    }
  }
}

TEST(ResidueRow, SquaresEqualToCubesAreSixthPowers) {
  const ResidueSet both = arith::intersect(image("k^2", "k", 7), image("q^3", "q", 7));
  std::set<Int> seen;
  for (int k = 0; k <= 100; ++k)
    for (int q = 0; q <= 100; ++q)
      if (k * k == q * q * q) seen.insert(arith::floor_mod(k * k, 7));
  for (int t = 0; t <= 10; ++t) {
    const Int sixth = arith::pow(Int(t), 6u);
    EXPECT_NE(std::find(both.members.begin(), both.members.end(), arith::floor_mod(sixth, 7)), both.members.end());
  }
  for (const Int& r : seen) EXPECT_TRUE(r == 0 || r == 1);
  EXPECT_FALSE(seen.empty());
}

TEST(RenderTable, TwoRows) {
  const std::vector rows{arith::residue_row(parse_term("k^2"), "k", 7), arith::residue_row(parse_term("q^3"), "q", 7)};
  EXPECT_EQ(arith::render_table(rows, 7),
            "k, q        0 1 2 3 4 5 6\n"
            "k^2 (mod 7) 0 1 4 2 2 4 1\n"
            "q^3 (mod 7) 0 1 1 6 1 6 6\n");
}

TEST(RenderTable, SingleRowAndEmpty) {
  const std::vector rows{arith::residue_row(parse_term("x"), "x", 3)};
  EXPECT_EQ(arith::render_table(rows, 3), "x         0 1 2\nx (mod 3) 0 1 2\n");
  EXPECT_EQ(arith::render_table({}, 3), "0 1 2\n");
}

TEST(RenderTable, AlignsWideResidues) {
  const std::vector rows{arith::residue_row(parse_term("x^2"), "x", 11)};
  EXPECT_EQ(arith::render_table(rows, 11),
            "x             0  1  2  3  4  5  6  7  8  9 10\n"
            "x^2 (mod 11)  0  1  4  9  5  3  3  5  9  4  1\n");
}

TEST(RenderTable, RejectsMixedModuli) {
  const std::vector rows{arith::residue_row(parse_term("x"), "x", 3), arith::residue_row(parse_term("x"), "x", 5)};
  EXPECT_THROW(arith::render_table(rows, 3), std::invalid_argument);
}
