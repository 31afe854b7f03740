#include "oracles.hpp"

#include "ulat/finite_lattice.hpp"
#include "ulat/lattice_io.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

namespace {

using namespace ulat;

std::string read_data(const std::string& file) {
  std::ifstream in(std::string(ULAT_TEST_DATA_DIR) + "/" + file);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

TEST(Builders, DivisorLatticeUsesGcdAndLcm) {
  const auto D = divisor_lattice(60);
  EXPECT_EQ(D.size(), 12u);
  for (const auto x : D.elements())
    for (const auto y : D.elements()) {
      EXPECT_EQ(oracle::value_of(D, D.meet(x, y)), oracle::gcd_of(oracle::value_of(D, x), oracle::value_of(D, y)));
      EXPECT_EQ(oracle::value_of(D, D.join(x, y)), oracle::lcm_of(oracle::value_of(D, x), oracle::value_of(D, y)));
    }
  EXPECT_TRUE(D.info().distributive);
  EXPECT_EQ(D.element_name(*D.bottom()), "1");
  EXPECT_EQ(D.element_name(*D.top()), "60");
}

TEST(Builders, ChainUsesMinAndMax) {
  const auto C = chain_lattice(5);
  for (const auto x : C.elements())
    for (const auto y : C.elements()) {
      EXPECT_EQ(oracle::value_of(C, C.meet(x, y)), std::min(oracle::value_of(C, x), oracle::value_of(C, y)));
      EXPECT_EQ(oracle::value_of(C, C.join(x, y)), std::max(oracle::value_of(C, x), oracle::value_of(C, y)));
    }
}

TEST(Builders, PowersetIndexIsBitmask) {
  const auto P = powerset_lattice(4);
  EXPECT_EQ(P.size(), 16u);
  for (std::uint32_t a = 0; a < 16; ++a)
    for (std::uint32_t b = 0; b < 16; ++b) {
      EXPECT_EQ(P.meet(P.element(a), P.element(b)).index, a & b);
      EXPECT_EQ(P.join(P.element(a), P.element(b)).index, a | b);
    }
  EXPECT_THROW(powerset_lattice(7), std::invalid_argument);
}

TEST(Builders, PentagonShape) {
  const auto N5 = pentagon_lattice();
  EXPECT_TRUE(leq(N5, N5.at("a"), N5.at("b")));
  EXPECT_EQ(N5.join(N5.at("a"), N5.at("c")), N5.at("1"));
  EXPECT_EQ(N5.meet(N5.at("b"), N5.at("c")), N5.at("0"));
  EXPECT_EQ(N5.covers().size(), 5u);
  EXPECT_FALSE(N5.info().distributive);
  EXPECT_TRUE(N5.info().bounded);
}

TEST(Builders, FromOrderClosesTransitively) {
  // 0 <= a <= 1 given without the 0 <= 1 edge.
  std::vector<std::vector<bool>> order(3, std::vector<bool>(3, false));
  order[0][1] = true;
  order[1][2] = true;
  const auto L = FiniteLattice::from_order("chain", {"0", "a", "1"}, order);
  EXPECT_TRUE(leq(L, L.at("0"), L.at("1")));
  EXPECT_EQ(L.join(L.at("0"), L.at("1")), L.at("1"));
}

TEST(Builders, RejectsMissingJoin) {
  // Two maximal elements: a and b have no upper bound.
  try {
    FiniteLattice::from_covers("vee", {"0", "a", "b"}, {{0, 1}, {0, 2}});
    FAIL() << "expected NotALatticeError";
  } catch (const NotALatticeError& e) {
    EXPECT_TRUE((e.first() == "a" && e.second() == "b") || (e.first() == "b" && e.second() == "a"));
  }
}

TEST(Builders, RejectsCycles) {
  std::vector<std::vector<bool>> order(2, std::vector<bool>(2, true));
  EXPECT_THROW(FiniteLattice::from_order("loop", {"x", "y"}, order), NotALatticeError);
}

TEST(Builders, UnknownNamesThrow) {
  const auto C = chain_lattice(3);
  EXPECT_THROW(C.at("7"), std::out_of_range);
  EXPECT_FALSE(C.find("7"));
  EXPECT_THROW(C.element_name(FiniteLattice::Element{9}), std::out_of_range);
}

TEST(LatticeIo, LoadsPowersetDocument) {
  const auto L = load_finite_lattice(read_data("powerset3.json"));
  EXPECT_EQ(L.size(), 8u);
  EXPECT_TRUE(check_distributive(L).distributive);
  EXPECT_TRUE(L.info().bounded);
  EXPECT_EQ(L.element_name(*L.bottom()), "{}");
}

TEST(LatticeIo, LoadsPentagonAsNondistributive) {
  const auto L = load_finite_lattice(read_data("n5.json"));
  EXPECT_EQ(L.size(), 5u);
  EXPECT_FALSE(check_distributive(L).distributive);
}

TEST(LatticeIo, RejectsDocumentWithoutJoin) {
  EXPECT_THROW(load_finite_lattice(read_data("not_a_lattice.json")), NotALatticeError);
}

TEST(LatticeIo, RejectsMalformedJson) {
  EXPECT_THROW(load_finite_lattice("{\"elements\": [\"a\"], \"covers\": [[0, 3]]}"), std::invalid_argument);
  EXPECT_THROW(load_finite_lattice("not json"), std::invalid_argument);
}

TEST(LatticeIo, RoundTripPreservesTables) {
  for (const auto& L : {divisor_lattice(60), pentagon_lattice(), powerset_lattice(3), diamond_lattice()}) {
    const auto back = load_finite_lattice(finite_lattice_to_json(L));
    EXPECT_EQ(back, L) << L.name();
    EXPECT_EQ(back.name(), L.name());
  }
}

}  // namespace
