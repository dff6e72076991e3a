#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "spg/error.hpp"
#include "spg/group.hpp"

using namespace spg;

namespace {

std::vector<GroupSpec> small_catalog() {
  std::vector<GroupSpec> out;
  for (std::size_t n = 1; n <= 20; ++n) out.push_back(GroupSpec::cyclic(n));
  out.push_back(GroupSpec::direct_product({2, 2}));
  out.push_back(GroupSpec::direct_product({2, 3}));
  out.push_back(GroupSpec::direct_product({2, 2, 2}));
  out.push_back(GroupSpec::direct_product({3, 3}));
  out.push_back(GroupSpec::direct_product({2, 4}));
  for (std::size_t m = 1; m <= 8; ++m) out.push_back(GroupSpec::dihedral(m));
  out.push_back(load_cayley_table(oracle::q8_document()));
  out.push_back(load_cayley_table(oracle::s3_document()));
  return out;
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected spg::Error";
  return Errc::InvalidArgument;
}

}  // namespace

TEST(GroupOp, CyclicAddition) {
  const auto g = GroupSpec::cyclic(6);
  EXPECT_EQ(op(g, 4, 5), 3u);
  EXPECT_THROW(op(g, 6, 0), Error);
  EXPECT_EQ(code_of([&] { op(g, 0, 7); }), Errc::IndexOutOfRange);
}

TEST(GroupOp, IdentityAndAssociativity) {
  for (const auto& g : small_catalog()) {
    const auto n = g.order();
    for (Element a = 0; a < n; ++a) {
      EXPECT_EQ(op(g, 0, a), a) << g.describe();
      EXPECT_EQ(op(g, a, 0), a) << g.describe();
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          ASSERT_EQ(op(g, op(g, a, b), c), op(g, a, op(g, b, c))) << g.describe();
    }
  }
}

TEST(GroupOp, DihedralIsNoncommutative) {
  const auto g = GroupSpec::dihedral(3);
  // r = 1, s = 3
  EXPECT_EQ(op(g, 1, 3), 5u);  // r s = s r^-1 = s r^2
  EXPECT_EQ(op(g, 3, 1), 4u);  // s r
  EXPECT_NE(op(g, 1, 3), op(g, 3, 1));
  EXPECT_EQ(op(g, 3, 3), 0u);
  EXPECT_EQ(power(g, 1, 3), 0u);
}

TEST(GroupPower, Examples) {
  EXPECT_EQ(power(GroupSpec::cyclic(4), 2, 2), 0u);
  EXPECT_EQ(power(GroupSpec::cyclic(12), 5, 7), 11u);
  for (const auto& g : small_catalog())
    for (Element a = 0; a < g.order(); ++a) {
      EXPECT_EQ(power(g, a, 1), a);
      EXPECT_EQ(power(g, a, 0), 0u);
    }
}

TEST(GroupPower, SquaringMatchesIteration) {
  for (const auto& g : small_catalog())
    for (Element a = 0; a < g.order(); ++a) {
      Element x = 0;
      for (std::uint64_t k = 0; k <= 2 * g.order() + 1; ++k) {
        ASSERT_EQ(power(g, a, k), x) << g.describe() << " a=" << a << " k=" << k;
        x = op(g, x, a);
      }
    }
}

TEST(GroupPower, LagrangeOverFullSweep) {
  std::vector<GroupSpec> groups;
  for (std::size_t n = 1; n <= 60; ++n) groups.push_back(GroupSpec::cyclic(n));
  for (std::size_t a = 2; a <= 6; ++a)
    for (std::size_t b = a; a * b <= 36; ++b) groups.push_back(GroupSpec::direct_product({a, b}));
  for (std::size_t m = 1; m <= 12; ++m) groups.push_back(GroupSpec::dihedral(m));
  for (const auto& g : groups)
    for (Element a = 0; a < g.order(); ++a) {
      const auto ord = element_order(g, a);
      EXPECT_EQ(power(g, a, ord), 0u);
      EXPECT_EQ(g.order() % ord, 0u) << g.describe();
    }
}

TEST(GroupCyclic, Examples) {
  EXPECT_TRUE(is_cyclic(GroupSpec::cyclic(8)));
  EXPECT_FALSE(is_cyclic(GroupSpec::direct_product({2, 2})));
  EXPECT_TRUE(is_cyclic(GroupSpec::direct_product({2, 3})));
  EXPECT_EQ(element_order(GroupSpec::direct_product({2, 3}), 4), 6u);  // (1,1)
  EXPECT_FALSE(is_cyclic(GroupSpec::dihedral(3)));
  EXPECT_TRUE(is_cyclic(GroupSpec::dihedral(1)));
}

TEST(GroupCyclic, ProductsCyclicIffCoprime) {
  for (std::size_t n = 1; n <= 40; ++n) EXPECT_TRUE(is_cyclic(GroupSpec::cyclic(n)));
  for (std::size_t a = 1; a <= 20; ++a)
    for (std::size_t b = 1; b <= 20; ++b)
      EXPECT_EQ(is_cyclic(GroupSpec::direct_product({a, b})), std::gcd(a, b) == 1) << a << "," << b;
}

TEST(NumberTheory, Totient) {
  EXPECT_EQ(totient(1), 1u);
  EXPECT_EQ(totient(7), 6u);
  EXPECT_EQ(totient(12), 4u);
  EXPECT_EQ(code_of([] { totient(0); }), Errc::InvalidArgument);
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    ASSERT_EQ(totient(n), oracle::totient_by_gcd(n)) << n;
    if (is_prime(n)) ASSERT_EQ(totient(n), n - 1);
  }
}

TEST(NumberTheory, Primality) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(91));
  EXPECT_FALSE(is_prime(0));
  // sieve oracle
  std::vector<bool> sieve(1001, true);
  sieve[0] = sieve[1] = false;
  for (std::size_t p = 2; p * p <= 1000; ++p)
    if (sieve[p])
      for (std::size_t k = p * p; k <= 1000; k += p) sieve[k] = false;
  for (std::uint64_t n = 0; n <= 1000; ++n) EXPECT_EQ(is_prime(n), sieve[n]) << n;
}

TEST(Cayley, AcceptsQ8AndS3) {
  const auto q8 = load_cayley_table(oracle::q8_document());
  EXPECT_EQ(q8.order(), 8u);
  EXPECT_FALSE(is_cyclic(q8));
  EXPECT_EQ(q8.label(0), "1");
  EXPECT_EQ(q8.label(4), "-1");
  const auto s3 = load_cayley_table(oracle::s3_document());
  EXPECT_FALSE(is_cyclic(s3));
}

TEST(Cayley, TwoElementTable) {
  const auto g = load_cayley_table({{"order", 2}, {"table", {{0, 1}, {1, 0}}}});
  EXPECT_TRUE(is_cyclic(g));
  EXPECT_EQ(op(g, 1, 1), 0u);
}

TEST(Cayley, RelabelsIdentityToZero) {
  // Z3 where element 2 is the identity.
  const nlohmann::json doc{{"order", 3},
                           {"table", {{1, 2, 0}, {2, 0, 1}, {0, 1, 2}}},
                           {"labels", {"a", "b", "e"}}};
  const auto g = load_cayley_table(doc);
  EXPECT_EQ(g.label(0), "e");
  EXPECT_EQ(g.label(2), "a");
  for (Element x = 0; x < 3; ++x) EXPECT_EQ(op(g, 0, x), x);
  EXPECT_TRUE(is_cyclic(g));
}

TEST(Cayley, ErrorKinds) {
  auto expect_cayley = [](const nlohmann::json& doc, Errc code, long row, long col) {
    try {
      load_cayley_table(doc);
      ADD_FAILURE() << "accepted " << doc.dump();
    } catch (const CayleyError& e) {
      EXPECT_EQ(e.code(), code) << e.what();
      EXPECT_EQ(e.row(), row) << e.what();
      EXPECT_EQ(e.col(), col) << e.what();
    }
  };
  expect_cayley({{"order", 2}, {"table", nlohmann::json::array({nlohmann::json::array({0, 1})})}},
                Errc::CayleyShape, -1, -1);
  expect_cayley({{"order", 2}, {"table", {{0, 1}, {1}}}}, Errc::CayleyShape, 1, -1);
  expect_cayley({{"order", 2}, {"table", {{0, 1}, {1, 2}}}}, Errc::CayleyShape, 1, 1);
  expect_cayley({{"order", 0}, {"table", nlohmann::json::array()}}, Errc::CayleyShape, -1, -1);
  expect_cayley({{"order", 3}, {"table", {{0, 1, 1}, {1, 2, 0}, {2, 0, 1}}}}, Errc::CayleyNotLatin, 0, 2);
  // Latin square with no identity element.
  expect_cayley({{"order", 3}, {"table", {{1, 2, 0}, {0, 1, 2}, {2, 0, 1}}}}, Errc::CayleyNoIdentity, -1, -1);
  // Loop of order 5 with identity but not associative.
  expect_cayley({{"order", 5},
                 {"table", {{0, 1, 2, 3, 4},
                            {1, 0, 3, 4, 2},
                            {2, 4, 0, 1, 3},
                            {3, 2, 4, 0, 1},
                            {4, 3, 1, 2, 0}}}},
                Errc::CayleyNotAssociative, 1, 1);
  EXPECT_THROW(load_cayley_table(nlohmann::json::array()), CayleyError);
}

TEST(Cayley, RoundTripsStructuralGroups) {
  for (const auto& g : small_catalog()) {
    const auto h = load_cayley_table(to_cayley_json(g));
    ASSERT_EQ(h.order(), g.order());
    for (Element a = 0; a < g.order(); ++a)
      for (Element b = 0; b < g.order(); ++b) ASSERT_EQ(op(h, a, b), op(g, a, b));
    EXPECT_EQ(is_cyclic(h), is_cyclic(g));
  }
}

TEST(Cayley, RejectsEverySingleEntryMutation) {
  std::mt19937 rng(20261015);
  const auto catalog = small_catalog();
  int tried = 0;
  for (int i = 0; i < 100; ++i) {
    const auto& g = catalog[rng() % catalog.size()];
    const std::size_t n = g.order();
    if (n < 2) continue;
    auto doc = to_cayley_json(g);
    const std::size_t r = rng() % n, c = rng() % n;
    const std::size_t old = doc["table"][r][c].get<std::size_t>();
    doc["table"][r][c] = (old + 1 + rng() % (n - 1)) % n;
    EXPECT_THROW(load_cayley_table(doc), CayleyError) << g.describe() << " (" << r << "," << c << ")";
    ++tried;
  }
  EXPECT_GT(tried, 80);
}

TEST(GroupSpecParse, Grammar) {
  EXPECT_EQ(parse_group_spec("cyclic:4").order(), 4u);
  EXPECT_EQ(parse_group_spec("product:2,2").order(), 4u);
  EXPECT_EQ(parse_group_spec("product:2,3,5").order(), 30u);
  EXPECT_EQ(parse_group_spec("dihedral:3").order(), 6u);
  for (const char* bad : {"cyclic:0", "cyclic:", "cyclic:-3", "cyclic:4x", "product:2", "product:2,",
                          "product:2,,3", "dihedral:0", "sym:3", "cyclic4", "cayley:"})
    EXPECT_EQ(code_of([&] { parse_group_spec(bad); }), Errc::ParseError) << bad;
  EXPECT_EQ(code_of([] { parse_group_spec("cayley:/nonexistent/file.json"); }), Errc::ParseError);
}
