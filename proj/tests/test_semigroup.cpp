#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "sgag/errors.hpp"
#include "sgag/semigroup.hpp"

using sgag::NumericalSemigroup;
using sgag::Value;
using Gens = std::vector<Value>;

TEST(Semigroup, H357) {
  const auto h = NumericalSemigroup::from_generators({3, 5, 7});
  EXPECT_EQ(h.frobenius(), 4);
  EXPECT_EQ(h.conductor(), 5);
  EXPECT_EQ(h.gaps(), (Gens{1, 2, 4}));
  EXPECT_EQ(h.genus(), 3);
  EXPECT_EQ(h.pseudo_frobenius(), (Gens{2, 4}));
  EXPECT_EQ(h.type(), 2);
  EXPECT_EQ(h.multiplicity(), 3);
  EXPECT_EQ(h.embedding_dimension(), 3);
  EXPECT_EQ(h.to_string(), "<3,5,7>");
}

TEST(Semigroup, Naturals) {
  const auto h = NumericalSemigroup::from_generators({1});
  EXPECT_TRUE(h.is_dvr());
  EXPECT_EQ(h.frobenius(), -1);
  EXPECT_EQ(h.conductor(), 0);
  EXPECT_EQ(h.genus(), 0);
  EXPECT_EQ(h.pseudo_frobenius(), (Gens{-1}));
  EXPECT_EQ(h.type(), 1);
  EXPECT_TRUE(sgag::is_symmetric(h));
  EXPECT_TRUE(sgag::is_almost_symmetric(h));
  EXPECT_EQ(h.maximal_ideal(), sgag::CofiniteSet::from(1));
}

TEST(Semigroup, H378) {
  const auto h = NumericalSemigroup::from_generators({3, 7, 8});
  EXPECT_EQ(h.frobenius(), 5);
  EXPECT_EQ(h.conductor(), 6);
  EXPECT_EQ(h.gaps(), (Gens{1, 2, 4, 5}));
  EXPECT_EQ(h.genus(), 4);
}

TEST(Semigroup, RedundantGeneratorsDropped) {
  const auto h = NumericalSemigroup::from_generators({6, 3, 5, 10, 3});
  EXPECT_EQ(h.minimal_generators(), (Gens{3, 5}));
  EXPECT_EQ(h, NumericalSemigroup::from_generators({3, 5}));
}

TEST(Semigroup, RejectsBadGenerators) {
  EXPECT_THROW(NumericalSemigroup::from_generators({4, 6}), sgag::NotNumericalSemigroup);
  EXPECT_THROW(NumericalSemigroup::from_generators({0, 3}), sgag::NotNumericalSemigroup);
  EXPECT_THROW(NumericalSemigroup::from_generators({-1, 3}), sgag::NotNumericalSemigroup);
  EXPECT_THROW(NumericalSemigroup::from_generators(std::span<const Value>{}), sgag::DomainError);
}

TEST(Semigroup, FromElementsValidates) {
  using sgag::CofiniteSet;
  EXPECT_EQ(NumericalSemigroup::from_elements(CofiniteSet({0, 3}, 5)), NumericalSemigroup::from_generators({3, 5, 7}));
  EXPECT_THROW(NumericalSemigroup::from_elements(CofiniteSet({0, 3}, 7)), sgag::DomainError);  // 6 missing
  EXPECT_THROW(NumericalSemigroup::from_elements(CofiniteSet({3}, 5)), sgag::DomainError);     // no 0
  EXPECT_THROW(NumericalSemigroup::from_elements(CofiniteSet::finite({0, 1})), sgag::DomainError);
}

TEST(Semigroup, Symmetry) {
  EXPECT_TRUE(sgag::is_symmetric(NumericalSemigroup::from_generators({3, 5})));
  EXPECT_FALSE(sgag::is_symmetric(NumericalSemigroup::from_generators({3, 4, 5})));
}

TEST(Semigroup, AlmostSymmetry) {
  EXPECT_TRUE(sgag::is_almost_symmetric(NumericalSemigroup::from_generators({3, 4, 5})));
  EXPECT_FALSE(sgag::is_almost_symmetric(NumericalSemigroup::from_generators({3, 7, 8})));
  EXPECT_TRUE(sgag::is_almost_symmetric(NumericalSemigroup::from_generators({4, 7, 9})));
}

TEST(Semigroup, AperyWithRespectToOtherElement) {
  const auto h = NumericalSemigroup::from_generators({3, 7, 8});
  EXPECT_EQ(h.apery(), (Gens{0, 7, 8}));
  EXPECT_EQ(h.apery(7), (Gens{0, 8, 9, 3, 11, 12, 6}));
  EXPECT_THROW(h.apery(5), sgag::DomainError);
}

TEST(Semigroup, AgreesWithBruteForce) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const auto gens = oracle::random_generators(rng);
    const auto h = NumericalSemigroup::from_generators(gens);
    ASSERT_EQ(h.gaps(), oracle::gaps(gens));
    ASSERT_EQ(h.pseudo_frobenius(), oracle::pseudo_frobenius(gens));
    const auto w = oracle::semigroup_window(gens, h.conductor() + 30);
    for (Value x = 0; x < static_cast<Value>(w.size()); ++x) ASSERT_EQ(h.contains(x), w[x]);
    // Minimal generators generate H and none is redundant.
    const auto& mg = h.minimal_generators();
    ASSERT_EQ(oracle::gaps(mg), h.gaps());
    for (std::size_t i = 0; i < mg.size(); ++i) {
      Gens rest = mg;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      ASSERT_FALSE(!rest.empty() && oracle::semigroup_window(rest, mg[i] + 1)[mg[i]]);
    }
  }
}

TEST(Semigroup, ParseGenerators) {
  EXPECT_EQ(sgag::parse_generators("3,7,8"), (Gens{3, 7, 8}));
  EXPECT_EQ(sgag::parse_generators("<3, 7, 8>"), (Gens{3, 7, 8}));
  EXPECT_EQ(sgag::parse_generators("⟨3,7,8⟩"), (Gens{3, 7, 8}));
  EXPECT_THROW(sgag::parse_generators(""), sgag::DomainError);
  EXPECT_THROW(sgag::parse_generators("3,x"), sgag::DomainError);
  EXPECT_THROW(sgag::parse_generators("3,,4"), sgag::DomainError);
}

TEST(Enumeration, GenusZero) {
  const auto all = sgag::semigroups_up_to_genus(0);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_TRUE(all[0].is_dvr());
}

TEST(Enumeration, CensusMatchesBruteForce) {
  const auto brute = oracle::genus_census(7);
  EXPECT_EQ(brute, (std::vector<std::int64_t>{1, 1, 2, 4, 7, 12, 23, 39}));
  std::vector<std::int64_t> counts(8, 0);
  sgag::enumerate_by_genus(7, [&](const NumericalSemigroup& h) { ++counts[h.genus()]; });
  EXPECT_EQ(counts, brute);
}

TEST(Enumeration, DistinctAndOrdered) {
  const auto all = sgag::semigroups_up_to_genus(9);
  std::set<Gens> seen;
  for (std::size_t i = 0; i < all.size(); ++i) {
    ASSERT_TRUE(seen.insert(all[i].gaps()).second);
    if (i > 0) {
      const auto& p = all[i - 1];
      const auto& q = all[i];
      ASSERT_TRUE(p.genus() < q.genus() || (p.genus() == q.genus() && p.gaps() < q.gaps()));
    }
  }
}

TEST(Invariants, ScanToGenus10) {
  sgag::enumerate_by_genus(10, [](const NumericalSemigroup& h) {
    const Value f = h.frobenius();
    const auto& pf = h.pseudo_frobenius();
    const auto& gaps = h.gaps();
    if (!h.is_dvr()) {
      ASSERT_LE(h.type(), h.multiplicity() - 1);
      ASSERT_LE(h.embedding_dimension(), h.multiplicity());
      ASSERT_TRUE(std::find(pf.begin(), pf.end(), f) != pf.end());
      for (Value x : pf) ASSERT_TRUE(std::binary_search(gaps.begin(), gaps.end(), x));
    }
    const bool sym = sgag::is_symmetric(h);
    ASSERT_EQ(sym, h.type() == 1) << h.to_string();
    ASSERT_EQ(sym, (f % 2 != 0 || f == -1) && 2 * h.genus() == f + 1) << h.to_string();
    const auto& ap = h.apery();
    const Value e = h.multiplicity();
    ASSERT_EQ(static_cast<Value>(ap.size()), e);
    std::set<Value> residues;
    for (Value w : ap) residues.insert(w % e);
    ASSERT_EQ(static_cast<Value>(residues.size()), e);
    ASSERT_EQ(*std::max_element(ap.begin(), ap.end()), f + e);
  });
}
