#include <gtest/gtest.h>

#include <array>

#include "oracles.hpp"
#include "sgag/errors.hpp"
#include "sgag/herzog.hpp"
#include "sgag/ideal.hpp"
#include "sgag/scan.hpp"

using sgag::NumericalSemigroup;
using sgag::Value;

namespace {

NumericalSemigroup sg(std::initializer_list<Value> g) { return NumericalSemigroup::from_generators(g); }

struct Relation {
  Value c, x, y;  // c·a_i = x·a_j + y·a_k
};

// Least c with c·a_i = x·a_j + y·a_k, by exhaustive search.
Relation solve(Value ai, Value aj, Value ak) {
  for (Value c = 1;; ++c)
    for (Value x = 0; x * aj <= c * ai; ++x)
      if ((c * ai - x * aj) % ak == 0) return {c, x, (c * ai - x * aj) / ak};
}

}  // namespace

TEST(Herzog, H378) {
  const auto hd = sgag::herzog_matrix(sg({3, 7, 8}));
  EXPECT_EQ((std::array<Value, 3>{hd.alpha, hd.beta, hd.gamma}), (std::array<Value, 3>{2, 1, 1}));
  EXPECT_EQ((std::array<Value, 3>{hd.alpha_p, hd.beta_p, hd.gamma_p}), (std::array<Value, 3>{3, 1, 1}));
  EXPECT_EQ(hd.ell, 22);
  EXPECT_EQ(hd.n, 23);
  EXPECT_EQ(hd.b(), 1);
  EXPECT_FALSE(sgag::ag_by_matrix(hd));
  EXPECT_NO_THROW(sgag::check_homogeneity(hd));
}

TEST(Herzog, H479) {
  const auto hd = sgag::herzog_matrix(sg({4, 7, 9}));
  EXPECT_EQ((std::array<Value, 3>{hd.alpha, hd.beta, hd.gamma}), (std::array<Value, 3>{3, 2, 1}));
  EXPECT_EQ((std::array<Value, 3>{hd.alpha_p, hd.beta_p, hd.gamma_p}), (std::array<Value, 3>{1, 1, 1}));
  EXPECT_EQ(hd.b(), 5);
  EXPECT_TRUE(sgag::ag_by_matrix(hd));
}

TEST(Herzog, AgByMatrixExamples) {
  EXPECT_TRUE(sgag::ag_by_matrix(sgag::herzog_matrix(sg({4, 11, 13}))));
  const auto hd = sgag::herzog_matrix(sg({3, 4, 5}));
  EXPECT_TRUE(sgag::ag_by_matrix(hd));
  // 3·3 = 4+5, 2·4 = 3+5, 2·5 = 2·3+4: the first row is (1,1,1).
  EXPECT_EQ((std::array<Value, 3>{hd.alpha, hd.beta, hd.gamma}), (std::array<Value, 3>{1, 1, 1}));
  EXPECT_EQ((std::array<Value, 3>{hd.alpha_p, hd.beta_p, hd.gamma_p}), (std::array<Value, 3>{2, 1, 1}));
  EXPECT_TRUE(sgag::is_almost_symmetric(sgag::NumericalSemigroup::from_generators({3, 4, 5})));
}

TEST(Herzog, ErrorPaths) {
  EXPECT_THROW(sgag::herzog_matrix(sg({4, 5, 6})), sgag::DomainError);  // symmetric
  EXPECT_THROW(sgag::herzog_matrix(sg({3, 5})), sgag::DomainError);
  EXPECT_THROW(sgag::herzog_matrix(sg({4, 5, 6, 7})), sgag::DomainError);
  auto hd = sgag::herzog_matrix(sg({3, 7, 8}));
  hd.alpha_p = 2;  // X^2 in place of X^3 breaks homogeneity
  EXPECT_THROW(sgag::check_homogeneity(hd), sgag::InternalError);
}

TEST(Herzog, ClosedForms) {
  const auto h = sg({3, 7, 8});
  const auto cf = sgag::closed_form_invariants(sgag::herzog_matrix(h), h);
  EXPECT_EQ(cf.ell_i_over_q, 2);
  EXPECT_EQ(cf.e1, 4);
  EXPECT_EQ(cf.c, 6);
  EXPECT_EQ(cf.b, 1);

  const auto h4 = sg({4, 5, 11});  // a = 4 member of <a, a+1, a²-a-1>
  EXPECT_EQ(sgag::closed_form_invariants(sgag::herzog_matrix(h4), h4).e1, 5);
}

// For <4,4q+3,4q+5> the canonical pair is (t^c, t^{c+b}) with c the
// conductor 8q+3 and b = 4q+1.
TEST(Herzog, FamilyFourQ) {
  for (Value q = 1; q <= 6; ++q) {
    const auto h = sg({4, 4 * q + 3, 4 * q + 5});
    const auto hd = sgag::herzog_matrix(h);
    const auto cf = sgag::closed_form_invariants(hd, h);
    EXPECT_EQ(hd.alpha, 2 * q + 1);
    EXPECT_EQ(hd.beta, 2);
    EXPECT_EQ(cf.b, 4 * q + 1);
    EXPECT_EQ(cf.c, h.conductor());
    EXPECT_EQ(h.conductor(), 8 * q + 3);
    EXPECT_TRUE(h.contains(4 * q + 3) && !h.contains(8 * q + 2));
    const auto [i, qq] = sgag::integral_canonical_pair(h);
    EXPECT_EQ(i, sgag::RelativeIdeal::generated_by(h, {cf.c, cf.c + cf.b}));
  }
}

// Exponents agree with a brute-force solve of the three minimal relations,
// and all homogeneity identities hold on the whole family a3 <= 40.
TEST(Herzog, AgreesWithExhaustiveSolve) {
  for (const auto& h : sgag::three_generated_nonsymmetric(40)) {
    const auto& g = h.minimal_generators();
    const Value a1 = g[0], a2 = g[1], a3 = g[2];
    const auto hd = sgag::herzog_matrix(h);
    ASSERT_NO_THROW(sgag::check_homogeneity(hd));
    const auto r1 = solve(a1, a2, a3);  // (α+α')a1 = β'a2 + γa3
    const auto r2 = solve(a2, a1, a3);  // (β+β')a2 = αa1 + γ'a3
    const auto r3 = solve(a3, a1, a2);  // (γ+γ')a3 = α'a1 + βa2
    ASSERT_EQ(hd.alpha + hd.alpha_p, r1.c) << h.to_string();
    ASSERT_EQ(hd.beta_p, r1.x);
    ASSERT_EQ(hd.gamma, r1.y);
    ASSERT_EQ(hd.beta + hd.beta_p, r2.c);
    ASSERT_EQ(hd.alpha, r2.x);
    ASSERT_EQ(hd.gamma_p, r2.y);
    ASSERT_EQ(hd.gamma + hd.gamma_p, r3.c);
    ASSERT_EQ(hd.alpha_p, r3.x);
    ASSERT_EQ(hd.beta, r3.y);
    ASSERT_NE(hd.ell, hd.n);
    ASSERT_EQ(hd.n - hd.ell, a2 * hd.beta_p - a1 * hd.alpha);
    ASSERT_EQ(hd.n - hd.ell, a3 * hd.gamma_p - a2 * hd.beta);
    ASSERT_EQ(hd.n - hd.ell, a1 * hd.alpha_p - a3 * hd.gamma);
  }
}

TEST(Herzog, NonsymmetricFamilyIsComplete) {
  const auto family = sgag::three_generated_nonsymmetric(20);
  std::int64_t brute = 0;
  for (Value a1 = 2; a1 <= 20; ++a1)
    for (Value a2 = a1 + 1; a2 <= 20; ++a2)
      for (Value a3 = a2 + 1; a3 <= 20; ++a3) {
        if (std::gcd(std::gcd(a1, a2), a3) != 1) continue;
        const auto h = sg({a1, a2, a3});
        if (h.embedding_dimension() == 3 && h.minimal_generators()[2] == a3 && h.type() > 1) ++brute;
      }
  EXPECT_EQ(static_cast<std::int64_t>(family.size()), brute);
}
