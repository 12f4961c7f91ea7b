#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sgag/errors.hpp"
#include "sgag/report.hpp"

using sgag::NumericalSemigroup;
using sgag::Value;
using sgag::Verdict;

namespace {

sgag::ClassificationReport classify(std::initializer_list<Value> g) {
  return sgag::classify(NumericalSemigroup::from_generators(g));
}

}  // namespace

TEST(Classify, H345) {
  const auto r = classify({3, 4, 5});
  EXPECT_EQ(r.verdict, Verdict::AlmostGorensteinNotGorenstein);
  EXPECT_EQ(r.r, 2);
  EXPECT_EQ(r.hilbert->e1, 2);
  EXPECT_EQ(r.hilbert->red, 2);
  EXPECT_EQ(r.len_j_over_i, 1);
  EXPECT_EQ(r.ag_red_is_two, true);
  EXPECT_EQ(r.ag_hilbert_form, true);
  EXPECT_EQ(r.ag_j_over_i_is_one, true);
  EXPECT_EQ(r.mm_gorenstein, true);
  EXPECT_EQ(r.v_of_idealization, 6);
  EXPECT_TRUE(r.gorenstein_battery.consistent());
  EXPECT_TRUE(r.ag_battery.consistent());
}

TEST(Classify, FamilyAA1) {
  const auto r = classify({4, 5, 11});
  EXPECT_EQ(r.verdict, Verdict::Neither);
  EXPECT_EQ(r.hilbert->e1, 5);
  EXPECT_EQ(r.r, 2);
  EXPECT_FALSE(r.ag_red_is_two.has_value());
}

TEST(Classify, Gorenstein) {
  const auto r = classify({3, 5});
  EXPECT_EQ(r.verdict, Verdict::Gorenstein);
  EXPECT_EQ(r.hilbert->e1, 0);
  EXPECT_TRUE(r.gorenstein_battery.value("gorenstein"));
  EXPECT_TRUE(r.gorenstein_battery.value("e1_eq_0"));
}

TEST(Classify, ConsecutiveGenerators) {
  const auto r = classify({5, 6, 7, 8, 9});
  EXPECT_EQ(r.verdict, Verdict::AlmostGorensteinNotGorenstein);
  EXPECT_EQ(r.hilbert->e1, 4);
}

TEST(Classify, DvrShortCircuits) {
  const auto r = classify({1});
  EXPECT_EQ(r.verdict, Verdict::Dvr);
  EXPECT_EQ(r.r, 1);
  EXPECT_FALSE(r.hilbert.has_value());
  EXPECT_TRUE(r.gorenstein_battery.conditions.empty());
  EXPECT_TRUE(r.ag_battery.conditions.empty());
  EXPECT_EQ(sgag::to_string(r.verdict), "DVR");
}

TEST(Classify, BatteriesConsistentToGenus10) {
  sgag::enumerate_by_genus(10, [](const NumericalSemigroup& h) {
    const auto r = sgag::classify(h);
    ASSERT_TRUE(r.gorenstein_battery.consistent()) << h.to_string();
    ASSERT_TRUE(r.ag_battery.consistent()) << h.to_string();
    if (h.is_dvr()) return;
    const bool gor = r.verdict == Verdict::Gorenstein;
    const bool ag = r.verdict == Verdict::AlmostGorensteinNotGorenstein;
    ASSERT_EQ(gor, sgag::is_symmetric(h));
    ASSERT_EQ(ag || gor, sgag::is_almost_symmetric(h));
  });
}

TEST(Battery, ValueLookup) {
  sgag::Battery b{{{"x", true}, {"y", false}}};
  EXPECT_FALSE(b.consistent());
  EXPECT_TRUE(b.value("x"));
  EXPECT_THROW(b.value("z"), std::out_of_range);
}

TEST(Verdict, StringRoundTrip) {
  for (auto v : {Verdict::Dvr, Verdict::Gorenstein, Verdict::AlmostGorensteinNotGorenstein, Verdict::Neither})
    EXPECT_EQ(sgag::verdict_from_string(sgag::to_string(v)), v);
  EXPECT_THROW(sgag::verdict_from_string("Maybe"), sgag::DomainError);
}

TEST(Json, ReportRoundTripsToGenus8) {
  sgag::enumerate_by_genus(8, [](const NumericalSemigroup& h) {
    const auto r = sgag::classify(h);
    const auto j = sgag::to_json(r);
    ASSERT_EQ(sgag::report_from_json(sgag::Json::parse(j.dump())), r) << h.to_string();
  });
}

TEST(Json, Schema) {
  const auto j = sgag::to_json(classify({3, 7, 8}));
  EXPECT_EQ(j["semigroup"]["generators"], sgag::Json::parse("[3,7,8]"));
  EXPECT_EQ(j["semigroup"]["frobenius"], 5);
  EXPECT_EQ(j["verdict"], "Neither");
  EXPECT_TRUE(j["batteries"].contains("thm37"));
  EXPECT_TRUE(j["batteries"].contains("thm316"));
  EXPECT_EQ(j["invariants"]["e1"], 4);
  EXPECT_EQ(j["invariants"]["b"], 1);
}

TEST(Json, CofiniteSetRoundTrip) {
  for (const auto& s : {sgag::CofiniteSet({0, 3, 5}, 7), sgag::CofiniteSet::finite({2, 4}),
                        sgag::CofiniteSet::naturals(), sgag::CofiniteSet({-3}, 1)})
    EXPECT_EQ(sgag::cofinite_set_from_json(sgag::to_json(s)), s);
}

TEST(RenderText, MentionsVerdict) {
  const auto text = sgag::render_text(classify({3, 4, 5}));
  EXPECT_NE(text.find("AlmostGorensteinNotGorenstein"), std::string::npos);
}
