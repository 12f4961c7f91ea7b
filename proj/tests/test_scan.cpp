#include <gtest/gtest.h>

#include "sgag/errors.hpp"
#include "sgag/scan.hpp"

using sgag::ScanConfig;

TEST(Checks, Parse) {
  EXPECT_EQ(sgag::parse_checks("all"), sgag::all_suites());
  EXPECT_EQ(sgag::parse_checks("thm37,prop22"), (std::vector<std::string>{"prop22", "thm37"}));
  EXPECT_THROW(sgag::parse_checks("thm99"), sgag::DomainError);
  EXPECT_THROW(sgag::parse_checks(""), sgag::DomainError);
}

TEST(Scan, GenusOneCor317) {
  ScanConfig config;
  config.genus_max = 1;
  config.checks = {"cor317"};
  const auto result = sgag::run_scan(config);
  EXPECT_EQ(result.semigroups, 2);
  EXPECT_TRUE(result.clean());
}

TEST(Scan, AllSuitesGenus8) {
  ScanConfig config;
  config.genus_max = 8;
  const auto result = sgag::run_scan(config);
  EXPECT_EQ(result.semigroups, 1 + 1 + 2 + 4 + 7 + 12 + 23 + 39 + 67);
  EXPECT_TRUE(result.clean());
  for (const auto& t : result.tallies) {
    EXPECT_EQ(t.checked, t.passed) << t.suite << "/" << t.law;
    EXPECT_GT(t.checked, 0) << t.suite << "/" << t.law;
  }
}

TEST(Scan, ThreeGeneratedCrosscheck) {
  ScanConfig config;
  config.genus_max = 10;
  config.a3_max = 25;
  config.checks = {"thm41-crosscheck", "cor42-crosscheck"};
  const auto result = sgag::run_scan(config);
  EXPECT_TRUE(result.clean());
  EXPECT_GT(result.semigroups, 478);
}

TEST(Scan, PopulationSortedWithoutRepeats) {
  ScanConfig config;
  config.genus_max = 6;
  config.a3_max = 15;
  const auto pop = sgag::scan_population(config);
  for (std::size_t i = 1; i < pop.size(); ++i) {
    const auto& p = pop[i - 1];
    const auto& q = pop[i];
    ASSERT_TRUE(p.genus() < q.genus() || (p.genus() == q.genus() && p.gaps() < q.gaps()));
  }
}

TEST(Scan, WorkerCountDoesNotChangeOutput) {
  ScanConfig config;
  config.genus_max = 7;
  config.a3_max = 14;
  config.workers = 1;
  const auto one = sgag::run_scan(config);
  const auto json1 = sgag::scan_to_json(config, one).dump(2);
  const auto csv1 = sgag::scan_to_csv(one);
  for (unsigned w : {2u, 5u}) {
    config.workers = w;
    const auto other = sgag::run_scan(config);
    EXPECT_EQ(sgag::scan_to_json(config, other).dump(2), json1);
    EXPECT_EQ(sgag::scan_to_csv(other), csv1);
  }
}

TEST(Scan, CsvHeader) {
  ScanConfig config;
  config.genus_max = 2;
  const auto csv = sgag::scan_to_csv(sgag::run_scan(config));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "kind,suite,law,checked,passed,semigroup,observed");
}

TEST(Scan, CheckSemigroupCatchesNothingOnValidInput) {
  const auto h = sgag::NumericalSemigroup::from_generators({3, 7, 8});
  for (const auto& o : sgag::check_semigroup(h, sgag::all_suites())) EXPECT_TRUE(o.passed) << o.suite << "/" << o.law;
}
