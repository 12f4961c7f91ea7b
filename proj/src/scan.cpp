#include "sgag/scan.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <thread>

#include "sgag/errors.hpp"
#include "sgag/herzog.hpp"
#include "sgag/ideal.hpp"

namespace sgag {

const std::vector<std::string>& all_suites() {
  static const std::vector<std::string> suites = {
      "prop22", "lem35",  "thm37", "thm316",           "cor317",
      "lem315", "cor312", "thm51", "thm41-crosscheck", "cor42-crosscheck"};
  return suites;
}

std::vector<std::string> parse_checks(const std::string& text) {
  if (text == "all") return all_suites();
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto& known = all_suites();
    if (std::find(known.begin(), known.end(), item) == known.end()) {
      throw DomainError("unknown check suite '" + item + "'");
    }
    if (std::find(out.begin(), out.end(), item) == out.end()) out.push_back(item);
  }
  if (out.empty()) throw DomainError("no check suites selected");
  // Canonical order keeps reports independent of how the list was typed.
  std::vector<std::string> ordered;
  for (const auto& s : all_suites()) {
    if (std::find(out.begin(), out.end(), s) != out.end()) ordered.push_back(s);
  }
  return ordered;
}

namespace {

class Recorder {
 public:
  explicit Recorder(std::vector<LawOutcome>& out) : out_(out) {}

  void suite(std::string name) { suite_ = std::move(name); }

  template <typename Describe>
  void law(const std::string& name, bool ok, Describe describe) {
    out_.push_back({suite_, name, ok, ok ? std::string() : describe()});
  }
  void law(const std::string& name, bool ok) {
    law(name, ok, [] { return std::string(); });
  }

 private:
  std::vector<LawOutcome>& out_;
  std::string suite_;
};

std::string kv(std::initializer_list<std::pair<const char*, std::int64_t>> items) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : items) {
    os << (first ? "" : " ") << k << "=" << v;
    first = false;
  }
  return os.str();
}

// Everything the ideal-level suites need, computed once per semigroup.
struct Canonical {
  RelativeIdeal i;
  RelativeIdeal q;
  HilbertData hd;
  CofiniteSet k;
  CofiniteSet s;
  CofiniteSet conductor;
  ClassificationReport report;

  explicit Canonical(const NumericalSemigroup& h)
      : i(integral_canonical_pair(h).first),
        q(integral_canonical_pair(h).second),
        hd(hilbert_coefficients(i)),
        k(canonical_value_set(h)),
        s(blowup(i).elements()),
        conductor(colon(h.elements(), s)),
        report(classify(h)) {}
};

bool ag_verdict(const ClassificationReport& r) {
  return r.verdict == Verdict::Gorenstein || r.verdict == Verdict::AlmostGorensteinNotGorenstein;
}

void prop22_for(Recorder& rec, const NumericalSemigroup& h, const RelativeIdeal& ideal,
                const std::string& tag) {
  const HilbertData hd = hilbert_coefficients(ideal);
  const auto& l = hd.lengths;
  const auto obs = [&] {
    return kv({{"mu", l.mu_i}, {"l(I/Q)", l.i_over_q}, {"e0", hd.e0}, {"l(R/I)", l.r_over_i},
               {"e1", hd.e1}, {"red", hd.red}, {"l(I2/QI)", l.i2_over_qi}});
  };
  rec.law("chain:" + tag,
          l.mu_i - 1 <= l.i_over_q && l.i_over_q == hd.e0 - l.r_over_i && l.i_over_q <= hd.e1 &&
              hd.red <= hd.e1 && hd.e1 <= h.genus(),
          obs);
  rec.law("len_eq_e1_iff_I2_eq_QI:" + tag, (l.i_over_q == hd.e1) == (l.i2_over_qi == 0), obs);
  const bool min_mult = sumset(h.maximal_ideal(), ideal.elements())
                            .is_subset_of(h.elements().shifted(hd.reduction_shift));
  rec.law("mu_eq_len_iff_mI_in_Q:" + tag, (l.mu_i_over_q == l.i_over_q) == min_mult, obs);

  // e1 three ways: blowup count (hd.e1), l(I^r/Q^r), Hilbert function tail.
  const std::int64_t via_powers =
      length_between(ideal.power(hd.red).elements(), h.elements().shifted(hd.red * hd.e0));
  const std::int64_t n = h.genus() + 1;
  const std::int64_t via_tail = hd.e0 * (n + 1) - hilbert_function(ideal, n);
  rec.law("e1_three_ways:" + tag, hd.e1 == via_powers && via_powers == via_tail, [&] {
    return kv({{"blowup", hd.e1}, {"powers", via_powers}, {"tail", via_tail}});
  });
}

void run_suite(const std::string& suite, const NumericalSemigroup& h,
               std::optional<Canonical>& canon, Recorder& rec) {
  rec.suite(suite);
  const bool dvr = h.is_dvr();
  auto need = [&]() -> const Canonical& {
    if (!canon) canon.emplace(h);
    return *canon;
  };

  if (suite == "lem315") {
    const auto rm = colon(h.elements(), h.maximal_ideal());
    const auto len = length_between(rm, h.elements());
    rec.law("len_R_colon_m_over_R_eq_r", len == h.type(),
            [&] { return kv({{"len", len}, {"r", h.type()}}); });
    return;
  }
  if (dvr) return;  // remaining suites presuppose a non-regular ring

  if (suite == "prop22") {
    const auto& c = need();
    prop22_for(rec, h, c.i, "canonical");
    prop22_for(rec, h, RelativeIdeal(h, h.maximal_ideal()), "maximal");
    prop22_for(rec, h, socle_extension(h, h.multiplicity()), "socle");
  } else if (suite == "lem35") {
    const auto& c = need();
    const auto& l = c.hd.lengths;
    rec.law("len_R_c_eq_len_S_K", l.r_over_c == l.s_over_k,
            [&] { return kv({{"l(R/c)", l.r_over_c}, {"l(S/K)", l.s_over_k}}); });
    rec.law("len_S_R_eq_len_R_c_plus_len_I_Q", l.s_over_r == l.r_over_c + l.i_over_q, [&] {
      return kv({{"l(S/R)", l.s_over_r}, {"l(R/c)", l.r_over_c}, {"l(I/Q)", l.i_over_q}});
    });
    rec.law("conductor_eq_K_colon_S", c.conductor == colon(c.k, c.s));
    const auto k_over_r = length_between(c.k, h.elements());
    rec.law("len_I_Q_eq_len_K_R", l.i_over_q == k_over_r);
    const auto mu_k = canonical_ideal(h).mu();
    rec.law("mu_K_eq_r", mu_k == h.type(), [&] { return kv({{"mu(K)", mu_k}, {"r", h.type()}}); });
    rec.law("type_chain", h.type() - 1 <= l.i_over_q && l.i_over_q <= c.hd.e1);
    bool reflexive = true;
    for (const auto& e : {h.elements(), c.k, c.s, h.maximal_ideal()}) {
      reflexive = reflexive && colon(c.k, colon(c.k, e)) == e;
    }
    rec.law("K_duality_reflexive", reflexive);
  } else if (suite == "thm37") {
    const auto& r = need().report;
    rec.law("eight_way", r.gorenstein_battery.consistent(), [&] {
      std::string s;
      for (const auto& [k, v] : r.gorenstein_battery.conditions) s += k + "=" + (v ? "1 " : "0 ");
      return s;
    });
    const bool sym = is_symmetric(h);
    const Value f = h.frobenius();
    const bool by_genus = f % 2 != 0 && h.genus() == (f + 1) / 2;
    rec.law("symmetric_type_genus", sym == (h.type() == 1) && sym == by_genus);
  } else if (suite == "thm316") {
    const auto& c = need();
    const auto& r = c.report;
    rec.law("six_way", r.ag_battery.consistent(), [&] {
      std::string s;
      for (const auto& [k, v] : r.ag_battery.conditions) s += k + "=" + (v ? "1 " : "0 ");
      return s;
    });
    const bool s_eq_k_colon_m = c.s == colon(c.k, h.maximal_ideal());
    rec.law("len_S_K_one_iff_S_eq_K_colon_m",
            (c.hd.lengths.s_over_k == 1) == s_eq_k_colon_m);
    rec.law("ag_iff_mK_in_R", ag_verdict(r) == is_almost_symmetric(h));
    if (r.verdict == Verdict::AlmostGorensteinNotGorenstein) {
      rec.law("red_eq_2", c.hd.red == 2, [&] { return kv({{"red", c.hd.red}}); });
      rec.law("hilbert_form", r.ag_hilbert_form.value_or(false));
      rec.law("J_over_I_eq_1", r.len_j_over_i == 1);
      rec.law("J_eq_Q_colon_m",
              square_colon_reduction(c.i) == socle_extension(h, c.hd.reduction_shift));
      rec.law("mS_in_R", sumset(h.maximal_ideal(), c.s).is_subset_of(h.elements()));
    }
  } else if (suite == "cor317") {
    const auto& c = need();
    const auto e1 = c.hd.e1;
    const bool ag = ag_verdict(c.report);
    const auto obs = [&] { return kv({{"e1", e1}, {"r", h.type()}}); };
    rec.law("e1_ne_1", e1 != 1, obs);
    rec.law("e1_le_3_implies_ag", e1 > 3 || ag, obs);
    rec.law("e1_ne_r_plus_1", e1 != h.type() + 1, obs);
  } else if (suite == "cor312") {
    // mR̄ ⊆ R  ⇔  [e, ∞) ⊆ H  ⇔  c <= e
    const bool m_rbar_in_r = h.conductor() <= h.multiplicity();
    rec.law("m_Rbar_in_R_implies_ag", !m_rbar_in_r || is_almost_symmetric(h));
  } else if (suite == "thm51") {
    const auto m = h.maximal_ideal();
    const auto mm = colon(m, m);
    rec.law("mm_eq_R_colon_m", mm == colon(h.elements(), m));
    const bool gor = is_symmetric(NumericalSemigroup::from_elements(mm));
    const bool rhs = is_almost_symmetric(h) && h.embedding_dimension() == h.multiplicity();
    rec.law("mm_gorenstein_iff_ag_and_v_eq_e", gor == rhs, [&] {
      return kv({{"mm_sym", gor}, {"ag", is_almost_symmetric(h)},
                 {"v", h.embedding_dimension()}, {"e", h.multiplicity()}});
    });
  } else if (suite == "thm41-crosscheck") {
    if (h.embedding_dimension() != 3 || is_symmetric(h)) return;
    const auto& c = need();
    const HerzogData hd = herzog_matrix(h);  // checks homogeneity itself
    rec.law("homogeneity", true);
    const auto cf = closed_form_invariants(hd, h);
    rec.law("len_I_Q_closed_form", cf.ell_i_over_q == c.hd.lengths.i_over_q, [&] {
      return kv({{"closed", cf.ell_i_over_q}, {"sets", c.hd.lengths.i_over_q}});
    });
    rec.law("e1_closed_form", cf.e1 == c.hd.e1,
            [&] { return kv({{"closed", cf.e1}, {"sets", c.hd.e1}}); });
    const auto pair_ideal = RelativeIdeal::generated_by(h, {cf.c, cf.c + cf.b});
    rec.law("canonical_pair_eq_c_plus_K", pair_ideal == c.i);
  } else if (suite == "cor42-crosscheck") {
    if (h.embedding_dimension() != 3 || is_symmetric(h)) return;
    const auto& c = need();
    const bool by_matrix = ag_by_matrix(herzog_matrix(h));
    const bool by_sets = is_almost_symmetric(h);
    rec.law("matrix_iff_almost_symmetric", by_matrix == by_sets && by_sets == ag_verdict(c.report));
  }
}

}  // namespace

std::vector<LawOutcome> check_semigroup(const NumericalSemigroup& h,
                                        const std::vector<std::string>& suites) {
  std::vector<LawOutcome> out;
  Recorder rec(out);
  std::optional<Canonical> canon;
  for (const auto& suite : suites) {
    try {
      run_suite(suite, h, canon, rec);
    } catch (const std::exception& ex) {
      out.push_back({suite, "no_exception", false, ex.what()});
    }
  }
  return out;
}

std::vector<NumericalSemigroup> three_generated_nonsymmetric(Value a3_max) {
  std::vector<NumericalSemigroup> out;
  for (Value a1 = 1; a1 <= a3_max; ++a1) {
    for (Value a2 = a1 + 1; a2 <= a3_max; ++a2) {
      for (Value a3 = a2 + 1; a3 <= a3_max; ++a3) {
        if (std::gcd(std::gcd(a1, a2), a3) != 1) continue;
        auto h = NumericalSemigroup::from_generators({a1, a2, a3});
        if (h.embedding_dimension() != 3 || is_symmetric(h)) continue;
        out.push_back(std::move(h));
      }
    }
  }
  return out;
}

std::vector<NumericalSemigroup> scan_population(const ScanConfig& config) {
  std::vector<NumericalSemigroup> pop = semigroups_up_to_genus(config.genus_max);
  if (config.a3_max > 0) {
    for (auto& h : three_generated_nonsymmetric(config.a3_max)) {
      if (h.genus() > config.genus_max) pop.push_back(std::move(h));
    }
  }
  std::stable_sort(pop.begin(), pop.end(), [](const auto& a, const auto& b) {
    if (a.genus() != b.genus()) return a.genus() < b.genus();
    return a.gaps() < b.gaps();
  });
  return pop;
}

ScanResult run_scan(const ScanConfig& config) {
  const auto pop = scan_population(config);
  std::vector<std::vector<LawOutcome>> outcomes(pop.size());

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t idx = next++; idx < pop.size(); idx = next++) {
      outcomes[idx] = check_semigroup(pop[idx], config.checks);
    }
  };
  const unsigned workers = std::max(1u, config.workers);
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  ScanResult result;
  result.semigroups = static_cast<std::int64_t>(pop.size());
  std::map<std::pair<std::string, std::string>, std::size_t> index;
  for (std::size_t idx = 0; idx < pop.size(); ++idx) {
    for (const auto& o : outcomes[idx]) {
      auto key = std::make_pair(o.suite, o.law);
      auto it = index.find(key);
      if (it == index.end()) {
        it = index.emplace(key, result.tallies.size()).first;
        result.tallies.push_back({o.suite, o.law, 0, 0});
      }
      auto& t = result.tallies[it->second];
      ++t.checked;
      if (o.passed) {
        ++t.passed;
      } else {
        result.counterexamples.push_back(
            {pop[idx].minimal_generators(), pop[idx].genus(), o.suite, o.law, o.observed});
      }
    }
  }
  // Tallies appear in suite order, then first-seen law order.
  const auto& order = all_suites();
  std::stable_sort(result.tallies.begin(), result.tallies.end(), [&](const auto& a, const auto& b) {
    return std::find(order.begin(), order.end(), a.suite) <
           std::find(order.begin(), order.end(), b.suite);
  });
  return result;
}

Json scan_to_json(const ScanConfig& config, const ScanResult& result) {
  Json j;
  j["genus_max"] = config.genus_max;
  j["a3_max"] = config.a3_max;
  j["checks"] = config.checks;
  j["semigroups"] = result.semigroups;
  j["counterexample_count"] = result.counterexamples.size();
  Json laws = Json::array();
  for (const auto& t : result.tallies) {
    laws.push_back({{"suite", t.suite}, {"law", t.law}, {"checked", t.checked}, {"passed", t.passed}});
  }
  j["laws"] = std::move(laws);
  Json ces = Json::array();
  for (const auto& c : result.counterexamples) {
    ces.push_back({{"generators", c.generators},
                   {"genus", c.genus},
                   {"suite", c.suite},
                   {"law", c.law},
                   {"observed", c.observed}});
  }
  j["counterexamples"] = std::move(ces);
  return j;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string scan_to_csv(const ScanResult& result) {
  std::ostringstream os;
  os << "kind,suite,law,checked,passed,semigroup,observed\n";
  for (const auto& t : result.tallies) {
    os << "law," << t.suite << "," << csv_field(t.law) << "," << t.checked << "," << t.passed
       << ",,\n";
  }
  for (const auto& c : result.counterexamples) {
    std::string gens;
    for (std::size_t i = 0; i < c.generators.size(); ++i) {
      gens += (i ? " " : "") + std::to_string(c.generators[i]);
    }
    os << "counterexample," << c.suite << "," << csv_field(c.law) << ",,," << csv_field(gens) << ","
       << csv_field(c.observed) << "\n";
  }
  return os.str();
}

}  // namespace sgag
