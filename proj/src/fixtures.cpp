#include "sgag/fixtures.hpp"

#include "sgag/herzog.hpp"
#include "sgag/ideal.hpp"
#include "sgag/report.hpp"
#include "sgag/semigroup.hpp"

namespace sgag {

namespace {

using Gens = std::vector<Value>;

NumericalSemigroup sg(const Gens& g) { return NumericalSemigroup::from_generators(g); }

RelativeIdeal ideal(const Gens& h, const Gens& gens) {
  return RelativeIdeal::generated_by(sg(h), gens);
}

std::string label(const Gens& g) {
  std::string s = "<";
  for (std::size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
  return s + ">";
}

void hilbert_block(std::vector<FixtureCheck>& fx, const Gens& h, const Gens& gens,
                   std::int64_t e0, std::int64_t e1, std::int64_t red, std::int64_t i_over_q,
                   std::int64_t mu_i_over_q, std::int64_t poly_from) {
  const std::string tag = label(h) + " I=" + label(gens);
  auto data = [h, gens] { return hilbert_coefficients(ideal(h, gens)); };
  fx.push_back({tag + " e0", [data] { return data().e0; }, e0});
  fx.push_back({tag + " e1", [data] { return data().e1; }, e1});
  fx.push_back({tag + " red", [data] { return data().red; }, red});
  fx.push_back({tag + " l(I/Q)", [data] { return data().lengths.i_over_q; }, i_over_q});
  fx.push_back({tag + " mu(I/Q)", [data] { return data().lengths.mu_i_over_q; }, mu_i_over_q});
  for (std::int64_t n = poly_from; n <= 5; ++n) {
    fx.push_back({tag + " l(R/I^" + std::to_string(n + 1) + ")",
                  [h, gens, n] { return hilbert_function(ideal(h, gens), n); },
                  e0 * (n + 1) - e1});
  }
}

std::int64_t verdict_is(const Gens& h, Verdict v) { return classify(sg(h)).verdict == v ? 1 : 0; }

}  // namespace

std::vector<FixtureCheck> example_fixture() {
  std::vector<FixtureCheck> fx;

  // Sharpness of the e1 bounds for small monomial ideals.
  hilbert_block(fx, {3, 5, 7}, {3, 5}, 3, 2, 2, 1, 1, 1);
  fx.push_back({"<3,5,7> I=<3,5> blowup is <2,3>",
                [] { return blowup(ideal({3, 5, 7}, {3, 5})).elements() == sg({2, 3}).elements(); },
                1});
  hilbert_block(fx, {3, 5}, {5, 9}, 5, 2, 1, 2, 1, 0);
  hilbert_block(fx, {3, 7, 8}, {6, 7}, 6, 4, 2, 2, 1, 1);
  hilbert_block(fx, {3, 7, 8}, {3, 7, 8}, 3, 2, 1, 2, 2, 0);
  fx.push_back({"<3,7,8> blowup of m is <3,4,5>",
                [] {
                  return blowup(ideal({3, 7, 8}, {3, 7, 8})).elements() == sg({3, 4, 5}).elements();
                },
                1});

  // Verdicts.
  fx.push_back({"<3,7,8> verdict Neither", [] { return verdict_is({3, 7, 8}, Verdict::Neither); }, 1});
  fx.push_back({"<3,7,8> m:m Gorenstein", [] { return m_colon_m(sg({3, 7, 8})).second ? 1 : 0; }, 0});
  fx.push_back({"<3,7,8> R[K] = N", [] {
                  return blowup(canonical_ideal(sg({3, 7, 8}))).elements() == CofiniteSet::naturals();
                }, 1});
  fx.push_back({"<3,5> verdict Gorenstein", [] { return verdict_is({3, 5}, Verdict::Gorenstein); }, 1});

  const Gens r345{3, 4, 5};
  fx.push_back({"<3,4,5> verdict AG",
                [r345] { return verdict_is(r345, Verdict::AlmostGorensteinNotGorenstein); }, 1});
  fx.push_back({"<3,4,5> r", [r345] { return classify(sg(r345)).r; }, 2});
  fx.push_back({"<3,4,5> e1", [r345] { return classify(sg(r345)).hilbert->e1; }, 2});
  fx.push_back({"<3,4,5> S = m:m",
                [r345] { return classify(sg(r345)).ag_battery.value("mm_eq_S_not_dvr") ? 1 : 0; }, 1});
  fx.push_back({"<3,4,5> l(S/K)", [r345] { return classify(sg(r345)).hilbert->lengths.s_over_k; }, 1});
  fx.push_back({"<3,4,5> l(I^2/QI)",
                [r345] { return classify(sg(r345)).hilbert->lengths.i2_over_qi; }, 1});
  fx.push_back({"<3,4,5> red", [r345] { return classify(sg(r345)).hilbert->red; }, 2});
  fx.push_back({"<3,4,5> l(J/I)", [r345] { return *classify(sg(r345)).len_j_over_i; }, 1});

  // ⟨a, a+1, a²-a-1⟩: e1 = a(a-1)/2 - 1, type 2, almost Gorenstein only for a = 3.
  for (Value a = 3; a <= 7; ++a) {
    const Gens h{a, a + 1, a * a - a - 1};
    fx.push_back({label(h) + " e1", [h] { return classify(sg(h)).hilbert->e1; }, a * (a - 1) / 2 - 1});
    fx.push_back({label(h) + " r", [h] { return classify(sg(h)).r; }, 2});
    fx.push_back({label(h) + " almost Gorenstein",
                  [h] { return verdict_is(h, Verdict::AlmostGorensteinNotGorenstein); }, a == 3 ? 1 : 0});
  }

  // ⟨e, e+1, ..., 2e-1⟩: AG with e1 = e-1 and m:m = k[[t]] Gorenstein.
  for (Value e = 3; e <= 8; ++e) {
    Gens h;
    for (Value x = e; x <= 2 * e - 1; ++x) h.push_back(x);
    fx.push_back({label(h) + " almost Gorenstein",
                  [h] { return verdict_is(h, Verdict::AlmostGorensteinNotGorenstein); }, 1});
    fx.push_back({label(h) + " e1", [h] { return classify(sg(h)).hilbert->e1; }, e - 1});
    fx.push_back({label(h) + " m:m Gorenstein", [h] { return m_colon_m(sg(h)).second ? 1 : 0; }, 1});
    fx.push_back({label(h) + " m:m = N",
                  [h] { return m_colon_m(sg(h)).first.elements() == CofiniteSet::naturals() ? 1 : 0; }, 1});
  }

  // Herzog matrix of ⟨3,7,8⟩. Homogeneity forces α' = 3.
  {
    auto hd = [] { return herzog_matrix(sg({3, 7, 8})); };
    auto cf = [] {
      const auto h = sg({3, 7, 8});
      return closed_form_invariants(herzog_matrix(h), h);
    };
    fx.push_back({"<3,7,8> alpha", [hd] { return hd().alpha; }, 2});
    fx.push_back({"<3,7,8> beta", [hd] { return hd().beta; }, 1});
    fx.push_back({"<3,7,8> gamma", [hd] { return hd().gamma; }, 1});
    fx.push_back({"<3,7,8> alpha'", [hd] { return hd().alpha_p; }, 3});
    fx.push_back({"<3,7,8> beta'", [hd] { return hd().beta_p; }, 1});
    fx.push_back({"<3,7,8> gamma'", [hd] { return hd().gamma_p; }, 1});
    fx.push_back({"<3,7,8> c", [cf] { return cf().c; }, 6});
    fx.push_back({"<3,7,8> b", [cf] { return cf().b; }, 1});
    fx.push_back({"<3,7,8> l(I/Q) closed form", [cf] { return cf().ell_i_over_q; }, 2});
    fx.push_back({"<3,7,8> e1 closed form", [cf] { return cf().e1; }, 4});
    fx.push_back({"<3,7,8> genus", [] { return sg({3, 7, 8}).genus(); }, 4});
    fx.push_back({"<3,7,8> AG by matrix", [hd] { return ag_by_matrix(hd()) ? 1 : 0; }, 0});
  }

  // ⟨4, 4q+3, 4q+5⟩: matrix (X^{2q+1} Y^2 Z ; Y Z X), b = 4q+1, conductor 8q+3.
  for (Value q = 1; q <= 5; ++q) {
    const Gens h{4, 4 * q + 3, 4 * q + 5};
    auto hd = [h] { return herzog_matrix(sg(h)); };
    fx.push_back({label(h) + " alpha", [hd] { return hd().alpha; }, 2 * q + 1});
    fx.push_back({label(h) + " beta", [hd] { return hd().beta; }, 2});
    fx.push_back({label(h) + " gamma", [hd] { return hd().gamma; }, 1});
    fx.push_back({label(h) + " second row all ones", [hd] {
                    const auto d = hd();
                    return d.alpha_p == 1 && d.beta_p == 1 && d.gamma_p == 1 ? 1 : 0;
                  }, 1});
    fx.push_back({label(h) + " b", [hd] { return hd().b(); }, 4 * q + 1});
    fx.push_back({label(h) + " conductor", [h] { return sg(h).conductor(); }, 8 * q + 3});
    fx.push_back({label(h) + " AG by matrix", [hd] { return ag_by_matrix(hd()) ? 1 : 0; }, 1});
    fx.push_back({label(h) + " (t^{4q+3}, t^{8q+4}) is a shifted canonical ideal", [h, q] {
                    const auto s = sg(h);
                    const auto i = RelativeIdeal::generated_by(s, {4 * q + 3, 8 * q + 4});
                    return i.elements() == canonical_value_set(s).shifted(4 * q + 3) ? 1 : 0;
                  }, 1});
  }
  return fx;
}

int run_fixture(const std::vector<FixtureCheck>& fixture, std::ostream& out, std::ostream& err) {
  if (fixture.empty()) {
    err << "warning: empty fixture, nothing verified\n";
    return 0;
  }
  std::size_t failures = 0;
  for (const auto& check : fixture) {
    std::int64_t got = 0;
    try {
      got = check.compute();
    } catch (const std::exception& ex) {
      ++failures;
      out << "MISMATCH " << check.name << ": expected " << check.expected << ", threw " << ex.what()
          << "\n";
      continue;
    }
    if (got != check.expected) {
      ++failures;
      out << "MISMATCH " << check.name << ": expected " << check.expected << ", computed " << got
          << "\n";
    }
  }
  out << (fixture.size() - failures) << "/" << fixture.size() << " checks match\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace sgag
