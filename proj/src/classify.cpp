#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sgag/herzog.hpp"
#include "sgag/ideal.hpp"
#include "sgag/report.hpp"

namespace sgag {

bool Battery::consistent() const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [&](const auto& c) { return c.second == conditions.front().second; });
}

bool Battery::value(const std::string& name) const {
  for (const auto& [key, val] : conditions) {
    if (key == name) return val;
  }
  throw std::out_of_range("no battery condition named " + name);
}

ClassificationReport classify(const NumericalSemigroup& h) {
  ClassificationReport rep;
  rep.generators = h.minimal_generators();
  rep.frobenius = h.frobenius();
  rep.conductor = h.conductor();
  rep.genus = h.genus();
  rep.pseudo_frobenius = h.pseudo_frobenius();
  rep.r = h.type();
  rep.v = h.embedding_dimension();
  rep.e = h.multiplicity();
  rep.v_of_idealization = 2 * rep.v;
  rep.almost_symmetric = is_almost_symmetric(h);

  if (h.is_dvr()) {
    rep.verdict = Verdict::Dvr;
    rep.evidence.push_back("H = N: discrete valuation ring, Gorenstein by convention (r = 1)");
    return rep;
  }

  const auto [i, q] = integral_canonical_pair(h);
  const HilbertData hd = hilbert_coefficients(i);
  const auto& len = hd.lengths;
  const CofiniteSet& hs = h.elements();
  const CofiniteSet k = canonical_value_set(h);
  const CofiniteSet s = blowup(i).elements();
  const CofiniteSet m = h.maximal_ideal();
  const bool symmetric = is_symmetric(h);

  rep.hilbert = hd;
  const std::int64_t e1 = hd.e1;

  if (symmetric) {
    rep.verdict = Verdict::Gorenstein;
  } else if (e1 <= rep.r) {
    rep.verdict = Verdict::AlmostGorensteinNotGorenstein;
  } else {
    rep.verdict = Verdict::Neither;
  }

  rep.gorenstein_battery.conditions = {
      {"gorenstein", symmetric},
      {"K_eq_R", k == hs},
      {"S_eq_K", s == k},
      {"S_eq_R", s == hs},
      {"len_S_R_eq_len_R_c", len.s_over_r == len.r_over_c},
      {"I2_eq_QI", len.i2_over_qi == 0},
      {"e1_eq_0", e1 == 0},
      {"e1_eq_r_minus_1", e1 == rep.r - 1},
  };

  rep.ag_battery.conditions = {
      {"ag_not_gorenstein", rep.verdict == Verdict::AlmostGorensteinNotGorenstein},
      {"e1_eq_r", e1 == rep.r},
      {"e1_eq_e0_minus_len_R_I_plus_1", e1 == hd.e0 - len.r_over_i + 1},
      {"len_S_K_eq_1", len.s_over_k == 1},
      {"len_I2_QI_eq_1", len.i2_over_qi == 1},
      {"mm_eq_S_not_dvr", colon(m, m) == s},
  };

  const RelativeIdeal j = square_colon_reduction(i);
  rep.len_j_over_i = length_between(j.elements(), i.elements());

  if (rep.verdict == Verdict::AlmostGorensteinNotGorenstein) {
    rep.ag_red_is_two = hd.red == 2;
    bool form = true;
    for (std::int64_t n = 1; n <= hd.red + 3; ++n) {
      form = form && hilbert_function(i, n) == (rep.r + len.r_over_i - 1) * (n + 1) - rep.r;
    }
    rep.ag_hilbert_form = form;
    rep.ag_j_over_i_is_one = *rep.len_j_over_i == 1;
  }

  rep.mm_gorenstein = m_colon_m(h).second;
  rep.idealization_ag = idealization_ag_condition(i);
  if (rep.v == 3 && !symmetric) rep.b = herzog_matrix(h).b();

  std::ostringstream ev;
  ev << "canonical ideal I = (t^c)K with c = " << rep.conductor << ", reduction Q = t^"
     << hd.reduction_shift;
  rep.evidence.push_back(ev.str());
  rep.evidence.push_back("e1(I) = l(S/R) = " + std::to_string(e1) + ", r = " +
                         std::to_string(rep.r));
  switch (rep.verdict) {
    case Verdict::Gorenstein:
      rep.evidence.push_back("H symmetric: K = R and e1 = 0");
      break;
    case Verdict::AlmostGorensteinNotGorenstein:
      rep.evidence.push_back("e1 <= r and H not symmetric");
      break;
    default:
      rep.evidence.push_back("e1 > r");
      break;
  }
  rep.evidence.push_back(std::string("M + K ") + (rep.almost_symmetric ? "is" : "is not") +
                         " contained in H");
  if (!rep.gorenstein_battery.consistent()) {
    rep.evidence.push_back("INCONSISTENT: Gorenstein battery disagrees");
  }
  if (!rep.ag_battery.consistent()) {
    rep.evidence.push_back("INCONSISTENT: almost-Gorenstein battery disagrees");
  }
  return rep;
}

}  // namespace sgag
