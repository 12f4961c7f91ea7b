#include <sstream>

#include "sgag/errors.hpp"
#include "sgag/report.hpp"

namespace sgag {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Dvr: return "DVR";
    case Verdict::Gorenstein: return "Gorenstein";
    case Verdict::AlmostGorensteinNotGorenstein: return "AlmostGorensteinNotGorenstein";
    case Verdict::Neither: return "Neither";
  }
  return "?";
}

Verdict verdict_from_string(const std::string& s) {
  for (Verdict v : {Verdict::Dvr, Verdict::Gorenstein, Verdict::AlmostGorensteinNotGorenstein,
                    Verdict::Neither}) {
    if (to_string(v) == s) return v;
  }
  throw DomainError("unknown verdict '" + s + "'");
}

Json to_json(const CofiniteSet& s) {
  Json j;
  j["below"] = s.below();
  j["all_from"] = s.all_from() ? Json(*s.all_from()) : Json(nullptr);
  return j;
}

CofiniteSet cofinite_set_from_json(const Json& j) {
  std::optional<Value> tail;
  if (!j.at("all_from").is_null()) tail = j.at("all_from").get<Value>();
  return CofiniteSet(j.at("below").get<std::vector<Value>>(), tail);
}

namespace {

template <typename T>
Json opt(const std::optional<T>& x) {
  return x ? Json(*x) : Json(nullptr);
}

template <typename T>
std::optional<T> get_opt(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

Json battery_json(const Battery& b) {
  Json j = Json::object();
  for (const auto& [k, v] : b.conditions) j[k] = v;
  return j;
}

Battery battery_from_json(const Json& j) {
  Battery b;
  for (const auto& [k, v] : j.items()) b.conditions.emplace_back(k, v.get<bool>());
  return b;
}

}  // namespace

Json to_json(const ClassificationReport& r) {
  Json out;
  out["semigroup"] = {
      {"generators", r.generators},
      {"frobenius", r.frobenius},
      {"conductor", r.conductor},
      {"genus", r.genus},
      {"pseudo_frobenius", r.pseudo_frobenius},
      {"type", r.r},
      {"embedding_dimension", r.v},
      {"multiplicity", r.e},
  };
  out["verdict"] = to_string(r.verdict);

  Json inv;
  if (r.hilbert) {
    const auto& h = *r.hilbert;
    inv["e0"] = h.e0;
    inv["e1"] = h.e1;
    inv["red"] = h.red;
    inv["reduction_shift"] = h.reduction_shift;
    inv["lengths"] = {
        {"I_over_Q", h.lengths.i_over_q},
        {"I2_over_QI", h.lengths.i2_over_qi},
        {"R_over_I", h.lengths.r_over_i},
        {"S_over_R", h.lengths.s_over_r},
        {"S_over_K", h.lengths.s_over_k},
        {"R_over_conductor", h.lengths.r_over_c},
        {"mu_I", h.lengths.mu_i},
        {"mu_I_over_Q", h.lengths.mu_i_over_q},
    };
  } else {
    inv["e0"] = nullptr;
    inv["e1"] = nullptr;
    inv["red"] = nullptr;
    inv["reduction_shift"] = nullptr;
    inv["lengths"] = nullptr;
  }
  inv["J_over_I"] = opt(r.len_j_over_i);
  inv["b"] = opt(r.b);
  inv["almost_symmetric"] = r.almost_symmetric;
  inv["mm_gorenstein"] = opt(r.mm_gorenstein);
  inv["idealization_ag"] = opt(r.idealization_ag);
  inv["v_of_idealization"] = r.v_of_idealization;
  inv["ag_red_is_two"] = opt(r.ag_red_is_two);
  inv["ag_hilbert_form"] = opt(r.ag_hilbert_form);
  inv["ag_J_over_I_is_one"] = opt(r.ag_j_over_i_is_one);
  out["invariants"] = std::move(inv);

  out["batteries"] = {
      {"thm37", battery_json(r.gorenstein_battery)},
      {"thm316", battery_json(r.ag_battery)},
  };
  out["evidence"] = r.evidence;
  return out;
}

ClassificationReport report_from_json(const Json& j) {
  ClassificationReport r;
  const auto& sg = j.at("semigroup");
  r.generators = sg.at("generators").get<std::vector<Value>>();
  r.frobenius = sg.at("frobenius").get<Value>();
  r.conductor = sg.at("conductor").get<Value>();
  r.genus = sg.at("genus").get<std::int64_t>();
  r.pseudo_frobenius = sg.at("pseudo_frobenius").get<std::vector<Value>>();
  r.r = sg.at("type").get<std::int64_t>();
  r.v = sg.at("embedding_dimension").get<std::int64_t>();
  r.e = sg.at("multiplicity").get<std::int64_t>();
  r.verdict = verdict_from_string(j.at("verdict").get<std::string>());

  const auto& inv = j.at("invariants");
  if (!inv.at("e0").is_null()) {
    HilbertData h;
    h.e0 = inv.at("e0").get<std::int64_t>();
    h.e1 = inv.at("e1").get<std::int64_t>();
    h.red = inv.at("red").get<std::int64_t>();
    h.reduction_shift = inv.at("reduction_shift").get<Value>();
    const auto& l = inv.at("lengths");
    h.lengths.i_over_q = l.at("I_over_Q").get<std::int64_t>();
    h.lengths.i2_over_qi = l.at("I2_over_QI").get<std::int64_t>();
    h.lengths.r_over_i = l.at("R_over_I").get<std::int64_t>();
    h.lengths.s_over_r = l.at("S_over_R").get<std::int64_t>();
    h.lengths.s_over_k = l.at("S_over_K").get<std::int64_t>();
    h.lengths.r_over_c = l.at("R_over_conductor").get<std::int64_t>();
    h.lengths.mu_i = l.at("mu_I").get<std::int64_t>();
    h.lengths.mu_i_over_q = l.at("mu_I_over_Q").get<std::int64_t>();
    r.hilbert = h;
  }
  r.len_j_over_i = get_opt<std::int64_t>(inv, "J_over_I");
  r.b = get_opt<Value>(inv, "b");
  r.almost_symmetric = inv.at("almost_symmetric").get<bool>();
  r.mm_gorenstein = get_opt<bool>(inv, "mm_gorenstein");
  r.idealization_ag = get_opt<bool>(inv, "idealization_ag");
  r.v_of_idealization = inv.at("v_of_idealization").get<std::int64_t>();
  r.ag_red_is_two = get_opt<bool>(inv, "ag_red_is_two");
  r.ag_hilbert_form = get_opt<bool>(inv, "ag_hilbert_form");
  r.ag_j_over_i_is_one = get_opt<bool>(inv, "ag_J_over_I_is_one");

  r.gorenstein_battery = battery_from_json(j.at("batteries").at("thm37"));
  r.ag_battery = battery_from_json(j.at("batteries").at("thm316"));
  r.evidence = j.at("evidence").get<std::vector<std::string>>();
  return r;
}

namespace {

std::string join(const std::vector<Value>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

void render_battery(std::ostream& os, const char* title, const Battery& b) {
  os << title << (b.consistent() ? " (consistent)" : " (INCONSISTENT)") << "\n";
  for (const auto& [k, v] : b.conditions) os << "  " << k << ": " << (v ? "true" : "false") << "\n";
}

}  // namespace

std::string render_text(const ClassificationReport& r) {
  std::ostringstream os;
  os << "semigroup: <" << join(r.generators) << ">\n";
  os << "verdict: " << (r.verdict == Verdict::Dvr ? "Gorenstein (DVR)" : to_string(r.verdict)) << "\n";
  os << "f=" << r.frobenius << " c=" << r.conductor << " genus=" << r.genus << " r=" << r.r
     << " v=" << r.v << " e=" << r.e << "\n";
  if (r.hilbert) {
    const auto& h = *r.hilbert;
    os << "e0=" << h.e0 << " e1=" << h.e1 << " red=" << h.red << "\n";
    os << "l(I/Q)=" << h.lengths.i_over_q << " l(I^2/QI)=" << h.lengths.i2_over_qi
       << " l(R/I)=" << h.lengths.r_over_i << " l(S/R)=" << h.lengths.s_over_r
       << " l(S/K)=" << h.lengths.s_over_k << " l(R/c)=" << h.lengths.r_over_c
       << " mu(I)=" << h.lengths.mu_i << "\n";
  }
  if (r.len_j_over_i) os << "l((I^2:a)/I)=" << *r.len_j_over_i << "\n";
  if (r.b) os << "b=" << *r.b << "\n";
  if (r.mm_gorenstein) os << "m:m Gorenstein: " << (*r.mm_gorenstein ? "yes" : "no") << "\n";
  if (r.idealization_ag) {
    os << "idealization condition (mI=mQ, I^2=QI): " << (*r.idealization_ag ? "yes" : "no")
       << "\n";
  }
  os << "v(R x m)=" << r.v_of_idealization << "\n";
  if (!r.gorenstein_battery.conditions.empty()) {
    render_battery(os, "Gorenstein battery", r.gorenstein_battery);
    render_battery(os, "almost-Gorenstein battery", r.ag_battery);
  }
  for (const auto& e : r.evidence) os << "- " << e << "\n";
  return os.str();
}

}  // namespace sgag
