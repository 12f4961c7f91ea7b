#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sgag/ideal.hpp"
#include "sgag/semigroup.hpp"

namespace sgag {

using Json = nlohmann::ordered_json;

enum class Verdict { Dvr, Gorenstein, AlmostGorensteinNotGorenstein, Neither };

std::string to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

/// Named boolean conditions that theory says are all equivalent.
struct Battery {
  std::vector<std::pair<std::string, bool>> conditions;

  bool consistent() const;
  bool value(const std::string& name) const;  // std::out_of_range if missing

  friend bool operator==(const Battery&, const Battery&) = default;
};

struct ClassificationReport {
  // Semigroup descriptor.
  std::vector<Value> generators;
  Value frobenius = 0;
  Value conductor = 0;
  std::int64_t genus = 0;
  std::vector<Value> pseudo_frobenius;
  std::int64_t r = 0;  // Cohen-Macaulay type
  std::int64_t v = 0;  // embedding dimension
  std::int64_t e = 0;  // multiplicity

  Verdict verdict = Verdict::Dvr;

  // Invariants of the integral canonical ideal I = c + K; absent for a DVR.
  std::optional<HilbertData> hilbert;
  std::optional<std::int64_t> len_j_over_i;  // ℓ((I²:a)/I)
  std::optional<Value> b;                    // 3-generated, non-symmetric only

  Battery gorenstein_battery;  // empty for a DVR
  Battery ag_battery;

  // Extra consequences checked when the verdict is AG-not-Gorenstein.
  std::optional<bool> ag_red_is_two;
  std::optional<bool> ag_hilbert_form;
  std::optional<bool> ag_j_over_i_is_one;

  bool almost_symmetric = true;  // M₊ + K ⊆ H
  std::optional<bool> mm_gorenstein;
  std::optional<bool> idealization_ag;
  std::int64_t v_of_idealization = 0;  // 2v, embedding dimension of R ⋉ 𝔪

  std::vector<std::string> evidence;

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

/// Full classification of k[[H]]. Never throws for a valid H; a DVR
/// short-circuits every battery.
ClassificationReport classify(const NumericalSemigroup& h);

Json to_json(const CofiniteSet& s);
CofiniteSet cofinite_set_from_json(const Json& j);

Json to_json(const ClassificationReport& report);
ClassificationReport report_from_json(const Json& j);

/// Plain-text rendering used by the CLI.
std::string render_text(const ClassificationReport& report);

}  // namespace sgag
