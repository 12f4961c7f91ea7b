#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "sgag/value_set.hpp"

namespace sgag {

/// A numerical semigroup H ⊆ ℕ with finite complement, together with its
/// classical invariants. All invariants are computed once at construction;
/// the object is immutable afterwards.
///
/// For H = ℕ the conventions are f = -1, c = 0, PF = {-1} and type 1.
class NumericalSemigroup {
 public:
  /// H = ⟨gens⟩. Throws NotNumericalSemigroup when gcd != 1 or a generator is
  /// not positive, DomainError on an empty list.
  static NumericalSemigroup from_generators(std::span<const Value> gens);
  static NumericalSemigroup from_generators(std::initializer_list<Value> gens) {
    return from_generators(std::span<const Value>(gens.begin(), gens.size()));
  }

  /// Validates that `elements` is a numerical semigroup (0 ∈ H ⊆ ℕ, cofinite,
  /// closed under addition).
  static NumericalSemigroup from_elements(const CofiniteSet& elements);

  const std::vector<Value>& minimal_generators() const noexcept { return generators_; }
  const CofiniteSet& elements() const noexcept { return elements_; }
  bool contains(Value x) const { return elements_.contains(x); }

  Value frobenius() const noexcept { return conductor_ - 1; }
  Value conductor() const noexcept { return conductor_; }
  const std::vector<Value>& gaps() const noexcept { return gaps_; }
  std::int64_t genus() const noexcept { return static_cast<std::int64_t>(gaps_.size()); }
  const std::vector<Value>& pseudo_frobenius() const noexcept { return pseudo_frobenius_; }
  std::int64_t type() const noexcept { return static_cast<std::int64_t>(pseudo_frobenius_.size()); }
  Value multiplicity() const noexcept { return generators_.front(); }
  std::int64_t embedding_dimension() const noexcept {
    return static_cast<std::int64_t>(generators_.size());
  }
  bool is_dvr() const noexcept { return conductor_ == 0; }

  /// Apéry set w.r.t. the multiplicity, indexed by residue.
  const std::vector<Value>& apery() const noexcept { return apery_; }
  /// Apéry set w.r.t. any nonzero element m of H, indexed by residue mod m.
  std::vector<Value> apery(Value m) const;

  /// M₊ = H ∖ {0}, the value set of the maximal ideal.
  CofiniteSet maximal_ideal() const;

  /// "⟨3,7,8⟩"
  std::string to_string() const;

  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) {
    return a.elements_ == b.elements_;
  }

 private:
  explicit NumericalSemigroup(CofiniteSet elements);

  CofiniteSet elements_;
  Value conductor_ = 0;
  std::vector<Value> generators_;
  std::vector<Value> gaps_;
  std::vector<Value> pseudo_frobenius_;
  std::vector<Value> apery_;
};

/// Gap duality: x ∈ H ⇔ f - x ∉ H for 0 <= x <= f.
bool is_symmetric(const NumericalSemigroup& h);

/// Value set of the standard canonical ideal {x : f - x ∉ H}, with H ⊆ K ⊆ ℕ.
CofiniteSet canonical_value_set(const NumericalSemigroup& h);

/// M₊ + K ⊆ H.
bool is_almost_symmetric(const NumericalSemigroup& h);

/// Visits every numerical semigroup of genus <= g_max exactly once, ordered
/// by genus and then lexicographically by gap set.
void enumerate_by_genus(std::int64_t g_max,
                        const std::function<void(const NumericalSemigroup&)>& visit);

std::vector<NumericalSemigroup> semigroups_up_to_genus(std::int64_t g_max);

/// Parses "3,7,8", "<3,7,8>" or "⟨3,7,8⟩" into a generator list.
std::vector<Value> parse_generators(const std::string& text);

}  // namespace sgag
