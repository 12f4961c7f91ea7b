#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sgag/semigroup.hpp"
#include "sgag/value_set.hpp"

namespace sgag {

/// A fractional monomial ideal of k[[H]], stored as its value set E with
/// E + H ⊆ E. Covers integral ideals I ⊆ H as well as overrings and shifts
/// (K, S = R[K], conductors, R:𝔪).
class RelativeIdeal {
 public:
  /// Throws DomainError unless `elements` is nonempty, cofinite and absorbs H.
  RelativeIdeal(NumericalSemigroup ambient, CofiniteSet elements);

  /// ∪ (g + H) over the given generators.
  static RelativeIdeal generated_by(const NumericalSemigroup& ambient, std::span<const Value> gens);
  static RelativeIdeal generated_by(const NumericalSemigroup& ambient,
                                    std::initializer_list<Value> gens) {
    return generated_by(ambient, std::span<const Value>(gens.begin(), gens.size()));
  }

  const NumericalSemigroup& ambient() const noexcept { return ambient_; }
  const CofiniteSet& elements() const noexcept { return elements_; }
  Value min() const { return elements_.min(); }

  /// elements ∖ (M₊ + elements); their count is μ.
  std::vector<Value> minimal_generators() const;
  std::int64_t mu() const { return static_cast<std::int64_t>(minimal_generators().size()); }

  bool is_integral() const { return elements_.is_subset_of(ambient_.elements()); }

  RelativeIdeal shifted(Value d) const { return {ambient_, elements_.shifted(d)}; }
  /// n-th power; the 0-th power is R itself.
  RelativeIdeal power(std::int64_t n) const;

  friend RelativeIdeal operator*(const RelativeIdeal& a, const RelativeIdeal& b);
  friend bool operator==(const RelativeIdeal& a, const RelativeIdeal& b) {
    return a.elements_ == b.elements_ && a.ambient_ == b.ambient_;
  }

 private:
  NumericalSemigroup ambient_;
  CofiniteSet elements_;
};

/// Lengths gathered while computing the Hilbert coefficients of an
/// 𝔪-primary monomial ideal I with reduction Q = (t^a), a = min I.
/// Here K = I - a and S = R[K], 𝔠 = R:S.
struct IdealLengths {
  std::int64_t i_over_q = 0;       // ℓ(I/Q)
  std::int64_t i2_over_qi = 0;     // ℓ(I²/QI)
  std::int64_t r_over_i = 0;       // ℓ(R/I)
  std::int64_t s_over_r = 0;       // ℓ(S/R)
  std::int64_t s_over_k = 0;       // ℓ(S/K)
  std::int64_t r_over_c = 0;       // ℓ(R/𝔠)
  std::int64_t mu_i = 0;           // μ(I)
  std::int64_t mu_i_over_q = 0;    // μ(I/Q) = μ(I) - 1

  friend bool operator==(const IdealLengths&, const IdealLengths&) = default;
};

struct HilbertData {
  std::int64_t e0 = 0;
  std::int64_t e1 = 0;
  std::int64_t red = 0;
  Value reduction_shift = 0;
  IdealLengths lengths;

  friend bool operator==(const HilbertData&, const HilbertData&) = default;
};

/// K(H) as a relative ideal: value set {x : f - x ∉ H}, min 0, H ⊆ K ⊆ ℕ.
RelativeIdeal canonical_ideal(const NumericalSemigroup& h);

/// (I, Q) = (c + K, c + H): an integral canonical ideal with a principal
/// reduction. DomainError for H = ℕ.
std::pair<RelativeIdeal, RelativeIdeal> integral_canonical_pair(const NumericalSemigroup& h);

/// Value set of R[I/t^a] with a = min I, as the stabilized union of powers
/// of I - a. InternalError if it fails to stabilize within genus+1 steps.
RelativeIdeal blowup(const RelativeIdeal& i);

/// Rejects anything that is not a nonempty ideal I ⊆ H with 0 ∉ I.
void require_m_primary(const RelativeIdeal& i);

/// Least n >= 0 with I^{n+1} = t^a I^n.
std::int64_t reduction_number(const RelativeIdeal& i);

/// ℓ(R/I^{n+1}) computed as #(H ∖ (n+1)I).
std::int64_t hilbert_function(const RelativeIdeal& i, std::int64_t n);

/// e₀, e₁ = ℓ(S/R), red and the length table. Verifies the Hilbert
/// polynomial against the exact function on [red-1, red+2].
HilbertData hilbert_coefficients(const RelativeIdeal& i);

/// 𝔠 = R:S as a relative ideal.
RelativeIdeal conductor_of(const RelativeIdeal& overring);

/// Q:_R 𝔪 for Q = (t^a): colon(a + H, M₊) ∩ H.
RelativeIdeal socle_extension(const NumericalSemigroup& h, Value a);

/// I² :_R t^a, the degree-zero local cohomology surrogate of gr_I(R).
RelativeIdeal square_colon_reduction(const RelativeIdeal& i);

/// 𝔪:𝔪 computed as M₊ - M₊, and whether its semigroup is symmetric. Throws
/// InternalError when the symmetric verdict disagrees with
/// (almost symmetric ∧ v = e). DomainError for H = ℕ.
std::pair<RelativeIdeal, bool> m_colon_m(const NumericalSemigroup& h);

/// 𝔪I = 𝔪Q and I² = QI, as value-set identities.
bool idealization_ag_condition(const RelativeIdeal& i);

}  // namespace sgag
