#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sgag {

using Value = std::int64_t;

/// A subset of ℤ that is bounded below and is either finite or contains
/// every integer from some threshold on.
///
/// The representation is canonical: `below` is sorted, duplicate-free and
/// strictly less than the threshold, and the threshold is minimal (t-1 is
/// never a member). Two sets are equal iff their fields are equal.
///
/// Finite sets (no threshold) exist so that {0}, the neutral element of
/// sumset, and colon results against finite operands are representable.
/// Everything the semigroup and ideal layers hand around is cofinite.
class CofiniteSet {
 public:
  CofiniteSet() = default;

  /// Normalizes arbitrary input; members >= all_from are absorbed.
  CofiniteSet(std::vector<Value> below, std::optional<Value> all_from);

  static CofiniteSet finite(std::vector<Value> members);
  static CofiniteSet from(Value threshold);  // {t, t+1, ...}
  static CofiniteSet naturals() { return from(0); }
  static CofiniteSet singleton(Value v) { return finite({v}); }

  bool empty() const noexcept { return below_.empty() && !all_from_; }
  bool is_cofinite() const noexcept { return all_from_.has_value(); }

  /// Minimal threshold t, or nullopt for finite sets.
  const std::optional<Value>& all_from() const noexcept { return all_from_; }
  const std::vector<Value>& below() const noexcept { return below_; }

  bool contains(Value x) const;
  Value min() const;  // DomainError on the empty set

  /// Smallest h such that membership is constant on [h, ∞).
  Value horizon() const;

  /// Members in the half-open window [lo, hi), tail included.
  std::vector<Value> members_in(Value lo, Value hi) const;

  /// Number of members in [lo, hi).
  std::int64_t count_in(Value lo, Value hi) const;

  CofiniteSet shifted(Value d) const;

  bool is_subset_of(const CofiniteSet& other) const;

  /// Some member of *this that is missing from `other`, if any.
  std::optional<Value> witness_not_in(const CofiniteSet& other) const;

  std::string to_string() const;

  friend bool operator==(const CofiniteSet&, const CofiniteSet&) = default;

 private:
  std::vector<Value> below_;
  std::optional<Value> all_from_;
};

/// {a+b : a∈A, b∈B}. Output threshold is at most t_A + t_B.
CofiniteSet sumset(const CofiniteSet& a, const CofiniteSet& b);

/// {z : z + B ⊆ A}. When A is cofinite the result contains every
/// z >= t_A - min B.
CofiniteSet colon(const CofiniteSet& a, const CofiniteSet& b);

/// n-term sumset A+...+A by repeated doubling; n = 0 gives {0}.
CofiniteSet n_fold_sum(const CofiniteSet& a, std::int64_t n);

/// #(A ∖ B). Requires B ⊆ A (ContainmentError with a witness otherwise)
/// and a finite difference.
std::int64_t length_between(const CofiniteSet& a, const CofiniteSet& b);

CofiniteSet set_union(const CofiniteSet& a, const CofiniteSet& b);
CofiniteSet set_intersection(const CofiniteSet& a, const CofiniteSet& b);

/// Members of A ∖ B; DomainError if the difference is infinite.
std::vector<Value> set_difference(const CofiniteSet& a, const CofiniteSet& b);

}  // namespace sgag
