#include "sgag/ideal.hpp"

#include <algorithm>
#include <string>

#include "sgag/errors.hpp"

namespace sgag {

RelativeIdeal::RelativeIdeal(NumericalSemigroup ambient, CofiniteSet elements)
    : ambient_(std::move(ambient)), elements_(std::move(elements)) {
  if (elements_.empty()) throw DomainError("relative ideal: empty value set");
  if (!elements_.is_cofinite()) throw DomainError("relative ideal: value set must be cofinite");
  if (auto w = sumset(elements_, ambient_.elements()).witness_not_in(elements_)) {
    throw DomainError("relative ideal: value set is not closed under adding H (" +
                      std::to_string(*w) + " escapes)");
  }
}

RelativeIdeal RelativeIdeal::generated_by(const NumericalSemigroup& ambient,
                                          std::span<const Value> gens) {
  if (gens.empty()) throw DomainError("ideal needs at least one generator");
  CofiniteSet acc;
  for (Value g : gens) acc = set_union(acc, ambient.elements().shifted(g));
  return {ambient, std::move(acc)};
}

std::vector<Value> RelativeIdeal::minimal_generators() const {
  return set_difference(elements_, sumset(ambient_.maximal_ideal(), elements_));
}

RelativeIdeal RelativeIdeal::power(std::int64_t n) const {
  if (n < 0) throw DomainError("negative ideal power");
  if (n == 0) return {ambient_, ambient_.elements()};
  return {ambient_, n_fold_sum(elements_, n)};
}

RelativeIdeal operator*(const RelativeIdeal& a, const RelativeIdeal& b) {
  if (!(a.ambient_ == b.ambient_)) throw DomainError("ideals live over different semigroups");
  return {a.ambient_, sumset(a.elements_, b.elements_)};
}

RelativeIdeal canonical_ideal(const NumericalSemigroup& h) {
  return {h, canonical_value_set(h)};
}

std::pair<RelativeIdeal, RelativeIdeal> integral_canonical_pair(const NumericalSemigroup& h) {
  if (h.is_dvr()) throw DomainError("integral canonical pair is undefined for a DVR");
  const Value c = h.conductor();
  return {canonical_ideal(h).shifted(c), RelativeIdeal(h, h.elements().shifted(c))};
}

RelativeIdeal blowup(const RelativeIdeal& i) {
  const CofiniteSet k = i.elements().shifted(-i.min());
  CofiniteSet s = k;
  const std::int64_t bound = i.ambient().genus() + 1;
  for (std::int64_t step = 0; step <= bound; ++step) {
    CofiniteSet next = sumset(s, k);
    if (next == s) return {i.ambient(), std::move(s)};
    s = std::move(next);
  }
  throw InternalError("blowup did not stabilize within genus+1 steps");
}

void require_m_primary(const RelativeIdeal& i) {
  if (i.elements().contains(0)) throw DomainError("unit ideal");
  if (auto w = i.elements().witness_not_in(i.ambient().elements())) {
    throw ContainmentError("ideal is not contained in R", *w);
  }
}

std::int64_t reduction_number(const RelativeIdeal& i) {
  const Value a = i.min();
  const std::int64_t bound = i.ambient().genus() + 1;
  CofiniteSet current = i.ambient().elements();  // I^0
  for (std::int64_t n = 0; n <= bound; ++n) {
    CofiniteSet next = sumset(current, i.elements());
    if (next == current.shifted(a)) return n;
    current = std::move(next);
  }
  throw InternalError("reduction number exceeds genus+1");
}

std::int64_t hilbert_function(const RelativeIdeal& i, std::int64_t n) {
  require_m_primary(i);
  if (n < 0) throw DomainError("hilbert_function: negative index");
  return length_between(i.ambient().elements(), n_fold_sum(i.elements(), n + 1));
}

RelativeIdeal conductor_of(const RelativeIdeal& overring) {
  return {overring.ambient(), colon(overring.ambient().elements(), overring.elements())};
}

HilbertData hilbert_coefficients(const RelativeIdeal& i) {
  require_m_primary(i);
  const auto& h = i.ambient().elements();
  const Value a = i.min();
  const RelativeIdeal s = blowup(i);
  const CofiniteSet k = i.elements().shifted(-a);
  const CofiniteSet i2 = sumset(i.elements(), i.elements());

  HilbertData out;
  out.reduction_shift = a;
  out.e0 = a;
  out.e1 = length_between(s.elements(), h);
  out.red = reduction_number(i);

  auto& len = out.lengths;
  len.i_over_q = length_between(i.elements(), h.shifted(a));
  len.i2_over_qi = length_between(i2, i.elements().shifted(a));
  len.r_over_i = length_between(h, i.elements());
  len.s_over_r = out.e1;
  len.s_over_k = length_between(s.elements(), k);
  len.r_over_c = length_between(h, colon(h, s.elements()));
  len.mu_i = i.mu();
  len.mu_i_over_q = len.mu_i - 1;

  for (std::int64_t n = std::max<std::int64_t>(0, out.red - 1); n <= out.red + 2; ++n) {
    const std::int64_t exact = hilbert_function(i, n);
    if (exact != out.e0 * (n + 1) - out.e1) {
      throw InternalError("Hilbert function disagrees with e0(n+1)-e1 at n=" + std::to_string(n));
    }
  }
  return out;
}

RelativeIdeal socle_extension(const NumericalSemigroup& h, Value a) {
  const CofiniteSet q = h.elements().shifted(a);
  return {h, set_intersection(colon(q, h.maximal_ideal()), h.elements())};
}

RelativeIdeal square_colon_reduction(const RelativeIdeal& i) {
  const CofiniteSet i2 = sumset(i.elements(), i.elements());
  return {i.ambient(),
          set_intersection(colon(i2, CofiniteSet::singleton(i.min())), i.ambient().elements())};
}

std::pair<RelativeIdeal, bool> m_colon_m(const NumericalSemigroup& h) {
  if (h.is_dvr()) throw DomainError("m:m is undefined for a DVR here (R is regular)");
  const CofiniteSet m = h.maximal_ideal();
  const CofiniteSet mm = colon(m, m);
  const bool gorenstein = is_symmetric(NumericalSemigroup::from_elements(mm));
  const bool expected = is_almost_symmetric(h) && h.embedding_dimension() == h.multiplicity();
  if (gorenstein != expected) {
    throw InternalError("m:m Gorenstein check disagrees with (almost symmetric and v = e) for " +
                        h.to_string());
  }
  return {RelativeIdeal(h, mm), gorenstein};
}

bool idealization_ag_condition(const RelativeIdeal& i) {
  require_m_primary(i);
  const auto& h = i.ambient();
  const Value a = i.min();
  const CofiniteSet m = h.maximal_ideal();
  const bool m_i_eq_m_q = sumset(m, i.elements()) == sumset(m, h.elements().shifted(a));
  const bool i2_eq_qi = sumset(i.elements(), i.elements()) == i.elements().shifted(a);
  return m_i_eq_m_q && i2_eq_qi;
}

}  // namespace sgag
