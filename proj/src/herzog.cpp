#include "sgag/herzog.hpp"

#include <string>
#include <utility>
#include <vector>

#include "sgag/errors.hpp"

namespace sgag {

namespace {

// Nonnegative solutions (x, y) of target = x p + y q.
std::vector<std::pair<Value, Value>> representations(Value target, Value p, Value q) {
  std::vector<std::pair<Value, Value>> out;
  for (Value x = 0; x * p <= target; ++x) {
    const Value rest = target - x * p;
    if (rest % q == 0) out.emplace_back(x, rest / q);
  }
  return out;
}

// Least k > 0 with k·a ∈ ⟨p, q⟩, and the unique positive (x, y) with
// k·a = x p + y q.
struct MinimalRelation {
  Value k;
  Value x;
  Value y;
};

MinimalRelation minimal_relation(Value a, Value p, Value q) {
  for (Value k = 1;; ++k) {
    const auto reps = representations(k * a, p, q);
    if (reps.empty()) continue;
    if (reps.size() != 1) {
      throw InternalError("relation " + std::to_string(k) + "*" + std::to_string(a) +
                          " has several representations over <" + std::to_string(p) + "," +
                          std::to_string(q) + ">");
    }
    auto [x, y] = reps.front();
    if (x == 0 || y == 0) {
      throw InternalError("minimal relation for " + std::to_string(a) +
                          " is not of Herzog shape (zero exponent)");
    }
    return {k, x, y};
  }
}

}  // namespace

HerzogData herzog_matrix(const NumericalSemigroup& h) {
  if (h.embedding_dimension() != 3) {
    throw DomainError("Herzog matrix needs exactly 3 minimal generators, " + h.to_string() +
                      " has " + std::to_string(h.embedding_dimension()));
  }
  if (is_symmetric(h)) {
    throw DomainError("complete intersection; Herzog matrix undefined for " + h.to_string());
  }
  const auto& g = h.minimal_generators();
  const Value a1 = g[0], a2 = g[1], a3 = g[2];

  const auto r1 = minimal_relation(a1, a2, a3);  // (α+α') a1 = β' a2 + γ a3
  const auto r2 = minimal_relation(a2, a1, a3);  // (β+β') a2 = α a1 + γ' a3
  const auto r3 = minimal_relation(a3, a1, a2);  // (γ+γ') a3 = α' a1 + β a2

  HerzogData hd;
  hd.gens = {a1, a2, a3};
  hd.beta_p = r1.x;
  hd.gamma = r1.y;
  hd.alpha = r2.x;
  hd.gamma_p = r2.y;
  hd.alpha_p = r3.x;
  hd.beta = r3.y;
  if (hd.alpha + hd.alpha_p != r1.k || hd.beta + hd.beta_p != r2.k ||
      hd.gamma + hd.gamma_p != r3.k) {
    throw InternalError("minimal relations of " + h.to_string() +
                        " do not assemble into a Herzog matrix");
  }
  hd.d1 = a3 * (hd.gamma + hd.gamma_p);
  hd.d2 = a1 * (hd.alpha + hd.alpha_p);
  hd.d3 = a2 * (hd.beta + hd.beta_p);
  hd.ell = a1 * hd.alpha + hd.d1;
  hd.n = a1 * hd.alpha_p + hd.d3;
  check_homogeneity(hd);
  return hd;
}

void check_homogeneity(const HerzogData& hd) {
  const auto [a1, a2, a3] = hd.gens;
  auto require = [&](bool ok, const char* what) {
    if (!ok) throw InternalError(std::string("Herzog identity failed: ") + what);
  };
  require(hd.d1 == a3 * (hd.gamma + hd.gamma_p), "d1 = a3(γ+γ')");
  require(hd.d2 == a1 * (hd.alpha + hd.alpha_p), "d2 = a1(α+α')");
  require(hd.d3 == a2 * (hd.beta + hd.beta_p), "d3 = a2(β+β')");
  require(hd.ell == a1 * hd.alpha + hd.d1, "ℓ = a1α + d1");
  require(hd.ell == a2 * hd.beta + hd.d2, "ℓ = a2β + d2");
  require(hd.ell == a3 * hd.gamma + hd.d3, "ℓ = a3γ + d3");
  require(hd.n == a1 * hd.alpha_p + hd.d3, "n = a1α' + d3");
  require(hd.n == a2 * hd.beta_p + hd.d1, "n = a2β' + d1");
  require(hd.n == a3 * hd.gamma_p + hd.d2, "n = a3γ' + d2");
  require(hd.n != hd.ell, "n != ℓ");
  const Value diff = hd.n - hd.ell;
  require(diff == a2 * hd.beta_p - a1 * hd.alpha, "n-ℓ = a2β' - a1α");
  require(diff == a3 * hd.gamma_p - a2 * hd.beta, "n-ℓ = a3γ' - a2β");
  require(diff == a1 * hd.alpha_p - a3 * hd.gamma, "n-ℓ = a1α' - a3γ");
  require(hd.d2 == hd.beta_p * a2 + hd.gamma * a3, "(α+α')a1 = β'a2 + γa3");
  require(hd.d3 == hd.alpha * a1 + hd.gamma_p * a3, "(β+β')a2 = αa1 + γ'a3");
  require(hd.d1 == hd.alpha_p * a1 + hd.beta * a2, "(γ+γ')a3 = α'a1 + βa2");
}

bool ag_by_matrix(const HerzogData& hd) {
  const bool top = hd.alpha == 1 && hd.beta == 1 && hd.gamma == 1;
  const bool bottom = hd.alpha_p == 1 && hd.beta_p == 1 && hd.gamma_p == 1;
  return top || bottom;
}

ClosedFormInvariants closed_form_invariants(const HerzogData& hd, const NumericalSemigroup& h) {
  ClosedFormInvariants out;
  out.ell_i_over_q = hd.ell_exceeds_n() ? hd.alpha_p * hd.beta_p * hd.gamma_p
                                        : hd.alpha * hd.beta * hd.gamma;
  out.b = hd.b();
  out.c = h.conductor();
  const auto enlarged = NumericalSemigroup::from_generators({hd.gens[0], hd.gens[1], hd.gens[2], out.b});
  out.e1 = h.genus() - enlarged.genus();
  return out;
}

}  // namespace sgag
