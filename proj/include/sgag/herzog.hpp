#pragma once

#include <array>
#include <cstdint>

#include "sgag/semigroup.hpp"

namespace sgag {

/// Exponents of the 2×3 matrix
///
///     ( X^α   Y^β   Z^γ  )
///     ( Y^β'  Z^γ'  X^α' )
///
/// whose maximal minors define k[t^a1, t^a2, t^a3] for a non-symmetric
/// 3-generated H, plus the degrees of the minors and of the two syzygies.
struct HerzogData {
  std::array<Value, 3> gens{};  // a1 < a2 < a3
  Value alpha = 0, beta = 0, gamma = 0;
  Value alpha_p = 0, beta_p = 0, gamma_p = 0;
  Value d1 = 0, d2 = 0, d3 = 0;  // degrees of Z^(γ+γ')-…, X^(α+α')-…, Y^(β+β')-…
  Value ell = 0;
  Value n = 0;

  Value b() const { return ell > n ? ell - n : n - ell; }
  bool ell_exceeds_n() const { return ell > n; }

  friend bool operator==(const HerzogData&, const HerzogData&) = default;
};

/// Extracts the exponents from the minimal relations c_i a_i = x a_j + y a_k.
/// DomainError if v != 3 or H is symmetric; InternalError if a relation has
/// several positive solutions or the homogeneity identities fail.
HerzogData herzog_matrix(const NumericalSemigroup& h);

/// Throws InternalError naming the first failed homogeneity identity.
void check_homogeneity(const HerzogData& hd);

/// The first or the second row of the matrix is (1,1,1).
bool ag_by_matrix(const HerzogData& hd);

struct ClosedFormInvariants {
  Value ell_i_over_q = 0;  // α'β'γ' if ℓ > n, else αβγ
  std::int64_t e1 = 0;     // #(⟨a1,a2,a3,b⟩ ∖ H)
  Value c = 0;             // I = (t^c, t^{c+b}), Q = (t^c)
  Value b = 0;

  friend bool operator==(const ClosedFormInvariants&, const ClosedFormInvariants&) = default;
};

ClosedFormInvariants closed_form_invariants(const HerzogData& hd, const NumericalSemigroup& h);

}  // namespace sgag
