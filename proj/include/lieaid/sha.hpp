#pragma once

// Quotients of derivation algebras: Sha(g) = AID(g)/Inn(g) and
// Out(g) = Der(g)/Inn(g), with explicit structure constants.

#include <optional>
#include <vector>

#include "lieaid/derivations.hpp"

namespace lieaid {

struct QuotientAlgebra {
  std::vector<Vector> coset_reps;  // flattened derivations
  StructureTable table;
  Subspace denominator;
  bool reps_closed = false;  // span(coset_reps) is itself closed under the bracket
};

/// numerator / denominator with the commutator bracket. Representatives
/// default to a complement of the denominator; explicit ones must be
/// independent modulo it. Throws MismatchError naming the offending pair if
/// the numerator is not closed or the denominator is not an ideal.
QuotientAlgebra build_quotient(const Subspace& numerator, const Subspace& denominator, const StructureTable& t,
                               std::optional<std::vector<Vector>> reps = std::nullopt, std::string name = "quotient");

bool is_abelian(const QuotientAlgebra& q);

/// Induced bracket on coset coordinates.
Vector bracket_cosets(const QuotientAlgebra& q, std::span<const Scalar> x, std::span<const Scalar> y);

/// Coordinates of the coset of a flattened derivation; nullopt outside the numerator.
std::optional<Vector> coset_of(const QuotientAlgebra& q, const Subspace& numerator, std::span<const Scalar> d);

}  // namespace lieaid
