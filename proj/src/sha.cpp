#include "lieaid/sha.hpp"

namespace lieaid {

namespace {

Vector commutator(const Vector& a, const Vector& b, std::size_t n) {
  return flatten(derivation_bracket(unflatten(a, n), unflatten(b, n)));
}

}  // namespace

QuotientAlgebra build_quotient(const Subspace& numerator, const Subspace& denominator, const StructureTable& t,
                               std::optional<std::vector<Vector>> reps, std::string name) {
  const std::size_t n = t.dim();
  if (numerator.ambient_dim() != n * n || denominator.ambient_dim() != n * n)
    throw MismatchError("quotient: subspaces are not spaces of n x n matrices");
  if (!numerator.contains(denominator)) throw MismatchError("quotient: denominator is not contained in numerator");
  if (!reps) reps = quotient_basis(numerator, denominator);
  for (const auto& r : *reps)
    if (!numerator.contains(r)) throw MismatchError("quotient: representative outside the numerator");
  QuotientMap qmap(denominator, *reps);
  if (qmap.dim() + denominator.dim() != numerator.dim())
    throw MismatchError("quotient: representatives do not span numerator modulo denominator");

  auto num_basis = numerator.basis_vectors();
  auto den_basis = denominator.basis_vectors();
  for (std::size_t a = 0; a < den_basis.size(); ++a)
    for (std::size_t b = 0; b < num_basis.size(); ++b)
      if (!denominator.contains(commutator(den_basis[a], num_basis[b], n)))
        throw MismatchError("quotient: denominator is not an ideal (denominator basis " + std::to_string(a + 1) +
                            ", numerator basis " + std::to_string(b + 1) + ")");

  const std::size_t k = reps->size();
  QuotientAlgebra q{*reps, StructureTable(std::move(name), t.field(), k), denominator, true};
  Subspace rep_span = Subspace::span(t.field(), n * n, *reps);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      Vector br = commutator((*reps)[i], (*reps)[j], n);
      auto coords = qmap.coordinates(br);
      if (!coords)
        throw MismatchError("quotient: numerator is not closed (representatives " + std::to_string(i + 1) + ", " +
                            std::to_string(j + 1) + ")");
      q.table.set_bracket(i + 1, j + 1, *coords);
      if (q.reps_closed && !rep_span.contains(br)) q.reps_closed = false;
    }
  return q;
}

bool is_abelian(const QuotientAlgebra& q) {
  const std::size_t k = q.table.dim();
  for (std::size_t i = 1; i <= k; ++i)
    for (std::size_t j = i + 1; j <= k; ++j)
      if (!is_zero(q.table.basis_bracket(i, j))) return false;
  return true;
}

Vector bracket_cosets(const QuotientAlgebra& q, std::span<const Scalar> x, std::span<const Scalar> y) {
  return bracket(q.table, x, y);
}

std::optional<Vector> coset_of(const QuotientAlgebra& q, const Subspace& numerator, std::span<const Scalar> d) {
  if (!numerator.contains(d)) return std::nullopt;
  QuotientMap qmap(q.denominator, q.coset_reps);
  return qmap.coordinates(d);
}

}  // namespace lieaid
