#pragma once

// Der(g), Inn(g), a complement U with Der = Inn ⊕ U, the subspaces D_z of
// derivations that act innerly on span(z), and the probing loop that
// shrinks a candidate space V with AID(g) <= Inn(g) ⊕ V.
//
// A derivation is an n x n Matrix D with delta(b_j) = sum_k D(j,k) b_k,
// flattened row-major into a vector of length n^2.

#include <cstdint>
#include <vector>

#include "lieaid/liealg.hpp"

namespace lieaid {

Matrix unflatten(std::span<const Scalar> flat, std::size_t n);
Vector flatten(const Matrix& m);

/// delta(x) for a coordinate vector x (row vector times matrix).
Vector apply_derivation(const Matrix& d, std::span<const Scalar> x);
/// Matrix of [d1, d2] = d1∘d2 - d2∘d1 in the derivation convention.
Matrix derivation_bracket(const Matrix& d1, const Matrix& d2);
bool is_derivation(const StructureTable& t, const Matrix& d);

Subspace compute_der(const StructureTable& t);
Subspace compute_inn(const StructureTable& t);

struct DerivationSpaces {
  Subspace der;
  Subspace inn;
  Subspace complement_u;
};

DerivationSpaces compute_spaces(const StructureTable& t);

/// {delta in `within` : delta(z0) = [z0, x] for some x}, the projection of
/// ker psi_{z0} onto the `within` factor.
Subspace inner_on_line(const StructureTable& t, const Subspace& within, std::span<const Scalar> z0);
/// D_{z0} as a subspace of the complement U.
Subspace compute_D_z0(const DerivationSpaces& spaces, const StructureTable& t, std::span<const Scalar> z0);

struct ProbePlan {
  std::uint64_t seed = 0;
  std::size_t budget = 20000;  // total number of probes
  std::size_t patience = 4000;  // stable random probes before stopping
  int height = 3;             // coordinate range for random probes over Q, Q(i)
};

struct RefineResult {
  Subspace v;
  std::size_t probes = 0;  // probes actually evaluated
  std::vector<std::size_t> dims;  // dim V after each probe that shrank it
};

/// Intersects D_z over basis vectors, pairwise sums b_i + b_j, then seeded
/// random vectors. Patience only applies to the random phase; the loop also
/// stops as soon as V = 0.
RefineResult refine_candidates(const DerivationSpaces& spaces, const StructureTable& t, const ProbePlan& plan);

/// The probe points in the order refine_candidates uses them.
std::vector<Vector> probe_sequence(const StructureTable& t, const ProbePlan& plan, std::size_t count);

}  // namespace lieaid
