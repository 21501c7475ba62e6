#include "lieaid/derivations.hpp"

#include <random>

namespace lieaid {

Matrix unflatten(std::span<const Scalar> flat, std::size_t n) {
  if (flat.size() != n * n) throw MismatchError("flattened derivation has the wrong length");
  Matrix m(flat.front().field(), n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m(j, k) = flat[j * n + k];
  return m;
}

Vector flatten(const Matrix& m) {
  Vector v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t j = 0; j < m.rows(); ++j)
    for (std::size_t k = 0; k < m.cols(); ++k) v.push_back(m(j, k));
  return v;
}

Vector apply_derivation(const Matrix& d, std::span<const Scalar> x) { return d.apply_left(x); }

Matrix derivation_bracket(const Matrix& d1, const Matrix& d2) {
  // Row vectors compose on the right: (d1∘d2)(x) = x * D2 * D1.
  return d2 * d1 - d1 * d2;
}

bool is_derivation(const StructureTable& t, const Matrix& d) {
  const std::size_t n = t.dim();
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      auto bi = basis_vector(t, i), bj = basis_vector(t, j);
      Vector lhs = apply_derivation(d, bracket(t, bi, bj));
      Vector rhs = add(bracket(t, apply_derivation(d, bi), bj), bracket(t, bi, apply_derivation(d, bj)));
      if (lhs != rhs) return false;
    }
  return true;
}

Subspace compute_der(const StructureTable& t) {
  const std::size_t n = t.dim();
  const Field f = t.field();
  auto unknown = [n](std::size_t j, std::size_t k) { return (j - 1) * n + (k - 1); };
  Matrix system(f, 0, n * n);
  Vector row = zero_vector(f, n * n);
  // One equation per i >= j and l:
  //   sum_k sigma_{i,j}^k d_{k,l} - sigma_{k,j}^l d_{i,k} - sigma_{i,k}^l d_{j,k} = 0.
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= i; ++j)
      for (std::size_t l = 1; l <= n; ++l) {
        std::fill(row.begin(), row.end(), Scalar(f));
        for (std::size_t k = 1; k <= n; ++k) {
          if (!t.sigma(i, j, k).is_zero()) row[unknown(k, l)] += t.sigma(i, j, k);
          if (!t.sigma(k, j, l).is_zero()) row[unknown(i, k)] -= t.sigma(k, j, l);
          if (!t.sigma(i, k, l).is_zero()) row[unknown(j, k)] -= t.sigma(i, k, l);
        }
        if (!is_zero(row)) system.append_row(row);
      }
  return kernel(system);
}

Subspace compute_inn(const StructureTable& t) {
  std::vector<Vector> rows;
  for (std::size_t i = 1; i <= t.dim(); ++i) rows.push_back(flatten(ad_matrix(t, basis_vector(t, i))));
  return Subspace::span(t.field(), t.dim() * t.dim(), rows);
}

DerivationSpaces compute_spaces(const StructureTable& t) {
  Subspace der = compute_der(t);
  Subspace inn = compute_inn(t);
  Subspace u = subspace_complement(inn, der);
  return {std::move(der), std::move(inn), std::move(u)};
}

Subspace inner_on_line(const StructureTable& t, const Subspace& within, std::span<const Scalar> z0) {
  const std::size_t n = t.dim();
  const Field f = t.field();
  if (z0.size() != n) throw MismatchError("probe vector has the wrong dimension");
  if (within.ambient_dim() != n * n) throw MismatchError("candidate space is not a space of n x n matrices");
  const std::size_t s = within.dim();
  if (s == 0) return within;
  // psi(c, x) = sum_s c_s delta_s(z0) - [z0, x]
  Matrix psi(f, n, s + n);
  for (std::size_t c = 0; c < s; ++c) {
    Vector image = apply_derivation(unflatten(within.basis().row(c), n), z0);
    for (std::size_t k = 0; k < n; ++k) psi(k, c) = image[k];
  }
  for (std::size_t j = 1; j <= n; ++j) {
    Vector image = bracket(t, z0, basis_vector(t, j));
    for (std::size_t k = 0; k < n; ++k) psi(k, s + j - 1) = -image[k];
  }
  Subspace ker = kernel(psi);
  std::vector<Vector> projected;
  for (std::size_t r = 0; r < ker.dim(); ++r) {
    auto coeffs = ker.basis().row(r).subspan(0, s);
    if (!is_zero(coeffs)) projected.push_back(within.combine(coeffs));
  }
  return Subspace::span(f, n * n, projected);
}

Subspace compute_D_z0(const DerivationSpaces& spaces, const StructureTable& t, std::span<const Scalar> z0) {
  return inner_on_line(t, spaces.complement_u, z0);
}

namespace {

class ProbeGenerator {
 public:
  ProbeGenerator(const StructureTable& t, const ProbePlan& plan) : t_(t), plan_(plan), rng_(plan.seed) {}

  bool structured() const { return count_ < structured_count(); }

  Vector next() {
    const std::size_t n = t_.dim();
    const Field f = t_.field();
    Vector z;
    if (count_ < n) {
      z = basis_vector(t_, count_ + 1);
    } else if (count_ < structured_count()) {
      z = basis_vector(t_, pair_i_ + 1);
      z[pair_j_] += Scalar(f, 1);
      if (++pair_j_ == n) {
        ++pair_i_;
        pair_j_ = pair_i_ + 1;
      }
    } else if ((count_ - structured_count()) % 2 == 0) {
      z.reserve(n);
      for (std::size_t i = 0; i < n; ++i) z.push_back(random_coordinate());
    } else {
      // Sparse probes reach the points where M(z) loses rank.
      z = zero_vector(f, n);
      const std::size_t support = std::min<std::size_t>(n, 2 + rng_() % 5);
      for (std::size_t s = 0; s < support; ++s) {
        Scalar c = random_coordinate();
        while (c.is_zero()) c = random_coordinate();
        z[rng_() % n] = c;
      }
    }
    ++count_;
    return z;
  }

 private:
  std::size_t structured_count() const {
    const std::size_t n = t_.dim();
    return n + n * (n - 1) / 2;
  }
  // Random probes over Q and Q(i) stay inside the rationals; finite fields
  // draw from the whole field.
  Scalar random_coordinate() {
    const Field f = t_.field();
    if (f.is_finite()) return random_scalar(f, rng_);
    std::uniform_int_distribution<long> dist(-plan_.height, plan_.height);
    return Scalar(f, dist(rng_));
  }

  const StructureTable& t_;
  const ProbePlan& plan_;
  std::mt19937_64 rng_;
  std::size_t count_ = 0;
  std::size_t pair_i_ = 0, pair_j_ = 1;
};

}  // namespace

std::vector<Vector> probe_sequence(const StructureTable& t, const ProbePlan& plan, std::size_t count) {
  ProbeGenerator gen(t, plan);
  std::vector<Vector> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(gen.next());
  return out;
}

RefineResult refine_candidates(const DerivationSpaces& spaces, const StructureTable& t, const ProbePlan& plan) {
  RefineResult result{spaces.complement_u, 0, {}};
  ProbeGenerator gen(t, plan);
  std::size_t stable = 0;
  while (result.v.dim() > 0 && result.probes < plan.budget) {
    const bool structured = gen.structured();
    Vector z = gen.next();
    ++result.probes;
    Subspace next = inner_on_line(t, result.v, z);
    if (next.dim() < result.v.dim()) {
      result.v = std::move(next);
      result.dims.push_back(result.v.dim());
      stable = 0;
    } else if (!structured && ++stable >= plan.patience) {
      break;
    }
  }
  return result;
}

}  // namespace lieaid
