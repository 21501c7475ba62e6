#pragma once

// Lie algebras given by structure constants on a fixed basis b_1..b_n.
// Basis indices in this API are 1-based; coordinate vectors are ordinary
// 0-based std::vectors (entry k-1 holds the coefficient of b_k).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lieaid/linalg.hpp"

namespace lieaid {

class StructureTable {
 public:
  StructureTable(std::string name, Field f, std::size_t dim);

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  Field field() const { return field_; }
  std::size_t dim() const { return dim_; }

  /// Sets [b_i, b_j] = value for 1 <= i < j <= dim; [b_j, b_i] follows.
  void set_bracket(std::size_t i, std::size_t j, const Vector& value);
  /// Adds c * b_k to [b_i, b_j] (i < j).
  void add_term(std::size_t i, std::size_t j, std::size_t k, const Scalar& c);

  /// sigma_{i,j}^k for any 1-based i, j, k (antisymmetric in i, j).
  const Scalar& sigma(std::size_t i, std::size_t j, std::size_t k) const {
    return sigma_[((i - 1) * dim_ + (j - 1)) * dim_ + (k - 1)];
  }
  /// Coordinates of [b_i, b_j].
  Vector basis_bracket(std::size_t i, std::size_t j) const;

  bool operator==(const StructureTable& o) const;

 private:
  std::string name_;
  Field field_;
  std::size_t dim_;
  std::vector<Scalar> sigma_;  // dense n^3, antisymmetric in the first two indices
};

struct JacobiViolation {
  std::size_t i, j, k;  // 1-based
  Vector value;         // the non-zero Jacobi sum
};

/// Checks the Jacobi identity on all basis triples i<j<k.
std::optional<JacobiViolation> validate(const StructureTable& t);

Vector basis_vector(const StructureTable& t, std::size_t i);  // b_i, 1-based
Vector bracket(const StructureTable& t, std::span<const Scalar> x, std::span<const Scalar> y);
/// Matrix of ad(a) in the derivation convention: row j holds [a, b_j].
Matrix ad_matrix(const StructureTable& t, std::span<const Scalar> a);
Subspace center(const StructureTable& t);
/// The same constants over a larger field (Q into Q(i), GF(p) into GF(p^k)).
StructureTable extend_scalars(const StructureTable& t, Field to);
/// Quotient of t by an ideal given as a subspace of coordinates.
StructureTable quotient_by_ideal(const StructureTable& t, const Subspace& ideal, std::string name);

/// Built-in algebras. Accepted names: abelian(n[,FIELD]), heisenberg3[(FIELD)],
/// g6_23[(FIELD)], dim5_L8211[(FIELD)], g3_sah[(FIELD)], psl3_f3, sl3_f3.
/// Rational catalog entries can be requested over Q, Q(i) or any GF(p)
/// whose characteristic does not divide a denominator.
StructureTable catalog(std::string_view name);
std::vector<std::string> catalog_names();

nlohmann::json field_to_json(Field f);
Field field_from_json(const nlohmann::json& j);
nlohmann::json to_json(const StructureTable& t);
/// Parses the structure-constant JSON format; rejects i >= j, out-of-range
/// indices and (unless skip_validate) Jacobi failures.
StructureTable table_from_json(const nlohmann::json& j, bool skip_validate = false);

}  // namespace lieaid
