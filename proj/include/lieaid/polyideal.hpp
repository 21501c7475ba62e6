#pragma once

// Sparse multivariate polynomials over an exact Field, Buchberger's
// algorithm under grevlex, ideal and radical membership, and minors of
// polynomial matrices.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lieaid/scalars.hpp"

namespace lieaid {

class PolyRing {
 public:
  PolyRing(Field f, std::vector<std::string> vars) : field_(f), vars_(std::move(vars)) {}
  Field field() const { return field_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& variables() const { return vars_; }
  bool operator==(const PolyRing& o) const { return field_ == o.field_ && vars_ == o.vars_; }

 private:
  Field field_;
  std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const PolyRing>;

RingPtr make_ring(Field f, std::vector<std::string> vars);
/// Ring with the same variables plus `name` appended last.
RingPtr extend_ring(const RingPtr& r, std::string name);

using Exponents = std::vector<std::uint16_t>;

/// Degree-reverse-lexicographic comparison: negative, zero or positive.
int grevlex_compare(const Exponents& a, const Exponents& b);
bool divides(const Exponents& a, const Exponents& b);  // a | b

struct Term {
  Exponents exps;
  Scalar coeff;
};

class Poly {
 public:
  explicit Poly(RingPtr ring);
  static Poly constant(RingPtr ring, const Scalar& c);
  static Poly variable(RingPtr ring, std::size_t index);
  static Poly monomial(RingPtr ring, Exponents exps, const Scalar& c);
  /// Parses expressions such as "2*z1^2*z5*y - 1" or "z4^2 + z5^2". Over
  /// Q(i) the symbol i denotes the imaginary unit unless it is a variable.
  static Poly parse(RingPtr ring, std::string_view text);

  const RingPtr& ring() const { return ring_; }
  Field field() const { return ring_->field(); }
  /// Terms in strictly decreasing grevlex order, no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Term& leading() const { return terms_.front(); }
  unsigned total_degree() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const Scalar& c) const;
  Poly mul_term(const Exponents& exps, const Scalar& c) const;
  Poly monic() const;

  Scalar eval(std::span<const Scalar> point) const;
  /// Re-expresses this polynomial in a ring whose variables extend ours.
  Poly embed(const RingPtr& bigger) const;
  std::string to_string() const;
  bool operator==(const Poly& o) const;

 private:
  Poly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {}
  void check_ring(const Poly& o) const;
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Fully reduced remainder of f modulo the list g (multivariate division).
Poly normal_form(const Poly& f, const std::vector<Poly>& g);

/// Reduced Gröbner basis under grevlex, monic, sorted by increasing leading
/// monomial. The zero ideal yields an empty basis, a unit ideal yields {1}.
std::vector<Poly> groebner_basis(const std::vector<Poly>& generators);

class PolyIdeal {
 public:
  PolyIdeal(RingPtr ring, std::vector<Poly> generators);
  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }
  /// Computed on first use and cached; not safe for concurrent first calls.
  const std::vector<Poly>& groebner() const;
  bool is_unit() const;

 private:
  RingPtr ring_;
  std::vector<Poly> gens_;
  mutable std::optional<std::vector<Poly>> gb_;
};

bool ideal_member(const Poly& f, const PolyIdeal& ideal);
/// f ∈ √I, decided by 1 ∈ <I, 1 - y f> with a fresh variable y.
bool radical_member(const Poly& f, const PolyIdeal& ideal);

class PolyMatrix {
 public:
  PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols);
  const RingPtr& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Poly& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  /// [this | column]
  PolyMatrix with_column(const std::vector<Poly>& column) const;

 private:
  RingPtr ring_;
  std::size_t rows_, cols_;
  std::vector<Poly> entries_;
};

/// All r x r minors, row subsets outermost, both in lexicographic order.
std::vector<Poly> minors(const PolyMatrix& m, std::size_t r);
Poly determinant(const PolyMatrix& m);

/// Lexicographically ordered r-subsets of {0..n-1}.
std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t r);

}  // namespace lieaid
