#pragma once

// Exact scalars for the three kinds of base field the library works over:
// the rationals Q, the Gaussian rationals Q(i) and finite fields GF(p^k).

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "lieaid/error.hpp"

namespace lieaid {

enum class FieldKind { rational, gaussian_rational, finite };

namespace detail {
struct FieldData;
}

/// Handle to an interned, immutable field description.
///
/// Fields are interned, so two handles compare equal exactly when kind,
/// characteristic, degree and modulus all agree. Handles are cheap to copy
/// and stay valid for the lifetime of the process.
class Field {
 public:
  static Field rational();
  static Field gaussian_rational();
  /// GF(p^k). An empty modulus selects the default irreducible polynomial
  /// (x^3+2x+1 for GF(27), x^3+x+1 for GF(8), otherwise the first monic
  /// irreducible in enumeration order). Moduli are coefficient lists
  /// c0,c1,...,ck with ck = 1.
  static Field finite(std::uint32_t p, std::uint32_t k = 1,
                      std::vector<std::uint32_t> modulus = {});
  /// Accepts "Q", "Q(i)", "GF(p)", "GF(q)" for prime powers q, and "GF(p^k)".
  static Field parse(std::string_view text);

  FieldKind kind() const;
  bool is_finite() const { return kind() == FieldKind::finite; }
  std::uint32_t characteristic() const;  // 0 for Q and Q(i)
  std::uint32_t degree() const;          // 1 unless GF(p^k)
  const std::vector<std::uint32_t>& modulus() const;
  std::uint64_t order() const;  // 0 for infinite fields
  std::string name() const;

  const detail::FieldData* data() const { return d_; }
  bool operator==(const Field& other) const { return d_ == other.d_; }

 private:
  explicit Field(const detail::FieldData* d) : d_(d) {}
  const detail::FieldData* d_;
};

/// An exact element of a Field.
///
/// Representation: reduced mpq for Q, a pair of mpq for Q(i), and for
/// GF(p^k) the integer sum c0 + c1 p + ... + c_{k-1} p^{k-1} of the
/// coefficients modulo the field's modulus polynomial.
class Scalar {
 public:
  explicit Scalar(Field f);  // zero of f
  Scalar(Field f, long value);

  static Scalar from_rational(Field f, const mpq_class& q);
  static Scalar from_gaussian(Field f, const mpq_class& re, const mpq_class& im);
  static Scalar from_index(Field f, std::uint32_t index);
  static Scalar from_coefficients(Field f, const std::vector<std::int64_t>& coeffs);
  /// The square root of -1 in Q(i).
  static Scalar unit_i(Field f);
  static Scalar parse(Field f, std::string_view text);

  Field field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar inv() const;
  Scalar pow(std::uint64_t e) const;
  bool operator==(const Scalar& o) const;

  /// Finite fields only.
  std::uint32_t index() const;
  std::vector<std::uint32_t> coefficients() const;
  /// Q only; also accepted for Q(i) elements with zero imaginary part.
  mpq_class rational() const;
  mpq_class real_part() const;
  mpq_class imag_part() const;

  std::string to_string() const;

 private:
  struct Gaussian {
    mpq_class re;
    mpq_class im;
  };
  void check_same(const Scalar& o) const;

  Field field_;
  std::variant<std::uint32_t, mpq_class, Gaussian> value_;
};

using Vector = std::vector<Scalar>;

/// All elements of a finite field: 0 first, 1 second, then by index.
std::vector<Scalar> field_enumerate(Field f);

/// Uniform element for finite fields; for Q and Q(i), integers (resp.
/// Gaussian integers) with coordinates in [-height, height].
Scalar random_scalar(Field f, std::mt19937_64& rng, int height = 3);

/// True when `from` canonically embeds into `to` (Q into Q(i), GF(p) into
/// GF(p^k), and every field into itself).
bool embeds(Field from, Field to);
Scalar embed(const Scalar& x, Field to);

/// Reduces a rational with denominator prime to p into GF(p^k).
Scalar reduce_rational(const mpq_class& q, Field to);

std::ostream& operator<<(std::ostream& os, const Scalar& x);

}  // namespace lieaid
