#pragma once

// Brute-force references for small finite fields. Nothing here calls the
// subspace or certification code under test: spans are enumerated, brackets
// come straight from the structure constants.

#include <functional>
#include <random>
#include <set>
#include <vector>

#include "lieaid/liealg.hpp"

namespace oracle {

using lieaid::Field;
using lieaid::Scalar;
using lieaid::StructureTable;
using lieaid::Vector;

// Calls f on every vector of F^n (odometer order, first coordinate slowest).
inline void for_each_vector(Field f, std::size_t n, const std::function<void(const Vector&)>& fn) {
  const auto elems = lieaid::field_enumerate(f);
  std::vector<std::size_t> idx(n, 0);
  Vector v(n, Scalar(f));
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) v[i] = elems[idx[i]];
    fn(v);
    std::size_t d = n;
    while (d > 0 && ++idx[d - 1] == elems.size()) idx[--d] = 0;
    if (d == 0) return;
  }
}

inline std::vector<std::uint32_t> key(const Vector& v) {
  std::vector<std::uint32_t> k;
  for (const auto& x : v) k.push_back(x.index());
  return k;
}

// Every element of span(gens) by enumerating coefficient tuples.
inline std::set<std::vector<std::uint32_t>> span_set(Field f, std::size_t ambient, const std::vector<Vector>& gens) {
  std::set<std::vector<std::uint32_t>> out;
  for_each_vector(f, gens.size(), [&](const Vector& c) {
    Vector v(ambient, Scalar(f));
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (std::size_t i = 0; i < ambient; ++i) v[i] += c[g] * gens[g][i];
    out.insert(key(v));
  });
  return out;
}

inline Vector bracket(const StructureTable& t, const Vector& x, const Vector& y) {
  const std::size_t n = t.dim();
  Vector out(n, Scalar(t.field()));
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      if (x[i - 1].is_zero() || y[j - 1].is_zero()) continue;
      for (std::size_t k = 1; k <= n; ++k) out[k - 1] += x[i - 1] * y[j - 1] * t.sigma(i, j, k);
    }
  return out;
}

// delta(x) with delta(b_j) = sum_k d[j*n + k] b_k.
inline Vector apply_map(const Vector& d, const Vector& x) {
  const std::size_t n = x.size();
  Vector out(n, Scalar(x.front().field()));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) out[k] += x[j] * d[j * n + k];
  return out;
}

inline bool leibniz(const StructureTable& t, const Vector& d) {
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector bi(n, Scalar(t.field())), bj(n, Scalar(t.field()));
      bi[i] = Scalar(t.field(), 1);
      bj[j] = Scalar(t.field(), 1);
      Vector lhs = apply_map(d, bracket(t, bi, bj));
      Vector a = bracket(t, apply_map(d, bi), bj), b = bracket(t, bi, apply_map(d, bj));
      for (std::size_t k = 0; k < n; ++k)
        if (!(lhs[k] == a[k] + b[k])) return false;
    }
  return true;
}

// [g, z] as a set.
inline std::set<std::vector<std::uint32_t>> image_of_ad(const StructureTable& t, const Vector& z) {
  std::set<std::vector<std::uint32_t>> out;
  for_each_vector(t.field(), t.dim(), [&](const Vector& x) { out.insert(key(bracket(t, x, z))); });
  return out;
}

// All derivations, by enumerating every n x n matrix. Only for tiny cases.
inline std::vector<Vector> all_derivations(const StructureTable& t) {
  std::vector<Vector> out;
  for_each_vector(t.field(), t.dim() * t.dim(), [&](const Vector& d) {
    if (leibniz(t, d)) out.push_back(d);
  });
  return out;
}

// delta is almost inner iff delta(z) ∈ [g, z] for every z.
inline bool almost_inner(const StructureTable& t, const Vector& d,
                         const std::vector<std::pair<Vector, std::set<std::vector<std::uint32_t>>>>& images) {
  for (const auto& [z, img] : images)
    if (!img.count(key(apply_map(d, z)))) return false;
  return true;
}

inline std::vector<std::pair<Vector, std::set<std::vector<std::uint32_t>>>> all_images(const StructureTable& t) {
  std::vector<std::pair<Vector, std::set<std::vector<std::uint32_t>>>> out;
  for_each_vector(t.field(), t.dim(), [&](const Vector& z) { out.emplace_back(z, image_of_ad(t, z)); });
  return out;
}

// log_q of a finite set size that is known to be a power of q.
inline std::size_t log_q(std::size_t count, std::size_t q) {
  std::size_t d = 0;
  while (count > 1) {
    count /= q;
    ++d;
  }
  return d;
}

// Jacobi identity from the raw constants.
inline bool jacobi(const StructureTable& t) {
  const std::size_t n = t.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector a(n, Scalar(t.field())), b = a, c = a;
        a[i] = b[j] = c[k] = Scalar(t.field(), 1);
        Vector s1 = bracket(t, a, bracket(t, b, c));
        Vector s2 = bracket(t, b, bracket(t, c, a));
        Vector s3 = bracket(t, c, bracket(t, a, b));
        for (std::size_t m = 0; m < n; ++m)
          if (!(s1[m] + s2[m] + s3[m]).is_zero()) return false;
      }
  return true;
}

// Table from a flat list of bracket coordinates for pairs i<j in lex order.
inline StructureTable table_from_digits(Field f, std::size_t n, const std::vector<Scalar>& coords) {
  StructureTable t("sample", f, n);
  std::size_t pos = 0;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      Vector v(coords.begin() + static_cast<std::ptrdiff_t>(pos), coords.begin() + static_cast<std::ptrdiff_t>(pos + n));
      t.set_bracket(i, j, v);
      pos += n;
    }
  return t;
}

// Every Lie algebra structure on F^n (n <= 3 over GF(2) is 512 tables).
inline std::vector<StructureTable> all_lie_algebras(Field f, std::size_t n) {
  std::vector<StructureTable> out;
  const std::size_t pairs = n * (n - 1) / 2;
  for_each_vector(f, pairs * n, [&](const Vector& coords) {
    StructureTable t = table_from_digits(f, n, coords);
    if (jacobi(t)) out.push_back(std::move(t));
  });
  return out;
}

// Seeded random Lie algebras: half uniform tables, half strictly upper
// triangular ([b_i, b_j] in span of b_k, k > j), kept when Jacobi holds.
inline std::vector<StructureTable> random_lie_algebras(Field f, std::size_t n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<StructureTable> out;
  std::size_t attempts = 0;
  while (out.size() < count && attempts < 200000) {
    ++attempts;
    const bool nilpotent = attempts % 2 == 0;
    StructureTable t("sample", f, n);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) {
        Vector v(n, Scalar(f));
        for (std::size_t k = nilpotent ? j + 1 : 1; k <= n; ++k) v[k - 1] = lieaid::random_scalar(f, rng);
        t.set_bracket(i, j, v);
      }
    if (jacobi(t)) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace oracle
