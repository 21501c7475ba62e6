#include <doctest.h>

#include <random>

#include "lieaid/linalg.hpp"
#include "oracles.hpp"

using namespace lieaid;

namespace {

Vector ints(Field f, std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(Scalar(f, x));
  return v;
}

Vector random_vector(Field f, std::size_t n, std::mt19937_64& rng) {
  Vector v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_scalar(f, rng, 2));
  return v;
}

Subspace random_subspace(Field f, std::size_t ambient, std::size_t gens, std::mt19937_64& rng) {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < gens; ++i) vs.push_back(random_vector(f, ambient, rng));
  return Subspace::span(f, ambient, vs);
}

}  // namespace

TEST_CASE("rref of a fixed rational matrix") {
  Field q = Field::rational();
  Matrix m = Matrix::from_rows(q, 4, {ints(q, {1, 2, 3, 4}), ints(q, {2, 4, 6, 8}), ints(q, {0, 1, 1, 1})});
  auto e = rref(m);
  CHECK(e.rank == 2);
  CHECK(e.pivots == std::vector<std::size_t>{0, 1});
  CHECK(e.reduced.row_vector(0) == ints(q, {1, 0, 1, 2}));
  CHECK(e.reduced.row_vector(1) == ints(q, {0, 1, 1, 1}));
  Subspace k = kernel(m);
  CHECK(k.dim() == 2);
  for (const auto& v : k.basis_vectors()) CHECK(is_zero(m.apply(v)));
}

TEST_CASE("rank-nullity and solve agree with rank") {
  std::mt19937_64 rng(3);
  for (Field f : {Field::rational(), Field::gaussian_rational(), Field::parse("GF(2)"), Field::parse("GF(3)"),
                  Field::parse("GF(9)")}) {
    for (int it = 0; it < 50; ++it) {
      const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 6;
      Matrix m(f, r, c);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = (rng() % 3 == 0) ? Scalar(f) : random_scalar(f, rng, 2);
      CHECK(rank(m) + kernel(m).dim() == c);
      CHECK(rank(m) == rank(m.transpose()));
      Vector b = random_vector(f, r, rng);
      auto x = solve(m, b);
      Matrix col(f, r, 1);
      for (std::size_t i = 0; i < r; ++i) col(i, 0) = b[i];
      CHECK(x.has_value() == (rank(m) == rank(m.augment(col))));
      if (x) CHECK(m.apply(*x) == b);
    }
  }
}

TEST_CASE("dimension formula and complements") {
  std::mt19937_64 rng(5);
  for (Field f : {Field::rational(), Field::gaussian_rational(), Field::parse("GF(2)"), Field::parse("GF(3)")}) {
    for (int it = 0; it < 60; ++it) {
      const std::size_t n = 2 + rng() % 6;
      Subspace a = random_subspace(f, n, rng() % (n + 1), rng);
      Subspace b = random_subspace(f, n, rng() % (n + 1), rng);
      Subspace s = subspace_sum(a, b), i = subspace_intersect(a, b);
      CHECK(a.dim() + b.dim() == s.dim() + i.dim());
      CHECK(s.contains(a));
      CHECK(s.contains(b));
      CHECK(a.contains(i));
      CHECK(b.contains(i));
      Subspace c = subspace_complement(i, a);
      CHECK(c.dim() + i.dim() == a.dim());
      CHECK(subspace_intersect(c, i).dim() == 0);
      CHECK(subspace_sum(c, i) == a);
      // Modular law: (A ∩ S) + B = S ∩ (A + B) whenever B <= S.
      Subspace lhs = subspace_sum(subspace_intersect(a, s), b);
      Subspace rhs = subspace_intersect(s, subspace_sum(a, b));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("intersection against brute force over GF(2)^4 and GF(3)^3") {
  std::mt19937_64 rng(9);
  for (auto [f, n] : {std::pair{Field::parse("GF(2)"), std::size_t{4}}, std::pair{Field::parse("GF(3)"), std::size_t{3}}}) {
    for (int it = 0; it < 100; ++it) {
      std::vector<Vector> ga, gb;
      for (std::size_t k = rng() % 4; k > 0; --k) ga.push_back(random_vector(f, n, rng));
      for (std::size_t k = rng() % 4; k > 0; --k) gb.push_back(random_vector(f, n, rng));
      auto sa = oracle::span_set(f, n, ga), sb = oracle::span_set(f, n, gb);
      std::size_t common = 0;
      for (const auto& v : sa) common += sb.count(v);
      Subspace i = subspace_intersect(Subspace::span(f, n, ga), Subspace::span(f, n, gb));
      CHECK(oracle::log_q(common, f.order()) == i.dim());
      for (const auto& v : i.basis_vectors()) {
        CHECK(sa.count(oracle::key(v)));
        CHECK(sb.count(oracle::key(v)));
      }
      CHECK(oracle::log_q(sa.size(), f.order()) == Subspace::span(f, n, ga).dim());
    }
  }
}

TEST_CASE("quotient coordinates") {
  std::mt19937_64 rng(13);
  Field f = Field::rational();
  for (int it = 0; it < 30; ++it) {
    Subspace big = random_subspace(f, 6, 4, rng);
    std::vector<Vector> sg;
    for (int k = 0; k < 2; ++k) sg.push_back(big.combine(random_vector(f, big.dim(), rng)));
    Subspace small = Subspace::span(f, 6, sg);
    QuotientMap q(big, small);
    CHECK(q.dim() == big.dim() - small.dim());
    Vector coeffs = random_vector(f, q.dim(), rng);
    Vector v = zero_vector(f, 6);
    for (std::size_t r = 0; r < q.dim(); ++r) axpy(v, coeffs[r], q.representatives()[r]);
    if (small.dim() > 0) axpy(v, Scalar(f, 5), small.basis_vector(0));
    CHECK(q.coordinates(v) == coeffs);
    CHECK_FALSE(q.coordinates(unit_vector(f, 6, 0)).has_value() != big.contains(unit_vector(f, 6, 0)));

    QuotientMap explicit_reps(small, q.representatives());
    CHECK(explicit_reps.coordinates(v) == coeffs);
  }
  Subspace s = Subspace::span(f, 2, {ints(f, {1, 0})});
  CHECK_THROWS_AS(QuotientMap(s, std::vector<Vector>{ints(f, {2, 0})}), MismatchError);
}

TEST_CASE("subspace coordinates and containment") {
  Field f = Field::parse("GF(5)");
  Subspace s = Subspace::span(f, 3, {ints(f, {1, 2, 3}), ints(f, {0, 1, 4})});
  Vector v = add(scale(Scalar(f, 3), ints(f, {1, 2, 3})), ints(f, {0, 1, 4}));
  CHECK(s.contains(v));
  auto c = s.coordinates(v);
  REQUIRE(c);
  CHECK(s.combine(*c) == v);
  CHECK_FALSE(s.contains(ints(f, {0, 0, 1})));
  CHECK(Subspace::zero(f, 3).dim() == 0);
  CHECK(Subspace::full(f, 3).contains(s));
  CHECK_THROWS_AS(quotient_basis(Subspace::zero(f, 3), s), Error);
}
