#include <doctest.h>

#include "fixtures.hpp"
#include "lieaid/aidcert.hpp"
#include "lieaid/sha.hpp"
#include "oracles.hpp"

using namespace lieaid;

TEST_CASE("Sha of g3") {
  StructureTable t = catalog("g3_sah");
  AidConfig c;
  c.patience = 300;
  AidResult r = compute_aid(t, c);
  REQUIRE(r.report.complete());
  QuotientAlgebra q = build_quotient(r.aid_lower, r.spaces.inn, t, r.candidates.basis_vectors(), "sha");
  CHECK(q.table.dim() == 21);
  CHECK_FALSE(is_abelian(q));
  CHECK_FALSE(validate(q.table).has_value());
  CHECK(oracle::jacobi(q.table));

  // [d1, d2] survives in the quotient.
  auto c1 = coset_of(q, r.aid_lower, flatten(fixture::g3_d1()));
  auto c2 = coset_of(q, r.aid_lower, flatten(fixture::g3_d2()));
  REQUIRE(c1);
  REQUIRE(c2);
  Vector br = bracket_cosets(q, *c1, *c2);
  CHECK_FALSE(is_zero(br));
  auto direct = coset_of(q, r.aid_lower, flatten(derivation_bracket(fixture::g3_d1(), fixture::g3_d2())));
  REQUIRE(direct);
  CHECK(*direct == br);
  // Inner derivations map to the zero coset.
  CHECK(is_zero(*coset_of(q, r.aid_lower, r.spaces.inn.basis_vector(0))));
  CHECK_FALSE(coset_of(q, r.aid_lower, flatten(Matrix::identity(t.field(), 15))).has_value());
}

TEST_CASE("Out and trivial quotients") {
  StructureTable g = catalog("g6_23");
  DerivationSpaces s = compute_spaces(g);
  QuotientAlgebra out = build_quotient(s.der, s.inn, g);
  CHECK(out.table.dim() == 10);
  CHECK(oracle::jacobi(out.table));

  StructureTable h = catalog("heisenberg3");
  DerivationSpaces hs = compute_spaces(h);
  QuotientAlgebra zero = build_quotient(hs.inn, hs.inn, h);
  CHECK(zero.table.dim() == 0);
  CHECK(is_abelian(zero));
  CHECK(build_quotient(hs.der, hs.inn, h).table.dim() == 4);
}

TEST_CASE("quotient errors") {
  StructureTable g = catalog("g6_23");
  DerivationSpaces s = compute_spaces(g);
  // U is not an ideal of Der.
  CHECK_THROWS_AS(build_quotient(s.der, s.complement_u, g), MismatchError);
  // Inn plus one outer derivation is not closed in general; the pair is named.
  Subspace part = subspace_sum(s.inn, Subspace::span(g.field(), 36, {s.complement_u.basis_vector(0)}));
  bool closed = true;
  for (const auto& a : part.basis_vectors())
    for (const auto& b : part.basis_vectors())
      closed = closed && part.contains(flatten(derivation_bracket(unflatten(a, 6), unflatten(b, 6))));
  if (!closed) CHECK_THROWS_AS(build_quotient(part, s.inn, g), MismatchError);
  // Representatives that are dependent modulo the denominator.
  std::vector<Vector> reps(10, s.complement_u.basis_vector(0));
  CHECK_THROWS_AS(build_quotient(s.der, s.inn, g, reps), MismatchError);
}
