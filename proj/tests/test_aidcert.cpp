#include <doctest.h>

#include "fixtures.hpp"
#include "lieaid/aidcert.hpp"
#include "oracles.hpp"

using namespace lieaid;

namespace {

Poly Z(const RingPtr& r, const char* s) { return Poly::parse(r, s); }

// Every almost-inner derivation of t, by enumeration.
std::vector<Vector> oracle_aid(const StructureTable& t) {
  const auto images = oracle::all_images(t);
  std::vector<Vector> out;
  for (const auto& d : oracle::all_derivations(t))
    if (oracle::almost_inner(t, d, images)) out.push_back(d);
  return out;
}

// delta with delta - ad(a) mapping g into the centre for some a.
bool oracle_central(const StructureTable& t, const Vector& d) {
  const std::size_t n = t.dim();
  Subspace z = center(t);
  bool found = false;
  oracle::for_each_vector(t.field(), n, [&](const Vector& a) {
    if (found) return;
    Vector ad = flatten(ad_matrix(t, a));
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) {
      Vector row(n, Scalar(t.field()));
      for (std::size_t k = 0; k < n; ++k) row[k] = d[j * n + k] - ad[j * n + k];
      ok = z.contains(row);
    }
    found = ok;
  });
  return found;
}

void check_against_oracle(const StructureTable& t) {
  AidConfig c;
  c.patience = 50;
  AidResult r = compute_aid(t, c);
  REQUIRE(r.report.complete());
  const auto aid = oracle_aid(t);
  CHECK(oracle::log_q(aid.size(), t.field().order()) == r.aid_lower.dim());
  for (const auto& d : aid) CHECK(r.aid_lower.contains(d));
  Subspace caid = compute_caid(t, r.aid_lower);
  std::size_t central = 0;
  for (const auto& d : aid) {
    const bool is_c = oracle_central(t, d);
    central += is_c;
    CHECK(caid.contains(d) == is_c);
  }
  CHECK(oracle::log_q(central, t.field().order()) == caid.dim());
}

}  // namespace

TEST_CASE("g6_23 symbolic system") {
  StructureTable t = catalog("g6_23");
  SymbolicSystem sys = build_symbolic(t, {flatten(fixture::g623_delta1()), flatten(fixture::g623_delta2())});
  RingPtr r = sys.ring;
  CHECK(sys.kept_rows == std::vector<std::size_t>{2, 4, 5});
  CHECK(sys.kept_cols == std::vector<std::size_t>{0, 1, 2, 3});
  const char* expect[3][4] = {{"-z2", "z1", "0", "0"}, {"-z3", "-z4", "z1", "z2"}, {"-z4", "0", "0", "z1"}};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(sys.m(i, j) == Z(r, expect[i][j]));
  CHECK(sys.vcols[0] == std::vector<Poly>{Z(r, "-z1"), Z(r, "0"), Z(r, "0")});
  CHECK(sys.vcols[1] == std::vector<Poly>{Z(r, "0"), Z(r, "-z2"), Z(r, "0")});

  for (std::size_t c = 0; c < 2; ++c) {
    CandidateVerdict v = certify_minors(sys, c, 8, WitnessOptions{});
    CHECK(v.kind == VerdictKind::certified);
    CHECK(v.method == "minors");
    REQUIRE(v.steps.size() == 3);
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(v.steps[k].r == k + 1);
      CHECK(v.steps[k].holds);
      CHECK(v.steps[k].minors_tested > 0);
    }
  }
}

TEST_CASE("g6_23 end to end") {
  StructureTable t = catalog("g6_23");
  AidResult r = compute_aid(t, AidConfig{});
  CHECK(r.report.der_dim == 14);
  CHECK(r.report.inn_dim == 4);
  CHECK(r.report.complement_dim == 10);
  CHECK(r.report.refined_dim == 2);
  CHECK(r.report.complete());
  CHECK(r.aid_lower.dim() == 6);
  CHECK(r.aid_lower.contains(flatten(fixture::g623_delta1())));
  CHECK(r.aid_lower.contains(flatten(fixture::g623_delta2())));
  for (const auto& v : r.report.verdicts) {
    CHECK(v.kind == VerdictKind::certified);
    CHECK(v.method == "minors");
  }
  Subspace caid = compute_caid(t, r.aid_lower);
  CHECK(r.spaces.inn.dim() <= caid.dim());
  CHECK(caid.contains(r.spaces.inn));
  CHECK(r.aid_lower.contains(caid));
}

TEST_CASE("dim5 over Q(i): refutation at (1, 1, 0, -i, 1)") {
  StructureTable t = catalog("dim5_L8211");
  Field f = t.field();
  Matrix delta(f, 5, 5);
  delta(0, 0) = Scalar(f, -1);
  delta(1, 1) = Scalar(f, -1);
  REQUIRE(is_derivation(t, delta));
  SymbolicSystem sys = build_symbolic(t, {flatten(delta)});
  CandidateVerdict v = certify_minors(sys, 0, 8, WitnessOptions{});
  CHECK(v.kind == VerdictKind::refuted);
  REQUIRE(v.steps.size() >= 3);
  CHECK(v.steps[0].holds);
  CHECK(v.steps[1].holds);
  CHECK_FALSE(v.steps[2].holds);
  REQUIRE(v.witness);
  CHECK_FALSE(rank_check_at(sys, 0, *v.witness));

  Vector zt = {Scalar(f, 1), Scalar(f, 1), Scalar(f, 0), -Scalar::unit_i(f), Scalar(f, 1)};
  CHECK_FALSE(rank_check_at(sys, 0, zt));
  std::vector<Scalar> generic = {Scalar(f, 1), Scalar(f, 2), Scalar(f, 0), Scalar(f, 3), Scalar(f, 1)};
  CHECK(rank_check_at(sys, 0, generic));

  DerivationSpaces s = compute_spaces(t);
  CHECK(s.complement_u.dim() == 2);
  Subspace v1 = refine_with_witness(t, s.complement_u, zt);
  CHECK(v1.dim() == 1);
  CHECK_THROWS_AS(refine_with_witness(t, s.complement_u, zero_vector(f, 5)), Error);

  AidResult r = compute_aid(t, AidConfig{});
  CHECK(r.report.refined_dim == 2);
  CHECK(r.report.complete());
  CHECK(r.aid_lower == r.spaces.inn);
  CHECK(r.report.refutations.size() == 2);
  CHECK(r.report.refutations.back().v_dim_after == 0);
}

TEST_CASE("dim5 over Q: no witness on the grid") {
  StructureTable t = catalog("dim5_L8211(Q)");
  AidResult r = compute_aid(t, AidConfig{});
  CHECK(r.report.refined_dim == 2);
  CHECK_FALSE(r.report.complete());
  CHECK(r.report.aid_lower == 4);
  CHECK(r.report.aid_upper == 6);
  REQUIRE_FALSE(r.report.verdicts.empty());
  const CandidateVerdict& v = r.report.verdicts.front();
  CHECK(v.kind == VerdictKind::inconclusive);
  CHECK_FALSE(v.witness.has_value());
  REQUIRE_FALSE(v.obstruction.empty());
  RingPtr ring = make_ring(Field::rational(), {"z1", "z2", "z3", "z4", "z5", "y"});
  std::vector<Poly> basis;
  for (const auto& s : v.obstruction) basis.push_back(Poly::parse(ring, s));
  CHECK(ideal_member(Z(ring, "z4^2 + z5^2"), PolyIdeal(ring, basis)));
  CHECK_FALSE(PolyIdeal(ring, basis).is_unit());
}

TEST_CASE("definition-level oracle on small algebras") {
  for (const char* name : {"heisenberg3(GF(2))", "heisenberg3(GF(3))", "abelian(2,GF(2))"}) {
    CAPTURE(std::string(name));
    check_against_oracle(catalog(name));
  }
  for (const auto& t : oracle::all_lie_algebras(Field::parse("GF(2)"), 3)) check_against_oracle(t);
}

TEST_CASE("minors and exhaustive verification agree") {
  for (const char* name : {"heisenberg3(GF(2))", "heisenberg3(GF(3))", "heisenberg3(GF(5))", "g6_23(GF(2))",
                           "dim5_L8211(GF(2))", "dim5_L8211(GF(3))", "abelian(3,GF(2))"}) {
    CAPTURE(std::string(name));
    StructureTable t = catalog(name);
    DerivationSpaces s = compute_spaces(t);
    const auto cands = s.complement_u.basis_vectors();
    if (cands.empty()) continue;
    SymbolicSystem sys = build_symbolic(t, cands);
    auto scan = exhaustive_verify(sys, ScanOptions{});
    for (std::size_t c = 0; c < cands.size(); ++c) {
      CandidateVerdict m = certify_minors(sys, c, 12, WitnessOptions{});
      CHECK(m.kind == scan[c].kind);
      if (m.witness) CHECK_FALSE(rank_check_at(sys, c, *m.witness));
    }
    AidConfig a, b;
    a.method = CertMethod::minors;
    a.minors_limit = 12;
    b.method = CertMethod::exhaustive;
    AidResult ra = compute_aid(t, a), rb = compute_aid(t, b);
    CHECK(ra.report.complete());
    CHECK(rb.report.complete());
    CHECK(ra.aid_lower == rb.aid_lower);
  }
}

TEST_CASE("g3 over GF(3) and its GF(27) extension") {
  StructureTable t = catalog("g3_sah");
  AidConfig c;
  c.threads = 2;
  AidResult r = compute_aid(t, c);
  CHECK(r.report.der_dim == 45);
  CHECK(r.report.inn_dim == 12);
  CHECK(r.report.refined_dim == 21);
  CHECK(r.report.points_scanned == 7174453);
  CHECK(r.report.complete());
  CHECK(r.aid_lower.dim() == 33);
  CHECK(r.aid_lower.contains(flatten(fixture::g3_d1())));
  CHECK(r.aid_lower.contains(flatten(fixture::g3_d2())));

  AidResult big = compute_aid(catalog("g3_sah(GF(27))"), AidConfig{});
  CHECK(big.report.refined_dim == 0);
  CHECK(big.aid_lower == big.spaces.inn);
}
