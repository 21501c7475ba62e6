#include <doctest.h>

#include <limits>

#include "lieaid/aidcert.hpp"
#include "oracles.hpp"

using namespace lieaid;

namespace {

// Projective points in scan order: leading 1 at position p, p ascending,
// then the tail lexicographically with the first coordinate slowest.
std::vector<Vector> projective_points(Field f, std::size_t n) {
  std::vector<Scalar> by_index(f.order(), Scalar(f));
  for (const auto& x : field_enumerate(f)) by_index[x.index()] = x;
  std::vector<Vector> out;
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t tail = n - p - 1;
    std::vector<std::size_t> idx(tail, 0);
    for (;;) {
      Vector v(n, Scalar(f));
      v[p] = Scalar(f, 1);
      for (std::size_t i = 0; i < tail; ++i) v[p + 1 + i] = by_index[idx[i]];
      out.push_back(v);
      std::size_t d = tail;
      while (d > 0 && ++idx[d - 1] == f.order()) idx[--d] = 0;
      if (d == 0) break;
    }
  }
  return out;
}

// First point z with delta(z) outside [g, z], straight from the definition.
std::optional<Vector> first_failure(const StructureTable& t, const Vector& d, const std::vector<Vector>& points) {
  for (const auto& z : points)
    if (!oracle::image_of_ad(t, z).count(oracle::key(oracle::apply_map(d, z)))) return z;
  return std::nullopt;
}

void compare_with_oracle(const StructureTable& t) {
  DerivationSpaces s = compute_spaces(t);
  if (s.complement_u.dim() == 0) return;
  const auto cands = s.complement_u.basis_vectors();
  SymbolicSystem sys = build_symbolic(t, cands);
  ScanBlocks blocks = scan_blocks(sys);
  const auto points = projective_points(t.field(), t.dim());
  std::vector<std::optional<Vector>> expect;
  for (const auto& d : cands) expect.push_back(first_failure(t, d, points));

  std::vector<ScanKernel> kernels = {ScanKernel::generic};
  if (select_kernel(blocks, ScanKernel::automatic) != "generic") kernels.push_back(ScanKernel::packed);
  if (select_kernel(blocks, ScanKernel::automatic) == "bitsliced") kernels.push_back(ScanKernel::bitsliced);
  for (auto k : kernels)
    for (unsigned threads : {1u, 3u}) {
      ScanOptions o;
      o.kernel = k;
      o.threads = threads;
      ScanOutcome out = scan_projective(blocks, o);
      CHECK(out.first_failure == expect);
      for (std::size_t c = 0; c < cands.size(); ++c)
        if (out.first_failure[c]) CHECK_FALSE(rank_check_at(sys, c, *out.first_failure[c]));
    }
}

}  // namespace

TEST_CASE("projective point counts") {
  CHECK(projective_point_count(Field::parse("GF(3)"), 15) == 7174453);
  CHECK(projective_point_count(Field::parse("GF(3)"), 7) == 1093);
  CHECK(projective_point_count(Field::parse("GF(2)"), 4) == 15);
  CHECK(projective_point_count(Field::parse("GF(5)"), 1) == 1);
  CHECK(projective_point_count(Field::parse("GF(27)"), 15) == std::numeric_limits<std::uint64_t>::max());
  CHECK(projective_points(Field::parse("GF(3)"), 4).size() == 40);
}

TEST_CASE("kernels agree with the definition") {
  for (std::string name : {"heisenberg3(GF(2))", "heisenberg3(GF(3))", "heisenberg3(GF(5))", "g6_23(GF(2))",
                           "g6_23(GF(3))", "psl3_f3", "heisenberg3(GF(4))"}) {
    CAPTURE(name);
    compare_with_oracle(catalog(name));
  }
  for (const auto& t : oracle::random_lie_algebras(Field::parse("GF(2)"), 4, 12, 3)) compare_with_oracle(t);
  for (const auto& t : oracle::random_lie_algebras(Field::parse("GF(3)"), 4, 8, 5)) compare_with_oracle(t);
}

TEST_CASE("scan of the refined g3 candidates is thread independent") {
  StructureTable t = catalog("g3_sah");
  DerivationSpaces s = compute_spaces(t);
  ProbePlan p;
  p.patience = 300;
  Subspace v = refine_candidates(s, t, p).v;
  REQUIRE(v.dim() == 21);
  // Add U back so some candidates fail and the chunk early exit is exercised.
  std::vector<Vector> cands = v.basis_vectors();
  cands.push_back(s.complement_u.basis_vector(0));
  SymbolicSystem sys = build_symbolic(t, cands);
  ScanBlocks blocks = scan_blocks(sys);
  CHECK(select_kernel(blocks, ScanKernel::automatic) == "bitsliced");
  ScanOptions o1;
  ScanOptions o4;
  o4.threads = 4;
  ScanOutcome a = scan_projective(blocks, o1), b = scan_projective(blocks, o4);
  CHECK(a.points == 7174453);
  CHECK(a.points == b.points);
  CHECK(a.first_failure == b.first_failure);
  for (std::size_t c = 0; c < 21; ++c) CHECK_FALSE(a.first_failure[c].has_value());
  const bool last_in_v = v.contains(cands.back());
  CHECK(a.first_failure[21].has_value() == !last_in_v);
}

TEST_CASE("scan errors") {
  StructureTable t = catalog("g6_23");
  SymbolicSystem sys = build_symbolic(t, compute_spaces(t).complement_u.basis_vectors());
  CHECK_THROWS_AS(scan_projective(scan_blocks(sys), ScanOptions{}), InputError);
  StructureTable g3 = catalog("g3_sah");
  SymbolicSystem s3 = build_symbolic(g3, {compute_spaces(g3).complement_u.basis_vector(0)});
  ScanOptions tight;
  tight.budget = 1000;
  CHECK_THROWS_AS(scan_projective(scan_blocks(s3), tight), InputError);
  StructureTable h5 = catalog("heisenberg3(GF(5))");
  ScanBlocks b5 = scan_blocks(build_symbolic(h5, compute_spaces(h5).complement_u.basis_vectors()));
  CHECK(select_kernel(b5, ScanKernel::automatic) == "packed");
  CHECK_THROWS_AS(select_kernel(b5, ScanKernel::bitsliced), InputError);
  ScanBlocks b4 = scan_blocks(build_symbolic(catalog("heisenberg3(GF(4))"), {}));
  CHECK(select_kernel(b4, ScanKernel::automatic) == "generic");
  CHECK_THROWS_AS(select_kernel(b4, ScanKernel::packed), InputError);
}
