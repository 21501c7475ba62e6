#pragma once

// Certification of candidate derivations: the symbolic system
// M(z) x = v_delta(z), pointwise rank checks, the minors-ideal test, witness
// search, the exhaustive finite-field scan and the AID / CAID pipelines.

#include <optional>
#include <string>
#include <vector>

#include "lieaid/derivations.hpp"
#include "lieaid/polyideal.hpp"
#include "lieaid/scan.hpp"

namespace lieaid {

struct SymbolicSystem {
  RingPtr ring;  // F[z1..zn]
  std::size_t n = 0;
  PolyMatrix m;                          // trimmed M(z)
  std::vector<std::vector<Poly>> vcols;  // trimmed v_delta(z), one per candidate
  std::vector<std::size_t> kept_rows;    // 0-based indices into b_1..b_n
  std::vector<std::size_t> kept_cols;
  std::vector<Vector> candidates;  // flattened derivations
};

/// M(z) with m_{k,j} = sum_i z_i sigma_{i,j}^k and v_delta(z)_k =
/// sum_i z_i d_{i,k}. Rows vanishing in M and in every v column are dropped,
/// as are zero columns of M.
SymbolicSystem build_symbolic(const StructureTable& t, const std::vector<Vector>& candidates);

/// The same system restricted to one candidate and trimmed again.
SymbolicSystem single_candidate(const SymbolicSystem& sys, std::size_t candidate);

/// True iff v_delta(z) lies in the column space of M(z).
bool rank_check_at(const SymbolicSystem& sys, std::size_t candidate, std::span<const Scalar> z);

enum class VerdictKind { certified, refuted, inconclusive };

struct MinorsStep {
  std::size_t r = 0;
  bool holds = true;
  std::size_t minors_tested = 0;
  std::string failing_minor;  // first minor of M_delta outside sqrt(I_r)
};

struct WitnessSearch {
  std::optional<Vector> point;
  std::vector<std::string> basis;  // Groebner basis of <K_r, w*y - 1>
  std::uint64_t points_tried = 0;
  bool truncated = false;
};

struct CandidateVerdict {
  VerdictKind kind = VerdictKind::inconclusive;
  std::string method;  // "minors" | "exhaustive"
  std::vector<MinorsStep> steps;
  std::optional<Vector> witness;
  std::vector<std::string> obstruction;
  std::string reason;
  bool fails_at_r1 = false;
  std::uint64_t points = 0;
};

struct WitnessOptions {
  int grid_height = 3;
  std::uint64_t point_cap = 250'000;
  std::uint64_t scan_budget = 100'000'000;
  unsigned threads = 1;
};

/// Minors test for one candidate, falling back to find_witness on the first
/// failing containments.
CandidateVerdict certify_minors(const SymbolicSystem& sys, std::size_t candidate, std::size_t size_limit,
                                const WitnessOptions& options);

/// A point where all r x r minors of M vanish and w does not. Over finite
/// fields the search is exhaustive; over Q and Q(i) a Groebner basis of
/// <K_r, w*y - 1> is evaluated on a grid of small-height points.
WitnessSearch find_witness(const SymbolicSystem& sys, std::size_t candidate, std::size_t r, const Poly& w,
                           const WitnessOptions& options);

/// V ∩ D_z; throws Error unless the result is strictly smaller than V.
Subspace refine_with_witness(const StructureTable& t, const Subspace& v, std::span<const Scalar> z);

/// Scan blocks for every candidate of sys.
ScanBlocks scan_blocks(const SymbolicSystem& sys);
/// One verdict per candidate from a full projective scan.
std::vector<CandidateVerdict> exhaustive_verify(const SymbolicSystem& sys, const ScanOptions& options,
                                                ScanOutcome* stats = nullptr);

enum class CertMethod { automatic, minors, exhaustive };

struct AidConfig {
  std::uint64_t seed = 0;
  std::size_t probe_budget = 20000;
  std::size_t patience = 4000;
  std::size_t minors_limit = 8;
  std::uint64_t scan_budget = 100'000'000;
  int grid_height = 3;
  unsigned threads = 1;
  CertMethod method = CertMethod::automatic;
};

struct Refutation {
  Vector candidate;
  Vector witness;
  std::string method;
  std::size_t v_dim_after = 0;
};

struct CertificationReport {
  std::string algebra;
  Field field = Field::rational();
  AidConfig config;
  std::size_t der_dim = 0, inn_dim = 0, complement_dim = 0;
  std::size_t probes = 0;
  std::vector<std::size_t> refine_dims;
  std::size_t refined_dim = 0;  // dim V after probing
  std::vector<Refutation> refutations;
  std::vector<Vector> candidates;  // final candidate basis
  std::vector<CandidateVerdict> verdicts;
  std::uint64_t points_scanned = 0;
  std::string scan_kernel;
  std::size_t aid_lower = 0, aid_upper = 0;
  double seconds = 0;

  bool complete() const { return aid_lower == aid_upper; }
};

struct AidResult {
  DerivationSpaces spaces;
  Subspace certified;  // certified part of the final V
  Subspace candidates;  // final V
  Subspace aid_lower;   // Inn ⊕ certified
  Subspace aid_upper;   // Inn ⊕ V
  CertificationReport report;
};

AidResult compute_aid(const StructureTable& t, const AidConfig& config);

/// Linear maps g -> z(g), flattened.
Subspace central_maps(const StructureTable& t);
/// AID ∩ (Inn + Hom(g, z(g))).
Subspace compute_caid(const StructureTable& t, const Subspace& aid);

}  // namespace lieaid
