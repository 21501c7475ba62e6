#pragma once

// Exhaustive projective scan over F^n for finite F.
//
// The scanned matrix is linear in the point: [M(z) | V(z)] = sum_i z_i B_i
// for fixed blocks B_i (rows x (mcols + ncand)). At every projective point
// the M-columns are eliminated once; candidate column c fails at z when a
// row with zero M-part keeps a non-zero entry in column c, i.e. when v_c(z)
// lies outside the column space of M(z).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lieaid/linalg.hpp"

namespace lieaid {

struct ScanBlocks {
  Field field;
  std::size_t n = 0;      // number of point coordinates
  std::size_t rows = 0;   // rows of M after trimming
  std::size_t mcols = 0;  // columns of M after trimming
  std::size_t ncand = 0;  // candidate columns appended to M
  /// blocks[i] is a rows x (mcols + ncand) matrix, i = 0..n-1.
  std::vector<Matrix> blocks;
};

enum class ScanKernel { automatic, generic, packed, bitsliced };

struct ScanOptions {
  unsigned threads = 1;
  std::uint64_t budget = 100'000'000;  // maximum number of projective points
  ScanKernel kernel = ScanKernel::automatic;
};

struct ScanOutcome {
  /// First failing point per candidate in scan order, if any.
  std::vector<std::optional<Vector>> first_failure;
  std::uint64_t points = 0;
  std::string kernel;
};

/// (q^n - 1) / (q - 1), saturating at UINT64_MAX.
std::uint64_t projective_point_count(Field f, std::size_t n);

/// Scan order: the leading non-zero coordinate is 1; points are grouped by
/// the position of that coordinate (first position first) and the remaining
/// coordinates run lexicographically with field indices ascending. The
/// result does not depend on the thread count.
ScanOutcome scan_projective(const ScanBlocks& blocks, const ScanOptions& options);

/// Name of the kernel scan_projective would pick for these blocks.
std::string select_kernel(const ScanBlocks& blocks, ScanKernel requested);

}  // namespace lieaid
