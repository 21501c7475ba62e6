#include "lieaid/scan.hpp"

#include <array>
#include <atomic>
#include <limits>
#include <thread>

namespace lieaid {

std::uint64_t projective_point_count(Field f, std::size_t n) {
  if (!f.is_finite()) return std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t q = f.order();
  std::uint64_t total = 0, power = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() - power) return std::numeric_limits<std::uint64_t>::max();
    total += power;  // points whose leading 1 sits at position n-1-i
    if (i + 1 < n) {
      if (power > std::numeric_limits<std::uint64_t>::max() / q) return std::numeric_limits<std::uint64_t>::max();
      power *= q;
    }
  }
  return total;
}

namespace {

struct Chunk {
  std::size_t lead;
  std::vector<std::uint32_t> prefix;  // values of coordinates lead+1 .. lead+prefix.size()
};

struct ChunkResult {
  std::vector<std::pair<std::size_t, std::vector<std::uint32_t>>> failures;
  std::uint64_t points = 0;
};

std::vector<Chunk> plan_chunks(std::uint64_t q, std::size_t n) {
  std::vector<Chunk> chunks;
  for (std::size_t lead = 0; lead < n; ++lead) {
    const std::size_t tail = n - lead - 1;
    std::size_t len = 0;
    std::uint64_t count = 1;
    while (len < tail && count < 512) {
      count *= q;
      ++len;
    }
    std::vector<std::uint32_t> prefix(len, 0);
    for (std::uint64_t c = 0; c < count; ++c) {
      chunks.push_back({lead, prefix});
      // Increment with the first prefix coordinate most significant.
      for (std::size_t d = len; d-- > 0;) {
        if (++prefix[d] < q) break;
        prefix[d] = 0;
      }
    }
  }
  return chunks;
}

// ---------------------------------------------------------------- kernels
//
// Each kernel supplies an accumulator type Acc holding [M(z) | V(z)] for a
// partial point and:
//   reset(acc, i)                 acc = B_i
//   add(acc, i, value)            acc += value * B_i
//   step(child, parent, i, value) child = parent + value * B_i, called with
//                                 value = 1, 2, ... in order after child was
//                                 set for value - 1
//   fails(acc, words)             candidate failure bits for the full point

class BitslicedKernel {
 public:
  static constexpr std::size_t kMaxRows = 32;
  struct Acc {
    std::array<std::uint64_t, kMaxRows> pos{}, neg{};
  };

  explicit BitslicedKernel(const ScanBlocks& b) : p_(b.field.characteristic()), rows_(b.rows), mcols_(b.mcols) {
    blocks_.resize(b.n);
    for (std::size_t i = 0; i < b.n; ++i)
      for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < b.mcols + b.ncand; ++c) {
          std::uint32_t v = b.blocks[i](r, c).index();
          if (v == 1) blocks_[i].pos[r] |= std::uint64_t{1} << c;
          if (v == 2) blocks_[i].neg[r] |= std::uint64_t{1} << c;
        }
    cand_mask_ = b.ncand == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << b.ncand) - 1);
  }

  void reset(Acc& acc, std::size_t i) const { acc = blocks_[i]; }

  void add(Acc& acc, std::size_t i, std::uint32_t value) const {
    const Acc& b = blocks_[i];
    for (std::size_t r = 0; r < rows_; ++r) {
      if (value == 1)
        add_row(acc.pos[r], acc.neg[r], b.pos[r], b.neg[r]);
      else if (value == 2)
        add_row(acc.pos[r], acc.neg[r], b.neg[r], b.pos[r]);
    }
  }

  void step(Acc& child, const Acc& /*parent*/, std::size_t i, std::uint32_t /*value*/) const {
    const Acc& b = blocks_[i];
    for (std::size_t r = 0; r < rows_; ++r) add_row(child.pos[r], child.neg[r], b.pos[r], b.neg[r]);
  }

  bool fails(const Acc& acc, std::vector<std::uint64_t>& words) const {
    std::array<std::uint64_t, kMaxRows> P = acc.pos, N = acc.neg;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < mcols_ && rank < rows_; ++col) {
      const std::uint64_t bit = std::uint64_t{1} << col;
      std::size_t piv = rank;
      while (piv < rows_ && !((P[piv] | N[piv]) & bit)) ++piv;
      if (piv == rows_) continue;
      std::swap(P[piv], P[rank]);
      std::swap(N[piv], N[rank]);
      const std::uint64_t pp = P[rank], pn = N[rank];
      const bool pivot_pos = pp & bit;
      for (std::size_t r = rank + 1; r < rows_; ++r) {
        if (!((P[r] | N[r]) & bit)) continue;
        const bool same = ((P[r] & bit) != 0) == pivot_pos;
        if (p_ == 2 || !same)
          add_row(P[r], N[r], pp, pn);
        else
          add_row(P[r], N[r], pn, pp);  // subtract the pivot row
      }
      ++rank;
    }
    std::uint64_t bad = 0;
    for (std::size_t r = rank; r < rows_; ++r) bad |= P[r] | N[r];
    bad = (bad >> mcols_) & cand_mask_;
    words[0] = bad;
    return bad != 0;
  }

 private:
  void add_row(std::uint64_t& ap, std::uint64_t& an, std::uint64_t bp, std::uint64_t bn) const {
    if (p_ == 2) {
      ap ^= bp;
      return;
    }
    // GF(3) with value 1 in `pos`, value 2 = -1 in `neg`.
    const std::uint64_t rp = (ap & ~(bp | bn)) | (bp & ~(ap | an)) | (an & bn);
    const std::uint64_t rn = (an & ~(bp | bn)) | (bn & ~(ap | an)) | (ap & bp);
    ap = rp;
    an = rn;
  }

  std::uint32_t p_;
  std::size_t rows_, mcols_;
  std::uint64_t cand_mask_;
  std::vector<Acc> blocks_;
};

// Prime fields below 256 with one byte per entry.
class PackedKernel {
 public:
  using Acc = std::vector<std::uint8_t>;

  explicit PackedKernel(const ScanBlocks& b)
      : p_(b.field.characteristic()), rows_(b.rows), mcols_(b.mcols), ncand_(b.ncand), width_(b.mcols + b.ncand) {
    blocks_.resize(b.n);
    for (std::size_t i = 0; i < b.n; ++i) {
      blocks_[i].resize(rows_ * width_);
      for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < width_; ++c)
          blocks_[i][r * width_ + c] = static_cast<std::uint8_t>(b.blocks[i](r, c).index());
    }
    inverse_.assign(p_, 0);
    for (std::uint32_t a = 1; a < p_; ++a)
      for (std::uint32_t x = 1; x < p_; ++x)
        if (a * x % p_ == 1) inverse_[a] = static_cast<std::uint8_t>(x);
  }

  void reset(Acc& acc, std::size_t i) const { acc = blocks_[i]; }

  void add(Acc& acc, std::size_t i, std::uint32_t value) const {
    if (value == 0) return;
    const auto& b = blocks_[i];
    for (std::size_t e = 0; e < acc.size(); ++e) acc[e] = static_cast<std::uint8_t>((acc[e] + value * b[e]) % p_);
  }

  void step(Acc& child, const Acc& /*parent*/, std::size_t i, std::uint32_t /*value*/) const {
    const auto& b = blocks_[i];
    for (std::size_t e = 0; e < child.size(); ++e) {
      std::uint32_t s = child[e] + b[e];
      child[e] = static_cast<std::uint8_t>(s >= p_ ? s - p_ : s);
    }
  }

  bool fails(const Acc& acc, std::vector<std::uint64_t>& words) const {
    thread_local std::vector<std::uint8_t> m;
    m = acc;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < mcols_ && rank < rows_; ++col) {
      std::size_t piv = rank;
      while (piv < rows_ && m[piv * width_ + col] == 0) ++piv;
      if (piv == rows_) continue;
      if (piv != rank)
        for (std::size_t c = col; c < width_; ++c) std::swap(m[piv * width_ + c], m[rank * width_ + c]);
      const std::uint32_t inv = inverse_[m[rank * width_ + col]];
      for (std::size_t r = rank + 1; r < rows_; ++r) {
        const std::uint32_t a = m[r * width_ + col];
        if (a == 0) continue;
        const std::uint32_t factor = p_ - a * inv % p_;
        for (std::size_t c = col; c < width_; ++c)
          m[r * width_ + c] = static_cast<std::uint8_t>((m[r * width_ + c] + factor * m[rank * width_ + c]) % p_);
      }
      ++rank;
    }
    std::fill(words.begin(), words.end(), 0);
    bool any = false;
    for (std::size_t r = rank; r < rows_; ++r)
      for (std::size_t c = 0; c < ncand_; ++c)
        if (m[r * width_ + mcols_ + c]) {
          words[c / 64] |= std::uint64_t{1} << (c % 64);
          any = true;
        }
    return any;
  }

 private:
  std::uint32_t p_;
  std::size_t rows_, mcols_, ncand_, width_;
  std::vector<std::vector<std::uint8_t>> blocks_;
  std::vector<std::uint8_t> inverse_;
};

// Any finite field, through exact Scalar arithmetic and rref.
class GenericKernel {
 public:
  using Acc = std::vector<Scalar>;

  explicit GenericKernel(const ScanBlocks& b) : blocks_(b), width_(b.mcols + b.ncand) {}

  void reset(Acc& acc, std::size_t i) const {
    const Matrix& m = blocks_.blocks[i];
    acc.assign(blocks_.rows * width_, Scalar(blocks_.field));
    for (std::size_t r = 0; r < blocks_.rows; ++r)
      for (std::size_t c = 0; c < width_; ++c) acc[r * width_ + c] = m(r, c);
  }

  void add(Acc& acc, std::size_t i, std::uint32_t value) const {
    if (value == 0) return;
    const Scalar v = Scalar::from_index(blocks_.field, value);
    const Matrix& m = blocks_.blocks[i];
    for (std::size_t r = 0; r < blocks_.rows; ++r)
      for (std::size_t c = 0; c < width_; ++c) acc[r * width_ + c] += v * m(r, c);
  }

  void step(Acc& child, const Acc& parent, std::size_t i, std::uint32_t value) const {
    child = parent;
    add(child, i, value);
  }

  bool fails(const Acc& acc, std::vector<std::uint64_t>& words) const {
    Matrix m(blocks_.field, blocks_.rows, width_);
    for (std::size_t r = 0; r < blocks_.rows; ++r)
      for (std::size_t c = 0; c < width_; ++c) m(r, c) = acc[r * width_ + c];
    auto ech = rref(std::move(m));
    std::fill(words.begin(), words.end(), 0);
    bool any = false;
    for (std::size_t r = 0; r < ech.rank; ++r) {
      if (ech.pivots[r] < blocks_.mcols) continue;  // rows with a zero M-part
      for (std::size_t c = 0; c < blocks_.ncand; ++c)
        if (!ech.reduced(r, blocks_.mcols + c).is_zero()) {
          words[c / 64] |= std::uint64_t{1} << (c % 64);
          any = true;
        }
    }
    return any;
  }

 private:
  const ScanBlocks& blocks_;
  std::size_t width_;
};

template <class Kernel>
class ChunkRunner {
 public:
  ChunkRunner(const Kernel& kernel, const ScanBlocks& b)
      : k_(kernel), n_(b.n), q_(static_cast<std::uint32_t>(b.field.order())), ncand_(b.ncand), levels_(b.n + 1),
        digits_(b.n, 0), words_((b.ncand + 63) / 64 + 1, 0), seen_(b.ncand, false) {}

  ChunkResult run(const Chunk& ch) {
    ChunkResult out;
    result_ = &out;
    std::fill(digits_.begin(), digits_.end(), 0);
    std::fill(seen_.begin(), seen_.end(), false);
    open_ = ncand_;
    digits_[ch.lead] = 1;
    const std::size_t start = ch.lead + 1 + ch.prefix.size();
    k_.reset(levels_[start], ch.lead);
    for (std::size_t d = 0; d < ch.prefix.size(); ++d) {
      digits_[ch.lead + 1 + d] = ch.prefix[d];
      k_.add(levels_[start], ch.lead + 1 + d, ch.prefix[d]);
    }
    recurse(start);
    return out;
  }

 private:
  // Returns false once every candidate has failed inside this chunk; later
  // points of the chunk cannot change the first failures.
  bool recurse(std::size_t pos) {
    if (pos == n_) return leaf(levels_[pos]);
    levels_[pos + 1] = levels_[pos];
    for (std::uint32_t v = 0; v < q_; ++v) {
      if (v > 0) k_.step(levels_[pos + 1], levels_[pos], pos, v);
      digits_[pos] = v;
      if (!recurse(pos + 1)) return false;
    }
    digits_[pos] = 0;
    return true;
  }

  bool leaf(const typename Kernel::Acc& acc) {
    ++result_->points;
    if (!k_.fails(acc, words_)) return true;
    for (std::size_t c = 0; c < ncand_; ++c) {
      if (seen_[c] || !((words_[c / 64] >> (c % 64)) & 1)) continue;
      seen_[c] = true;
      --open_;
      result_->failures.emplace_back(c, digits_);
    }
    return open_ > 0;
  }

  const Kernel& k_;
  std::size_t n_;
  std::uint32_t q_;
  std::size_t ncand_;
  std::vector<typename Kernel::Acc> levels_;
  std::vector<std::uint32_t> digits_;
  std::vector<std::uint64_t> words_;
  std::vector<bool> seen_;
  std::size_t open_ = 0;
  ChunkResult* result_ = nullptr;
};

template <class Kernel>
std::vector<ChunkResult> run_chunks(const Kernel& kernel, const ScanBlocks& b, const std::vector<Chunk>& chunks,
                                    unsigned threads) {
  std::vector<ChunkResult> results(chunks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    ChunkRunner<Kernel> runner(kernel, b);
    for (;;) {
      std::size_t idx = next.fetch_add(1);
      if (idx >= chunks.size()) break;
      results[idx] = runner.run(chunks[idx]);
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return results;
}

}  // namespace

std::string select_kernel(const ScanBlocks& b, ScanKernel requested) {
  const Field f = b.field;
  const bool prime = f.is_finite() && f.degree() == 1;
  const bool bitsliced_ok = prime && (f.characteristic() == 2 || f.characteristic() == 3) &&
                            b.mcols + b.ncand <= 64 && b.rows <= BitslicedKernel::kMaxRows;
  const bool packed_ok = prime && f.characteristic() < 256;
  switch (requested) {
    case ScanKernel::bitsliced:
      if (!bitsliced_ok) throw InputError("bit-sliced kernel needs GF(2) or GF(3) and at most 64 columns");
      return "bitsliced";
    case ScanKernel::packed:
      if (!packed_ok) throw InputError("packed kernel needs a prime field with p < 256");
      return "packed";
    case ScanKernel::generic: return "generic";
    case ScanKernel::automatic: break;
  }
  if (bitsliced_ok) return "bitsliced";
  if (packed_ok) return "packed";
  return "generic";
}

ScanOutcome scan_projective(const ScanBlocks& b, const ScanOptions& options) {
  if (!b.field.is_finite()) throw InputError("exhaustive scan needs a finite field");
  if (b.blocks.size() != b.n) throw MismatchError("scan: expected one block per coordinate");
  for (const auto& m : b.blocks)
    if (m.rows() != b.rows || m.cols() != b.mcols + b.ncand) throw MismatchError("scan: block shape mismatch");
  const std::uint64_t total = projective_point_count(b.field, b.n);
  if (total > options.budget)
    throw InputError("exhaustive scan needs " + std::to_string(total) + " points, budget is " +
                     std::to_string(options.budget));

  ScanOutcome outcome;
  outcome.first_failure.assign(b.ncand, std::nullopt);
  outcome.kernel = select_kernel(b, options.kernel);
  if (b.n == 0) return outcome;
  // No rows means M(z) and every v(z) vanish identically: nothing can fail.
  if (b.rows == 0 || b.ncand == 0) {
    outcome.points = total;
    return outcome;
  }

  const auto chunks = plan_chunks(b.field.order(), b.n);
  std::vector<ChunkResult> results;
  if (outcome.kernel == "bitsliced")
    results = run_chunks(BitslicedKernel(b), b, chunks, options.threads);
  else if (outcome.kernel == "packed")
    results = run_chunks(PackedKernel(b), b, chunks, options.threads);
  else
    results = run_chunks(GenericKernel(b), b, chunks, options.threads);

  for (const auto& r : results) {
    outcome.points += r.points;
    for (const auto& [cand, digits] : r.failures) {
      if (outcome.first_failure[cand]) continue;
      Vector z;
      for (auto d : digits) z.push_back(Scalar::from_index(b.field, d));
      outcome.first_failure[cand] = std::move(z);
    }
  }
  return outcome;
}

}  // namespace lieaid
