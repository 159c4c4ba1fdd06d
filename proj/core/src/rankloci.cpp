#include "grpinv/rankloci.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

namespace grpinv {

std::uint64_t RankProfile::points(std::size_t k) const {
  if (k == 0 || k > max_rank() + 1) throw usage_error("rank ideal index out of range");
  return std::accumulate(counts.begin(), counts.begin() + static_cast<std::ptrdiff_t>(k), std::uint64_t{0});
}

std::vector<std::uint64_t> RankProfile::chain() const {
  std::vector<std::uint64_t> out;
  for (std::size_t k = 1; k <= max_rank(); ++k) out.push_back(points(k));
  return out;
}

std::uint64_t RankProfile::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("GRPINV_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace {

std::uint64_t saturating_power(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

// A set of points sharing a fixed leading coordinate: v_lead = 1, coordinates
// before it 0, coordinates after it free. lead == nvars means all coordinates
// are free (plain enumeration including the origin).
struct Block {
  std::size_t lead;
  std::uint64_t size;
  std::uint64_t weight;
};

struct Chunk {
  std::size_t block;
  std::uint64_t begin;
  std::uint64_t end;
};

struct Accumulator {
  std::vector<std::uint64_t> counts;
  std::vector<EchelonBasis> spans;
};

class Kernel {
 public:
  Kernel(const LinFormMatrix& d, bool spans)
      : field_(d.field()),
        p_(d.field().modulus()),
        rows_(d.rows()),
        cols_(d.cols()),
        nvars_(d.nvars()),
        max_rank_(std::min(d.rows(), d.cols())),
        spans_(spans),
        inv_(inverse_table(d.field())) {
    const std::size_t cells = rows_ * cols_;
    slices_.resize(nvars_ * cells);
    for (std::size_t k = 0; k < nvars_; ++k)
      std::copy(d.slice(k).data().begin(), d.slice(k).data().end(), slices_.begin() + k * cells);
  }

  Accumulator make_accumulator() const {
    Accumulator acc;
    acc.counts.assign(max_rank_ + 1, 0);
    if (spans_) acc.spans.assign(max_rank_, EchelonBasis(field_, nvars_));
    return acc;
  }

  void run(const Block& block, const Chunk& chunk, Accumulator& acc) const {
    const std::size_t cells = rows_ * cols_;
    const std::size_t first_free = block.lead == nvars_ ? 0 : block.lead + 1;
    std::vector<Residue> point(nvars_, 0);
    if (block.lead < nvars_) point[block.lead] = 1;
    std::uint64_t idx = chunk.begin;
    for (std::size_t c = first_free; c < nvars_; ++c, idx /= p_) point[c] = static_cast<Residue>(idx % p_);

    std::vector<Residue> m(cells, 0);
    for (std::size_t k = 0; k < nvars_; ++k) {
      if (point[k] == 0) continue;
      const Residue* s = &slices_[k * cells];
      for (std::size_t c = 0; c < cells; ++c) m[c] = field_.add(m[c], field_.mul(point[k], s[c]));
    }

    std::vector<Residue> scratch(cells);
    std::vector<std::uint64_t> local(max_rank_ + 1, 0);
    for (std::uint64_t step = chunk.begin; step < chunk.end; ++step) {
      const std::size_t r = rank(m, scratch);
      ++local[r];
      if (spans_) record_span(r, point, acc);
      // Odometer: every digit that moves adds its slice once (p * D == 0 on wrap).
      for (std::size_t c = first_free; c < nvars_; ++c) {
        const Residue* s = &slices_[c * cells];
        for (std::size_t q = 0; q < cells; ++q) {
          Residue v = m[q] + s[q];
          m[q] = v >= p_ ? v - p_ : v;
        }
        if (++point[c] < p_) break;
        point[c] = 0;
      }
    }
    for (std::size_t r = 0; r <= max_rank_; ++r) acc.counts[r] += local[r] * block.weight;
  }

  std::size_t max_rank() const noexcept { return max_rank_; }

 private:
  std::size_t rank(const std::vector<Residue>& m, std::vector<Residue>& a) const {
    std::copy(m.begin(), m.end(), a.begin());
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
      std::size_t piv = rank;
      while (piv < rows_ && a[piv * cols_ + c] == 0) ++piv;
      if (piv == rows_) continue;
      if (piv != rank)
        for (std::size_t k = c; k < cols_; ++k) std::swap(a[piv * cols_ + k], a[rank * cols_ + k]);
      const Residue pinv = inv_[a[rank * cols_ + c]];
      for (std::size_t r = rank + 1; r < rows_; ++r) {
        const Residue lead = a[r * cols_ + c];
        if (lead == 0) continue;
        const std::uint64_t factor = p_ - static_cast<std::uint64_t>(lead) * pinv % p_;
        for (std::size_t k = c + 1; k < cols_; ++k)
          a[r * cols_ + k] = static_cast<Residue>((a[r * cols_ + k] + factor * a[rank * cols_ + k]) % p_);
      }
      if (++rank == max_rank_) break;
    }
    return rank;
  }

  void record_span(std::size_t r, const std::vector<Residue>& point, Accumulator& acc) const {
    // Loci are nested, so once a level already contains the point (or is full)
    // every higher level does too.
    for (std::size_t k = r + 1; k <= max_rank_; ++k) {
      EchelonBasis& basis = acc.spans[k - 1];
      if (basis.full() || !basis.insert(point)) break;
    }
  }

  PrimeField field_;
  std::uint32_t p_;
  std::size_t rows_, cols_, nvars_, max_rank_;
  bool spans_;
  std::vector<Residue> inv_;
  std::vector<Residue> slices_;
};

}  // namespace

RankProfile rank_profile(const LinFormMatrix& d, const EnumerationOptions& options) {
  const std::uint32_t p = d.field().modulus();
  const std::uint64_t required = saturating_power(p, d.nvars());
  if (required > options.budget) throw budget_exceeded("rank locus enumeration", required, options.budget);

  Kernel kernel(d, options.spans);
  std::vector<Block> blocks;
  if (options.projective && d.nvars() > 0) {
    for (std::size_t lead = 0; lead < d.nvars(); ++lead)
      blocks.push_back({lead, saturating_power(p, d.nvars() - lead - 1), p - 1u});
  } else {
    blocks.push_back({d.nvars(), required, 1});
  }
  const std::uint64_t chunk_size = std::max<std::uint64_t>(1, options.chunk_size);
  std::vector<Chunk> chunks;
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (std::uint64_t s = 0; s < blocks[b].size; s += chunk_size)
      chunks.push_back({b, s, std::min(blocks[b].size, s + chunk_size)});

  const unsigned nthreads = std::max<unsigned>(
      1, std::min<std::uint64_t>(options.threads == 0 ? default_thread_count() : options.threads, chunks.size()));
  std::vector<Accumulator> partial;
  for (unsigned t = 0; t < nthreads; ++t) partial.push_back(kernel.make_accumulator());
  std::atomic<std::size_t> next{0};
  auto worker = [&](unsigned t) {
    for (std::size_t c = next++; c < chunks.size(); c = next++) kernel.run(blocks[chunks[c].block], chunks[c], partial[t]);
  };
  if (nthreads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  Accumulator total = kernel.make_accumulator();
  for (const auto& acc : partial) {
    for (std::size_t r = 0; r < total.counts.size(); ++r) total.counts[r] += acc.counts[r];
    for (std::size_t k = 0; k < total.spans.size(); ++k)
      for (const auto& row : acc.spans[k].rows()) total.spans[k].insert(row);
  }
  if (options.projective && d.nvars() > 0) total.counts[0] += 1;  // the origin

  RankProfile profile;
  profile.p = p;
  profile.nvars = d.nvars();
  profile.counts = std::move(total.counts);
  if (options.spans) {
    // Each level also contains the lower ones; merging by level keeps that.
    for (const auto& basis : total.spans) profile.span_dims.push_back(basis.dimension());
  }
  return profile;
}

RankProfile rank_profile(const LinFormMatrix& d, std::uint32_t p, const EnumerationOptions& options) {
  if (d.field().modulus() != p)
    throw usage_error("matrix lives over F_" + std::to_string(d.field().modulus()) + ", not F_" + std::to_string(p));
  return rank_profile(d, options);
}

RankProfile adjoint_rank_profile(const LinFormMatrix& b, const EnumerationOptions& options) {
  return rank_profile(adjoint(b), options);
}

std::vector<std::uint64_t> chain_counts(const LinFormMatrix& d, const EnumerationOptions& options) {
  EnumerationOptions o = options;
  o.spans = false;
  return rank_profile(d, o).chain();
}

}  // namespace grpinv
