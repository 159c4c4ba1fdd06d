#include "grpinv/isom.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "grpinv/errors.hpp"
#include "grpinv/rankloci.hpp"

namespace grpinv {

std::uint64_t general_linear_order(std::uint32_t p, std::size_t n) {
  std::uint64_t pn = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (pn > UINT64_MAX / p) return UINT64_MAX;
    pn *= p;
  }
  std::uint64_t order = 1, pi = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t factor = pn - pi;
    if (order > UINT64_MAX / factor) return UINT64_MAX;
    order *= factor;
    pi *= p;
  }
  return order;
}

namespace {

void check_shapes(const LinFormMatrix& b, const LinFormMatrix& c) {
  if (b.field() != c.field()) throw usage_error("matrices live over different fields");
  if (b.rows() != c.rows() || b.cols() != c.cols() || b.nvars() != c.nvars() || !b.square())
    throw usage_error("matrices must be square of the same size in the same number of variables");
}

class Search {
 public:
  Search(const LinFormMatrix& b, const LinFormMatrix& c)
      : b_(b), c_(c), f_(b.field()), p_(f_.modulus()), n_(b.rows()), d_(b.nvars()) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n_; ++i) total *= p_;
    vectors_ = total;
  }

  std::uint64_t first_rows() const noexcept { return vectors_; }

  /// Witness whose first row of X is vector number `first`, if any.
  std::optional<IsoWitness> run(std::uint64_t first, const std::atomic<std::uint64_t>& best) {
    best_ = &best;
    first_ = first;
    auto v = vector(first);
    if (std::all_of(v.begin(), v.end(), [](Residue r) { return r == 0; })) return std::nullopt;
    rows_.assign(1, v);
    images_.assign(1, row_images(v));
    EchelonBasis basis(f_, n_);
    basis.insert(v);
    return extend(basis);
  }

 private:
  std::vector<Residue> vector(std::uint64_t index) const {
    std::vector<Residue> v(n_);
    for (std::size_t i = 0; i < n_; ++i, index /= p_) v[n_ - 1 - i] = static_cast<Residue>(index % p_);
    return v;
  }

  // u^(k) = v B^(k) for every slice k.
  std::vector<std::vector<Residue>> row_images(const std::vector<Residue>& v) const {
    std::vector<std::vector<Residue>> out;
    for (std::size_t k = 0; k < d_; ++k) out.push_back(b_.slice(k).left_multiply(v));
    return out;
  }

  Residue dot(const std::vector<Residue>& a, const std::vector<Residue>& b) const {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = (s + static_cast<std::uint64_t>(a[i]) * b[i]) % p_;
    return static_cast<Residue>(s);
  }

  // Rows of A indexed by k hold entries (a, b), a < b <= r, of X B^(k) X^T;
  // row lambda of Z must satisfy z A = (C^(lambda)_ab).
  std::optional<std::vector<AffineSolution>> z_conditions() const {
    const std::size_t r = rows_.size();
    const std::size_t m = r * (r - 1) / 2;
    std::vector<AffineSolution> out;
    if (m == 0) {
      AffineSolution all{std::vector<Residue>(d_, 0), {}};
      for (std::size_t k = 0; k < d_; ++k) {
        std::vector<Residue> e(d_, 0);
        e[k] = 1;
        all.kernel.push_back(e);
      }
      out.assign(d_, all);
      return out;
    }
    FpMatrix a(f_, d_, m);
    for (std::size_t k = 0; k < d_; ++k) {
      std::size_t col = 0;
      for (std::size_t x = 0; x < r; ++x)
        for (std::size_t y = x + 1; y < r; ++y) a(k, col++) = dot(images_[x][k], rows_[y]);
    }
    for (std::size_t l = 0; l < d_; ++l) {
      std::vector<Residue> rhs;
      for (std::size_t x = 0; x < r; ++x)
        for (std::size_t y = x + 1; y < r; ++y) rhs.push_back(c_.coeff(l, x, y));
      auto sol = solve_left(a, rhs);
      if (!sol) return std::nullopt;
      out.push_back(std::move(*sol));
    }
    return out;
  }

  std::optional<FpMatrix> invertible_z(const std::vector<AffineSolution>& sols) const {
    const auto& kernel = sols.front().kernel;
    const std::size_t slots = kernel.size() * d_;
    std::vector<Residue> digits(slots, 0);
    while (true) {
      FpMatrix z(f_, d_, d_);
      for (std::size_t l = 0; l < d_; ++l) {
        std::vector<Residue> row = sols[l].particular;
        for (std::size_t q = 0; q < kernel.size(); ++q) {
          const Residue c = digits[l * kernel.size() + q];
          if (c == 0) continue;
          for (std::size_t k = 0; k < d_; ++k) row[k] = f_.add(row[k], f_.mul(c, kernel[q][k]));
        }
        for (std::size_t k = 0; k < d_; ++k) z(l, k) = row[k];
      }
      if (z.invertible()) return z;
      std::size_t pos = 0;
      while (pos < slots && ++digits[pos] == p_) digits[pos++] = 0;
      if (pos == slots) return std::nullopt;
    }
  }

  FpMatrix current_x() const {
    FpMatrix x(f_, n_, n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) x(i, j) = rows_[i][j];
    return x;
  }

  void push(const std::vector<Residue>& v) {
    rows_.push_back(v);
    images_.push_back(row_images(v));
  }

  void pop() {
    rows_.pop_back();
    images_.pop_back();
  }

  // Z is known; the next row v must satisfy sum_k Z(l,k) u_a^(k) . v = C^(l)_(a,r)
  // for every earlier row a, a linear system in v.
  std::optional<IsoWitness> extend_fixed(const FpMatrix& z, const EchelonBasis& basis) {
    if (best_->load() < first_) return std::nullopt;
    const std::size_t r = rows_.size();
    if (r == n_) return IsoWitness{current_x(), z};
    FpMatrix a(f_, n_, r * d_);
    std::vector<Residue> rhs;
    for (std::size_t x = 0; x < r; ++x)
      for (std::size_t l = 0; l < d_; ++l) {
        const std::size_t col = x * d_ + l;
        for (std::size_t k = 0; k < d_; ++k) {
          const Residue zk = z(l, k);
          if (zk == 0) continue;
          for (std::size_t i = 0; i < n_; ++i) a(i, col) = f_.add(a(i, col), f_.mul(zk, images_[x][k][i]));
        }
        rhs.push_back(c_.coeff(l, x, r));
      }
    const auto sol = solve_left(a, rhs);
    if (!sol) return std::nullopt;
    std::vector<Residue> digits(sol->kernel.size(), 0);
    while (true) {
      std::vector<Residue> v = sol->particular;
      for (std::size_t q = 0; q < digits.size(); ++q)
        if (digits[q] != 0)
          for (std::size_t i = 0; i < n_; ++i) v[i] = f_.add(v[i], f_.mul(digits[q], sol->kernel[q][i]));
      if (!basis.contains(v)) {
        EchelonBasis next = basis;
        next.insert(v);
        push(v);
        auto found = extend_fixed(z, next);
        pop();
        if (found) return found;
      }
      std::size_t pos = 0;
      while (pos < digits.size() && ++digits[pos] == p_) digits[pos++] = 0;
      if (pos == digits.size()) return std::nullopt;
    }
  }

  std::optional<IsoWitness> extend(const EchelonBasis& basis) {
    if (best_->load() < first_) return std::nullopt;
    auto sols = z_conditions();
    if (!sols) return std::nullopt;
    if (sols->front().kernel.empty()) {
      FpMatrix z(f_, d_, d_);
      for (std::size_t l = 0; l < d_; ++l)
        for (std::size_t k = 0; k < d_; ++k) z(l, k) = (*sols)[l].particular[k];
      if (!z.invertible()) return std::nullopt;
      return extend_fixed(z, basis);
    }
    if (rows_.size() == n_) {
      auto z = invertible_z(*sols);
      if (!z) return std::nullopt;
      return IsoWitness{current_x(), std::move(*z)};
    }
    for (std::uint64_t idx = 0; idx < vectors_; ++idx) {
      auto v = vector(idx);
      if (basis.contains(v)) continue;
      EchelonBasis next = basis;
      next.insert(v);
      push(v);
      auto found = extend(next);
      pop();
      if (found) return found;
    }
    return std::nullopt;
  }

  const LinFormMatrix& b_;
  const LinFormMatrix& c_;
  PrimeField f_;
  std::uint32_t p_;
  std::size_t n_, d_;
  std::uint64_t vectors_ = 0;
  std::uint64_t first_ = 0;
  const std::atomic<std::uint64_t>* best_ = nullptr;
  std::vector<std::vector<Residue>> rows_;
  std::vector<std::vector<std::vector<Residue>>> images_;
};

}  // namespace

IsoOutcome isomorphic_bruteforce(const LinFormMatrix& b, const LinFormMatrix& c, std::uint64_t budget,
                                 unsigned threads) {
  check_shapes(b, c);
  if (!b.is_skew_symmetric() || !c.is_skew_symmetric()) throw usage_error("isomorphism test needs skew-symmetric matrices");
  const std::uint32_t p = b.field().modulus();
  const std::uint64_t gn = general_linear_order(p, b.rows());
  const std::uint64_t gd = general_linear_order(p, b.nvars());
  IsoOutcome outcome;
  outcome.required = gn > UINT64_MAX / gd ? UINT64_MAX : gn * gd;
  if (outcome.required > budget) {
    outcome.status = IsoStatus::budget_exceeded;
    return outcome;
  }

  Search probe(b, c);
  const std::uint64_t firsts = probe.first_rows();
  std::atomic<std::uint64_t> best{UINT64_MAX};
  std::atomic<std::uint64_t> next{0};
  std::vector<std::optional<IsoWitness>> found(firsts);
  auto worker = [&] {
    Search search(b, c);
    for (std::uint64_t i = next++; i < firsts && i < best.load(); i = next++) {
      found[i] = search.run(i, best);
      if (found[i]) {
        std::uint64_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  const unsigned nthreads = std::max<unsigned>(
      1, static_cast<unsigned>(std::min<std::uint64_t>(threads == 0 ? default_thread_count() : threads, firsts)));
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (best.load() != UINT64_MAX) {
    outcome.status = IsoStatus::isomorphic;
    outcome.witness = std::move(found[best.load()]);
  } else {
    outcome.status = IsoStatus::non_isomorphic;
  }
  return outcome;
}

bool verify_witness(const LinFormMatrix& b, const LinFormMatrix& c, const IsoWitness& w) {
  check_shapes(b, c);
  if (w.x.rows() != b.rows() || w.x.cols() != b.rows() || w.z.rows() != b.nvars() || w.z.cols() != b.nvars())
    throw usage_error("witness has the wrong shape");
  if (!w.x.invertible() || !w.z.invertible()) throw usage_error("witness matrices must be invertible");
  const bool direct = transform(b, w.x, w.z) == c;
  const bool adj = substitute_and_multiply(adjoint(b), w.x, w.x, w.z.transpose()) == adjoint(c);
  return direct && adj;
}

GroupElement map_element(const IsoWitness& w, const GroupElement& g) {
  const FpMatrix xit = w.x.inverse().transpose();
  return {xit.apply(g.v), w.z.apply(g.w)};
}

}  // namespace grpinv
