#include "grpinv/hilbert.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace grpinv {

// ------------------------------------------------------------- RationalPoly

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().numerator() == 0) coeffs_.pop_back();
}

Rational RationalPoly::operator()(Rational t) const {
  Rational acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + coeffs_[i];
  return acc;
}

std::string RationalPoly::to_string(char var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.numerator() == 0) continue;
    if (!first) os << (c.numerator() < 0 ? " - " : " + ");
    else if (c.numerator() < 0) os << "-";
    first = false;
    Rational a = abs(c);
    if (i == 0 || a != Rational(1)) {
      os << a.numerator();
      if (a.denominator() != 1) os << '/' << a.denominator();
      if (i > 0) os << '*';
    }
    if (i > 0) os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return RationalPoly(std::move(c));
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return RationalPoly(std::move(c));
}

// ------------------------------------------------------------ HilbertSeries

namespace {

using IntPoly = std::vector<std::int64_t>;

void trim(IntPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

IntPoly add(const IntPoly& a, const IntPoly& b) {
  IntPoly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  trim(c);
  return c;
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

IntPoly one_minus_t_power(unsigned e) {
  IntPoly f(e + 1, 0);
  f[0] += 1;
  f[e] -= 1;
  trim(f);
  return f;
}

/// Drops generators divisible by another one; result sorted in storage order.
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) {
              return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
            });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = std::any_of(out.begin(), out.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

class PivotRecursion {
 public:
  explicit PivotRecursion(std::size_t nvars) : nvars_(nvars) {}

  IntPoly numerator(std::vector<Monomial> gens) {
    gens = minimalize(std::move(gens));
    if (auto it = memo_.find(gens); it != memo_.end()) return it->second;
    IntPoly result = compute(gens);
    memo_.emplace(std::move(gens), result);
    return result;
  }

 private:
  IntPoly compute(const std::vector<Monomial>& gens) {
    if (gens.empty()) return {1};
    for (const auto& g : gens)
      if (g.is_one()) return {};  // unit ideal

    // Count occurrences of each variable; coprime generators factor.
    std::vector<std::size_t> count(nvars_, 0);
    for (const auto& g : gens)
      for (std::size_t v = 0; v < nvars_; ++v)
        if (g[v] != 0) ++count[v];
    std::size_t pivot = 0;
    for (std::size_t v = 1; v < nvars_; ++v)
      if (count[v] > count[pivot]) pivot = v;
    if (count[pivot] <= 1) {
      IntPoly result{1};
      for (const auto& g : gens) result = mul(result, one_minus_t_power(g.degree()));
      return result;
    }

    const Monomial x = Monomial::variable(nvars_, pivot);
    std::vector<Monomial> with_pivot = gens;
    with_pivot.push_back(x);
    std::vector<Monomial> quotient;
    quotient.reserve(gens.size());
    for (const auto& g : gens) quotient.push_back(g / gcd(g, x));

    IntPoly shifted = numerator(std::move(quotient));
    shifted.insert(shifted.begin(), 0);
    trim(shifted);
    return add(numerator(std::move(with_pivot)), shifted);
  }

  std::size_t nvars_;
  std::map<std::vector<Monomial>, IntPoly> memo_;
};

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < k) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::size_t HilbertSeries::reduce(std::vector<std::int64_t>& reduced) const {
  reduced = numerator;
  std::size_t c = 0;
  while (!reduced.empty() && std::accumulate(reduced.begin(), reduced.end(), std::int64_t{0}) == 0) {
    // reduced = (1 - t) * q  =>  q_k = sum_{i <= k} reduced_i
    std::vector<std::int64_t> q(reduced.size() - 1, 0);
    std::int64_t acc = 0;
    for (std::size_t k = 0; k + 1 < reduced.size(); ++k) {
      acc += reduced[k];
      q[k] = acc;
    }
    reduced = std::move(q);
    trim(reduced);
    ++c;
  }
  return c;
}

std::int64_t HilbertSeries::coefficient(std::size_t s) const {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < numerator.size() && i <= s; ++i) {
    const auto n = static_cast<std::int64_t>(nvars);
    const auto shift = static_cast<std::int64_t>(s - i);
    std::int64_t ways = n == 0 ? (shift == 0 ? 1 : 0) : binomial(shift + n - 1, n - 1);
    total += numerator[i] * ways;
  }
  return total;
}

HilbertSeries hilbert_series(std::span<const Monomial> generators, std::size_t nvars) {
  for (const auto& g : generators)
    if (g.size() != nvars) throw usage_error("monomial arity does not match ring");
  PivotRecursion rec(nvars);
  return HilbertSeries{rec.numerator({generators.begin(), generators.end()}), nvars};
}

HilbertSeries hilbert_series(const IdealBasis& ideal) {
  if (!ideal.is_homogeneous()) throw usage_error("Hilbert series needs a homogeneous ideal");
  IdealBasis copy = ideal;
  const auto& gb = ensure_groebner(copy);
  std::vector<Monomial> leads;
  leads.reserve(gb.size());
  for (const auto& g : gb) leads.push_back(g.leading_monomial());
  return hilbert_series(leads, ideal.ring->nvars());
}

RationalPoly hilbert_poly(const HilbertSeries& series) {
  std::vector<std::int64_t> q;
  const std::size_t c = series.reduce(q);
  if (q.empty() || c >= series.nvars) return {};
  const auto dim = static_cast<std::int64_t>(series.nvars - c);  // Krull dimension D >= 1
  // HP(s) = sum_i q_i * binom(s - i + D - 1, D - 1)
  RationalPoly hp;
  std::int64_t factorial = 1;
  for (std::int64_t j = 2; j < dim; ++j) factorial *= j;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] == 0) continue;
    RationalPoly term(std::vector<Rational>{Rational(q[i], factorial)});
    const std::int64_t a = dim - 1 - static_cast<std::int64_t>(i);
    for (std::int64_t j = 0; j < dim - 1; ++j)
      term = term * RationalPoly(std::vector<Rational>{Rational(a - j), Rational(1)});
    hp = hp + term;
  }
  return hp;
}

RationalPoly hilbert_poly(const IdealBasis& ideal) { return hilbert_poly(hilbert_series(ideal)); }

int affine_dim(const HilbertSeries& series) {
  std::vector<std::int64_t> q;
  const std::size_t c = series.reduce(q);
  if (q.empty()) throw usage_error("unit ideal has no affine dimension");
  return static_cast<int>(series.nvars - c);
}

int affine_dim(const IdealBasis& ideal) { return affine_dim(hilbert_series(ideal)); }

std::int64_t ideal_degree(const HilbertSeries& series) {
  std::vector<std::int64_t> q;
  const std::size_t c = series.reduce(q);
  if (q.empty()) throw usage_error("unit ideal has no degree");
  if (c >= series.nvars) return 0;
  return std::accumulate(q.begin(), q.end(), std::int64_t{0});
}

std::int64_t ideal_degree(const IdealBasis& ideal) { return ideal_degree(hilbert_series(ideal)); }

}  // namespace grpinv
