#include "grpinv/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace grpinv {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::size_t nvars) {
  if (nvars > kMaxVars) throw usage_error("too many variables: " + std::to_string(nvars));
  nvars_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const unsigned> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, unsigned power) {
  Monomial m(nvars);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= nvars_) throw usage_error("monomial index out of range");
  if (e > kMaxExponent) throw usage_error("exponent overflow");
  degree_ = static_cast<std::uint16_t>(degree_ - exps_[i] + e);
  exps_[i] = static_cast<std::uint8_t>(e);
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    unsigned e = unsigned(exps_[i]) + other.exps_[i];
    if (e > kMaxExponent) throw usage_error("exponent overflow");
    r.exps_[i] = static_cast<std::uint8_t>(e);
  }
  r.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (!other.divides(*this)) throw usage_error("monomial does not divide");
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) r.exps_[i] = exps_[i] - other.exps_[i];
  r.degree_ = static_cast<std::uint16_t>(degree_ - other.degree_);
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars_);
  unsigned deg = 0;
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    deg += r.exps_[i];
  }
  r.degree_ = static_cast<std::uint16_t>(deg);
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r(a.nvars_);
  unsigned deg = 0;
  for (std::size_t i = 0; i < a.nvars_; ++i) {
    r.exps_[i] = std::min(a.exps_[i], b.exps_[i]);
    deg += r.exps_[i];
  }
  r.degree_ = static_cast<std::uint16_t>(deg);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) noexcept {
  for (std::size_t i = 0; i < a.nvars_; ++i)
    if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
  return true;
}

// ----------------------------------------------------------- MonomialOrder

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> permutation)
    : kind_(kind), perm_(std::move(permutation)) {
  std::vector<std::size_t> sorted = perm_;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != i) throw usage_error("monomial order permutation is not a permutation");
  bool identity = true;
  for (std::size_t i = 0; i < perm_.size(); ++i) identity = identity && perm_[i] == i;
  if (identity) perm_.clear();
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const noexcept {
  const std::size_t n = a.size();
  if (kind_ == OrderKind::grevlex) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t i = n; i-- > 0;) {
      std::size_t v = var(i);
      if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
    }
    return 0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t v = var(i);
    if (a[v] != b[v]) return a[v] < b[v] ? -1 : 1;
  }
  return 0;
}

// ----------------------------------------------------------------- PolyRing

PolyRing::PolyRing(PrimeField field, std::size_t nvars, std::string prefix, MonomialOrder order)
    : field_(field), nvars_(nvars), prefix_(std::move(prefix)), order_(std::move(order)) {
  if (nvars > Monomial::kMaxVars) throw usage_error("too many variables");
  if (!order_.permutation().empty() && order_.permutation().size() != nvars)
    throw usage_error("order permutation length does not match variable count");
}

std::string PolyRing::variable_name(std::size_t i) const {
  return prefix_ + std::to_string(i + 1);
}

RingPtr make_ring(std::uint32_t p, std::size_t nvars, std::string prefix, MonomialOrder order) {
  return make_ring(PrimeField(p), nvars, std::move(prefix), std::move(order));
}

RingPtr make_ring(const PrimeField& field, std::size_t nvars, std::string prefix,
                  MonomialOrder order) {
  return std::make_shared<const PolyRing>(field, nvars, std::move(prefix), std::move(order));
}

RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
  if (ring->order() == order) return ring;
  return make_ring(ring->field(), ring->nvars(), ring->prefix(), std::move(order));
}

// --------------------------------------------------------------------- Poly

Poly::Poly(RingPtr ring) : ring_(std::move(ring)) {}

Poly::Poly(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const auto& order = ring_->order();
  const auto& field = ring_->field();
  for (auto& t : terms) {
    if (t.mono.size() != ring_->nvars()) throw usage_error("monomial arity does not match ring");
    t.coeff %= field.modulus();
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.mono, b.mono) > 0;
  });
  for (const auto& t : terms) {
    if (!terms_.empty() && terms_.back().mono == t.mono)
      terms_.back().coeff = field.add(terms_.back().coeff, t.coeff);
    else
      terms_.push_back(t);
  }
  std::erase_if(terms_, [](const Term& t) { return t.coeff == 0; });
}

Poly Poly::constant(RingPtr ring, std::int64_t c) {
  Residue r = ring->field().reduce(c);
  Monomial one(ring->nvars());
  Poly f(std::move(ring));
  if (r != 0) f.terms_.push_back({one, r});
  return f;
}

Poly Poly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw usage_error("variable index out of range");
  Monomial m = Monomial::variable(ring->nvars(), index);
  return monomial(std::move(ring), m, 1);
}

Poly Poly::monomial(RingPtr ring, const Monomial& m, Residue c) {
  return Poly(std::move(ring), {Term{m, c}});
}

Poly Poly::linear(RingPtr ring, std::span<const Residue> coeffs) {
  if (coeffs.size() != ring->nvars()) throw usage_error("linear form length mismatch");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) terms.push_back({Monomial::variable(ring->nvars(), i), coeffs[i]});
  return Poly(std::move(ring), std::move(terms));
}

const Term& Poly::leading() const {
  if (terms_.empty()) throw usage_error("leading term of the zero polynomial");
  return terms_.front();
}

int Poly::degree() const noexcept {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.mono.degree()));
  return d;
}

bool Poly::is_homogeneous() const noexcept {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(leading_coeff()));
}

Poly Poly::scaled(Residue c) const {
  const auto& field = ring_->field();
  c %= field.modulus();
  Poly r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, field.mul(t.coeff, c)});
  return r;
}

Poly Poly::times_term(const Monomial& m, Residue c) const {
  const auto& field = ring_->field();
  Poly r(ring_);
  if (c % field.modulus() == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, field.mul(t.coeff, c)});
  return r;
}

Poly Poly::minus_term_times(const Monomial& m, Residue c, const Poly& g) const {
  check_ring(g);
  const auto& field = ring_->field();
  const auto& order = ring_->order();
  const Residue negc = field.neg(c % field.modulus());
  Poly r(ring_);
  if (negc == 0) return *this;
  r.terms_.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end()) {
      r.terms_.push_back(*a++);
      continue;
    }
    Monomial bm = b->mono * m;
    int cmp = a == terms_.end() ? -1 : order.compare(a->mono, bm);
    if (cmp > 0) {
      r.terms_.push_back(*a++);
    } else if (cmp < 0) {
      r.terms_.push_back({bm, field.mul(b->coeff, negc)});
      ++b;
    } else {
      Residue s = field.add(a->coeff, field.mul(b->coeff, negc));
      if (s != 0) r.terms_.push_back({a->mono, s});
      ++a;
      ++b;
    }
  }
  return r;
}

Residue Poly::evaluate(std::span<const Residue> point) const {
  if (point.size() != ring_->nvars()) throw usage_error("evaluation point has wrong length");
  const auto& field = ring_->field();
  Residue acc = 0;
  for (const auto& t : terms_) {
    Residue v = t.coeff;
    for (std::size_t i = 0; i < point.size() && v != 0; ++i)
      if (t.mono[i] != 0) v = field.mul(v, field.pow(point[i], t.mono[i]));
    acc = field.add(acc, v);
  }
  return acc;
}

Poly Poly::substitute(std::span<const Poly> images) const {
  if (images.size() != ring_->nvars()) throw usage_error("substitution has wrong length");
  if (images.empty()) return *this;
  const RingPtr& target = images.front().ring();
  Poly result(target);
  for (const auto& t : terms_) {
    Poly term = Poly::constant(target, t.coeff);
    for (std::size_t i = 0; i < images.size(); ++i)
      for (unsigned e = 0; e < t.mono[i]; ++e) term = term * images[i];
    result += term;
  }
  return result;
}

Poly Poly::in_ring(const RingPtr& target) const {
  if (!ring_->compatible(*target)) throw usage_error("incompatible rings");
  if (ring_->order() == target->order()) {
    Poly r(target);
    r.terms_ = terms_;
    return r;
  }
  return Poly(target, terms_);
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    bool unit_coeff = t.coeff == 1 && !t.mono.is_one();
    if (!unit_coeff) os << t.coeff;
    bool need_star = !unit_coeff;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (need_star) os << '*';
      os << ring_->variable_name(i);
      if (t.mono[i] > 1) os << '^' << t.mono[i];
      need_star = true;
    }
  }
  return os.str();
}

void Poly::check_ring(const Poly& other) const {
  if (ring_ != other.ring_ && !(*ring_ == *other.ring_))
    throw usage_error("polynomials belong to different rings");
}

Poly Poly::combine(const Poly& other, bool subtract) const {
  check_ring(other);
  Monomial one(ring_->nvars());
  return minus_term_times(one, subtract ? 1 : ring_->field().modulus() - 1, other);
}

Poly Poly::operator-() const { return scaled(ring_->field().modulus() - 1); }

Poly& Poly::operator+=(const Poly& other) {
  *this = combine(other, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  *this = combine(other, true);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_ring(b);
  const auto& field = a.ring_->field();
  std::vector<Term> products;
  products.reserve(a.size() * b.size());
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) products.push_back({s.mono * t.mono, field.mul(s.coeff, t.coeff)});
  return Poly(a.ring_, std::move(products));
}

Poly operator*(std::int64_t c, const Poly& f) { return f.scaled(f.ring_->field().reduce(c)); }

bool operator==(const Poly& a, const Poly& b) {
  return a.ring_->compatible(*b.ring_) && a.ring_->order() == b.ring_->order() &&
         a.terms_ == b.terms_;
}

std::ostream& operator<<(std::ostream& os, const Poly& f) { return os << f.to_string(); }

}  // namespace grpinv
