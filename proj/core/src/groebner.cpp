#include "grpinv/groebner.hpp"

#include <algorithm>
#include <set>

namespace grpinv {

Poly reduce(const Poly& f, std::span<const Poly> basis) {
  const RingPtr& ring = f.ring();
  const auto& field = ring->field();
  std::vector<const Poly*> divisors;
  for (const auto& g : basis)
    if (!g.is_zero()) divisors.push_back(&g);

  Poly remainder(ring);
  std::vector<Term> rem_terms;
  Poly work = f;
  while (!work.is_zero()) {
    const Term lead = work.leading();
    const Poly* hit = nullptr;
    for (const Poly* g : divisors)
      if (g->leading_monomial().divides(lead.mono)) {
        hit = g;
        break;
      }
    if (hit == nullptr) {
      rem_terms.push_back(lead);
      Monomial one(ring->nvars());
      work = work.minus_term_times(one, 1, Poly::monomial(ring, lead.mono, lead.coeff));
      continue;
    }
    Residue c = field.mul(lead.coeff, field.inv(hit->leading_coeff()));
    work = work.minus_term_times(lead.mono / hit->leading_monomial(), c, *hit);
  }
  // Terms were extracted in descending order already.
  return Poly(ring, std::move(rem_terms));
}

Poly s_polynomial(const Poly& f, const Poly& g) {
  const auto& field = f.ring()->field();
  const Monomial l = lcm(f.leading_monomial(), g.leading_monomial());
  Poly a = f.times_term(l / f.leading_monomial(), field.inv(f.leading_coeff()));
  return a.minus_term_times(l / g.leading_monomial(), field.inv(g.leading_coeff()), g);
}

bool is_groebner_basis(std::span<const Poly> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (basis[i].is_zero() || basis[j].is_zero()) continue;
      if (!reduce(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
    }
  return true;
}

bool is_reduced_basis(std::span<const Poly> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero() || basis[i].leading_coeff() != 1) return false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : basis[j].terms())
        if (basis[i].leading_monomial().divides(t.mono)) return false;
    }
  }
  return true;
}

bool IdealBasis::is_zero_ideal() const {
  return std::all_of(generators.begin(), generators.end(), [](const Poly& f) { return f.is_zero(); });
}

bool IdealBasis::is_homogeneous() const {
  return std::all_of(generators.begin(), generators.end(),
                     [](const Poly& f) { return f.is_homogeneous(); });
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Buchberger {
 public:
  explicit Buchberger(RingPtr ring) : ring_(std::move(ring)) {}

  std::vector<Poly> run(std::vector<Poly> generators) {
    // Inputs are queued like S-pairs of their own degree so everything is
    // processed degree by degree.
    std::stable_sort(generators.begin(), generators.end(),
                     [](const Poly& a, const Poly& b) { return a.degree() < b.degree(); });
    std::size_t next_input = 0;
    while (next_input < generators.size() || !pairs_.empty()) {
      bool take_input = false;
      if (next_input < generators.size()) {
        if (pairs_.empty()) {
          take_input = true;
        } else {
          take_input = generators[next_input].degree() <= static_cast<int>(min_pair_degree());
        }
      }
      Poly h(ring_);
      if (take_input) {
        h = generators[next_input++];
      } else {
        Pair pr = pop_pair();
        if (chain_criterion(pr)) continue;
        h = s_polynomial(basis_[pr.i], basis_[pr.j]);
      }
      h = reduce(h, basis_);
      if (!h.is_zero()) add(h.monic());
    }
    return finalize();
  }

 private:
  static std::pair<std::size_t, std::size_t> key(std::size_t i, std::size_t j) {
    return i < j ? std::make_pair(i, j) : std::make_pair(j, i);
  }

  unsigned min_pair_degree() const {
    unsigned best = ~0u;
    for (const auto& p : pairs_) best = std::min(best, p.lcm.degree());
    return best;
  }

  Pair pop_pair() {
    // Lowest lcm degree, then smallest lcm in the order.
    const auto& order = ring_->order();
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const auto& a = pairs_[k].lcm;
      const auto& b = pairs_[best].lcm;
      if (a.degree() < b.degree() || (a.degree() == b.degree() && order.compare(a, b) < 0))
        best = k;
    }
    Pair pr = pairs_[best];
    pairs_[best] = pairs_.back();
    pairs_.pop_back();
    pending_.erase(key(pr.i, pr.j));
    return pr;
  }

  bool pending(std::size_t i, std::size_t j) const { return pending_.count(key(i, j)) != 0; }

  // Buchberger's second criterion: some g_k with LT(g_k) | lcm whose pairs
  // with both ends have already been dealt with.
  bool chain_criterion(const Pair& pr) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!basis_[k].leading_monomial().divides(pr.lcm)) continue;
      if (!pending(pr.i, k) && !pending(pr.j, k)) return true;
    }
    return false;
  }

  void add(Poly h) {
    const std::size_t idx = basis_.size();
    basis_.push_back(std::move(h));
    const Monomial& lt = basis_[idx].leading_monomial();
    for (std::size_t i = 0; i < idx; ++i) {
      const Monomial& other = basis_[i].leading_monomial();
      if (coprime(lt, other)) continue;  // first criterion: reduces to zero
      pairs_.push_back({i, idx, lcm(other, lt)});
      pending_.insert(key(i, idx));
    }
  }

  std::vector<Poly> finalize() {
    // Minimal basis: drop elements whose leading monomial is divisible by another's.
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
        if (i == j) continue;
        const auto& a = basis_[j].leading_monomial();
        const auto& b = basis_[i].leading_monomial();
        if (a.divides(b) && (a != b || j < i)) redundant = true;
      }
      if (!redundant) minimal.push_back(basis_[i]);
    }
    std::vector<Poly> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Poly> others;
      for (std::size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      reduced.push_back(reduce(minimal[i], others).monic());
    }
    const auto& order = ring_->order();
    std::sort(reduced.begin(), reduced.end(), [&](const Poly& a, const Poly& b) {
      return order.compare(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return reduced;
  }

  RingPtr ring_;
  std::vector<Poly> basis_;
  std::vector<Pair> pairs_;
  std::set<std::pair<std::size_t, std::size_t>> pending_;
};

}  // namespace

IdealBasis groebner(const RingPtr& ring, std::vector<Poly> generators, const MonomialOrder& order) {
  RingPtr target = with_order(ring, order);
  std::vector<Poly> moved;
  moved.reserve(generators.size());
  for (const auto& g : generators) {
    if (!g.ring()->compatible(*ring)) throw usage_error("generator from a different ring");
    Poly h = g.in_ring(target);
    if (!h.is_zero()) moved.push_back(std::move(h));
  }
  IdealBasis ideal{target, moved, std::nullopt};
  ideal.groebner = Buchberger(target).run(std::move(moved));
  return ideal;
}

const std::vector<Poly>& ensure_groebner(IdealBasis& ideal) {
  if (!ideal.groebner) ideal = groebner(ideal.ring, ideal.generators, ideal.ring->order());
  return *ideal.groebner;
}

bool ideals_equal(const std::vector<Poly>& a, const std::vector<Poly>& b, const RingPtr& ring) {
  IdealBasis ga = groebner(ring, a);
  IdealBasis gb = groebner(ring, b);
  for (const auto& f : b)
    if (!reduce(f.in_ring(ga.ring), *ga.groebner).is_zero()) return false;
  for (const auto& f : a)
    if (!reduce(f.in_ring(gb.ring), *gb.groebner).is_zero()) return false;
  return true;
}

bool ideal_contains(const IdealBasis& ideal, const Poly& f) {
  IdealBasis copy = ideal;
  const auto& gb = ensure_groebner(copy);
  return reduce(f.in_ring(copy.ring), gb).is_zero();
}

}  // namespace grpinv
