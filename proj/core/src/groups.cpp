#include "grpinv/groups.hpp"

#include <algorithm>
#include <set>

#include "grpinv/ideals.hpp"

namespace grpinv {

namespace {

std::uint64_t checked_power(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

}  // namespace

GroupSpec::GroupSpec(LinFormMatrix b) : b_(std::move(b)), half_(b_.field().inv(2)) {
  if (!b_.is_skew_symmetric()) throw usage_error("group construction needs a skew-symmetric matrix");
}

GroupElement GroupSpec::identity() const {
  return {std::vector<Residue>(n(), 0), std::vector<Residue>(d(), 0)};
}

GroupElement GroupSpec::generator(std::size_t index) const {
  GroupElement g = identity();
  if (index < n()) g.v[index] = 1;
  else if (index < n() + d()) g.w[index - n()] = 1;
  else throw usage_error("generator index out of range");
  return g;
}

GroupElement GroupSpec::element(std::uint64_t index) const {
  GroupElement g = identity();
  const std::uint32_t p = field().modulus();
  for (std::size_t i = 0; i < n(); ++i, index /= p) g.v[i] = static_cast<Residue>(index % p);
  for (std::size_t k = 0; k < d(); ++k, index /= p) g.w[k] = static_cast<Residue>(index % p);
  return g;
}

void GroupSpec::check(const GroupElement& g) const {
  if (g.v.size() != n() || g.w.size() != d()) throw usage_error("element does not belong to this group");
}

std::vector<Residue> GroupSpec::t_map(std::span<const Residue> v, std::span<const Residue> v2) const {
  if (v.size() != n() || v2.size() != n()) throw usage_error("vector length mismatch");
  const auto& f = field();
  std::vector<Residue> out(d(), 0);
  for (std::size_t k = 0; k < d(); ++k) {
    const auto bv = b_.slice(k).apply(v2);
    Residue acc = 0;
    for (std::size_t i = 0; i < n(); ++i) acc = f.add(acc, f.mul(v[i], bv[i]));
    out[k] = acc;
  }
  return out;
}

GroupElement GroupSpec::mul(const GroupElement& g, const GroupElement& h) const {
  check(g);
  check(h);
  const auto& f = field();
  GroupElement r = identity();
  for (std::size_t i = 0; i < n(); ++i) r.v[i] = f.add(g.v[i], h.v[i]);
  const auto t = t_map(g.v, h.v);
  for (std::size_t k = 0; k < d(); ++k) r.w[k] = f.add(f.add(g.w[k], h.w[k]), f.mul(half_, t[k]));
  return r;
}

GroupElement GroupSpec::inverse(const GroupElement& g) const {
  check(g);
  GroupElement r = g;
  for (auto& x : r.v) x = field().neg(x);
  for (auto& x : r.w) x = field().neg(x);
  return r;
}

GroupElement GroupSpec::power(const GroupElement& g, std::uint64_t e) const {
  GroupElement result = identity();
  GroupElement base = g;
  while (e != 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

GroupElement GroupSpec::commutator(const GroupElement& g, const GroupElement& h) const {
  return mul(mul(inverse(g), inverse(h)), mul(g, h));
}

LinFormMatrix matrix_from_structure_constants(std::uint32_t p, std::size_t n, std::size_t d,
                                              std::span<const StructureConstant> constants) {
  PrimeField field(p);
  LinFormMatrix b(field, n, n, d);
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (const auto& c : constants) {
    if (c.i < 1 || c.i >= c.j || c.j > n || c.k < 1 || c.k > d)
      throw usage_error("structure constant index out of range (need 1 <= i < j <= n, 1 <= k <= d)");
    if (!seen.emplace(c.i, c.j, c.k).second) throw usage_error("repeated structure constant key");
    b.set(c.k - 1, c.i - 1, c.j - 1, c.coeff);
    b.set(c.k - 1, c.j - 1, c.i - 1, -c.coeff);
  }
  return b;
}

LinFormMatrix matrix_from_group(const GroupSpec& group) {
  LinFormMatrix b(group.field(), group.n(), group.n(), group.d());
  for (std::size_t i = 0; i < group.n(); ++i)
    for (std::size_t j = 0; j < group.n(); ++j) {
      if (i == j) continue;
      const GroupElement c = group.commutator(group.generator(i), group.generator(j));
      for (std::size_t k = 0; k < group.d(); ++k) b.set(k, i, j, c.w[k]);
    }
  return b;
}

StructuralReport::Enumeration enumerate_structure(const GroupSpec& group, std::uint64_t element_budget) {
  const std::uint32_t p = group.field().modulus();
  const std::uint64_t count = checked_power(p, group.order_exponent(), element_budget);
  if (count > element_budget)
    throw budget_exceeded("group enumeration", count, element_budget);

  StructuralReport::Enumeration e;
  EchelonBasis derived(group.field(), group.d());
  std::uint64_t central = 0;
  e.exponent_p = true;
  e.class_at_most_2 = true;
  const std::size_t ngens = group.n() + group.d();
  const GroupElement id = group.identity();
  std::set<std::vector<Residue>> commutator_values;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    const GroupElement g = group.element(idx);
    if (!(group.power(g, p) == id)) e.exponent_p = false;
    bool is_central = true;
    for (std::size_t s = 0; s < ngens; ++s) {
      const GroupElement c = group.commutator(g, group.generator(s));
      if (!(c == id)) is_central = false;
      // [G, G] must lie in {0} x W.
      if (std::any_of(c.v.begin(), c.v.end(), [](Residue r) { return r != 0; })) e.class_at_most_2 = false;
      if (commutator_values.insert(c.w).second) derived.insert(c.w);
    }
    if (is_central) ++central;
  }
  // ... and be central.
  for (const auto& w : commutator_values) {
    const GroupElement c{std::vector<Residue>(group.n(), 0), w};
    for (std::size_t s = 0; s < ngens; ++s)
      if (!(group.commutator(c, group.generator(s)) == id)) e.class_at_most_2 = false;
  }
  e.derived_dim = static_cast<int>(derived.dimension());
  int centre_dim = 0;
  for (std::uint64_t c = central; c > 1; c /= p) ++centre_dim;
  e.centre_dim = centre_dim;
  return e;
}

StructuralReport structural_report(const GroupSpec& group, std::uint64_t element_budget) {
  StructuralReport report;
  report.order_exponent = group.order_exponent();
  if (report.order_exponent == 0) report.nilpotency_class = 0;
  else report.nilpotency_class = group.matrix().is_zero() ? 1 : 2;

  const int d = static_cast<int>(group.d());
  if (group.d() == 0) {
    report.derived_dim = 0;
    report.centre_dim = static_cast<int>(group.n());
  } else {
    RankIdealVector ib(group.matrix(), "y");
    report.derived_dim = d - (ib.size() == 0 ? d : ib.affine_dim(1));
    if (group.n() == 0) {
      report.centre_dim = d;
    } else {
      RankIdealVector ia(adjoint(group.matrix()), "x");
      report.centre_dim = d + ia.affine_dim(1);
    }
  }
  const std::uint64_t count = checked_power(group.field().modulus(), report.order_exponent, element_budget);
  if (count <= element_budget) report.enumerated = enumerate_structure(group, element_budget);
  return report;
}

}  // namespace grpinv
