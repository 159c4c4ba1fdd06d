#include "grpinv/fingerprint.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <regex>
#include <thread>

#include "grpinv/errors.hpp"
#include "grpinv/ideals.hpp"

namespace grpinv {

std::string InvariantSpec::name() const {
  switch (kind) {
    case Kind::derived:
      return "derived";
    case Kind::points:
      return "np" + std::to_string(index) + (adjoint ? "adj" : "");
    case Kind::dimension:
      return "dim" + std::to_string(index) + (adjoint ? "adj" : "");
    case Kind::degree:
      return "deg" + std::to_string(index) + (adjoint ? "adj" : "");
    case Kind::span:
      return "span" + std::to_string(index) + (adjoint ? "adj" : "");
  }
  return {};
}

InvariantSpec parse_invariant(const std::string& name) {
  if (name == "derived") return {InvariantSpec::Kind::derived, 0, false};
  static const std::regex pattern("(np|dim|deg|span)([1-9][0-9]*)(adj)?");
  std::smatch m;
  if (!std::regex_match(name, m, pattern)) throw usage_error("unknown invariant '" + name + "'");
  InvariantSpec spec{InvariantSpec::Kind::points, std::stoul(m[2].str()), m[3].matched};
  const std::string kind = m[1].str();
  if (kind == "dim") spec.kind = InvariantSpec::Kind::dimension;
  if (kind == "deg") spec.kind = InvariantSpec::Kind::degree;
  if (kind == "span") spec.kind = InvariantSpec::Kind::span;
  return spec;
}

std::vector<std::string> default_invariants(std::size_t n, std::size_t d) {
  std::vector<std::string> out;
  auto add = [&](std::size_t k, const char* suffix) {
    for (const char* kind : {"np", "dim", "deg", "span"}) out.push_back(kind + std::to_string(k) + suffix);
  };
  for (std::size_t k = 1; k <= n; ++k) add(k, "");
  for (std::size_t k = 1; k <= std::min(n, d); ++k) add(k, "adj");
  out.push_back("derived");
  return out;
}

std::optional<std::int64_t> Fingerprint::get(const std::string& name) const {
  for (const auto& [key, value] : coords)
    if (key == name) return value;
  throw usage_error("fingerprint has no coordinate '" + name + "'");
}

bool Fingerprint::has(const std::string& name) const {
  return std::any_of(coords.begin(), coords.end(), [&](const auto& c) { return c.first == name; });
}

namespace {

// Lazily computed data for one matrix of linear forms at one prime.
class Side {
 public:
  Side(LinFormMatrix m, std::string prefix, const FingerprintOptions& options)
      : m_(std::move(m)), prefix_(std::move(prefix)), options_(options) {}

  std::size_t size() const { return std::min(m_.rows(), m_.cols()); }

  std::optional<std::int64_t> value(const InvariantSpec& spec) {
    const std::size_t k = spec.index;
    if (spec.kind == InvariantSpec::Kind::derived) {
      return static_cast<std::int64_t>(m_.nvars()) - ideals().affine_dim(1);
    }
    if (k == 0 || k > size()) return std::nullopt;
    switch (spec.kind) {
      case InvariantSpec::Kind::points: {
        const RankProfile* prof = profile(false);
        return prof ? std::optional<std::int64_t>(static_cast<std::int64_t>(prof->points(k))) : std::nullopt;
      }
      case InvariantSpec::Kind::span: {
        const RankProfile* prof = profile(true);
        return prof ? std::optional<std::int64_t>(static_cast<std::int64_t>(prof->span_dims[k - 1])) : std::nullopt;
      }
      case InvariantSpec::Kind::dimension:
        return ideals().affine_dim(k);
      case InvariantSpec::Kind::degree:
        return ideals().degree(k);
      default:
        return std::nullopt;
    }
  }

  void want_spans() { spans_ = true; }

 private:
  const RankProfile* profile(bool spans) {
    if (!attempted_) {
      attempted_ = true;
      EnumerationOptions o;
      o.budget = options_.budget;
      o.threads = options_.threads;
      o.spans = spans || spans_;
      try {
        profile_ = rank_profile(m_, o);
      } catch (const budget_exceeded&) {
        profile_.reset();
      }
    }
    return profile_ ? &*profile_ : nullptr;
  }

  const RankIdealVector& ideals() {
    if (!ideals_) ideals_.emplace(m_, prefix_);
    return *ideals_;
  }

  LinFormMatrix m_;
  std::string prefix_;
  const FingerprintOptions& options_;
  bool spans_ = false;
  bool attempted_ = false;
  std::optional<RankProfile> profile_;
  std::optional<RankIdealVector> ideals_;
};

std::vector<InvariantSpec> selected(const LinFormMatrix& b, const FingerprintOptions& options) {
  std::vector<std::string> names =
      options.invariants.empty() ? default_invariants(b.rows(), b.nvars()) : options.invariants;
  std::vector<InvariantSpec> specs;
  for (const auto& n : names) specs.push_back(parse_invariant(n));
  return specs;
}

void append_prime(Fingerprint& fp, const LinFormMatrix& b, const FingerprintOptions& options) {
  if (!b.square() || !b.is_skew_symmetric()) throw usage_error("fingerprint needs a skew-symmetric matrix");
  const auto specs = selected(b, options);
  Side direct(b, "y", options);
  Side adj(adjoint(b), "x", options);
  for (const auto& s : specs) {
    if (s.kind == InvariantSpec::Kind::span) (s.adjoint ? adj : direct).want_spans();
  }
  const std::string prefix = "p" + std::to_string(b.field().modulus()) + ":";
  for (const auto& s : specs) fp.coords.emplace_back(prefix + s.name(), (s.adjoint ? adj : direct).value(s));
}

Fingerprint header(std::size_t n, std::size_t d) {
  Fingerprint fp;
  fp.coords.emplace_back("n", static_cast<std::int64_t>(n));
  fp.coords.emplace_back("d", static_cast<std::int64_t>(d));
  return fp;
}

Fingerprint fingerprint_from(const MatrixSource& source, const FingerprintOptions& options) {
  if (options.primes.empty()) throw usage_error("fingerprint needs at least one prime");
  std::optional<Fingerprint> fp;
  for (std::uint32_t p : options.primes) {
    LinFormMatrix b = source(p);
    if (!fp) fp = header(b.rows(), b.nvars());
    append_prime(*fp, b, options);
  }
  return *fp;
}

}  // namespace

Fingerprint fingerprint(const LinFormMatrix& b, const FingerprintOptions& options) {
  Fingerprint fp = header(b.rows(), b.nvars());
  append_prime(fp, b, options);
  return fp;
}

Fingerprint fingerprint(const GenericMatrix& b, const FingerprintOptions& options) {
  return fingerprint_from([&](std::uint32_t p) { return b.over(p); }, options);
}

std::vector<std::string> separating_subset(const std::vector<Fingerprint>& fps) {
  if (fps.empty()) return {};
  const std::size_t ncoords = fps.front().coords.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < fps.size(); ++a)
    for (std::size_t b = a + 1; b < fps.size(); ++b)
      if (fps[a] != fps[b]) pairs.emplace_back(a, b);

  std::vector<std::string> chosen;
  while (!pairs.empty()) {
    std::size_t best = ncoords, best_count = 0;
    for (std::size_t c = 0; c < ncoords; ++c) {
      std::size_t count = 0;
      for (const auto& [a, b] : pairs) count += fps[a].coords[c].second != fps[b].coords[c].second;
      if (count > best_count) best = c, best_count = count;
    }
    if (best == ncoords) break;
    chosen.push_back(fps.front().coords[best].first);
    std::erase_if(pairs, [&](const auto& pr) {
      return fps[pr.first].coords[best].second != fps[pr.second].coords[best].second;
    });
  }
  return chosen;
}

PartitionReport partition(const std::vector<std::pair<std::string, MatrixSource>>& family,
                          const FingerprintOptions& options) {
  PartitionReport report;
  const std::size_t count = family.size();
  for (const auto& member : family) report.labels.push_back(member.first);
  report.fingerprints.resize(count);

  const unsigned outer = static_cast<unsigned>(
      std::max<std::size_t>(1, std::min<std::size_t>(default_thread_count(), count)));
  FingerprintOptions inner = options;
  if (outer > 1) inner.threads = 1;
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        report.fingerprints[i] = fingerprint_from(family[i].second, inner);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (outer == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < outer; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  for (std::size_t i = 1; i < count; ++i) {
    const auto& a = report.fingerprints[0].coords;
    const auto& b = report.fingerprints[i].coords;
    if (a.size() != b.size() || !std::equal(a.begin(), a.end(), b.begin(), [](const auto& x, const auto& y) {
          return x.first == y.first;
        }) || a[0].second != b[0].second || a[1].second != b[1].second)
      throw usage_error("family members must share (n, d): '" + report.labels[0] + "' vs '" + report.labels[i] + "'");
  }

  std::map<Fingerprint, std::vector<std::string>> classes;
  for (std::size_t i = 0; i < count; ++i) classes[report.fingerprints[i]].push_back(report.labels[i]);
  for (auto& [fp, labels] : classes) {
    std::sort(labels.begin(), labels.end());
    report.classes.push_back(std::move(labels));
  }
  report.separating = separating_subset(report.fingerprints);
  return report;
}

PartitionReport partition(const std::vector<NamedMatrix>& family, const FingerprintOptions& options) {
  std::vector<std::pair<std::string, MatrixSource>> sources;
  for (const auto& m : family) sources.emplace_back(m.name, [g = m.matrix](std::uint32_t p) { return g.over(p); });
  return partition(sources, options);
}

PartitionReport partition(const std::vector<std::pair<std::string, LinFormMatrix>>& family,
                          const FingerprintOptions& options) {
  if (family.empty()) return {};
  FingerprintOptions o = options;
  o.primes = {family.front().second.field().modulus()};
  std::vector<std::pair<std::string, MatrixSource>> sources;
  for (const auto& [label, m] : family) {
    if (m.field().modulus() != o.primes.front()) throw usage_error("family members live over different fields");
    sources.emplace_back(label, [m](std::uint32_t) { return m; });
  }
  return partition(sources, o);
}

}  // namespace grpinv
