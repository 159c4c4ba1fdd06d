#include "grpinv/cli/commands.hpp"

#include <CLI11.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "grpinv/cli/matrix_file.hpp"
#include "grpinv/cli/result_table.hpp"
#include "grpinv/errors.hpp"
#include "grpinv/fingerprint.hpp"
#include "grpinv/groups.hpp"
#include "grpinv/isom.hpp"

namespace grpinv::cli {

namespace {

std::vector<std::string> split_list(const std::string& list) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(list);
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::uint32_t parse_prime(const std::string& s) {
  std::uint64_t v = 0;
  try {
    std::size_t used = 0;
    v = std::stoull(s, &used);
    if (used != s.size()) throw usage_error("");
  } catch (const std::exception&) {
    throw usage_error("'" + s + "' is not a number");
  }
  if (v == 2 || v >= (1u << 16) || !is_prime(v)) throw usage_error(s + " is not an odd prime below 65536");
  return static_cast<std::uint32_t>(v);
}

std::uint64_t saturating_power(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

struct Common {
  std::string input;
  std::string primes;
  std::string invariants;
  std::string format = "text";
  std::optional<std::uint64_t> budget;
};

std::vector<std::uint32_t> primes_for(const Common& c, const MatrixFile& file) {
  if (!c.primes.empty()) return parse_primes(c.primes);
  if (file.p) return {*file.p};
  return {3, 5, 7};
}

std::uint32_t prime_for(const std::optional<std::string>& flag, const MatrixFile& file) {
  if (flag) return parse_prime(*flag);
  return file.p.value_or(3);
}

std::vector<std::string> invariants_for(const Common& c, const MatrixFile& file) {
  std::vector<std::string> names =
      c.invariants.empty() ? default_invariants(file.rows, file.nvars) : split_list(c.invariants);
  for (const auto& n : names) parse_invariant(n);
  return names;
}

void require_skew(const MatrixFile& file, const std::vector<std::uint32_t>& primes) {
  if (!file.skew) throw usage_error("this command needs a skew-symmetric matrix file");
  for (std::uint32_t p : primes)
    for (const auto& e : file.entries) file.instantiate(e, p);
}

// Enumerations the budget forbids, as a diagnostic; empty when all fit.
std::string budget_shortfall(const MatrixFile& file, const std::vector<std::uint32_t>& primes,
                             const std::vector<std::string>& names, std::uint64_t budget) {
  bool direct = false, adj = false;
  for (const auto& n : names) {
    const InvariantSpec s = parse_invariant(n);
    if (s.kind == InvariantSpec::Kind::points || s.kind == InvariantSpec::Kind::span) (s.adjoint ? adj : direct) = true;
  }
  for (std::uint32_t p : primes) {
    if (direct && saturating_power(p, file.nvars) > budget)
      return "budget exceeded: enumerating F_" + std::to_string(p) + "^" + std::to_string(file.nvars) + " needs " +
             std::to_string(saturating_power(p, file.nvars)) + " points, budget " + std::to_string(budget);
    if (adj && saturating_power(p, file.rows) > budget)
      return "budget exceeded: enumerating F_" + std::to_string(p) + "^" + std::to_string(file.rows) + " needs " +
             std::to_string(saturating_power(p, file.rows)) + " points, budget " + std::to_string(budget);
  }
  return {};
}

Cell to_cell(const std::optional<std::int64_t>& v) {
  if (v) return *v;
  return std::monostate{};
}

int cmd_invariants(const Common& c, std::ostream& out, std::ostream& err) {
  const MatrixFile file = load_matrix_file(c.input);
  const auto primes = primes_for(c, file);
  const auto names = invariants_for(c, file);
  const Format format = parse_format(c.format);
  require_skew(file, primes);

  FingerprintOptions options;
  options.invariants = names;
  options.budget = c.budget.value_or(kDefaultPointBudget);
  ResultTable table;
  table.columns.push_back("name");
  for (std::uint32_t p : primes)
    for (const auto& n : names) table.columns.push_back("p" + std::to_string(p) + ":" + n);
  for (const auto& e : file.entries) {
    std::vector<Cell> row{e.name};
    for (std::uint32_t p : primes) {
      const Fingerprint fp = fingerprint(file.instantiate(e, p), options);
      for (const auto& n : names) row.push_back(to_cell(fp.get("p" + std::to_string(p) + ":" + n)));
    }
    table.add_row(std::move(row));
  }
  out << render(table, format);
  const std::string shortfall = budget_shortfall(file, primes, names, options.budget);
  if (!shortfall.empty()) {
    err << shortfall << '\n';
    return over_budget;
  }
  return ok;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? sep : "") + items[i];
  return s;
}

int cmd_partition(const Common& c, std::ostream& out, std::ostream& err) {
  const MatrixFile file = load_matrix_file(c.input);
  const auto primes = primes_for(c, file);
  const auto names = invariants_for(c, file);
  const Format format = parse_format(c.format);
  require_skew(file, primes);

  FingerprintOptions options;
  options.primes = primes;
  options.invariants = names;
  options.budget = c.budget.value_or(kDefaultPointBudget);
  std::vector<std::pair<std::string, MatrixSource>> family;
  for (const auto& e : file.entries)
    family.emplace_back(e.name, [&file, &e](std::uint32_t p) { return file.instantiate(e, p); });
  const PartitionReport report = partition(family, options);

  ResultTable table;
  table.columns = {"class", "size", "members"};
  for (std::size_t i = 0; i < report.classes.size(); ++i)
    table.add_row({static_cast<std::int64_t>(i + 1), static_cast<std::int64_t>(report.classes[i].size()),
                   join(report.classes[i], ";")});
  if (format == Format::text) {
    out << "classes: " << report.class_count() << '\n' << render_text(table);
    out << "separating: " << (report.separating.empty() ? "(none)" : join(report.separating, " ")) << '\n';
  } else {
    table.add_row({std::string("separating"), static_cast<std::int64_t>(report.separating.size()),
                   join(report.separating, ";")});
    out << render(table, format);
  }
  const std::string shortfall = budget_shortfall(file, primes, names, options.budget);
  if (!shortfall.empty()) {
    err << shortfall << '\n';
    return over_budget;
  }
  return ok;
}

Cell yes_no(bool b) { return std::string(b ? "yes" : "no"); }

int cmd_verify(const Common& c, const std::optional<std::string>& prime, std::ostream& out, std::ostream& err) {
  const MatrixFile file = load_matrix_file(c.input);
  const std::uint32_t p = prime_for(prime, file);
  const Format format = parse_format(c.format);
  require_skew(file, {p});
  const std::uint64_t budget = c.budget.value_or(kDefaultElementBudget);

  ResultTable table;
  table.columns = {"name",     "order",       "class",      "derived_dim", "centre_dim",
                   "exponent_p", "class_le_2", "enum_derived", "enum_centre", "consistent"};
  for (const auto& e : file.entries) {
    const GroupSpec group(file.instantiate(e, p));
    const StructuralReport r = structural_report(group, budget);
    std::vector<Cell> row{e.name,
                          std::to_string(p) + "^" + std::to_string(r.order_exponent),
                          static_cast<std::int64_t>(r.nilpotency_class),
                          static_cast<std::int64_t>(r.derived_dim),
                          static_cast<std::int64_t>(r.centre_dim)};
    if (r.enumerated) {
      row.push_back(yes_no(r.enumerated->exponent_p));
      row.push_back(yes_no(r.enumerated->class_at_most_2));
      row.push_back(static_cast<std::int64_t>(r.enumerated->derived_dim));
      row.push_back(static_cast<std::int64_t>(r.enumerated->centre_dim));
    } else {
      row.insert(row.end(), 4, std::monostate{});
    }
    row.push_back(yes_no(r.consistent()));
    table.add_row(std::move(row));
    if (r.nilpotency_class < 2)
      err << "warning: entry '" << e.name << "' defines a group of class <= 1, not a class-2 group\n";
    if (!r.consistent()) err << "warning: entry '" << e.name << "' failed the enumeration cross-check\n";
  }
  out << render(table, format);
  return ok;
}

std::string matrix_text(const FpMatrix& m) {
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    std::string r;
    for (std::size_t j = 0; j < m.cols(); ++j) r += (j ? " " : "") + std::to_string(m(i, j));
    rows.push_back(r);
  }
  return join(rows, ";");
}

int cmd_isotest(const Common& c, const std::string& pair, const std::optional<std::string>& prime, std::ostream& out,
                std::ostream& err) {
  const MatrixFile file = load_matrix_file(c.input);
  const std::uint32_t p = prime_for(prime, file);
  const Format format = parse_format(c.format);
  const auto names = split_list(pair);
  if (names.size() != 2) throw usage_error("--pair expects two entry names separated by a comma");
  if (!file.skew) throw usage_error("isotest needs a skew-symmetric matrix file");
  const LinFormMatrix b = file.instantiate(file.find(names[0]), p);
  const LinFormMatrix cm = file.instantiate(file.find(names[1]), p);
  const std::uint64_t budget = c.budget.value_or(kDefaultIsoBudget);
  const IsoOutcome outcome = isomorphic_bruteforce(b, cm, budget);

  std::string status = "non-isomorphic";
  if (outcome.status == IsoStatus::isomorphic) status = "isomorphic";
  if (outcome.status == IsoStatus::budget_exceeded) status = "budget-exceeded";
  const bool verified = outcome.witness && verify_witness(b, cm, *outcome.witness);

  if (format == Format::text) {
    out << "pair: " << names[0] << " " << names[1] << " over F_" << p << '\n';
    out << "status: " << status << '\n';
    out << "search size: " << outcome.required << " (budget " << budget << ")\n";
    if (outcome.witness) {
      out << "X:\n";
      for (std::size_t i = 0; i < outcome.witness->x.rows(); ++i) {
        out << ' ';
        for (std::size_t j = 0; j < outcome.witness->x.cols(); ++j) out << ' ' << outcome.witness->x(i, j);
        out << '\n';
      }
      out << "Z:\n";
      for (std::size_t i = 0; i < outcome.witness->z.rows(); ++i) {
        out << ' ';
        for (std::size_t j = 0; j < outcome.witness->z.cols(); ++j) out << ' ' << outcome.witness->z(i, j);
        out << '\n';
      }
      out << "witness verified: " << (verified ? "yes" : "no") << '\n';
    }
  } else {
    ResultTable table;
    table.columns = {"a", "b", "p", "status", "required", "x", "z", "verified"};
    std::vector<Cell> row{names[0], names[1], static_cast<std::int64_t>(p), status,
                          outcome.required > static_cast<std::uint64_t>(INT64_MAX)
                              ? Cell(std::monostate{})
                              : Cell(static_cast<std::int64_t>(outcome.required))};
    if (outcome.witness) {
      row.push_back(matrix_text(outcome.witness->x));
      row.push_back(matrix_text(outcome.witness->z));
      row.push_back(yes_no(verified));
    } else {
      row.insert(row.end(), 3, std::monostate{});
    }
    table.add_row(std::move(row));
    out << render(table, format);
  }
  if (outcome.status == IsoStatus::budget_exceeded) {
    err << "budget exceeded: search needs " << outcome.required << " candidate pairs, budget " << budget << '\n';
    return over_budget;
  }
  if (outcome.witness && !verified) {
    err << "error: witness failed verification\n";
    return usage;
  }
  return ok;
}

int cmd_adjoint(const std::string& input, const std::optional<std::string>& prime, std::ostream& out) {
  const MatrixFile file = load_matrix_file(input);
  if (!file.skew) throw usage_error("adjoint needs a skew-symmetric matrix file");
  std::optional<std::uint32_t> p;
  if (prime) p = parse_prime(*prime);
  else p = file.p;
  const bool has_omega = std::any_of(file.entries.begin(), file.entries.end(),
                                     [](const NamedMatrix& e) { return !e.matrix.omega_slots().empty(); });
  if (has_omega && !p) throw usage_error("entries with omega slots need --prime to form the adjoint");

  std::vector<NamedMatrix> adjoints;
  for (const auto& e : file.entries) {
    const std::size_t n = file.rows, d = file.nvars;
    GenericMatrix a(n, d, n);
    if (p) {
      const LinFormMatrix adj = adjoint(file.instantiate(e, *p));
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t k = 0; k < d; ++k) a.set(j, i, k, adj.coeff(j, i, k));
    } else {
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t k = 0; k < d; ++k) a.set(j, i, k, e.matrix.coeff(k, i, j));
    }
    adjoints.push_back({e.name, std::move(a)});
  }
  MatrixFile result = make_matrix_file(std::move(adjoints), false);
  result.p = p;
  out << to_json(result);
  return ok;
}

int cmd_catalog(const std::string& family, std::ostream& out) {
  std::vector<NamedMatrix> entries;
  bool skew = true;
  if (family == "b4") {
    entries = four_generator_family();
  } else if (family == "b5") {
    entries = padded_family();
  } else if (family == "lee") {
    entries = {lee_matrix()};
  } else if (family == "nongeneric") {
    entries = {nongeneric_matrix()};
    skew = false;
  } else {
    throw usage_error("unknown family '" + family + "' (expected b4, b5, lee or nongeneric)");
  }
  out << to_json(make_matrix_file(std::move(entries), skew));
  return ok;
}

}  // namespace

std::vector<std::uint32_t> parse_primes(const std::string& list) {
  std::vector<std::uint32_t> out;
  for (const auto& s : split_list(list)) out.push_back(parse_prime(s));
  if (out.empty()) throw usage_error("empty prime list");
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app("Isomorphism invariants of class-2 exponent-p groups from skew-symmetric matrices of linear forms",
               "grpinv");
  app.require_subcommand(1);

  Common common;
  std::optional<std::string> prime;
  std::string pair, family;
  auto add_input = [&](CLI::App* sub) { sub->add_option("--input,-i", common.input, "Matrix file (JSON)")->required(); };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format,-f", common.format, "Output format: text, csv or json")->capture_default_str();
  };
  auto add_budget = [&](CLI::App* sub, const char* what) { sub->add_option("--budget", common.budget, what); };

  auto* inv = app.add_subcommand("invariants", "Tabulate invariants for every matrix in a file");
  add_input(inv);
  inv->add_option("--primes", common.primes, "Comma-separated odd primes (default: file prime, else 3,5,7)");
  inv->add_option("--invariants", common.invariants, "Comma-separated invariant names, e.g. np4,deg4,np3adj");
  add_format(inv);
  add_budget(inv, "Maximum points per enumeration (default 1e9)");

  auto* part = app.add_subcommand("partition", "Group the matrices of a file by equal fingerprints");
  add_input(part);
  part->add_option("--primes", common.primes, "Comma-separated odd primes (default: file prime, else 3,5,7)");
  part->add_option("--invariants", common.invariants, "Comma-separated invariant names (default: all)");
  add_format(part);
  add_budget(part, "Maximum points per enumeration (default 1e9)");

  auto* ver = app.add_subcommand("verify", "Structural report of each group: order, class, derived and centre dimensions");
  add_input(ver);
  ver->add_option("--prime", prime, "Odd prime (default: file prime, else 3)");
  add_format(ver);
  add_budget(ver, "Maximum group order for the enumeration cross-check (default 1e6)");

  auto* iso = app.add_subcommand("isotest", "Exhaustive isomorphism test for two entries of a file");
  add_input(iso);
  iso->add_option("--pair", pair, "Two entry names, comma-separated")->required();
  iso->add_option("--prime", prime, "Odd prime (default: file prime, else 3)");
  add_format(iso);
  add_budget(iso, "Maximum |GL_n| * |GL_d| (default 1e8)");

  auto* adj = app.add_subcommand("adjoint", "Write the adjoint matrices of a file as a (non-skew) matrix file");
  add_input(adj);
  adj->add_option("--prime", prime, "Reduce mod this prime (required when entries use omega slots)");

  auto* cat = app.add_subcommand("catalog", "Write a built-in family as a matrix file");
  cat->add_option("--family", family, "b4, b5, lee or nongeneric")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    if (inv->parsed()) return cmd_invariants(common, out, err);
    if (part->parsed()) return cmd_partition(common, out, err);
    if (ver->parsed()) return cmd_verify(common, prime, out, err);
    if (iso->parsed()) return cmd_isotest(common, pair, prime, out, err);
    if (adj->parsed()) return cmd_adjoint(common.input, prime, out);
    if (cat->parsed()) return cmd_catalog(family, out);
  } catch (const malformed_input& e) {
    err << "error: " << e.what() << '\n';
    return malformed;
  } catch (const non_skew_entry& e) {
    err << "error: " << e.what() << '\n';
    return non_skew;
  } catch (const budget_exceeded& e) {
    err << "error: " << e.what() << '\n';
    return over_budget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
  return usage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.push_back("grpinv");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace grpinv::cli
