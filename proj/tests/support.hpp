#pragma once

// Shared helpers for tests: a small parser for matrices of linear forms,
// random skew-symmetric matrices and brute-force oracles that avoid the code
// paths under test.

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "grpinv/linforms.hpp"
#include "grpinv/matrix.hpp"

namespace grpinv::testing {

/// Parses "x1+x3, x2; x2, 2*x2 - @y" where ';' separates rows, ',' entries,
/// `vars` are the variable names and '@' stands for `omega`.
inline LinFormMatrix parse_linear_matrix(const PrimeField& f, const std::vector<std::string>& vars,
                                         const std::string& text, std::int64_t omega = 0) {
  std::vector<std::vector<std::string>> cells;
  std::stringstream rows(text);
  std::string row;
  while (std::getline(rows, row, ';')) {
    cells.emplace_back();
    std::stringstream entries(row);
    std::string e;
    while (std::getline(entries, e, ',')) {
      e.erase(std::remove(e.begin(), e.end(), ' '), e.end());
      cells.back().push_back(e);
    }
  }
  LinFormMatrix m(f, cells.size(), cells.front().size(), vars.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].size() != m.cols()) throw std::invalid_argument("ragged matrix text");
    for (std::size_t j = 0; j < cells[i].size(); ++j) {
      const std::string& s = cells[i][j];
      std::size_t pos = 0;
      while (pos < s.size()) {
        std::int64_t sign = 1;
        if (s[pos] == '+' || s[pos] == '-') sign = s[pos++] == '-' ? -1 : 1;
        std::int64_t c = 1;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
          std::size_t used = 0;
          c = std::stoll(s.substr(pos), &used);
          pos += used;
          if (pos < s.size() && s[pos] == '*') ++pos;
        }
        if (pos < s.size() && s[pos] == '@') {
          c *= omega;
          ++pos;
        }
        if (pos >= s.size() || s[pos] == '+' || s[pos] == '-') {
          if (c * sign != 0) throw std::invalid_argument("constant entries are not linear forms: " + s);
          continue;
        }
        std::size_t best = vars.size(), best_len = 0;
        for (std::size_t v = 0; v < vars.size(); ++v)
          if (s.compare(pos, vars[v].size(), vars[v]) == 0 && vars[v].size() > best_len) best = v, best_len = vars[v].size();
        if (best == vars.size()) throw std::invalid_argument("unknown variable in " + s);
        pos += best_len;
        m.set(best, i, j, f.reduce(static_cast<std::int64_t>(m.coeff(best, i, j)) + sign * c));
      }
    }
  }
  return m;
}

inline std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

inline LinFormMatrix random_skew(const PrimeField& f, std::size_t n, std::size_t d, std::mt19937_64& rng) {
  LinFormMatrix m(f, n, n, d);
  std::uniform_int_distribution<std::int64_t> coeff(0, f.modulus() - 1);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const std::int64_t c = coeff(rng);
        m.set(k, i, j, c);
        m.set(k, j, i, -c);
      }
  return m;
}

inline LinFormMatrix random_linear(const PrimeField& f, std::size_t rows, std::size_t cols, std::size_t d,
                                   std::mt19937_64& rng) {
  LinFormMatrix m(f, rows, cols, d);
  std::uniform_int_distribution<std::int64_t> coeff(0, f.modulus() - 1);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m.set(k, i, j, coeff(rng));
  return m;
}

/// Calls fn(point) for every point of F_p^d.
template <class Fn>
void for_each_point(std::uint32_t p, std::size_t d, Fn&& fn) {
  std::vector<Residue> v(d, 0);
  while (true) {
    fn(static_cast<const std::vector<Residue>&>(v));
    std::size_t i = 0;
    while (i < d && ++v[i] == p) v[i++] = 0;
    if (i == d) return;
  }
}

/// Determinant by cofactor expansion over the integers mod p (independent of FpMatrix elimination).
inline std::int64_t cofactor_det(const std::vector<std::vector<std::int64_t>>& a, std::int64_t p) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return ((a[0][0] % p) + p) % p;
  std::int64_t total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c] % p == 0) continue;
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t q = 0; q < n; ++q)
        if (q != c) row.push_back(a[r][q]);
      minor.push_back(row);
    }
    const std::int64_t term = (a[0][c] % p) * cofactor_det(minor, p) % p;
    total = (total + (c % 2 ? -term : term)) % p;
  }
  return ((total % p) + p) % p;
}

/// n_p(I_k(D)) counted by testing that every k x k minor of D(v) vanishes.
inline std::uint64_t minor_vanishing_count(const LinFormMatrix& d, std::size_t k) {
  const std::uint32_t p = d.field().modulus();
  std::vector<std::vector<std::size_t>> rsets, csets;
  auto subsets = [&](std::size_t n, std::vector<std::vector<std::size_t>>& out) {
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
    do {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i)
        if (pick[i]) s.push_back(i);
      out.push_back(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
  };
  subsets(d.rows(), rsets);
  subsets(d.cols(), csets);
  std::uint64_t count = 0;
  for_each_point(p, d.nvars(), [&](const std::vector<Residue>& v) {
    std::vector<std::vector<std::int64_t>> m(d.rows(), std::vector<std::int64_t>(d.cols(), 0));
    for (std::size_t q = 0; q < d.nvars(); ++q)
      for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j) m[i][j] = (m[i][j] + std::int64_t(v[q]) * d.coeff(q, i, j)) % p;
    for (const auto& r : rsets)
      for (const auto& c : csets) {
        std::vector<std::vector<std::int64_t>> sub;
        for (auto i : r) {
          std::vector<std::int64_t> row;
          for (auto j : c) row.push_back(m[i][j]);
          sub.push_back(row);
        }
        if (cofactor_det(sub, p) != 0) return;
      }
    ++count;
  });
  return count;
}

}  // namespace grpinv::testing
