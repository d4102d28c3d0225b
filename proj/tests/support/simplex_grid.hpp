#pragma once

// Exact lattice oracle for min x^T (I + A_G) x over the simplex. Points are
// integer vectors c with sum c = N standing for x = c / N, and values are kept
// as the integer N^2 f(x), so every comparison is exact.

#include <cstdint>
#include <functional>
#include <vector>

#include "copos/graph.hpp"

namespace copos::testing {

using Lattice = std::vector<int>;

inline std::int64_t scaled_value(const Graph& g, const Lattice& c) {
  std::int64_t v = 0;
  const int n = g.num_vertices();
  for (int i = 0; i < n; ++i) {
    v += std::int64_t{c[i]} * c[i];
    for (int j = i + 1; j < n; ++j) {
      if (g.has_edge(i, j)) v += 2 * std::int64_t{c[i]} * c[j];
    }
  }
  return v;
}

inline void for_each_lattice_point(int n, int total, const std::function<void(const Lattice&)>& visit) {
  Lattice c(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      c[i] = left;
      visit(c);
      return;
    }
    for (int k = left; k >= 0; --k) {
      c[i] = k;
      rec(i + 1, left - k);
    }
  };
  if (n > 0) rec(0, total);
}

struct GridMinimum {
  std::int64_t scaled_min = 0;
  std::vector<Lattice> argmins;
};

inline GridMinimum grid_minimum(const Graph& g, int total) {
  GridMinimum out;
  bool first = true;
  for_each_lattice_point(g.num_vertices(), total, [&](const Lattice& c) {
    const std::int64_t v = scaled_value(g, c);
    if (first || v < out.scaled_min) {
      out.scaled_min = v;
      out.argmins.clear();
      first = false;
    }
    if (v == out.scaled_min) out.argmins.push_back(c);
  });
  return out;
}

/// Integer displacements v with sum v = 0 and |v|_1 <= max_l1.
inline std::vector<Lattice> probe_directions(int n, int max_l1) {
  std::vector<Lattice> out;
  Lattice v(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int budget) {
    if (i == n) {
      int sum = 0;
      bool nonzero = false;
      for (int x : v) {
        sum += x;
        nonzero = nonzero || x != 0;
      }
      if (sum == 0 && nonzero) out.push_back(v);
      return;
    }
    for (int k = -budget; k <= budget; ++k) {
      v[i] = k;
      rec(i + 1, budget - (k < 0 ? -k : k));
    }
    v[i] = 0;
  };
  rec(0, max_l1);
  return out;
}

enum class ProbeOutcome { StrictlyHigher, NoLower, SomeLower };

/// Compares f at c / N with f at (c + v) / N over the given directions, skipping
/// displacements that leave the simplex.
inline ProbeOutcome probe(const Graph& g, const Lattice& c, const std::vector<Lattice>& dirs) {
  const std::int64_t base = scaled_value(g, c);
  bool tie = false;
  Lattice y = c;
  for (const Lattice& v : dirs) {
    bool inside = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
      y[i] = c[i] + v[i];
      if (y[i] < 0) inside = false;
    }
    if (!inside) continue;
    const std::int64_t val = scaled_value(g, y);
    if (val < base) return ProbeOutcome::SomeLower;
    if (val == base) tie = true;
  }
  return tie ? ProbeOutcome::NoLower : ProbeOutcome::StrictlyHigher;
}

}  // namespace copos::testing
