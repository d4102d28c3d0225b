#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/rational.hpp>

#include "copos/combinatorics.hpp"
#include "copos/graph.hpp"

namespace copos {

using Rational = boost::rational<std::int64_t>;

enum class ZetaMethod { ClosedForm, Enumeration };
std::string to_string(ZetaMethod m);

struct ZetaResult {
  int r = 0;
  double eps = 0.0;
  /// Empty when the program is infeasible.
  std::optional<Rational> value;
  std::int64_t beta_star = 0;
  ZetaMethod method = ZetaMethod::ClosedForm;
  /// Minimizing exponent vector (enumeration only).
  std::optional<Exponent> argmin;

  bool feasible() const { return value.has_value(); }
};

/// (r+1)(r+2) / (beta* - (r+2)), or empty when beta* == r+2.
std::optional<Rational> zeta_value_from_beta(std::int64_t beta, int r);

/// Closed form through beta_star(alpha(G), r). The result does not depend on eps.
ZetaResult zeta(const Graph& g, int r, double eps = 0.0);
/// Same value obtained from exhaustive enumeration of I(n, r+2), without alpha.
ZetaResult zeta_enumerate(const Graph& g, int r, double eps = 0.0,
                          const EnumerationCaps& caps = {});

struct ZetaThreshold {
  int alpha = 0;
  /// alpha^2 - 1.
  int threshold = 0;
  /// floor(zeta^(threshold)) == alpha.
  bool rounds_at_threshold = false;
  /// zeta^(threshold - 1) >= alpha + 1; vacuously true when alpha == 1.
  bool fails_below_threshold = false;
};

ZetaThreshold zeta_rounding_threshold(const Graph& g);

std::int64_t floor_rational(const Rational& q);
double to_double(const Rational& q);

}  // namespace copos
