#include "copos/lp_hierarchy.hpp"

#include <stdexcept>

namespace copos {

std::string to_string(ZetaMethod m) {
  return m == ZetaMethod::ClosedForm ? "ClosedForm" : "Enumeration";
}

std::optional<Rational> zeta_value_from_beta(std::int64_t beta, int r) {
  const std::int64_t d = r + 2;
  if (beta < d) throw std::logic_error("beta* below r+2");
  if (beta == d) return std::nullopt;
  return Rational((r + 1) * d, beta - d);
}

ZetaResult zeta(const Graph& g, int r, double eps) {
  if (r < 0) throw std::invalid_argument("order must be nonnegative");
  if (eps < 0) throw std::invalid_argument("epsilon must be nonnegative");
  ZetaResult out;
  out.r = r;
  out.eps = eps;
  out.method = ZetaMethod::ClosedForm;
  out.beta_star = beta_star(stability_number(g), r);
  out.value = zeta_value_from_beta(out.beta_star, r);
  return out;
}

ZetaResult zeta_enumerate(const Graph& g, int r, double eps, const EnumerationCaps& caps) {
  BetaStarEnumeration e = beta_star_enumerate(g, r, eps, caps);
  ZetaResult out;
  out.r = r;
  out.eps = eps;
  out.method = ZetaMethod::Enumeration;
  out.beta_star = e.value;
  out.argmin = e.argmin;
  out.value = zeta_value_from_beta(e.value, r);
  return out;
}

std::int64_t floor_rational(const Rational& q) {
  std::int64_t f = q.numerator() / q.denominator();
  if (q.numerator() % q.denominator() != 0 && q.numerator() < 0) --f;
  return f;
}

double to_double(const Rational& q) {
  return static_cast<double>(q.numerator()) / static_cast<double>(q.denominator());
}

ZetaThreshold zeta_rounding_threshold(const Graph& g) {
  ZetaThreshold out;
  out.alpha = stability_number(g);
  out.threshold = out.alpha * out.alpha - 1;
  const ZetaResult at = zeta(g, out.threshold);
  out.rounds_at_threshold = at.value && floor_rational(*at.value) == out.alpha;
  if (out.alpha < 2) {
    out.fails_below_threshold = true;
  } else {
    const ZetaResult below = zeta(g, out.threshold - 1);
    out.fails_below_threshold = !below.value || *below.value >= Rational(out.alpha + 1);
  }
  return out;
}

}  // namespace copos
