#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace copos {

/// Exponent vector of a monomial x^a.
using Exponent = std::vector<int>;

int degree(const Exponent& a);
Exponent add_exponents(const Exponent& a, const Exponent& b);

/// Binomial coefficient, saturating at INT64_MAX.
std::int64_t binomial(int n, int k);
/// |I(n, d)| = binomial(n + d - 1, d).
std::int64_t count_exponents(int n, int d);

/// Graded reverse-lexicographic comparison: a precedes b when deg a > deg b, or
/// the degrees agree and the last nonzero entry of a - b is negative.
bool grevlex_greater(const Exponent& a, const Exponent& b);

/// Strict weak order placing lower degrees first and, within a degree, grevlex
/// descending. Used as the canonical monomial order for containers.
struct MonomialOrder {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Visits I(n, d) in grevlex-descending order. The visitor returns false to stop.
void for_each_exponent(int n, int d, const std::function<bool(const Exponent&)>& visit);

/// Ordered monomial basis with an exponent-to-position index.
class MonomialBasis {
 public:
  /// All monomials of degree exactly d, grevlex descending.
  static MonomialBasis homogeneous(int n, int d);
  /// All monomials of degree at most d: degree 0 first, each degree grevlex descending.
  static MonomialBasis up_to(int n, int d);
  static MonomialBasis from_list(int n, std::vector<Exponent> monomials);

  int num_vars() const { return n_; }
  int size() const { return static_cast<int>(monomials_.size()); }
  const Exponent& operator[](int i) const { return monomials_[static_cast<std::size_t>(i)]; }
  const std::vector<Exponent>& monomials() const { return monomials_; }
  /// Position of `a`, or -1.
  int index_of(const Exponent& a) const;

 private:
  int n_ = 0;
  std::vector<Exponent> monomials_;
  std::map<Exponent, int> index_;
};

/// Sparse real polynomial. Coefficients produced by the compilers are integers or
/// dyadic fractions, so double arithmetic stays exact at the sizes used here.
class Polynomial {
 public:
  using Terms = std::map<Exponent, double, MonomialOrder>;

  Polynomial() = default;
  explicit Polynomial(int n) : n_(n) {}
  static Polynomial constant(int n, double c);
  static Polynomial monomial(const Exponent& a, double c = 1.0);
  /// sum_i x_i.
  static Polynomial linear_sum(int n);
  /// sum_i x_i^2.
  static Polynomial square_sum(int n);
  /// x^T M x for a dense row-major n x n matrix.
  static Polynomial quadratic_form(int n, const std::vector<double>& m);

  int num_vars() const { return n_; }
  const Terms& terms() const { return terms_; }
  double coefficient(const Exponent& a) const;
  void add_term(const Exponent& a, double c);
  int degree() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(double s) const;
  Polynomial pow(int k) const;
  /// Substitutes x_i -> x_i^2.
  Polynomial squared_variables() const;
  /// Largest absolute coefficient.
  double max_abs() const;
  std::string to_string() const;

 private:
  int n_ = 0;
  Terms terms_;
};

}  // namespace copos
