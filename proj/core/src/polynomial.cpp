#include "copos/polynomial.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace copos {

int degree(const Exponent& a) { return std::accumulate(a.begin(), a.end(), 0); }

Exponent add_exponents(const Exponent& a, const Exponent& b) {
  Exponent c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::int64_t>::max();
  std::int64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    const std::int64_t factor = n - k + i;
    if (result > kMax / factor) return kMax;
    // result * factor is divisible by i at every step.
    result = result * factor / i;
  }
  return result;
}

std::int64_t count_exponents(int n, int d) {
  if (n == 0) return d == 0 ? 1 : 0;
  return binomial(n + d - 1, d);
}

bool grevlex_greater(const Exponent& a, const Exponent& b) {
  const int da = degree(a);
  const int db = degree(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

bool MonomialOrder::operator()(const Exponent& a, const Exponent& b) const {
  const int da = degree(a);
  const int db = degree(b);
  if (da != db) return da < db;
  return grevlex_greater(a, b);
}

namespace {

// Fills positions [0, last] with total degree `d`; the last position varies
// slowest, which yields grevlex-descending order.
bool visit_rec(Exponent& a, int last, int d, const std::function<bool(const Exponent&)>& visit) {
  if (last == 0) {
    a[0] = d;
    return visit(a);
  }
  for (int k = 0; k <= d; ++k) {
    a[static_cast<std::size_t>(last)] = k;
    if (!visit_rec(a, last - 1, d - k, visit)) return false;
  }
  a[static_cast<std::size_t>(last)] = 0;
  return true;
}

}  // namespace

void for_each_exponent(int n, int d, const std::function<bool(const Exponent&)>& visit) {
  if (n == 0) {
    if (d == 0) visit(Exponent{});
    return;
  }
  Exponent a(static_cast<std::size_t>(n), 0);
  visit_rec(a, n - 1, d, visit);
}

MonomialBasis MonomialBasis::homogeneous(int n, int d) {
  std::vector<Exponent> list;
  for_each_exponent(n, d, [&](const Exponent& a) {
    list.push_back(a);
    return true;
  });
  return from_list(n, std::move(list));
}

MonomialBasis MonomialBasis::up_to(int n, int d) {
  std::vector<Exponent> list;
  for (int k = 0; k <= d; ++k) {
    for_each_exponent(n, k, [&](const Exponent& a) {
      list.push_back(a);
      return true;
    });
  }
  return from_list(n, std::move(list));
}

MonomialBasis MonomialBasis::from_list(int n, std::vector<Exponent> monomials) {
  MonomialBasis b;
  b.n_ = n;
  b.monomials_ = std::move(monomials);
  for (std::size_t i = 0; i < b.monomials_.size(); ++i) {
    if (static_cast<int>(b.monomials_[i].size()) != n) {
      throw std::invalid_argument("monomial length differs from variable count");
    }
    if (!b.index_.emplace(b.monomials_[i], static_cast<int>(i)).second) {
      throw std::invalid_argument("duplicate monomial in basis");
    }
  }
  return b;
}

int MonomialBasis::index_of(const Exponent& a) const {
  auto it = index_.find(a);
  return it == index_.end() ? -1 : it->second;
}

Polynomial Polynomial::constant(int n, double c) {
  Polynomial p(n);
  p.add_term(Exponent(static_cast<std::size_t>(n), 0), c);
  return p;
}

Polynomial Polynomial::monomial(const Exponent& a, double c) {
  Polynomial p(static_cast<int>(a.size()));
  p.add_term(a, c);
  return p;
}

Polynomial Polynomial::linear_sum(int n) {
  Polynomial p(n);
  for (int i = 0; i < n; ++i) {
    Exponent a(static_cast<std::size_t>(n), 0);
    a[static_cast<std::size_t>(i)] = 1;
    p.add_term(a, 1.0);
  }
  return p;
}

Polynomial Polynomial::square_sum(int n) {
  Polynomial p(n);
  for (int i = 0; i < n; ++i) {
    Exponent a(static_cast<std::size_t>(n), 0);
    a[static_cast<std::size_t>(i)] = 2;
    p.add_term(a, 1.0);
  }
  return p;
}

Polynomial Polynomial::quadratic_form(int n, const std::vector<double>& m) {
  Polynomial p(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double c = m[static_cast<std::size_t>(i * n + j)];
      if (c == 0.0) continue;
      Exponent a(static_cast<std::size_t>(n), 0);
      a[static_cast<std::size_t>(i)] += 1;
      a[static_cast<std::size_t>(j)] += 1;
      p.add_term(a, c);
    }
  }
  return p;
}

double Polynomial::coefficient(const Exponent& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? 0.0 : it->second;
}

void Polynomial::add_term(const Exponent& a, double c) {
  if (static_cast<int>(a.size()) != n_) throw std::invalid_argument("variable count mismatch");
  if (c == 0.0) return;
  auto [it, inserted] = terms_.emplace(a, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0.0) terms_.erase(it);
  }
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [a, c] : terms_) d = std::max(d, copos::degree(a));
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r = *this;
  for (const auto& [a, c] : o.terms_) r.add_term(a, c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + o * -1.0; }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (n_ != o.n_) throw std::invalid_argument("variable count mismatch");
  Polynomial r(n_);
  for (const auto& [a, c] : terms_) {
    for (const auto& [b, d] : o.terms_) r.add_term(add_exponents(a, b), c * d);
  }
  return r;
}

Polynomial Polynomial::operator*(double s) const {
  Polynomial r(n_);
  if (s == 0.0) return r;
  for (const auto& [a, c] : terms_) r.terms_.emplace(a, c * s);
  return r;
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  Polynomial r = constant(n_, 1.0);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

Polynomial Polynomial::squared_variables() const {
  Polynomial r(n_);
  for (const auto& [a, c] : terms_) {
    Exponent b = a;
    for (int& e : b) e *= 2;
    r.terms_.emplace(b, c);
  }
  return r;
}

double Polynomial::max_abs() const {
  double m = 0.0;
  for (const auto& [a, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [a, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 1) out << "*x" << i + 1;
      if (a[i] > 1) out << "*x" << i + 1 << '^' << a[i];
    }
  }
  return out.str();
}

}  // namespace copos
