#include "copos/conic_program.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace copos {

int ConicProgram::add_free(std::string label) {
  vars_.push_back({VarKind::Free, -1, 0, 0, std::move(label)});
  objective_.push_back(0.0);
  return num_vars() - 1;
}

int ConicProgram::add_nonneg(std::string label) {
  vars_.push_back({VarKind::Nonneg, -1, 0, 0, std::move(label)});
  objective_.push_back(0.0);
  return num_vars() - 1;
}

int ConicProgram::add_psd_block(std::string label, int size) {
  if (size < 1) throw std::invalid_argument("PSD block size must be positive");
  const int b = static_cast<int>(blocks_.size());
  blocks_.push_back({label, size, num_vars()});
  for (int col = 0; col < size; ++col) {
    for (int row = col; row < size; ++row) {
      vars_.push_back({VarKind::PsdEntry, b, row, col, label});
      objective_.push_back(0.0);
    }
  }
  return b;
}

int ConicProgram::psd_var(int block, int i, int j) const {
  const PsdBlock& b = blocks_.at(static_cast<std::size_t>(block));
  if (i < j) std::swap(i, j);
  if (j < 0 || i >= b.size) throw std::out_of_range("PSD entry out of range");
  return b.first_var + j * b.size - j * (j - 1) / 2 + (i - j);
}

int ConicProgram::add_equality(const std::vector<LinearTerm>& terms, double rhs,
                               std::string label) {
  std::map<int, double> merged;
  for (const LinearTerm& t : terms) merged[t.var] += t.coef;
  EqualityRow row;
  for (const auto& [var, coef] : merged) {
    if (coef != 0.0) row.terms.push_back({var, coef});
  }
  row.rhs = rhs;
  row.label = std::move(label);
  rows_.push_back(std::move(row));
  return num_rows() - 1;
}

void ConicProgram::add_objective(int var, double coef) {
  if (var < 0 || var >= num_vars()) throw std::out_of_range("objective variable out of range");
  objective_[static_cast<std::size_t>(var)] += coef;
}

int ConicProgram::count(VarKind kind) const {
  return static_cast<int>(
      std::count_if(vars_.begin(), vars_.end(), [&](const VarInfo& v) { return v.kind == kind; }));
}

long long ConicProgram::psd_entries() const {
  long long total = 0;
  for (const PsdBlock& b : blocks_) total += static_cast<long long>(b.size) * (b.size + 1) / 2;
  return total;
}

int ConicProgram::largest_block() const {
  int m = 0;
  for (const PsdBlock& b : blocks_) m = std::max(m, b.size);
  return m;
}

void ConicProgram::validate() const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const EqualityRow& row = rows_[r];
    if (row.terms.empty()) {
      throw std::invalid_argument("equality row '" + row.label + "' references no variable");
    }
    if (!std::isfinite(row.rhs)) throw std::invalid_argument("non-finite right-hand side");
    for (const LinearTerm& t : row.terms) {
      if (t.var < 0 || t.var >= num_vars()) {
        throw std::invalid_argument("equality row '" + row.label + "' has a dangling variable");
      }
      if (!std::isfinite(t.coef)) throw std::invalid_argument("non-finite coefficient");
    }
  }
  for (double c : objective_) {
    if (!std::isfinite(c)) throw std::invalid_argument("non-finite objective coefficient");
  }
}

double ConicProgram::objective_value(const std::vector<double>& x) const {
  double v = 0.0;
  for (std::size_t k = 0; k < objective_.size(); ++k) v += objective_[k] * x.at(k);
  return v;
}

double ConicProgram::max_equality_violation(const std::vector<double>& x) const {
  double worst = 0.0;
  for (const EqualityRow& row : rows_) {
    double lhs = 0.0;
    for (const LinearTerm& t : row.terms) lhs += t.coef * x.at(static_cast<std::size_t>(t.var));
    worst = std::max(worst, std::abs(lhs - row.rhs));
  }
  return worst;
}

std::vector<double> ConicProgram::block_matrix(int block, const std::vector<double>& x) const {
  const PsdBlock& b = blocks_.at(static_cast<std::size_t>(block));
  std::vector<double> m(static_cast<std::size_t>(b.size * b.size));
  for (int i = 0; i < b.size; ++i) {
    for (int j = 0; j <= i; ++j) {
      const double v = x.at(static_cast<std::size_t>(psd_var(block, i, j)));
      m[static_cast<std::size_t>(i * b.size + j)] = v;
      m[static_cast<std::size_t>(j * b.size + i)] = v;
    }
  }
  return m;
}

}  // namespace copos
