#pragma once

#include <string>
#include <vector>

namespace copos {

enum class VarKind { Free, Nonneg, PsdEntry };
enum class Sense { Min, Max };

struct VarInfo {
  VarKind kind = VarKind::Free;
  /// PSD entries only: owning block and matrix position (row >= col).
  int block = -1;
  int row = 0;
  int col = 0;
  std::string label;
};

struct PsdBlock {
  std::string label;
  int size = 0;
  /// Variable index of entry (0, 0); entries follow in lower-triangular
  /// column-major order.
  int first_var = 0;
};

struct LinearTerm {
  int var = 0;
  double coef = 0.0;
};

struct EqualityRow {
  std::vector<LinearTerm> terms;
  double rhs = 0.0;
  std::string label;
};

/// Linear program over free scalars, nonnegative scalars and symmetric PSD
/// blocks, with linear equalities. A coefficient on a PSD entry (i, j) multiplies
/// the single matrix entry X_ij, so an off-diagonal Gram product m_i m_j appears
/// with coefficient 2 when both mirrored entries contribute.
class ConicProgram {
 public:
  int add_free(std::string label);
  int add_nonneg(std::string label);
  /// Returns the block index.
  int add_psd_block(std::string label, int size);

  /// Variable holding entry (i, j) of block b; order of i and j does not matter.
  int psd_var(int block, int i, int j) const;

  /// Adds sum(terms) = rhs. Repeated variables are merged; exact zeros dropped.
  int add_equality(const std::vector<LinearTerm>& terms, double rhs, std::string label);
  void add_objective(int var, double coef);
  void set_sense(Sense s) { sense_ = s; }
  void set_name(std::string name) { name_ = std::move(name); }

  int num_vars() const { return static_cast<int>(vars_.size()); }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  const std::vector<VarInfo>& vars() const { return vars_; }
  const std::vector<PsdBlock>& blocks() const { return blocks_; }
  const std::vector<EqualityRow>& rows() const { return rows_; }
  /// Dense objective vector indexed by variable.
  const std::vector<double>& objective() const { return objective_; }
  Sense sense() const { return sense_; }
  const std::string& name() const { return name_; }

  int count(VarKind kind) const;
  /// Sum of s(s+1)/2 over PSD blocks.
  long long psd_entries() const;
  int largest_block() const;

  /// Throws std::invalid_argument on dangling variable references, non-finite
  /// data or empty equality rows.
  void validate() const;

  /// Objective value at `x` in the program's own sense.
  double objective_value(const std::vector<double>& x) const;
  /// max_i |row_i(x) - rhs_i|.
  double max_equality_violation(const std::vector<double>& x) const;
  /// Symmetric matrix of block b read from `x`, row-major n*n.
  std::vector<double> block_matrix(int block, const std::vector<double>& x) const;

 private:
  std::vector<VarInfo> vars_;
  std::vector<PsdBlock> blocks_;
  std::vector<EqualityRow> rows_;
  std::vector<double> objective_;
  Sense sense_ = Sense::Min;
  std::string name_;
};

}  // namespace copos
