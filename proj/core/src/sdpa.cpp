#include "copos/sdpa.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <sstream>
#include <vector>

#include "copos/errors.hpp"

namespace copos {

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Slot {
  int block = 0;  // 1-based SDPA block
  int row = 0;    // 1-based
  int col = 0;
  double sign = 1.0;
};

}  // namespace

std::string emit_sdpa(const ConicProgram& p) {
  p.validate();
  const int num_psd = static_cast<int>(p.blocks().size());
  // Every non-PSD variable gets one or two diagonal slots of the LP block.
  std::vector<std::vector<Slot>> slots(static_cast<std::size_t>(p.num_vars()));
  int lp_size = 0;
  for (int v = 0; v < p.num_vars(); ++v) {
    const VarInfo& info = p.vars()[static_cast<std::size_t>(v)];
    auto& s = slots[static_cast<std::size_t>(v)];
    switch (info.kind) {
      case VarKind::PsdEntry:
        s.push_back({info.block + 1, info.row + 1, info.col + 1, 1.0});
        break;
      case VarKind::Nonneg:
        ++lp_size;
        s.push_back({num_psd + 1, lp_size, lp_size, 1.0});
        break;
      case VarKind::Free:
        ++lp_size;
        s.push_back({num_psd + 1, lp_size, lp_size, 1.0});
        ++lp_size;
        s.push_back({num_psd + 1, lp_size, lp_size, -1.0});
        break;
    }
  }
  const int nblocks = num_psd + (lp_size > 0 ? 1 : 0);

  std::ostringstream out;
  out << "\"" << (p.name().empty() ? "program" : p.name()) << "\n";
  out << p.num_rows() << "\n" << nblocks << "\n";
  for (const PsdBlock& b : p.blocks()) out << b.size << ' ';
  if (lp_size > 0) out << -lp_size;
  out << "\n";
  for (int i = 0; i < p.num_rows(); ++i) {
    out << (i ? " " : "") << format_double(p.rows()[static_cast<std::size_t>(i)].rhs);
  }
  out << "\n";

  // An off-diagonal coefficient a on X_ij is split evenly over the two
  // mirrored entries of F.
  auto emit_entry = [&](int mat, int v, double coef) {
    for (const Slot& s : slots[static_cast<std::size_t>(v)]) {
      const double value = coef * s.sign * (s.row == s.col ? 1.0 : 0.5);
      out << mat << ' ' << s.block << ' ' << std::min(s.row, s.col) << ' '
          << std::max(s.row, s.col) << ' ' << format_double(value) << "\n";
    }
  };
  const double obj_sign = p.sense() == Sense::Max ? 1.0 : -1.0;
  for (int v = 0; v < p.num_vars(); ++v) {
    const double c = p.objective()[static_cast<std::size_t>(v)];
    if (c != 0.0) emit_entry(0, v, obj_sign * c);
  }
  for (int i = 0; i < p.num_rows(); ++i) {
    for (const LinearTerm& t : p.rows()[static_cast<std::size_t>(i)].terms) emit_entry(i + 1, t.var, t.coef);
  }
  return out.str();
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  // Next non-comment line, or false at end of input.
  bool next(std::string& line) {
    while (pos_ <= text_.size()) {
      std::size_t end = text_.find('\n', pos_);
      if (end == std::string_view::npos) end = text_.size();
      std::string_view raw = text_.substr(pos_, end - pos_);
      pos_ = end + 1;
      ++line_no_;
      const auto first = raw.find_first_not_of(" \t\r");
      if (first == std::string_view::npos) continue;
      if (raw[first] == '"' || raw[first] == '*') continue;
      line.assign(raw);
      for (char& c : line) {
        if (c == ',' || c == '{' || c == '}' || c == '(' || c == ')') c = ' ';
      }
      return true;
    }
    return false;
  }

  int line_no() const { return line_no_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  int line_no_ = 0;
};

template <typename T>
std::vector<T> read_numbers(LineReader& in, std::size_t count, const char* what) {
  std::vector<T> out;
  std::string line;
  while (out.size() < count) {
    if (!in.next(line)) throw ParseError(std::string("unexpected end of input while reading ") + what, in.line_no());
    std::istringstream ss(line);
    T v;
    while (out.size() < count && ss >> v) out.push_back(v);
    if (!ss.eof() && out.size() < count) {
      throw ParseError(std::string("malformed ") + what, in.line_no());
    }
  }
  return out;
}

}  // namespace

ConicProgram parse_sdpa(std::string_view text) {
  LineReader in(text);
  const int m = read_numbers<int>(in, 1, "constraint count")[0];
  const int nblocks = read_numbers<int>(in, 1, "block count")[0];
  if (m < 0 || nblocks < 1) throw ParseError("invalid problem dimensions", in.line_no());
  const std::vector<int> sizes = read_numbers<int>(in, static_cast<std::size_t>(nblocks), "block sizes");
  if (std::find(sizes.begin(), sizes.end(), 0) != sizes.end()) throw ParseError("block size 0", in.line_no());
  const std::vector<double> c = read_numbers<double>(in, static_cast<std::size_t>(m), "right-hand side");

  ConicProgram p;
  p.set_name("sdpa");
  std::vector<int> psd_index(static_cast<std::size_t>(nblocks), -1);
  std::vector<int> lp_first(static_cast<std::size_t>(nblocks), -1);
  for (int b = 0; b < nblocks; ++b) {
    const int s = sizes[static_cast<std::size_t>(b)];
    if (s > 0) {
      psd_index[static_cast<std::size_t>(b)] = p.add_psd_block("B" + std::to_string(b + 1), s);
    } else {
      lp_first[static_cast<std::size_t>(b)] = p.num_vars();
      for (int i = 0; i < -s; ++i) p.add_nonneg("B" + std::to_string(b + 1) + "[" + std::to_string(i + 1) + "]");
    }
  }

  std::vector<std::map<int, double>> rows(static_cast<std::size_t>(m));
  std::string line;
  while (in.next(line)) {
    std::istringstream ss(line);
    int mat = 0, blk = 0, i = 0, j = 0;
    double v = 0.0;
    if (!(ss >> mat >> blk >> i >> j >> v)) throw ParseError("malformed matrix entry", in.line_no());
    if (mat < 0 || mat > m) throw ParseError("matrix index out of range", in.line_no());
    if (blk < 1 || blk > nblocks) throw ParseError("block index out of range", in.line_no());
    const int s = sizes[static_cast<std::size_t>(blk - 1)];
    const int dim = s > 0 ? s : -s;
    if (i < 1 || j < 1 || i > dim || j > dim) throw ParseError("entry index out of range", in.line_no());
    int var = 0;
    double coef = v;
    if (s > 0) {
      var = p.psd_var(psd_index[static_cast<std::size_t>(blk - 1)], i - 1, j - 1);
      if (i != j) coef = 2.0 * v;
    } else {
      if (i != j) throw ParseError("off-diagonal entry in a diagonal block", in.line_no());
      var = lp_first[static_cast<std::size_t>(blk - 1)] + i - 1;
    }
    if (mat == 0) {
      p.add_objective(var, coef);
    } else {
      rows[static_cast<std::size_t>(mat - 1)][var] += coef;
    }
  }
  for (int k = 0; k < m; ++k) {
    std::vector<LinearTerm> terms;
    for (const auto& [var, coef] : rows[static_cast<std::size_t>(k)]) terms.push_back({var, coef});
    p.add_equality(terms, c[static_cast<std::size_t>(k)], "F" + std::to_string(k + 1));
  }
  p.set_sense(Sense::Max);
  return p;
}

}  // namespace copos
