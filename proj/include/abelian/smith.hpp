#pragma once

// Smith normal form over the integers.

#include <cstddef>
#include <cstdint>
#include <vector>

namespace abelian {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> row_major);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

struct SmithDecomposition {
  IntMatrix left;      // U, unimodular rows x rows
  IntMatrix diagonal;  // D = U * M * V
  IntMatrix right;     // V, unimodular cols x cols
  /// min(rows, cols) non-negative entries of D, s_1 | s_2 | ... (zeros last).
  std::vector<std::int64_t> invariants;
};

/// Diagonal of the Smith normal form of m. Arithmetic is overflow-checked
/// (std::overflow_error); pivots are chosen by minimal absolute value.
std::vector<std::int64_t> smith_normal_form(const IntMatrix& m);

/// Same reduction, additionally tracking the unimodular transforms.
SmithDecomposition smith_decomposition(const IntMatrix& m);

}  // namespace abelian
