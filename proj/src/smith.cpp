#include "abelian/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace abelian {

namespace {

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("smith normal form: overflow");
  return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("smith normal form: overflow");
  return r;
}

std::int64_t magnitude(std::int64_t v) {
  if (v == INT64_MIN) throw std::overflow_error("smith normal form: overflow");
  return v < 0 ? -v : v;
}

class Reducer {
 public:
  Reducer(const IntMatrix& m, bool track)
      : d_(m), track_(track) {
    if (track_) {
      u_ = IntMatrix::identity(m.rows());
      v_ = IntMatrix::identity(m.cols());
    }
  }

  SmithDecomposition run() {
    const std::size_t rows = d_.rows();
    const std::size_t cols = d_.cols();
    const std::size_t steps = std::min(rows, cols);
    for (std::size_t t = 0; t < steps; ++t) {
      if (!reduce_step(t)) break;
    }
    SmithDecomposition out;
    for (std::size_t t = 0; t < steps; ++t) out.invariants.push_back(d_(t, t));
    out.diagonal = std::move(d_);
    out.left = std::move(u_);
    out.right = std::move(v_);
    return out;
  }

 private:
  // row_i -= q * row_k
  void row_axpy(std::size_t i, std::size_t k, std::int64_t q) {
    for (std::size_t c = 0; c < d_.cols(); ++c) d_(i, c) = sub(d_(i, c), mul(q, d_(k, c)));
    if (track_) {
      for (std::size_t c = 0; c < u_.cols(); ++c) u_(i, c) = sub(u_(i, c), mul(q, u_(k, c)));
    }
  }
  void col_axpy(std::size_t j, std::size_t k, std::int64_t q) {
    for (std::size_t r = 0; r < d_.rows(); ++r) d_(r, j) = sub(d_(r, j), mul(q, d_(r, k)));
    if (track_) {
      for (std::size_t r = 0; r < v_.rows(); ++r) v_(r, j) = sub(v_(r, j), mul(q, v_(r, k)));
    }
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < d_.cols(); ++c) std::swap(d_(a, c), d_(b, c));
    if (track_) {
      for (std::size_t c = 0; c < u_.cols(); ++c) std::swap(u_(a, c), u_(b, c));
    }
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < d_.rows(); ++r) std::swap(d_(r, a), d_(r, b));
    if (track_) {
      for (std::size_t r = 0; r < v_.rows(); ++r) std::swap(v_(r, a), v_(r, b));
    }
  }
  void negate_row(std::size_t a) {
    for (std::size_t c = 0; c < d_.cols(); ++c) d_(a, c) = -d_(a, c);
    if (track_) {
      for (std::size_t c = 0; c < u_.cols(); ++c) u_(a, c) = -u_(a, c);
    }
  }

  // Returns false when the trailing block is entirely zero.
  bool reduce_step(std::size_t t) {
    const std::size_t rows = d_.rows();
    const std::size_t cols = d_.cols();
    while (true) {
      std::size_t pr = rows, pc = cols;
      std::int64_t best = 0;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          auto a = magnitude(d_(i, j));
          if (a != 0 && (best == 0 || a < best)) {
            best = a;
            pr = i;
            pc = j;
          }
        }
      }
      if (best == 0) return false;
      swap_rows(t, pr);
      swap_cols(t, pc);

      const std::int64_t pivot = d_(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d_(i, t) == 0) continue;
        row_axpy(i, t, d_(i, t) / pivot);
        if (d_(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d_(t, j) == 0) continue;
        col_axpy(j, t, d_(t, j) / pivot);
        if (d_(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (d_(i, j) % pivot != 0) {
            row_axpy(t, i, -1);
            divides = false;
            break;
          }
        }
      }
      if (!divides) continue;
      if (d_(t, t) < 0) negate_row(t);
      return true;
    }
  }

  IntMatrix d_;
  IntMatrix u_;
  IntMatrix v_;
  bool track_;
};

}  // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<std::int64_t> row_major)
    : rows_(rows), cols_(cols), data_(std::move(row_major)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("IntMatrix: shape mismatch");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("IntMatrix: shape mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        std::int64_t s = 0;
        if (__builtin_add_overflow(out(i, j), mul(a(i, k), b(k, j)), &s)) {
          throw std::overflow_error("IntMatrix: overflow");
        }
        out(i, j) = s;
      }
    }
  }
  return out;
}

std::vector<std::int64_t> smith_normal_form(const IntMatrix& m) {
  return Reducer(m, false).run().invariants;
}

SmithDecomposition smith_decomposition(const IntMatrix& m) {
  return Reducer(m, true).run();
}

}  // namespace abelian
