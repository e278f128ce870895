#ifndef GRAPHINV_MATRIX_HPP
#define GRAPHINV_MATRIX_HPP

#include <string>
#include <vector>

namespace graphinv {

// Dense rectangular matrix of signed integers. All matrices produced by the
// library have entry magnitudes bounded by the vertex count, so int is ample.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  int& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  int operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  bool operator==(const IntMatrix&) const = default;

  // Exact cubic multiplication.
  IntMatrix operator*(const IntMatrix& rhs) const;

  int nonzero_count() const;

  // Whitespace-separated signed integers, one row per line.
  std::string dump() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> data_;
};

}  // namespace graphinv

#endif
