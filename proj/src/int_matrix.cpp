#include "eccspec/int_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace eccspec {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

std::int64_t IntMatrix::trace() const {
  std::int64_t t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

std::int64_t IntMatrix::max_entry() const {
  if (data_.empty()) return 0;
  return *std::max_element(data_.begin(), data_.end());
}

IntMatrix IntMatrix::permuted(const std::vector<std::size_t>& perm) const {
  if (rows_ != cols_ || perm.size() != rows_)
    throw std::invalid_argument("IntMatrix::permuted: size mismatch");
  IntMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(perm[i], perm[j]);
  return out;
}

IntMatrix IntMatrix::scaled(std::int64_t factor) const {
  IntMatrix out = *this;
  for (auto& x : out.data_) x *= factor;
  return out;
}

}  // namespace eccspec
