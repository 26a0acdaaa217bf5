#pragma once

#include <cassert>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace blogsum {

/// Dense row-major rows x cols grid.
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), cells_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t row, std::size_t col) noexcept {
    assert(row < rows_ && col < cols_);
    return cells_[row * cols_ + col];
  }
  const T& operator()(std::size_t row, std::size_t col) const noexcept {
    assert(row < rows_ && col < cols_);
    return cells_[row * cols_ + col];
  }

  std::span<const T> row(std::size_t r) const noexcept {
    return std::span<const T>(cells_).subspan(r * cols_, cols_);
  }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  template <typename Fn>
  auto map(Fn&& fn) const -> Grid<decltype(fn(std::declval<const T&>()))> {
    Grid<decltype(fn(std::declval<const T&>()))> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = fn((*this)(r, c));
    return out;
  }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> cells_;
};

}  // namespace blogsum
