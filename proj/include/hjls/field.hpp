#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace hjls {

using Shape = std::vector<std::size_t>;

std::size_t shape_size(const Shape& shape);

/// Dense N-d array of doubles in row-major order (last axis fastest).
///
/// Construction from explicit values rejects NaN/Inf. Mutable access is
/// provided for kernels; callers that write non-finite values are expected
/// to check with all_finite() at their own boundaries.
class ScalarField {
 public:
  ScalarField() = default;
  explicit ScalarField(Shape shape, double fill = 0.0);
  ScalarField(Shape shape, std::vector<double> values);

  const Shape& shape() const noexcept { return shape_; }
  std::size_t dim() const noexcept { return shape_.size(); }
  std::size_t size() const noexcept { return values_.size(); }

  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }

  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }

  std::size_t flat_index(std::span<const std::size_t> index) const;
  double at(std::span<const std::size_t> index) const;
  double at(std::initializer_list<std::size_t> index) const;

  /// Distance in the flat array between neighbours along `axis`.
  std::size_t stride(std::size_t axis) const;

  bool all_finite() const noexcept;
  double min_value() const;
  double max_value() const;

  friend bool operator==(const ScalarField&, const ScalarField&) = default;

 private:
  Shape shape_;
  std::vector<double> values_;
};

void require_same_shape(const ScalarField& a, const ScalarField& b, std::string_view context);

/// Calls fn(offset, stride) once per 1-d line of `shape` running along
/// `axis`; offset is the flat index of the line's first element.
template <class Fn>
void for_each_line(const Shape& shape, std::size_t axis, Fn&& fn) {
  std::size_t stride = 1;
  for (std::size_t a = axis + 1; a < shape.size(); ++a) stride *= shape[a];
  std::size_t outer = 1;
  for (std::size_t a = 0; a < axis; ++a) outer *= shape[a];
  const std::size_t block = stride * shape[axis];
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t s = 0; s < stride; ++s) fn(o * block + s, stride);
  }
}

}  // namespace hjls
