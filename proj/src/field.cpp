#include "hjls/field.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "hjls/errors.hpp"

namespace hjls {

namespace {

std::string shape_string(const Shape& s) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << ')';
  return os.str();
}

}  // namespace

std::size_t shape_size(const Shape& shape) {
  std::size_t n = 1;
  for (auto c : shape) n *= c;
  return shape.empty() ? 0 : n;
}

ScalarField::ScalarField(Shape shape, double fill)
    : shape_(std::move(shape)), values_(shape_size(shape_), fill) {
  if (!std::isfinite(fill)) throw ValidationError("ScalarField: fill value is not finite");
}

ScalarField::ScalarField(Shape shape, std::vector<double> values)
    : shape_(std::move(shape)), values_(std::move(values)) {
  if (values_.size() != shape_size(shape_)) {
    throw ShapeMismatchError("ScalarField: " + std::to_string(values_.size()) +
                             " values for shape " + shape_string(shape_));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw ValidationError("ScalarField: non-finite value at flat index " + std::to_string(i));
    }
  }
}

std::size_t ScalarField::flat_index(std::span<const std::size_t> index) const {
  if (index.size() != shape_.size()) throw ValidationError("ScalarField: index rank mismatch");
  std::size_t flat = 0;
  for (std::size_t a = 0; a < shape_.size(); ++a) {
    if (index[a] >= shape_[a]) throw ValidationError("ScalarField: index out of range");
    flat = flat * shape_[a] + index[a];
  }
  return flat;
}

double ScalarField::at(std::span<const std::size_t> index) const { return values_[flat_index(index)]; }

double ScalarField::at(std::initializer_list<std::size_t> index) const {
  return at(std::span<const std::size_t>(index.begin(), index.size()));
}

std::size_t ScalarField::stride(std::size_t axis) const {
  std::size_t s = 1;
  for (std::size_t a = axis + 1; a < shape_.size(); ++a) s *= shape_[a];
  return s;
}

bool ScalarField::all_finite() const noexcept {
  return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

double ScalarField::min_value() const {
  if (values_.empty()) throw ValidationError("ScalarField: min of empty field");
  return *std::min_element(values_.begin(), values_.end());
}

double ScalarField::max_value() const {
  if (values_.empty()) throw ValidationError("ScalarField: max of empty field");
  return *std::max_element(values_.begin(), values_.end());
}

void require_same_shape(const ScalarField& a, const ScalarField& b, std::string_view context) {
  if (a.shape() != b.shape()) {
    throw ShapeMismatchError(std::string(context) + ": shape " + shape_string(a.shape()) + " vs " +
                             shape_string(b.shape()));
  }
}

}  // namespace hjls
