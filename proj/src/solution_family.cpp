#include "axbc/solution_family.hpp"

#include <stdexcept>
#include <string>

namespace axbc {
namespace {

std::size_t as_count(const Rational& r) {
  if (!r.is_integer() || r.sign() < 0) throw std::logic_error("projector trace is not a count");
  return std::stoul(r.numerator_string());
}

}  // namespace

AffineSolutionFamily::AffineSolutionFamily(Matrix x0, Matrix left_proj, Matrix right_proj,
                                           Form form)
    : x0_(std::move(x0)), left_(std::move(left_proj)), right_(std::move(right_proj)), form_(form) {
  if (left_.rows() != x0_.rows() || !left_.is_square() || right_.rows() != x0_.cols() ||
      !right_.is_square()) {
    throw DimensionError("solution family: x0 " + x0_.shape_string() + " with projectors " +
                         left_.shape_string() + ", " + right_.shape_string());
  }
}

Matrix AffineSolutionFamily::linear_part(const Matrix& y) const {
  if (y.rows() != x0_.rows() || y.cols() != x0_.cols()) {
    throw DimensionError("parameter Y is " + y.shape_string() + ", expected " +
                         x0_.shape_string());
  }
  if (form_ == Form::kSandwich) return y - left_ * y * right_;
  const Matrix ly = left_ * y;
  return y - ly - y * right_ + ly * right_;
}

AffineSolutionFamily AffineSolutionFamily::with_particular(Matrix x0) const {
  return {std::move(x0), left_, right_, form_};
}

std::size_t AffineSolutionFamily::free_parameter_count() const {
  const Rational tl = left_.trace();
  const Rational tr = right_.trace();
  if (form_ == Form::kSandwich) {
    return as_count(Rational(static_cast<long>(x0_.rows() * x0_.cols())) - tl * tr);
  }
  return as_count((Rational(static_cast<long>(left_.rows())) - tl) *
                  (Rational(static_cast<long>(right_.rows())) - tr));
}

bool AffineSolutionFamily::projectors_idempotent() const {
  return left_ * left_ == left_ && right_ * right_ == right_;
}

}  // namespace axbc
