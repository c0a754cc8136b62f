#include "axbc/problem.hpp"

namespace axbc {

void ProblemInstance::validate() const {
  if (c.rows() != a.rows() || c.cols() != b.cols()) {
    throw DimensionError("A " + a.shape_string() + ", B " + b.shape_string() + " need C " +
                         std::to_string(a.rows()) + "x" + std::to_string(b.cols()) + ", got " +
                         c.shape_string());
  }
}

}  // namespace axbc
