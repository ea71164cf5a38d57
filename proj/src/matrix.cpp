#include "jmg/matrix.hpp"

#include <cmath>

namespace jmg {

double frobenius_norm(const ComplexMatrix& m) {
  double sum = 0.0;
  for (const auto& x : m.data()) sum += std::norm(x);
  return std::sqrt(sum);
}

double frobenius_norm(const RationalMatrix& m) {
  Rational sum = 0;
  for (const auto& x : m.data()) sum += x * x;
  return std::sqrt(sum.get_d());
}

bool all_finite(const ComplexMatrix& m) {
  for (const auto& x : m.data())
    if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
  return true;
}

}  // namespace jmg
