#include "mscodes/random.hpp"

#include <cmath>

#include "mscodes/errors.hpp"

namespace mscodes {

namespace {

std::uint64_t poisson_small(Engine& engine, double mean) {
  const double limit = std::exp(-mean);
  std::uint64_t k = 0;
  double product = uniform_unit(engine);
  while (product >= limit) {
    ++k;
    product *= uniform_unit(engine);
  }
  return k;
}

}  // namespace

std::uint64_t poisson(Engine& engine, double mean) {
  if (!(mean >= 0.0) || !std::isfinite(mean)) {
    throw DomainError("Poisson mean must be finite and nonnegative");
  }
  constexpr double chunk = 30.0;
  std::uint64_t total = 0;
  while (mean > chunk) {
    total += poisson_small(engine, chunk);
    mean -= chunk;
  }
  if (mean > 0.0) total += poisson_small(engine, mean);
  return total;
}

}  // namespace mscodes
