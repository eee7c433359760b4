#pragma once

#include <cstdint>
#include <string>

namespace mscodes {

/// Counts of channel events: insertions, deletions and substitutions.
struct ErrorPattern {
  std::uint32_t insertions = 0;
  std::uint32_t deletions = 0;
  std::uint32_t substitutions = 0;

  /// s + rho + 2t, the bound on d(X, Y) for a transmission with this pattern.
  constexpr std::uint64_t distance_bound() const noexcept {
    return std::uint64_t{insertions} + deletions + 2ULL * substitutions;
  }

  constexpr bool is_zero() const noexcept { return insertions == 0 && deletions == 0 && substitutions == 0; }

  /// Componentwise <=.
  constexpr bool within(const ErrorPattern& limit) const noexcept {
    return insertions <= limit.insertions && deletions <= limit.deletions &&
           substitutions <= limit.substitutions;
  }

  std::string to_string() const {
    return "(s=" + std::to_string(insertions) + ",rho=" + std::to_string(deletions) +
           ",t=" + std::to_string(substitutions) + ")";
  }

  friend bool operator==(const ErrorPattern&, const ErrorPattern&) = default;
  friend auto operator<=>(const ErrorPattern&, const ErrorPattern&) = default;
};

/// True iff 2(s + rho + 2t) < d_min, the regime where minimum-distance
/// decoding is guaranteed to recover the sent codeword.
constexpr bool guaranteed_correctable(std::uint64_t d_min, const ErrorPattern& e) noexcept {
  return 2 * e.distance_bound() < d_min;
}

}  // namespace mscodes
