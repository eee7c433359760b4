#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mscodes/multiset.hpp"

namespace mscodes {

/// Bit string of length q; image of a set under its characteristic function.
class BinaryVector {
 public:
  BinaryVector() = default;
  /// Throws DomainError if any entry is not 0 or 1.
  explicit BinaryVector(std::vector<std::uint8_t> bits);

  std::size_t size() const noexcept { return bits_.size(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
  std::uint64_t weight() const noexcept;

  /// Parses an unspaced bit string such as `01010`.
  static BinaryVector parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const BinaryVector&, const BinaryVector&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Point of Z_{>=0}^q; image of a multiset under its multiplicity function.
class IntegerVector {
 public:
  IntegerVector() = default;
  explicit IntegerVector(std::vector<Multiplicity> entries) : entries_(std::move(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  Multiplicity operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Multiplicity>& entries() const noexcept { return entries_; }
  std::uint64_t sum() const noexcept;

  /// Comma-separated decimals, e.g. `1,3,1,0`.
  static IntegerVector parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const IntegerVector&, const IntegerVector&) = default;
  friend auto operator<=>(const IntegerVector&, const IntegerVector&) = default;

 private:
  std::vector<Multiplicity> entries_;
};

/// Throws DomainError when `x` has a multiplicity above 1.
BinaryVector to_characteristic_vector(const Multiset& x);
Multiset from_characteristic_vector(const BinaryVector& v);

IntegerVector to_multiplicity_vector(const Multiset& x);
/// Throws DomainError on an empty vector (q must be >= 1).
Multiset from_multiplicity_vector(const IntegerVector& v);

/// Entrywise XOR. Throws DomainError on length mismatch.
BinaryVector xor_vectors(const BinaryVector& u, const BinaryVector& v);

std::uint64_t hamming_distance(const BinaryVector& u, const BinaryVector& v);
std::uint64_t manhattan_distance(const IntegerVector& u, const IntegerVector& v);

/// Binomial coefficient, saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

/// Number of points on the constant-sum sphere: C(q + ell - 1, ell), saturating.
std::uint64_t sphere_size(std::uint32_t q, std::uint32_t ell) noexcept;

/// Lazily walks {x in Z_{>=0}^q : sum x = ell} in ascending lexicographic
/// order, each point once. Single consumer; independent instances are
/// unrelated.
class SphereEnumerator {
 public:
  SphereEnumerator(std::uint32_t q, std::uint32_t ell);

  /// The next point, or nullopt when exhausted.
  std::optional<IntegerVector> next();

 private:
  std::vector<Multiplicity> current_;
  bool started_ = false;
  bool done_ = false;
};

}  // namespace mscodes
