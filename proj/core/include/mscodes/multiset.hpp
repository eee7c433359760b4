#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mscodes {

/// External symbol value, 1-based: the alphabet is {1, ..., q}.
using Symbol = std::uint32_t;

/// Occurrence count of one symbol. Arithmetic on it is overflow-checked.
using Multiplicity = std::uint32_t;

/// Finite alphabet {1, ..., q}.
class Alphabet {
 public:
  explicit Alphabet(std::uint32_t q);

  std::uint32_t size() const noexcept { return q_; }
  bool contains(Symbol s) const noexcept { return s >= 1 && s <= q_; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::uint32_t q_;
};

/// A finite multiset over an Alphabet, stored as its dense multiplicity
/// vector (entry i counts symbol i+1). Immutable after construction.
class Multiset {
 public:
  /// Empty multiset over `alphabet`.
  explicit Multiset(Alphabet alphabet);

  /// Counts each element; order is irrelevant. Throws DomainError on a symbol
  /// outside 1..q or when a multiplicity would overflow.
  static Multiset from_elements(std::span<const Symbol> elements, Alphabet alphabet);
  static Multiset from_elements(std::initializer_list<Symbol> elements, Alphabet alphabet);

  /// Takes the multiplicity vector as-is; its length fixes q (must be >= 1).
  static Multiset from_multiplicities(std::vector<Multiplicity> multiplicities);

  Alphabet alphabet() const noexcept { return Alphabet(static_cast<std::uint32_t>(counts_.size())); }
  std::uint32_t alphabet_size() const noexcept { return static_cast<std::uint32_t>(counts_.size()); }

  /// Multiplicity of 1-based symbol `s`. Throws DomainError if out of range.
  Multiplicity multiplicity(Symbol s) const;
  std::span<const Multiplicity> multiplicities() const noexcept { return counts_; }

  std::uint64_t cardinality() const noexcept { return cardinality_; }
  bool empty() const noexcept { return cardinality_ == 0; }
  bool is_set() const noexcept;

  /// Elements in nondecreasing order, each repeated by its multiplicity.
  std::vector<Symbol> elements() const;

  friend bool operator==(const Multiset& a, const Multiset& b) { return a.counts_ == b.counts_; }
  friend std::strong_ordering operator<=>(const Multiset& a, const Multiset& b) {
    return a.counts_ <=> b.counts_;
  }

 private:
  explicit Multiset(std::vector<Multiplicity> counts);

  std::vector<Multiplicity> counts_;
  std::uint64_t cardinality_ = 0;
};

Multiset multiset_union(const Multiset& x, const Multiset& y);
Multiset intersection(const Multiset& x, const Multiset& y);
Multiset difference(const Multiset& x, const Multiset& y);
Multiset symmetric_difference(const Multiset& x, const Multiset& y);

inline std::uint64_t cardinality(const Multiset& x) noexcept { return x.cardinality(); }
inline bool is_set(const Multiset& x) noexcept { return x.is_set(); }

/// |X △ Y|, the symmetric-difference metric. Throws DomainError on mismatched alphabets.
std::uint64_t distance(const Multiset& x, const Multiset& y);

/// Sorted roster with braces, e.g. `{1,2,2,2,3}`; `{}` for the empty multiset.
std::string to_roster(const Multiset& x);

/// Parses a roster in any element order. Whitespace is ignored.
Multiset parse_roster(std::string_view text, Alphabet alphabet);

/// Comma-separated multiplicities, e.g. `1,3,1,0`.
std::string to_multiplicity_string(const Multiset& x);
Multiset parse_multiplicity_string(std::string_view text);

/// Adds `delta` to a multiplicity, throwing DomainError on overflow.
Multiplicity checked_add(Multiplicity value, std::uint64_t delta);

}  // namespace mscodes
