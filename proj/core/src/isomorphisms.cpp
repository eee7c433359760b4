#include "mscodes/isomorphisms.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "mscodes/errors.hpp"
#include "text_util.hpp"

namespace mscodes {

namespace {

void require_same_length(std::size_t a, std::size_t b) {
  if (a != b) {
    throw DomainError("length mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

BinaryVector::BinaryVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (const auto b : bits_) {
    if (b > 1) throw DomainError("binary vector entry must be 0 or 1");
  }
}

std::uint64_t BinaryVector::weight() const noexcept {
  return std::accumulate(bits_.begin(), bits_.end(), std::uint64_t{0});
}

BinaryVector BinaryVector::parse(std::string_view text) {
  text = detail::trim(text);
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (const char c : text) {
    if (c != '0' && c != '1') {
      throw ParseError("invalid bit '" + std::string(1, c) + "' in '" + std::string(text) + "'");
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return BinaryVector(std::move(bits));
}

std::string BinaryVector::to_string() const {
  std::string out;
  out.reserve(bits_.size());
  for (const auto b : bits_) out += static_cast<char>('0' + b);
  return out;
}

std::uint64_t IntegerVector::sum() const noexcept {
  return std::accumulate(entries_.begin(), entries_.end(), std::uint64_t{0});
}

IntegerVector IntegerVector::parse(std::string_view text) {
  std::vector<Multiplicity> entries;
  for (const auto token : detail::split(text, ',')) {
    entries.push_back(checked_add(0, detail::parse_u64(token, "integer vector entry")));
  }
  return IntegerVector(std::move(entries));
}

std::string IntegerVector::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

BinaryVector to_characteristic_vector(const Multiset& x) {
  if (!x.is_set()) {
    throw DomainError("characteristic vector requires a set, got " + to_roster(x));
  }
  const auto m = x.multiplicities();
  return BinaryVector(std::vector<std::uint8_t>(m.begin(), m.end()));
}

Multiset from_characteristic_vector(const BinaryVector& v) {
  return Multiset::from_multiplicities(std::vector<Multiplicity>(v.bits().begin(), v.bits().end()));
}

IntegerVector to_multiplicity_vector(const Multiset& x) {
  const auto m = x.multiplicities();
  return IntegerVector(std::vector<Multiplicity>(m.begin(), m.end()));
}

Multiset from_multiplicity_vector(const IntegerVector& v) {
  return Multiset::from_multiplicities(v.entries());
}

BinaryVector xor_vectors(const BinaryVector& u, const BinaryVector& v) {
  require_same_length(u.size(), v.size());
  std::vector<std::uint8_t> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] ^ v[i];
  return BinaryVector(std::move(out));
}

std::uint64_t hamming_distance(const BinaryVector& u, const BinaryVector& v) {
  require_same_length(u.size(), v.size());
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < u.size(); ++i) d += u[i] != v[i] ? 1 : 0;
  return d;
}

std::uint64_t manhattan_distance(const IntegerVector& u, const IntegerVector& v) {
  require_same_length(u.size(), v.size());
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < u.size(); ++i) d += u[i] > v[i] ? u[i] - v[i] : v[i] - u[i];
  return d;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  __extension__ using u128 = unsigned __int128;
  u128 result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step.
    result = result * (n - k + i) / i;
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return static_cast<std::uint64_t>(result);
}

std::uint64_t sphere_size(std::uint32_t q, std::uint32_t ell) noexcept {
  if (q == 0) return 0;
  return binomial(static_cast<std::uint64_t>(q) + ell - 1, ell);
}

SphereEnumerator::SphereEnumerator(std::uint32_t q, std::uint32_t ell) : current_(q, 0) {
  if (q == 0) throw DomainError("alphabet size must be at least 1");
  current_.back() = ell;
}

std::optional<IntegerVector> SphereEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return IntegerVector(current_);
  }
  // The lexicographic successor moves one unit from the last nonzero entry
  // (at j >= 1) into entry j-1 and pushes the remainder to the end.
  std::size_t j = current_.size();
  for (std::size_t i = current_.size(); i-- > 1;) {
    if (current_[i] > 0) {
      j = i;
      break;
    }
  }
  if (j == current_.size()) {
    done_ = true;
    return std::nullopt;
  }
  const Multiplicity rest = current_[j] - 1;
  current_[j] = 0;
  ++current_[j - 1];
  current_.back() += rest;
  return IntegerVector(current_);
}

}  // namespace mscodes
