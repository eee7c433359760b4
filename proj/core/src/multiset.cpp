#include "mscodes/multiset.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "mscodes/errors.hpp"
#include "text_util.hpp"

namespace mscodes {

namespace {

void require_same_alphabet(const Multiset& x, const Multiset& y) {
  if (x.alphabet_size() != y.alphabet_size()) {
    throw DomainError("alphabet mismatch: q=" + std::to_string(x.alphabet_size()) +
                      " vs q=" + std::to_string(y.alphabet_size()));
  }
}

template <class Op>
std::vector<Multiplicity> entrywise(const Multiset& x, const Multiset& y, Op op) {
  require_same_alphabet(x, y);
  const auto a = x.multiplicities();
  const auto b = y.multiplicities();
  std::vector<Multiplicity> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(a[i], b[i]);
  return out;
}

}  // namespace

Alphabet::Alphabet(std::uint32_t q) : q_(q) {
  if (q == 0) throw DomainError("alphabet size must be at least 1");
}

Multiplicity checked_add(Multiplicity value, std::uint64_t delta) {
  const std::uint64_t sum = static_cast<std::uint64_t>(value) + delta;
  if (sum > std::numeric_limits<Multiplicity>::max()) {
    throw DomainError("multiplicity overflow");
  }
  return static_cast<Multiplicity>(sum);
}

Multiset::Multiset(Alphabet alphabet) : counts_(alphabet.size(), 0) {}

Multiset::Multiset(std::vector<Multiplicity> counts) : counts_(std::move(counts)) {
  cardinality_ = std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

Multiset Multiset::from_elements(std::span<const Symbol> elements, Alphabet alphabet) {
  std::vector<Multiplicity> counts(alphabet.size(), 0);
  for (const Symbol s : elements) {
    if (!alphabet.contains(s)) {
      throw DomainError("symbol " + std::to_string(s) + " outside alphabet 1.." +
                        std::to_string(alphabet.size()));
    }
    counts[s - 1] = checked_add(counts[s - 1], 1);
  }
  return Multiset(std::move(counts));
}

Multiset Multiset::from_elements(std::initializer_list<Symbol> elements, Alphabet alphabet) {
  return from_elements(std::span<const Symbol>(elements.begin(), elements.size()), alphabet);
}

Multiset Multiset::from_multiplicities(std::vector<Multiplicity> multiplicities) {
  if (multiplicities.empty()) throw DomainError("alphabet size must be at least 1");
  return Multiset(std::move(multiplicities));
}

Multiplicity Multiset::multiplicity(Symbol s) const {
  if (s < 1 || s > counts_.size()) {
    throw DomainError("symbol " + std::to_string(s) + " outside alphabet");
  }
  return counts_[s - 1];
}

bool Multiset::is_set() const noexcept {
  return std::all_of(counts_.begin(), counts_.end(), [](Multiplicity m) { return m <= 1; });
}

std::vector<Symbol> Multiset::elements() const {
  std::vector<Symbol> out;
  out.reserve(cardinality_);
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    out.insert(out.end(), counts_[i], static_cast<Symbol>(i + 1));
  }
  return out;
}

Multiset multiset_union(const Multiset& x, const Multiset& y) {
  return Multiset::from_multiplicities(
      entrywise(x, y, [](Multiplicity a, Multiplicity b) { return std::max(a, b); }));
}

Multiset intersection(const Multiset& x, const Multiset& y) {
  return Multiset::from_multiplicities(
      entrywise(x, y, [](Multiplicity a, Multiplicity b) { return std::min(a, b); }));
}

Multiset difference(const Multiset& x, const Multiset& y) {
  return Multiset::from_multiplicities(
      entrywise(x, y, [](Multiplicity a, Multiplicity b) { return a > b ? a - b : 0; }));
}

Multiset symmetric_difference(const Multiset& x, const Multiset& y) {
  return Multiset::from_multiplicities(
      entrywise(x, y, [](Multiplicity a, Multiplicity b) { return a > b ? a - b : b - a; }));
}

std::uint64_t distance(const Multiset& x, const Multiset& y) {
  require_same_alphabet(x, y);
  const auto a = x.multiplicities();
  const auto b = y.multiplicities();
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
  return d;
}

std::string to_roster(const Multiset& x) {
  std::string out = "{";
  bool first = true;
  for (const Symbol s : x.elements()) {
    if (!first) out += ',';
    out += std::to_string(s);
    first = false;
  }
  out += '}';
  return out;
}

Multiset parse_roster(std::string_view text, Alphabet alphabet) {
  const auto body = detail::unwrap(text, '{', '}', "roster");
  std::vector<Symbol> elements;
  for (const auto token : detail::split(body, ',')) {
    const auto v = detail::parse_u64(token, "symbol");
    if (v == 0 || v > alphabet.size()) {
      throw DomainError("symbol " + std::to_string(v) + " outside alphabet 1.." +
                        std::to_string(alphabet.size()));
    }
    elements.push_back(static_cast<Symbol>(v));
  }
  return Multiset::from_elements(elements, alphabet);
}

std::string to_multiplicity_string(const Multiset& x) {
  std::string out;
  for (std::size_t i = 0; i < x.multiplicities().size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(x.multiplicities()[i]);
  }
  return out;
}

Multiset parse_multiplicity_string(std::string_view text) {
  std::vector<Multiplicity> counts;
  for (const auto token : detail::split(text, ',')) {
    const auto v = detail::parse_u64(token, "multiplicity");
    counts.push_back(checked_add(0, v));
  }
  return Multiset::from_multiplicities(std::move(counts));
}

}  // namespace mscodes
