#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mscodes/error_pattern.hpp"
#include "mscodes/isomorphisms.hpp"
#include "mscodes/multiset.hpp"
#include "mscodes/random.hpp"

namespace mscodes {

/// Corruption model of the permutation channel.
///
/// Exact mode applies exactly s insertions, rho deletions and t substitutions.
/// Probabilistic mode deletes each sent element with probability p_del,
/// substitutes each survivor with probability p_sub, and inserts a
/// Poisson(ins_rate) number of symbols. Inserted symbols are uniform over the
/// alphabet and may duplicate symbols already present.
class ChannelSpec {
 public:
  enum class Mode { exact, probabilistic };

  /// The noiseless channel: exact mode with all counts zero.
  ChannelSpec() = default;

  static ChannelSpec exact(const ErrorPattern& counts);
  static ChannelSpec exact(std::uint32_t s, std::uint32_t rho, std::uint32_t t) {
    return exact(ErrorPattern{s, rho, t});
  }
  /// Throws DomainError unless both probabilities lie in [0,1] and ins_rate >= 0.
  static ChannelSpec probabilistic(double p_del, double p_sub, double ins_rate);
  static ChannelSpec deletion_only(double p_del) { return probabilistic(p_del, 0.0, 0.0); }

  Mode mode() const noexcept { return mode_; }
  const ErrorPattern& counts() const noexcept { return counts_; }
  double p_del() const noexcept { return p_del_; }
  double p_sub() const noexcept { return p_sub_; }
  double ins_rate() const noexcept { return ins_rate_; }

  /// Throws DomainError if the spec cannot be applied to a multiset of
  /// `cardinality` elements over `q` symbols: rho + t > cardinality, or
  /// substitutions requested with q = 1.
  void validate_for(std::uint64_t cardinality, std::uint32_t q) const;

  /// `mode=exact s=1 rho=2 t=0` or `mode=prob p_del=0.1 p_sub=0.01 ins_rate=0.5`.
  std::string to_string() const;
  static ChannelSpec parse(std::string_view text);

  friend bool operator==(const ChannelSpec&, const ChannelSpec&) = default;

 private:
  Mode mode_ = Mode::exact;
  ErrorPattern counts_{};
  double p_del_ = 0.0;
  double p_sub_ = 0.0;
  double ins_rate_ = 0.0;
};

struct Transmission {
  Multiset received;
  /// Events that actually happened.
  ErrorPattern effective;
};

struct SequenceTransmission {
  std::vector<Symbol> received;
  ErrorPattern effective;
};

/// Sends `x` through the channel. Corruption is applied in the order
/// delete, substitute, insert: deletions pick distinct element instances
/// uniformly; substitutions pick distinct surviving instances uniformly and
/// replace each by a uniformly chosen different symbol; insertions draw
/// uniformly from the alphabet. Element instances are visited in sorted
/// order, so the outcome depends only on (x, spec, engine state).
Transmission transmit_multiset(const Multiset& x, const ChannelSpec& spec, Engine& engine);
Transmission transmit_multiset(const Multiset& x, const ChannelSpec& spec, RngSeed seed);

/// Same corruption as transmit_multiset on the multiset of `x`, followed by a
/// uniformly random permutation drawn from the same engine stream. The
/// multiset of the output equals transmit_multiset's result for the same seed.
SequenceTransmission transmit_sequence(std::span<const Symbol> x, Alphabet alphabet,
                                       const ChannelSpec& spec, Engine& engine);
SequenceTransmission transmit_sequence(std::span<const Symbol> x, Alphabet alphabet,
                                       const ChannelSpec& spec, RngSeed seed);

/// Deletion-only transmission of a set, seen through characteristic vectors:
/// returns (sent, received). Throws DomainError if `x` is not a set.
std::pair<BinaryVector, BinaryVector> z_channel_view(const Multiset& x, double p_del, RngSeed seed);

}  // namespace mscodes
