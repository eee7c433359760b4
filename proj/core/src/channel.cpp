#include "mscodes/channel.hpp"

#include <charconv>
#include <cmath>
#include <set>

#include "mscodes/errors.hpp"
#include "mscodes/key_value.hpp"
#include "text_util.hpp"

namespace mscodes {

namespace {

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

Symbol substitute_symbol(Engine& engine, Symbol original, std::uint32_t q) {
  auto r = static_cast<Symbol>(uniform_below(engine, q - 1) + 1);
  if (r >= original) ++r;
  return r;
}

}  // namespace

ChannelSpec ChannelSpec::exact(const ErrorPattern& counts) {
  ChannelSpec spec;
  spec.mode_ = Mode::exact;
  spec.counts_ = counts;
  return spec;
}

ChannelSpec ChannelSpec::probabilistic(double p_del, double p_sub, double ins_rate) {
  if (!is_probability(p_del)) throw DomainError("p_del must lie in [0,1]");
  if (!is_probability(p_sub)) throw DomainError("p_sub must lie in [0,1]");
  if (!(ins_rate >= 0.0) || !std::isfinite(ins_rate)) {
    throw DomainError("ins_rate must be finite and nonnegative");
  }
  ChannelSpec spec;
  spec.mode_ = Mode::probabilistic;
  spec.p_del_ = p_del;
  spec.p_sub_ = p_sub;
  spec.ins_rate_ = ins_rate;
  return spec;
}

void ChannelSpec::validate_for(std::uint64_t cardinality, std::uint32_t q) const {
  if (mode_ == Mode::exact) {
    if (std::uint64_t{counts_.deletions} + counts_.substitutions > cardinality) {
      throw DomainError("rho + t = " +
                        std::to_string(std::uint64_t{counts_.deletions} + counts_.substitutions) +
                        " exceeds the " + std::to_string(cardinality) + " sent elements");
    }
    if (counts_.substitutions > 0 && q < 2) {
      throw DomainError("substitutions need an alphabet of at least 2 symbols");
    }
  } else if (p_sub_ > 0.0 && q < 2) {
    throw DomainError("substitutions need an alphabet of at least 2 symbols");
  }
}

std::string ChannelSpec::to_string() const {
  if (mode_ == Mode::exact) {
    return "mode=exact s=" + std::to_string(counts_.insertions) +
           " rho=" + std::to_string(counts_.deletions) +
           " t=" + std::to_string(counts_.substitutions);
  }
  return "mode=prob p_del=" + format_double(p_del_) + " p_sub=" + format_double(p_sub_) +
         " ins_rate=" + format_double(ins_rate_);
}

ChannelSpec ChannelSpec::parse(std::string_view text) {
  const auto kv = parse_key_values(text);
  const auto mode = kv.find("mode");
  if (mode == kv.end()) throw ParseError("channel spec needs mode=exact or mode=prob");

  const auto allowed = mode->second == "exact" ? std::set<std::string>{"mode", "s", "rho", "t"}
                       : mode->second == "prob"
                           ? std::set<std::string>{"mode", "p_del", "p_sub", "ins_rate"}
                           : std::set<std::string>{};
  if (allowed.empty()) throw ParseError("unknown channel mode '" + mode->second + "'");
  for (const auto& [key, value] : kv) {
    if (!allowed.contains(key)) {
      throw ParseError("key '" + key + "' not valid for mode=" + mode->second);
    }
  }
  const auto get = [&](const std::string& key) -> std::string_view {
    const auto it = kv.find(key);
    return it == kv.end() ? std::string_view("0") : std::string_view(it->second);
  };
  if (mode->second == "exact") {
    const auto count = [&](const std::string& key) {
      const auto v = detail::parse_u64(get(key), key);
      if (v > UINT32_MAX) throw ParseError(key + " out of range");
      return static_cast<std::uint32_t>(v);
    };
    return exact(count("s"), count("rho"), count("t"));
  }
  try {
    return probabilistic(detail::parse_double(get("p_del"), "p_del"),
                         detail::parse_double(get("p_sub"), "p_sub"),
                         detail::parse_double(get("ins_rate"), "ins_rate"));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Transmission transmit_multiset(const Multiset& x, const ChannelSpec& spec, Engine& engine) {
  const std::uint32_t q = x.alphabet_size();
  spec.validate_for(x.cardinality(), q);

  std::vector<Symbol> instances = x.elements();
  std::vector<Symbol> survivors;
  ErrorPattern effective;

  if (spec.mode() == ChannelSpec::Mode::exact) {
    const auto& counts = spec.counts();
    // Partial Fisher-Yates: the first rho slots become the deleted instances,
    // the next t slots the substituted ones.
    const std::size_t n = instances.size();
    const std::size_t picked = std::size_t{counts.deletions} + counts.substitutions;
    for (std::size_t i = 0; i < picked; ++i) {
      const auto j = i + uniform_below(engine, n - i);
      std::swap(instances[i], instances[j]);
    }
    for (std::size_t i = counts.deletions; i < picked; ++i) {
      instances[i] = substitute_symbol(engine, instances[i], q);
    }
    survivors.assign(instances.begin() + counts.deletions, instances.end());
    for (std::uint32_t i = 0; i < counts.insertions; ++i) {
      survivors.push_back(static_cast<Symbol>(uniform_below(engine, q) + 1));
    }
    effective = counts;
  } else {
    survivors.reserve(instances.size());
    for (const Symbol s : instances) {
      if (bernoulli(engine, spec.p_del())) {
        ++effective.deletions;
      } else {
        survivors.push_back(s);
      }
    }
    for (Symbol& s : survivors) {
      if (spec.p_sub() > 0.0 && bernoulli(engine, spec.p_sub())) {
        s = substitute_symbol(engine, s, q);
        ++effective.substitutions;
      }
    }
    const auto inserted = poisson(engine, spec.ins_rate());
    if (inserted > UINT32_MAX) throw DomainError("insertion count overflow");
    for (std::uint64_t i = 0; i < inserted; ++i) {
      survivors.push_back(static_cast<Symbol>(uniform_below(engine, q) + 1));
    }
    effective.insertions = static_cast<std::uint32_t>(inserted);
  }

  return Transmission{Multiset::from_elements(survivors, x.alphabet()), effective};
}

Transmission transmit_multiset(const Multiset& x, const ChannelSpec& spec, RngSeed seed) {
  auto engine = make_engine(seed);
  return transmit_multiset(x, spec, engine);
}

SequenceTransmission transmit_sequence(std::span<const Symbol> x, Alphabet alphabet,
                                       const ChannelSpec& spec, Engine& engine) {
  auto sent = transmit_multiset(Multiset::from_elements(x, alphabet), spec, engine);
  std::vector<Symbol> out = sent.received.elements();
  for (std::size_t i = out.size(); i > 1; --i) {
    const auto j = uniform_below(engine, i);
    std::swap(out[i - 1], out[j]);
  }
  return SequenceTransmission{std::move(out), sent.effective};
}

SequenceTransmission transmit_sequence(std::span<const Symbol> x, Alphabet alphabet,
                                       const ChannelSpec& spec, RngSeed seed) {
  auto engine = make_engine(seed);
  return transmit_sequence(x, alphabet, spec, engine);
}

std::pair<BinaryVector, BinaryVector> z_channel_view(const Multiset& x, double p_del,
                                                     RngSeed seed) {
  auto sent = to_characteristic_vector(x);
  const auto out = transmit_multiset(x, ChannelSpec::deletion_only(p_del), seed);
  return {std::move(sent), to_characteristic_vector(out.received)};
}

}  // namespace mscodes
