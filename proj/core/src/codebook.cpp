#include "mscodes/codebook.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>

#include <json.hpp>

#include "mscodes/errors.hpp"
#include "mscodes/isomorphisms.hpp"
#include "mscodes/key_value.hpp"
#include "parallel.hpp"
#include "text_util.hpp"

namespace mscodes {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kSaturated / a) return kSaturated;
  return a * b;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return b > kSaturated - a ? kSaturated : a + b;
}

/// Visits every vector v <= bound (entrywise) with sum(v) == total.
template <class Visit>
void for_each_sub_multiset(const std::vector<Multiplicity>& bound, std::uint64_t total,
                           Visit&& visit) {
  std::vector<Multiplicity> pick(bound.size(), 0);
  // Suffix capacities prune branches that cannot reach `total`.
  std::vector<std::uint64_t> capacity(bound.size() + 1, 0);
  for (std::size_t i = bound.size(); i-- > 0;) capacity[i] = capacity[i + 1] + bound[i];
  if (capacity[0] < total) return;

  const auto recurse = [&](auto&& self, std::size_t i, std::uint64_t remaining) -> void {
    if (i == bound.size()) {
      if (remaining == 0) visit(pick);
      return;
    }
    const std::uint64_t hi = std::min<std::uint64_t>(bound[i], remaining);
    for (std::uint64_t take = 0; take <= hi; ++take) {
      if (remaining - take > capacity[i + 1]) continue;
      pick[i] = static_cast<Multiplicity>(take);
      self(self, i + 1, remaining - take);
    }
    pick[i] = 0;
  };
  recurse(recurse, 0, total);
}

/// Replacement multisets for a group of g equal symbols: multisets of size g
/// over the other q-1 symbols.
std::uint64_t replacement_count(const std::vector<Multiplicity>& substituted, std::uint32_t q) {
  std::uint64_t count = 1;
  for (const auto g : substituted) {
    if (g == 0) continue;
    count = saturating_mul(count, sphere_size(q - 1, g));
  }
  return count;
}

void require_applicable(const Multiset& sent, const ErrorPattern& pattern) {
  if (std::uint64_t{pattern.deletions} + pattern.substitutions > sent.cardinality()) {
    throw DomainError("pattern " + pattern.to_string() + " removes more than the " +
                      std::to_string(sent.cardinality()) + " sent elements");
  }
  if (pattern.substitutions > 0 && sent.alphabet_size() < 2) {
    throw DomainError("substitutions need an alphabet of at least 2 symbols");
  }
}

}  // namespace

Codebook::Codebook(Alphabet alphabet, std::vector<Multiset> codewords)
    : alphabet_(alphabet), codewords_(std::move(codewords)) {
  if (codewords_.size() < 2) {
    throw DomainError("a codebook needs at least 2 codewords, got " +
                      std::to_string(codewords_.size()));
  }
  for (std::size_t i = 0; i < codewords_.size(); ++i) {
    if (codewords_[i].alphabet() != alphabet_) {
      throw DomainError("codeword " + std::to_string(i) + " is over q=" +
                        std::to_string(codewords_[i].alphabet_size()) + ", codebook q=" +
                        std::to_string(alphabet_.size()));
    }
  }
  std::vector<std::size_t> order(codewords_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return codewords_[a] < codewords_[b]; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (codewords_[order[i - 1]] == codewords_[order[i]]) {
      throw DomainError("duplicate codeword " + to_roster(codewords_[order[i]]) + " at indices " +
                        std::to_string(std::min(order[i - 1], order[i])) + " and " +
                        std::to_string(std::max(order[i - 1], order[i])));
    }
  }
}

std::uint64_t min_distance(const Codebook& code) {
  std::uint64_t best = kSaturated;
  const auto& words = code.codewords();
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      best = std::min(best, distance(words[i], words[j]));
      if (best == 1) return best;
    }
  }
  return best;
}

CodeParameters parameters(const Codebook& code) {
  CodeParameters p;
  p.n = std::log2(static_cast<double>(code.alphabet().size()));
  p.k = std::log2(static_cast<double>(code.size()));
  p.d_min = min_distance(code);
  const auto& words = code.codewords();
  const auto first = words.front().cardinality();
  bool constant = true;
  for (const auto& w : words) {
    p.ell_max = std::max(p.ell_max, w.cardinality());
    constant = constant && w.cardinality() == first;
  }
  if (constant) p.constant_cardinality = first;
  // n = 0 for a one-symbol alphabet; the rate is then undefined and reported as 0.
  p.rate = (p.n > 0.0 && p.ell_max > 0) ? p.k / (p.n * static_cast<double>(p.ell_max)) : 0.0;
  return p;
}

DecodeResult decode_min_distance(const Codebook& code, const Multiset& received) {
  if (received.alphabet() != code.alphabet()) {
    throw DomainError("received word over q=" + std::to_string(received.alphabet_size()) +
                      ", codebook q=" + std::to_string(code.alphabet().size()));
  }
  DecodeResult result{0, kSaturated, true};
  const auto& words = code.codewords();
  for (std::size_t i = 0; i < words.size(); ++i) {
    const auto d = distance(words[i], received);
    if (d < result.distance) {
      result = DecodeResult{i, d, true};
    } else if (d == result.distance) {
      result.unique = false;
    }
  }
  return result;
}

void enumerate_outcomes(const Multiset& sent, const ErrorPattern& pattern,
                        const std::function<void(const Multiset&)>& visit) {
  require_applicable(sent, pattern);
  const std::uint32_t q = sent.alphabet_size();
  const auto base = std::vector<Multiplicity>(sent.multiplicities().begin(),
                                              sent.multiplicities().end());

  std::vector<Multiplicity> work(q);
  for_each_sub_multiset(base, pattern.deletions, [&](const std::vector<Multiplicity>& deleted) {
    std::vector<Multiplicity> survivors(q);
    for (std::uint32_t i = 0; i < q; ++i) survivors[i] = base[i] - deleted[i];

    for_each_sub_multiset(survivors, pattern.substitutions,
                          [&](const std::vector<Multiplicity>& substituted) {
      std::vector<Multiplicity> kept(q);
      for (std::uint32_t i = 0; i < q; ++i) kept[i] = survivors[i] - substituted[i];

      // Symbols being replaced, one group per distinct original symbol.
      std::vector<std::pair<std::uint32_t, Multiplicity>> groups;
      for (std::uint32_t i = 0; i < q; ++i) {
        if (substituted[i] > 0) groups.emplace_back(i, substituted[i]);
      }

      const auto with_insertions = [&](const std::vector<Multiplicity>& before) {
        SphereEnumerator inserts(q, pattern.insertions);
        while (auto ins = inserts.next()) {
          for (std::uint32_t i = 0; i < q; ++i) work[i] = checked_add(before[i], (*ins)[i]);
          visit(Multiset::from_multiplicities(work));
        }
      };

      // Each group of g copies of symbol a is replaced by a size-g multiset
      // over the q-1 symbols other than a.
      const auto replace = [&](auto&& self, std::size_t group,
                               std::vector<Multiplicity>& acc) -> void {
        if (group == groups.size()) {
          with_insertions(acc);
          return;
        }
        const auto [symbol, g] = groups[group];
        SphereEnumerator others(q - 1, g);
        while (auto r = others.next()) {
          auto next = acc;
          for (std::uint32_t j = 0; j + 1 < q; ++j) {
            const std::uint32_t target = j < symbol ? j : j + 1;
            next[target] = checked_add(next[target], (*r)[j]);
          }
          self(self, group + 1, next);
        }
      };
      replace(replace, 0, kept);
    });
  });
}

std::uint64_t count_outcomes(const Multiset& sent, const ErrorPattern& pattern) {
  require_applicable(sent, pattern);
  const std::uint32_t q = sent.alphabet_size();
  const auto base = std::vector<Multiplicity>(sent.multiplicities().begin(),
                                              sent.multiplicities().end());
  const std::uint64_t insertions = sphere_size(q, pattern.insertions);
  std::uint64_t total = 0;
  for_each_sub_multiset(base, pattern.deletions, [&](const std::vector<Multiplicity>& deleted) {
    std::vector<Multiplicity> survivors(q);
    for (std::uint32_t i = 0; i < q; ++i) survivors[i] = base[i] - deleted[i];
    for_each_sub_multiset(survivors, pattern.substitutions,
                          [&](const std::vector<Multiplicity>& substituted) {
      total = saturating_add(total,
                             saturating_mul(replacement_count(substituted, q), insertions));
    });
  });
  return total;
}

VerifyReport verify_theorem1(const Codebook& code, const ErrorPattern& max_pattern,
                             const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.d_min = min_distance(code);
  report.declared_d_min = code.declared_min_distance();
  report.max_pattern = max_pattern;

  for (std::uint32_t s = 0; s <= max_pattern.insertions; ++s) {
    for (std::uint32_t rho = 0; rho <= max_pattern.deletions; ++rho) {
      for (std::uint32_t t = 0; t <= max_pattern.substitutions; ++t) {
        const ErrorPattern p{s, rho, t};
        if (guaranteed_correctable(report.d_min, p)) report.patterns.push_back(p);
      }
    }
  }

  const auto applicable = [&](const Multiset& word, const ErrorPattern& p) {
    return std::uint64_t{p.deletions} + p.substitutions <= word.cardinality() &&
           (p.substitutions == 0 || word.alphabet_size() >= 2);
  };

  std::uint64_t planned = 0;
  for (const auto& word : code.codewords()) {
    for (const auto& p : report.patterns) {
      if (applicable(word, p)) planned = saturating_add(planned, count_outcomes(word, p));
    }
  }
  if (planned > options.budget) {
    throw ResourceError("exhaustive verification", planned, options.budget);
  }

  struct PerCodeword {
    std::uint64_t checked = 0;
    std::uint64_t premise = 0;
    std::uint64_t failure_count = 0;
    std::vector<VerifyFailure> failures;
  };
  std::vector<PerCodeword> results(code.size());

  detail::parallel_for(code.size(), options.threads, [&](std::size_t index) {
    auto& out = results[index];
    const auto& sent = code[index];
    for (const auto& p : report.patterns) {
      if (!applicable(sent, p)) continue;
      enumerate_outcomes(sent, p, [&](const Multiset& received) {
        ++out.checked;
        if (!p.is_zero()) ++out.premise;
        const auto d = distance(sent, received);
        const auto decoded = decode_min_distance(code, received);
        const auto fail = [&](const char* kind) {
          ++out.failure_count;
          if (out.failures.size() < options.max_reported_failures) {
            out.failures.push_back(
                VerifyFailure{index, p, to_roster(received), decoded.index, d, kind});
          }
        };
        if (d > p.distance_bound()) fail("distance_bound");
        if (p.insertions == 0 && p.substitutions == 0 && d != p.deletions) {
          fail("deletion_identity");
        }
        if (!decoded.unique) {
          fail("ambiguous");
        } else if (decoded.index != index) {
          fail("wrong_codeword");
        }
      });
    }
  });

  for (auto& r : results) {
    report.checked_outcomes += r.checked;
    report.premise_satisfied_outcomes += r.premise;
    report.failure_count += r.failure_count;
    for (auto& f : r.failures) {
      if (report.failures.size() < options.max_reported_failures) {
        report.failures.push_back(std::move(f));
      }
    }
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::string to_json(const VerifyReport& report) {
  using nlohmann::json;
  const auto pattern_json = [](const ErrorPattern& p) {
    return json{{"s", p.insertions}, {"rho", p.deletions}, {"t", p.substitutions}};
  };
  json failures = json::array();
  for (const auto& f : report.failures) {
    failures.push_back(json{{"codeword_index", f.codeword_index},
                            {"pattern", pattern_json(f.pattern)},
                            {"received", f.received},
                            {"decoded_index", f.decoded_index},
                            {"distance_to_sent", f.distance_to_sent},
                            {"kind", f.kind}});
  }
  json patterns = json::array();
  for (const auto& p : report.patterns) patterns.push_back(pattern_json(p));
  json out{{"checked_outcomes", report.checked_outcomes},
           {"premise_satisfied_outcomes", report.premise_satisfied_outcomes},
           {"failures", failures},
           {"failure_count", report.failure_count},
           {"elapsed", report.elapsed_seconds},
           {"d_min", report.d_min},
           {"declared_d_min", report.declared_d_min ? json(*report.declared_d_min) : json(nullptr)},
           {"max_pattern", pattern_json(report.max_pattern)},
           {"patterns", patterns},
           {"passed", report.passed()}};
  return out.dump(2);
}

Codebook read_codebook(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<Alphabet> alphabet;
  std::uint64_t expected = 0;
  std::optional<std::uint64_t> declared_d;
  std::vector<Multiset> words;

  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto text = detail::trim(line);
    if (text.empty()) continue;
    try {
      if (!alphabet) {
        const auto kv = parse_key_values(text);
        for (const auto& [key, value] : kv) {
          if (key != "q" && key != "count" && key != "d") {
            throw ParseError("unknown header key '" + key + "'");
          }
        }
        if (!kv.contains("q") || !kv.contains("count")) {
          throw ParseError("header must be 'q=<int> count=<int>'");
        }
        const auto q = detail::parse_u64(kv.at("q"), "q");
        if (q == 0 || q > UINT32_MAX) throw ParseError("q out of range");
        alphabet = Alphabet(static_cast<std::uint32_t>(q));
        expected = detail::parse_u64(kv.at("count"), "count");
        if (kv.contains("d")) declared_d = detail::parse_u64(kv.at("d"), "d");
        continue;
      }
      words.push_back(parse_roster(text, *alphabet));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (!alphabet) throw ParseError("missing header 'q=<int> count=<int>'", line_no);
  if (words.size() != expected) {
    throw ParseError("header declares count=" + std::to_string(expected) + " but file has " +
                     std::to_string(words.size()) + " codewords", line_no);
  }
  Codebook code(*alphabet, std::move(words));
  code.set_declared_min_distance(declared_d);
  return code;
}

Codebook read_codebook_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open codebook file '" + path + "'");
  try {
    return read_codebook(in);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void write_codebook(std::ostream& out, const Codebook& code, bool include_d) {
  out << "q=" << code.alphabet().size() << " count=" << code.size();
  if (include_d) out << " d=" << min_distance(code);
  out << '\n';
  for (const auto& w : code.codewords()) out << to_roster(w) << '\n';
}

void write_codebook_file(const std::string& path, const Codebook& code, bool include_d) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write codebook file '" + path + "'");
  write_codebook(out, code, include_d);
  if (!out) throw std::runtime_error("error writing codebook file '" + path + "'");
}

}  // namespace mscodes
