// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "mscodes/channel.hpp"
#include "mscodes/codebook.hpp"
#include "mscodes/constructions.hpp"
#include "mscodes/harness.hpp"
#include "mscodes/isomorphisms.hpp"
#include "mscodes/multiset.hpp"
#include "oracles.hpp"

using namespace mscodes;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome fail(std::string detail) { return {false, std::move(detail)}; }

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// --------------------------------------------------------------------------

Outcome worked_examples() {
  const auto start = std::chrono::steady_clock::now();
  std::ostringstream log;
  const bool ok = harness::run_examples(harness::worked_examples(), log);
  const double elapsed = seconds_since(start);
  if (!ok) return fail(log.str());
  // Deterministic: a second run renders the same report.
  std::ostringstream again;
  harness::run_examples(harness::worked_examples(), again);
  if (again.str() != log.str()) return fail("second run differs");
  if (elapsed >= 1.0) return fail("took " + std::to_string(elapsed) + " s");
  return {true, std::to_string(harness::worked_examples().size()) + " examples in " +
                    std::to_string(elapsed) + " s"};
}

Outcome isomorphisms() {
  std::uint64_t pairs = 0;
  for (std::uint32_t q = 1; q <= 5; ++q) {
    const auto sets = testing::all_sets(q);
    for (const auto& a : sets) {
      for (const auto& b : sets) {
        if (distance(a, b) != hamming_distance(to_characteristic_vector(a), to_characteristic_vector(b))) {
          return fail("set mismatch at " + to_roster(a) + ", " + to_roster(b));
        }
        ++pairs;
      }
    }
  }
  for (std::uint32_t q = 1; q <= 4; ++q) {
    const auto all = testing::all_multisets(q, 4);
    for (const auto& a : all) {
      for (const auto& b : all) {
        if (distance(a, b) != manhattan_distance(to_multiplicity_vector(a), to_multiplicity_vector(b))) {
          return fail("multiset mismatch at " + to_roster(a) + ", " + to_roster(b));
        }
        ++pairs;
      }
    }
  }
  return {true, std::to_string(pairs) + " pairs, 0 mismatches"};
}

/// Received words reachable from `sent` under `pattern`, built from the
/// element list by position: delete instances, overwrite instances, append
/// symbols. Duplicates collapse in the set.
std::set<std::vector<Symbol>> outcomes_by_instances(const Multiset& sent, const ErrorPattern& e) {
  const auto elems = sent.elements();
  const std::uint32_t q = sent.alphabet_size();
  std::set<std::vector<Symbol>> out;
  std::function<void(std::vector<Symbol>, std::uint32_t, std::uint32_t, std::size_t)> rec =
      [&](std::vector<Symbol> cur, std::uint32_t dels, std::uint32_t subs, std::size_t from) {
        if (dels > 0) {
          for (std::size_t i = from; i < cur.size(); ++i) {
            auto next = cur;
            next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
            rec(next, dels - 1, subs, i);
          }
          return;
        }
        if (subs > 0) {
          for (std::size_t i = from; i < cur.size(); ++i) {
            if (cur[i] > q) continue;  // already substituted
            for (Symbol s = 1; s <= q; ++s) {
              if (s == cur[i]) continue;
              auto next = cur;
              next[i] = s + q;  // mark as substituted
              rec(next, 0, subs - 1, i + 1);
            }
          }
          return;
        }
        for (auto& s : cur) {
          if (s > q) s -= q;
        }
        std::vector<std::vector<Symbol>> level{cur};
        for (std::uint32_t k = 0; k < e.insertions; ++k) {
          std::vector<std::vector<Symbol>> next;
          for (const auto& w : level) {
            for (Symbol s = 1; s <= q; ++s) {
              auto v = w;
              v.push_back(s);
              next.push_back(std::move(v));
            }
          }
          level = std::move(next);
        }
        for (auto& w : level) {
          std::sort(w.begin(), w.end());
          out.insert(std::move(w));
        }
      };
  rec(elems, e.deletions, e.substitutions, 0);
  return out;
}

Outcome correction_oracle() {
  const auto start = std::chrono::steady_clock::now();
  const auto inner = hamming_7_4();
  const auto code = subset_construct(inner);
  const auto d = min_distance(code);
  std::vector<std::vector<Symbol>> words;
  for (const auto& w : code.codewords()) words.push_back(w.elements());
  const auto d_pairs = oracle::all_pairs_min(words, oracle::roster_distance);
  if (code.size() != 16 || d != 6 || d_pairs != 6 || 2 * min_hamming_distance(inner) != d) {
    return fail("construction has d=" + std::to_string(d) + " (pairs " + std::to_string(d_pairs) + ")");
  }

  const ErrorPattern max{2, 2, 2};
  const auto report = verify_theorem1(code, max);
  if (!report.passed()) return fail(std::to_string(report.failure_count) + " verifier failures");

  // Independent pass: instance-level outcome generation and brute-force
  // nearest-codeword search by roster matching.
  std::uint64_t distinct = 0;
  for (std::uint32_t s = 0; s <= 2; ++s) {
    for (std::uint32_t rho = 0; rho <= 2; ++rho) {
      for (std::uint32_t t = 0; t <= 2; ++t) {
        const ErrorPattern e{s, rho, t};
        if (!(2 * e.distance_bound() < 6)) continue;
        for (std::size_t i = 0; i < code.size(); ++i) {
          const auto reachable = outcomes_by_instances(code[i], e);
          std::set<std::vector<Symbol>> library;
          enumerate_outcomes(code[i], e, [&](const Multiset& y) { library.insert(y.elements()); });
          if (library != reachable) return fail("outcome sets differ for " + e.to_string());
          for (const auto& y : reachable) {
            std::uint64_t best = UINT64_MAX;
            std::size_t arg = 0, ties = 0;
            for (std::size_t j = 0; j < words.size(); ++j) {
              const auto dist = oracle::roster_distance(y, words[j]);
              if (dist < best) {
                best = dist;
                arg = j;
                ties = 1;
              } else if (dist == best) {
                ++ties;
              }
            }
            if (arg != i || ties != 1) return fail("oracle decode failure for " + e.to_string());
            ++distinct;
          }
        }
      }
    }
  }
  return {true, std::to_string(report.patterns.size()) + " patterns, " +
                    std::to_string(report.checked_outcomes) + " outcomes decoded, " +
                    std::to_string(distinct) + " distinct confirmed by oracle, " +
                    std::to_string(seconds_since(start)) + " s"};
}

Outcome proof_identities() {
  std::mt19937_64 rng(2024);
  constexpr std::uint64_t trials = 100000;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    const std::uint32_t q = 1 + static_cast<std::uint32_t>(rng() % 8);
    const auto x = testing::random_multiset(rng, q, 12);
    ChannelSpec spec;
    if (trial % 2 == 0) {
      spec = ChannelSpec::probabilistic(0.25, q > 1 ? 0.25 : 0.0, 1.0);
    } else {
      const auto rho = static_cast<std::uint32_t>(rng() % (x.cardinality() + 1));
      const auto t = q > 1 ? static_cast<std::uint32_t>(rng() % (x.cardinality() - rho + 1)) : 0u;
      spec = ChannelSpec::exact(static_cast<std::uint32_t>(rng() % 4), rho, t);
    }
    const auto out = transmit_multiset(x, spec, derive_seed(RngSeed{77}, trial));
    const auto& e = out.effective;
    if (out.received.cardinality() + e.deletions != x.cardinality() + e.insertions) {
      return fail("cardinality law broken at trial " + std::to_string(trial));
    }
    if (distance(x, out.received) > e.distance_bound()) {
      return fail("distance bound broken at trial " + std::to_string(trial));
    }
  }
  return {true, std::to_string(trials) + " transmissions"};
}

Outcome deletion_only() {
  const auto source = harness::resolve_code_source("subset:hamming74");
  const auto d = min_distance(source.codebook);
  const auto rho = static_cast<std::uint32_t>((d - 1) / 2);
  std::mt19937_64 rng(5);
  for (std::uint64_t trial = 0; trial < 10000; ++trial) {
    const auto x = testing::random_multiset(rng, 1 + static_cast<std::uint32_t>(rng() % 6), 10);
    const auto r = static_cast<std::uint32_t>(rng() % (x.cardinality() + 1));
    const auto out = transmit_multiset(x, ChannelSpec::exact(0, r, 0), derive_seed(RngSeed{3}, trial));
    if (distance(x, out.received) != r) return fail("d(X,Y) != rho at trial " + std::to_string(trial));
  }
  harness::ExperimentConfig cfg;
  cfg.channel = ChannelSpec::exact(0, rho, 0);
  cfg.trials = 10000;
  cfg.seed = RngSeed{1};
  const auto report = harness::simulate(cfg, source);
  if (report.error_rate != 0.0) {
    return fail("error rate " + std::to_string(report.error_rate) + " at rho=" + std::to_string(rho));
  }
  return {true, "rho=" + std::to_string(rho) + ", 10000 trials, error rate 0"};
}

Outcome counting_identity() {
  for (std::uint32_t q = 2; q <= 8; ++q) {
    for (std::uint32_t ell = 2; ell <= 6; ++ell) {
      const auto c = harness::enumerate_counts(q, ell, 100'000'000);
      const auto tag = " at q=" + std::to_string(q) + " ell=" + std::to_string(ell);
      if (c.multisets_enumerated != oracle::pascal(q + ell - 1, ell)) return fail("|M|" + tag);
      if (c.subsets_enumerated != oracle::pascal(q, ell)) return fail("|P|" + tag);
      if (!c.inequality_holds()) return fail("inequality" + tag);
    }
  }
  return {true, "35 (q, ell) pairs exact"};
}

Outcome distance_law() {
  const auto inner = hamming_7_4();
  const auto code = subset_construct(inner);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    for (std::size_t j = i + 1; j < inner.size(); ++j) {
      const auto dh = sequence_hamming_distance(inner[i], inner[j]);
      if (oracle::roster_distance(code[i].elements(), code[j].elements()) != 2 * dh ||
          distance(code[i], code[j]) != 2 * dh) {
        return fail("pair " + std::to_string(i) + "," + std::to_string(j));
      }
      ++pairs;
    }
  }
  if (pairs != 120) return fail(std::to_string(pairs) + " pairs");
  return {true, "120 pairs"};
}

Outcome levenshtein_inequality() {
  std::uint64_t checked = 0;
  const auto check = [&](const ClassicalCode& inner) -> bool {
    const auto code = multiset_construct(inner);
    for (std::size_t i = 0; i < inner.size(); ++i) {
      for (std::size_t j = i + 1; j < inner.size(); ++j) {
        const auto dl = oracle::levenshtein_by_scripts(inner[i], inner[j]);
        if (levenshtein_distance(inner[i], inner[j]) != dl) return false;
        if (distance(code[i], code[j]) < dl) return false;
        ++checked;
      }
    }
    return true;
  };
  for (std::uint32_t q = 2; q <= 3; ++q) {
    for (std::size_t ell = 1; ell <= 5; ++ell) {
      if (!check(repetition_code(q, ell))) return fail("repetition q=" + std::to_string(q));
    }
  }
  std::mt19937_64 rng(31);
  for (int c = 0; c < 100; ++c) {
    const std::uint32_t q = 2 + static_cast<std::uint32_t>(rng() % 2);
    const std::size_t len = 1 + rng() % 5;
    std::set<InnerWord> words;
    const std::size_t target = std::min<std::size_t>(2 + rng() % 10,
                                                     static_cast<std::size_t>(std::pow(q, len)));
    while (words.size() < target) {
      InnerWord w(len);
      for (auto& s : w) s = static_cast<InnerSymbol>(rng() % q);
      words.insert(w);
    }
    if (!check(ClassicalCode(q, {words.begin(), words.end()}))) return fail("random code " + std::to_string(c));
  }
  std::uint64_t cross = 0;
  for (int k = 0; k < 5000; ++k) {
    const auto p = oracle::random_sequence(rng, 6, 3);
    const auto r = oracle::random_sequence(rng, 6, 3);
    if (levenshtein_distance(p, r) != oracle::levenshtein_by_scripts(p, r)) return fail("Levenshtein cross-check");
    ++cross;
  }
  return {true, std::to_string(checked) + " codeword pairs, " + std::to_string(cross) +
                    " extra Levenshtein cross-checks"};
}

Outcome z_channel() {
  const Alphabet s16(16);
  const auto x = Multiset::from_elements({1, 2, 5, 6, 7, 9, 12, 13, 15, 16}, s16);
  const double p = 0.3;
  std::uint64_t ones = 0, dropped = 0, rises = 0;
  constexpr std::uint64_t trials = 100000;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    const auto [sent, received] = z_channel_view(x, p, derive_seed(RngSeed{99}, trial));
    for (std::size_t i = 0; i < sent.size(); ++i) {
      if (sent[i] == 0 && received[i] == 1) ++rises;
      if (sent[i] == 1) {
        ++ones;
        if (received[i] == 0) ++dropped;
      }
    }
  }
  const double rate = static_cast<double>(dropped) / static_cast<double>(ones);
  const double sigma = std::sqrt(p * (1 - p) / static_cast<double>(ones));
  if (rises != 0) return fail(std::to_string(rises) + " 0->1 transitions");
  if (std::abs(rate - p) > 3 * sigma) {
    return fail("1->0 rate " + std::to_string(rate) + " outside " + std::to_string(p) + " +- " +
                std::to_string(3 * sigma));
  }
  return {true, "1->0 rate " + std::to_string(rate) + " (p_del " + std::to_string(p) + ", 3 sigma " +
                    std::to_string(3 * sigma) + "), 0 rises"};
}

Outcome metric_axioms() {
  std::mt19937_64 rng(404);
  std::uint64_t triples = 0;
  for (std::uint32_t q : {1u, 2u, 4u, 8u}) {
    for (int k = 0; k < 10000; ++k) {
      const auto a = testing::random_multiset(rng, q, 10);
      const auto b = k % 5 == 0 ? a : testing::random_multiset(rng, q, 10);
      const auto c = testing::random_multiset(rng, q, 10);
      if ((distance(a, b) == 0) != (a == b) || distance(a, b) != distance(b, a) ||
          distance(a, c) > distance(a, b) + distance(b, c)) {
        return fail("multiset axiom at q=" + std::to_string(q));
      }
      ++triples;
    }
  }
  for (std::uint32_t q : {2u, 3u}) {
    for (int k = 0; k < 10000; ++k) {
      const auto a = oracle::random_sequence(rng, 8, q);
      const auto b = k % 5 == 0 ? a : oracle::random_sequence(rng, 8, q);
      const auto c = oracle::random_sequence(rng, 8, q);
      if ((levenshtein_distance(a, b) == 0) != (a == b) ||
          levenshtein_distance(a, b) != levenshtein_distance(b, a) ||
          levenshtein_distance(a, c) > levenshtein_distance(a, b) + levenshtein_distance(b, c)) {
        return fail("Levenshtein axiom at q=" + std::to_string(q));
      }
      ++triples;
    }
  }
  return {true, std::to_string(triples) + " triples"};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria{
      {"worked examples reproduced", worked_examples},
      {"set/Hamming and multiset/Manhattan isomorphisms", isomorphisms},
      {"exhaustive correction oracle on the Hamming subset code", correction_oracle},
      {"cardinality law and distance bound", proof_identities},
      {"deletion-only exactness", deletion_only},
      {"sphere counting identity", counting_identity},
      {"positional-tag distance law", distance_law},
      {"run-tag distance dominates Levenshtein", levenshtein_inequality},
      {"Z-channel reduction", z_channel},
      {"metric axioms", metric_axioms},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = fail(std::string("exception: ") + e.what());
    }
    std::printf("[%s] criterion %zu: %s: %s\n", outcome.ok ? "PASS" : "FAIL", i + 1, criteria[i].first,
                outcome.detail.c_str());
    if (!outcome.ok) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
