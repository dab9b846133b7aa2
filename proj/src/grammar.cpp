#include "dgx/grammar.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace dgx {

namespace {

using Pair = std::pair<uint32_t, uint32_t>;

struct PairHash {
  size_t operator()(const Pair& p) const {
    return std::hash<uint64_t>()((static_cast<uint64_t>(p.first) << 32) | p.second);
  }
};

// Left-to-right non-overlapping pair counts. Only equal-symbol pairs can
// overlap themselves: a run of length r yields floor(r/2) occurrences.
std::unordered_map<Pair, uint64_t, PairHash> count_pairs(const std::vector<uint32_t>& s) {
  std::unordered_map<Pair, uint64_t, PairHash> cnt;
  size_t i = 0;
  while (i + 1 < s.size()) {
    if (s[i] == s[i + 1]) {
      size_t j = i;
      while (j < s.size() && s[j] == s[i]) ++j;
      cnt[{s[i], s[i]}] += (j - i) / 2;
      i = j - 1;  // the run's last element may still pair with the next symbol
    } else {
      ++cnt[{s[i], s[i + 1]}];
      ++i;
    }
  }
  return cnt;
}

}  // namespace

Grammar repair_compress(const std::vector<uint32_t>& seq, uint32_t terminal_limit,
                        RepairStats* stats) {
  if (seq.empty()) fail(Errc::empty_input, "cannot compress an empty sequence");
  for (uint32_t v : seq)
    if (v >= terminal_limit)
      fail(Errc::invalid_params, "symbol " + std::to_string(v) + " not below terminal limit");

  Grammar g;
  g.terminal_limit = terminal_limit;
  g.sequence = seq;
  if (stats) *stats = RepairStats{};

  while (g.sequence.size() >= 2) {
    auto cnt = count_pairs(g.sequence);
    Pair best{0, 0};
    uint64_t best_count = 0;
    for (const auto& [p, c] : cnt) {
      if (c > best_count || (c == best_count && c > 0 && p < best)) {
        best = p;
        best_count = c;
      }
    }
    if (best_count < 2) break;

    uint32_t fresh = static_cast<uint32_t>(g.terminal_limit + g.rules.size());
    g.rules.push_back(best);
    if (stats) {
      ++stats->rules;
      stats->min_creation_count =
          (stats->rules == 1) ? best_count : std::min(stats->min_creation_count, best_count);
    }

    std::vector<uint32_t> next;
    next.reserve(g.sequence.size());
    size_t i = 0;
    while (i < g.sequence.size()) {
      if (i + 1 < g.sequence.size() && g.sequence[i] == best.first &&
          g.sequence[i + 1] == best.second) {
        next.push_back(fresh);
        i += 2;
      } else {
        next.push_back(g.sequence[i]);
        ++i;
      }
    }
    g.sequence = std::move(next);
  }
  return g;
}

namespace {

void check_symbol(const Grammar& g, uint32_t sym, uint64_t defined_rules) {
  if (sym >= g.terminal_limit + defined_rules)
    fail(Errc::malformed_grammar, "symbol " + std::to_string(sym) + " is not yet defined");
}

}  // namespace

std::vector<uint32_t> repair_decompress(const Grammar& g) {
  for (size_t t = 0; t < g.rules.size(); ++t) {
    check_symbol(g, g.rules[t].first, t);
    check_symbol(g, g.rules[t].second, t);
  }
  std::vector<uint32_t> out;
  std::vector<uint32_t> stack;
  for (auto it = g.sequence.rbegin(); it != g.sequence.rend(); ++it) stack.push_back(*it);
  while (!stack.empty()) {
    uint32_t sym = stack.back();
    stack.pop_back();
    check_symbol(g, sym, g.rules.size());
    if (sym < g.terminal_limit) {
      out.push_back(sym);
    } else {
      const Pair& rule = g.rules[sym - g.terminal_limit];
      stack.push_back(rule.second);
      stack.push_back(rule.first);
    }
  }
  return out;
}

std::vector<uint32_t> repair_expand_prefix(const Grammar& g, uint64_t k) {
  for (size_t t = 0; t < g.rules.size(); ++t) {
    check_symbol(g, g.rules[t].first, t);
    check_symbol(g, g.rules[t].second, t);
  }
  std::vector<uint32_t> out;
  std::vector<uint32_t> stack;
  for (auto it = g.sequence.rbegin(); it != g.sequence.rend(); ++it) stack.push_back(*it);
  while (!stack.empty() && out.size() < k) {
    uint32_t sym = stack.back();
    stack.pop_back();
    check_symbol(g, sym, g.rules.size());
    if (sym < g.terminal_limit) {
      out.push_back(sym);
    } else {
      const Pair& rule = g.rules[sym - g.terminal_limit];
      stack.push_back(rule.second);
      stack.push_back(rule.first);
    }
  }
  return out;
}

SetGrammar setpair_compress(const std::vector<std::vector<uint32_t>>& sets) {
  SetGrammar g;
  uint32_t max_sym = 0;
  for (const auto& set : sets) {
    for (size_t i = 0; i < set.size(); ++i) {
      if (i > 0 && set[i] <= set[i - 1]) fail(Errc::malformed_input, "set not strictly increasing");
      max_sym = std::max(max_sym, set[i]);
    }
  }
  g.symbol_limit = max_sym + 1;
  g.sets = sets;

  while (true) {
    // std::map keeps candidates ordered, so the lexicographically smallest
    // pair among equal counts is found directly.
    std::map<Pair, uint64_t> cnt;
    for (const auto& set : g.sets)
      for (size_t i = 0; i < set.size(); ++i)
        for (size_t j = i + 1; j < set.size(); ++j) ++cnt[{set[i], set[j]}];
    Pair best{0, 0};
    uint64_t best_count = 0;
    for (const auto& [p, c] : cnt)
      if (c > best_count) {
        best = p;
        best_count = c;
      }
    if (best_count < 2) break;

    uint32_t fresh = static_cast<uint32_t>(g.symbol_limit + g.rules.size());
    g.rules.push_back(best);
    for (auto& set : g.sets) {
      bool has_a = std::binary_search(set.begin(), set.end(), best.first);
      bool has_b = std::binary_search(set.begin(), set.end(), best.second);
      if (!has_a || !has_b) continue;
      std::erase(set, best.first);
      std::erase(set, best.second);
      set.push_back(fresh);  // fresh symbols exceed everything already present
    }
  }
  return g;
}

std::vector<uint32_t> setgrammar_expand(const SetGrammar& g, const std::vector<uint32_t>& set) {
  std::vector<uint32_t> out;
  std::vector<uint32_t> stack(set.begin(), set.end());
  while (!stack.empty()) {
    uint32_t sym = stack.back();
    stack.pop_back();
    if (sym >= g.symbol_limit + g.rules.size())
      fail(Errc::malformed_grammar, "unknown set symbol " + std::to_string(sym));
    if (sym < g.symbol_limit) {
      out.push_back(sym);
    } else {
      const Pair& rule = g.rules[sym - g.symbol_limit];
      stack.push_back(rule.first);
      stack.push_back(rule.second);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FreqEncoding encode_freqs(const std::vector<uint64_t>& freqs, uint64_t subtree_size) {
  if (freqs.empty()) fail(Errc::empty_input, "no frequencies to encode");
  FreqEncoding e;
  for (size_t i = 0; i < freqs.size(); ++i) {
    if (freqs[i] == 0) fail(Errc::not_monotone, "frequencies must be positive");
    if (i > 0 && freqs[i] > freqs[i - 1])
      fail(Errc::not_monotone, "frequencies must be non-increasing");
    if (i == 0 || freqs[i] != freqs[i - 1]) {
      e.run_lengths.push_back(1);
      e.head_gaps.push_back(i == 0 ? freqs[0] : freqs[i - 1] - freqs[i]);
    } else {
      ++e.run_lengths.back();
    }
  }
  if (subtree_size > 0) {
    uint64_t r = e.run_lengths.size();
    if (r * (r + 1) / 2 > subtree_size)
      fail(Errc::contract_violation, "run count exceeds the triangular bound");
  }
  return e;
}

std::vector<uint64_t> decode_freqs(const FreqEncoding& e) {
  std::vector<uint64_t> out;
  uint64_t head = 0;
  for (size_t t = 0; t < e.run_lengths.size(); ++t) {
    head = (t == 0) ? e.head_gaps[0] : head - e.head_gaps[t];
    for (uint64_t j = 0; j < e.run_lengths[t]; ++j) out.push_back(head);
  }
  return out;
}

std::vector<uint64_t> decode_freqs_prefix(const FreqEncoding& e, uint64_t k) {
  std::vector<uint64_t> out;
  uint64_t head = 0;
  for (size_t t = 0; t < e.run_lengths.size() && out.size() < k; ++t) {
    head = (t == 0) ? e.head_gaps[0] : head - e.head_gaps[t];
    for (uint64_t j = 0; j < e.run_lengths[t] && out.size() < k; ++j) out.push_back(head);
  }
  return out;
}

}  // namespace dgx
