#pragma once

// Brute-force reference implementations the tests compare against.
// Deliberately naive: direct definitions, quadratic scans, no sharing with
// the library code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace oracle {

inline std::string concat_docs(const std::vector<std::string>& docs) {
  std::string text;
  for (const std::string& doc : docs) {
    text += doc;
    text += '\0';
  }
  return text;
}

// Positions 1..n of text suffixes in lexicographic order, bytes unsigned.
inline std::vector<uint32_t> suffix_array(const std::string& text) {
  std::vector<uint32_t> sa(text.size());
  for (size_t i = 0; i < text.size(); ++i) sa[i] = static_cast<uint32_t>(i + 1);
  std::sort(sa.begin(), sa.end(), [&](uint32_t a, uint32_t b) {
    return text.compare(a - 1, std::string::npos, text, b - 1, std::string::npos) < 0;
  });
  return sa;
}

inline uint32_t lcp_pair(const std::string& a, const std::string& b) {
  uint32_t h = 0;
  while (h < a.size() && h < b.size() && a[h] == b[h]) ++h;
  return h;
}

// lcp[0] = 0; lcp[i-1] = lcp of suffixes at ranks i-1 and i.
inline std::vector<uint32_t> lcp_array(const std::string& text, const std::vector<uint32_t>& sa) {
  std::vector<uint32_t> lcp(sa.size(), 0);
  for (size_t i = 1; i < sa.size(); ++i)
    lcp[i] = lcp_pair(text.substr(sa[i - 1] - 1), text.substr(sa[i] - 1));
  return lcp;
}

// Document id (1-based) holding text position p (1-based); terminators
// belong to the document they end.
inline uint32_t doc_at(const std::vector<std::string>& docs, uint64_t p) {
  uint64_t end = 0;
  for (size_t g = 0; g < docs.size(); ++g) {
    end += docs[g].size() + 1;
    if (p <= end) return static_cast<uint32_t>(g + 1);
  }
  return 0;
}

inline std::vector<uint32_t> doc_array(const std::vector<std::string>& docs,
                                       const std::vector<uint32_t>& sa) {
  std::vector<uint32_t> da(sa.size());
  for (size_t i = 0; i < sa.size(); ++i) da[i] = doc_at(docs, sa[i]);
  return da;
}

inline std::vector<uint32_t> c_array(const std::vector<uint32_t>& da) {
  std::vector<uint32_t> c(da.size(), 0);
  std::map<uint32_t, uint32_t> last;
  for (size_t i = 0; i < da.size(); ++i) {
    auto it = last.find(da[i]);
    if (it != last.end()) c[i] = it->second;
    last[da[i]] = static_cast<uint32_t>(i + 1);
  }
  return c;
}

// Per-document lcp values in global rank order: each document's suffixes
// (terminator included) are ranked on their own, then read off at the
// positions the global order assigns them.
inline std::vector<uint32_t> ilcp_array(const std::vector<std::string>& docs) {
  std::string text = concat_docs(docs);
  std::vector<uint32_t> sa = suffix_array(text);
  // per document: local suffix offset (1-based) -> local lcp value
  std::vector<std::map<uint64_t, uint32_t>> local(docs.size());
  for (size_t g = 0; g < docs.size(); ++g) {
    std::string dt = docs[g] + '\0';
    std::vector<uint32_t> dsa = suffix_array(dt);
    std::vector<uint32_t> dlcp = lcp_array(dt, dsa);
    for (size_t i = 0; i < dsa.size(); ++i) local[g][dsa[i]] = dlcp[i];
  }
  std::vector<uint32_t> ilcp(sa.size());
  for (size_t i = 0; i < sa.size(); ++i) {
    uint32_t g = doc_at(docs, sa[i]);
    uint64_t start = 1;
    for (uint32_t h = 1; h < g; ++h) start += docs[h - 1].size() + 1;
    ilcp[i] = local[g - 1][sa[i] - start + 1];
  }
  return ilcp;
}

struct Range {
  uint64_t sp;
  uint64_t ep;
};

inline std::optional<Range> find_range(const std::string& text, const std::vector<uint32_t>& sa,
                                       const std::string& pattern) {
  uint64_t sp = 0;
  uint64_t ep = 0;
  for (size_t i = 0; i < sa.size(); ++i) {
    if (text.compare(sa[i] - 1, pattern.size(), pattern) != 0) continue;
    if (sp == 0) sp = i + 1;
    ep = i + 1;
  }
  if (sp == 0) return std::nullopt;
  return Range{sp, ep};
}

// Occurrence count of pattern per document; the empty pattern matches at
// every position of the document including its terminator.
inline std::map<uint32_t, uint64_t> doc_freqs(const std::vector<std::string>& docs,
                                              const std::string& pattern) {
  std::map<uint32_t, uint64_t> freqs;
  for (size_t g = 0; g < docs.size(); ++g) {
    const std::string& body = docs[g];
    uint64_t count = 0;
    if (pattern.empty()) {
      count = body.size() + 1;
    } else if (pattern.size() <= body.size()) {
      for (size_t i = 0; i + pattern.size() <= body.size(); ++i)
        if (body.compare(i, pattern.size(), pattern) == 0) ++count;
    }
    if (count > 0) freqs[static_cast<uint32_t>(g + 1)] = count;
  }
  return freqs;
}

inline std::vector<uint32_t> list_docs(const std::vector<std::string>& docs,
                                       const std::string& pattern) {
  std::vector<uint32_t> out;
  for (const auto& [g, f] : doc_freqs(docs, pattern)) out.push_back(g);
  return out;
}

inline std::vector<std::pair<uint32_t, uint64_t>> topk(const std::vector<std::string>& docs,
                                                       const std::string& pattern, uint64_t k) {
  std::vector<std::pair<uint32_t, uint64_t>> items;
  for (const auto& [g, f] : doc_freqs(docs, pattern)) items.emplace_back(g, f);
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (items.size() > k) items.resize(k);
  return items;
}

// Leftmost minimum position, 1-based inclusive range.
inline uint64_t rmq_pos(const std::vector<uint32_t>& values, uint64_t i, uint64_t j) {
  uint64_t best = i;
  for (uint64_t t = i + 1; t <= j; ++t)
    if (values[t - 1] < values[best - 1]) best = t;
  return best;
}

// All internal lcp-interval ranges [l,r], l < r, by direct predicate check:
// depth h = min lcp inside, boundaries fall below h.
inline std::vector<std::pair<uint64_t, uint64_t>> lcp_intervals(const std::vector<uint32_t>& lcp) {
  uint64_t n = lcp.size();
  std::vector<std::pair<uint64_t, uint64_t>> nodes;
  for (uint64_t l = 1; l < n; ++l) {
    for (uint64_t r = l + 1; r <= n; ++r) {
      uint32_t h = lcp[l];  // lcp at rank l+1, first inside the range
      for (uint64_t i = l + 1; i < r; ++i) h = std::min(h, lcp[i]);
      int64_t left = (l == 1) ? -1 : static_cast<int64_t>(lcp[l - 1]);
      int64_t right = (r == n) ? -1 : static_cast<int64_t>(lcp[r]);
      if (left < static_cast<int64_t>(h) && right < static_cast<int64_t>(h))
        nodes.emplace_back(l, r);
    }
  }
  return nodes;
}

struct PdlShape {
  std::vector<std::pair<uint64_t, uint64_t>> blocks;  // ascending
  std::vector<std::pair<uint64_t, uint64_t>> stored;  // (l asc, r desc)
};

// Replays the block cut and the storing rule over the interval tree built
// from scratch.
inline PdlShape pdl_shape(const std::vector<uint32_t>& lcp, const std::vector<uint32_t>& da,
                          uint64_t b, double beta) {
  uint64_t n = lcp.size();
  auto nodes = lcp_intervals(lcp);
  nodes.emplace_back(1, n);  // root, in case n appears only via the predicate
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  auto size_of = [](const std::pair<uint64_t, uint64_t>& v) { return v.second - v.first + 1; };
  auto contains = [](const std::pair<uint64_t, uint64_t>& a,
                     const std::pair<uint64_t, uint64_t>& v) {
    return a.first <= v.first && v.second <= a.second && a != v;
  };
  auto parent_of = [&](const std::pair<uint64_t, uint64_t>& v) {
    std::pair<uint64_t, uint64_t> best{0, 0};
    bool found = false;
    for (const auto& a : nodes) {
      if (!contains(a, v)) continue;
      if (!found || size_of(a) < size_of(best)) {
        best = a;
        found = true;
      }
    }
    return found ? std::optional(best) : std::nullopt;
  };

  PdlShape shape;
  if (n <= b) {
    shape.blocks.emplace_back(1, n);
    return shape;
  }
  // blocks: maximal <= b nodes, plus singleton ranks under no such node
  for (const auto& v : nodes) {
    if (size_of(v) > b) continue;
    auto p = parent_of(v);
    if (!p || size_of(*p) > b) shape.blocks.push_back(v);
  }
  for (uint64_t i = 1; i <= n; ++i) {
    bool covered = false;
    for (const auto& blk : shape.blocks)
      if (blk.first <= i && i <= blk.second) covered = true;
    for (const auto& v : nodes)
      if (size_of(v) <= b && v.first <= i && i <= v.second) covered = true;
    if (!covered) shape.blocks.emplace_back(i, i);
  }
  std::sort(shape.blocks.begin(), shape.blocks.end());

  auto docs_in = [&](uint64_t l, uint64_t r) {
    std::set<uint32_t> s;
    for (uint64_t i = l; i <= r; ++i) s.insert(da[i - 1]);
    return s;
  };

  // candidates bottom-up by size; frontier value = docc if designated,
  // accumulated sum otherwise; blocks contribute their docc.
  std::vector<std::pair<uint64_t, uint64_t>> candidates;
  for (const auto& v : nodes)
    if (size_of(v) > b) candidates.push_back(v);
  std::sort(candidates.begin(), candidates.end(),
            [&](const auto& a, const auto& c) { return size_of(a) < size_of(c); });
  std::map<std::pair<uint64_t, uint64_t>, uint64_t> frontier;
  std::map<std::pair<uint64_t, uint64_t>, bool> designated;
  for (const auto& v : candidates) {
    uint64_t s = 0;
    // direct candidate children inside v
    for (const auto& u : candidates) {
      if (!contains(v, u)) continue;
      auto p = parent_of(u);
      if (p && *p == v) s += frontier[u];
    }
    for (const auto& blk : shape.blocks) {
      if (!(v.first <= blk.first && blk.second <= v.second)) continue;
      auto p = parent_of(blk);
      bool direct = p && *p == v;
      if (blk.first == blk.second && !p) direct = false;
      if (direct) s += docs_in(blk.first, blk.second).size();
    }
    // singleton gap blocks have no node identity; attribute them to the
    // smallest candidate containing them
    for (const auto& blk : shape.blocks) {
      if (blk.first != blk.second) continue;
      bool is_node = std::binary_search(nodes.begin(), nodes.end(), blk);
      if (is_node) continue;
      std::optional<std::pair<uint64_t, uint64_t>> best;
      for (const auto& cand : candidates)
        if (cand.first <= blk.first && blk.second <= cand.second)
          if (!best || size_of(cand) < size_of(*best)) best = cand;
      if (best && *best == v) s += docs_in(blk.first, blk.second).size();
    }
    uint64_t docc = docs_in(v.first, v.second).size();
    bool store = static_cast<double>(s) >= beta * static_cast<double>(docc);
    designated[v] = store;
    frontier[v] = store ? docc : s;
    if (store) shape.stored.push_back(v);
  }
  std::sort(shape.stored.begin(), shape.stored.end(), [](const auto& a, const auto& c) {
    if (a.first != c.first) return a.first < c.first;
    return a.second > c.second;
  });
  return shape;
}

inline std::vector<std::string> random_docs(std::mt19937_64& rng, uint32_t max_d, uint32_t max_len,
                                            uint32_t sigma) {
  uint32_t d = 1 + static_cast<uint32_t>(rng() % max_d);
  std::vector<std::string> docs(d);
  for (auto& doc : docs) {
    uint32_t len = static_cast<uint32_t>(rng() % (max_len + 1));
    doc.resize(len);
    for (auto& ch : doc) ch = static_cast<char>('a' + rng() % sigma);
  }
  return docs;
}

// Every distinct substring of the bodies with length in [1, max_len].
inline std::vector<std::string> all_patterns(const std::vector<std::string>& docs,
                                             uint32_t max_len) {
  std::set<std::string> set;
  for (const std::string& body : docs)
    for (size_t i = 0; i < body.size(); ++i)
      for (uint32_t len = 1; len <= max_len && i + len <= body.size(); ++len)
        set.insert(body.substr(i, len));
  return {set.begin(), set.end()};
}

}  // namespace oracle
