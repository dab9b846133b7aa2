#include "dgx/pdl.hpp"

#include <algorithm>
#include <bit>

namespace dgx {

namespace {

// Document set as a bitmap over ids 1..d; cheap unions during the bottom-up
// sweep.
struct DocSet {
  std::vector<uint64_t> words;

  explicit DocSet(uint32_t d = 0) : words((static_cast<size_t>(d) + 64) / 64, 0) {}

  void add(uint32_t g) { words[(g - 1) / 64] |= 1ull << ((g - 1) % 64); }

  void unite(const DocSet& o) {
    for (size_t w = 0; w < words.size(); ++w) words[w] |= o.words[w];
  }

  uint64_t count() const {
    uint64_t c = 0;
    for (uint64_t w : words) c += static_cast<uint64_t>(std::popcount(w));
    return c;
  }

  std::vector<uint32_t> to_list() const {
    std::vector<uint32_t> out;
    for (size_t w = 0; w < words.size(); ++w) {
      uint64_t bits = words[w];
      while (bits) {
        out.push_back(static_cast<uint32_t>(w * 64 + std::countr_zero(bits) + 1));
        bits &= bits - 1;
      }
    }
    return out;
  }
};

struct ChildRec {
  uint64_t l = 0;
  uint64_t r = 0;
  bool candidate = false;  // subtree size > b
  uint64_t frontier = 0;   // candidates: total size of frontier sets below
  DocSet docs;             // candidates only
};

struct OpenNode {
  int64_t lcp = 0;
  uint64_t lb = 0;
  std::vector<ChildRec> kids;
};

struct RawStored {
  uint64_t l = 0;
  uint64_t r = 0;
  std::vector<uint32_t> docs;  // ascending
};

struct BuildState {
  const SuffixIndex& idx;
  const Collection& c;
  uint64_t b;
  double beta;
  std::vector<std::pair<uint64_t, uint64_t>> blocks;
  std::vector<RawStored> stored;

  ChildRec make_block(uint64_t l, uint64_t r) {
    blocks.emplace_back(l, r);
    ChildRec rec;
    rec.l = l;
    rec.r = r;
    rec.docs = DocSet(c.d);
    for (uint64_t i = l; i <= r; ++i) rec.docs.add(idx.da_at(i));
    rec.frontier = rec.docs.count();
    return rec;
  }

  // A popped lcp-interval. Nodes of at most b suffixes stay mergeable; any
  // bigger node turns its small children (and uncovered leaf ranks) into
  // blocks and applies the designation rule.
  ChildRec process_node(uint64_t l, uint64_t r, std::vector<ChildRec> kids) {
    uint64_t size = r - l + 1;
    if (size <= b) {
      ChildRec rec;
      rec.l = l;
      rec.r = r;
      return rec;
    }
    uint64_t frontier_sum = 0;
    DocSet docs(c.d);
    uint64_t pos = l;
    auto absorb = [&](const ChildRec& rec) {
      frontier_sum += rec.frontier;
      docs.unite(rec.docs);
    };
    for (auto& kid : kids) {
      while (pos < kid.l) {
        absorb(make_block(pos, pos));
        ++pos;
      }
      if (kid.candidate)
        absorb(kid);
      else
        absorb(make_block(kid.l, kid.r));
      pos = kid.r + 1;
    }
    while (pos <= r) {
      absorb(make_block(pos, pos));
      ++pos;
    }

    uint64_t docc = docs.count();
    ChildRec rec;
    rec.l = l;
    rec.r = r;
    rec.candidate = true;
    bool designated = static_cast<double>(frontier_sum) >= beta * static_cast<double>(docc);
    if (designated) {
      stored.push_back({l, r, docs.to_list()});
      rec.frontier = docc;
    } else {
      rec.frontier = frontier_sum;
    }
    rec.docs = std::move(docs);
    return rec;
  }
};

}  // namespace

PdlIndex build_pdl(const SuffixIndex& idx, const Collection& c, uint64_t b, double beta,
                   PdlMode mode, bool with_freqs) {
  if (b < 2) fail(Errc::invalid_params, "block size must be at least 2");
  if (beta < 0.0 || (beta > 0.0 && beta < 1.0))
    fail(Errc::invalid_params, "storing factor must be 0 or at least 1");
  uint64_t n = idx.n();
  if (n == 0 || idx.lcp.size() != n || idx.da.size() != n)
    fail(Errc::contract_violation, "suffix index misses sa, lcp, or da");

  BuildState st{idx, c, b, beta, {}, {}};

  // lcp-interval sweep; each interval pops once, its children attached in
  // left-to-right order.
  std::vector<OpenNode> stack;
  stack.push_back({0, 1, {}});
  ChildRec carry;
  bool have_carry = false;
  for (uint64_t i = 2; i <= n + 1; ++i) {
    int64_t cur = (i <= n) ? static_cast<int64_t>(idx.lcp_at(i)) : -1;
    uint64_t lb = i - 1;
    while (!stack.empty() && stack.back().lcp > cur) {
      OpenNode node = std::move(stack.back());
      stack.pop_back();
      if (have_carry) node.kids.push_back(std::move(carry));
      lb = node.lb;
      carry = st.process_node(node.lb, i - 1, std::move(node.kids));
      have_carry = true;
    }
    if (!stack.empty() && stack.back().lcp < cur) {
      OpenNode fresh;
      fresh.lcp = cur;
      fresh.lb = lb;
      if (have_carry) {
        fresh.kids.push_back(std::move(carry));
        have_carry = false;
      }
      stack.push_back(std::move(fresh));
    } else if (have_carry && !stack.empty()) {
      stack.back().kids.push_back(std::move(carry));
      have_carry = false;
    }
  }
  // The root pops at the sentinel; a root no bigger than b is the one block.
  if (have_carry && !carry.candidate) st.make_block(carry.l, carry.r);

  std::sort(st.blocks.begin(), st.blocks.end());
  std::sort(st.stored.begin(), st.stored.end(), [](const RawStored& a, const RawStored& b2) {
    if (a.l != b2.l) return a.l < b2.l;
    return a.r > b2.r;
  });

  PdlIndex p;
  p.b = b;
  p.beta = beta;
  p.mode = mode;
  p.with_freqs = (mode == PdlMode::topk) && with_freqs;
  p.block_ends.reserve(st.blocks.size());
  for (const auto& [l, r] : st.blocks) p.block_ends.push_back(r);

  uint32_t terminal_limit = c.d + 1;
  std::vector<uint64_t> counts(static_cast<size_t>(c.d) + 1, 0);
  for (auto& raw : st.stored) {
    PdlStoredNode node;
    node.l = raw.l;
    node.r = raw.r;
    if (mode == PdlMode::listing) {
      node.docs = repair_compress(raw.docs, terminal_limit);
    } else {
      // Top-k order: frequency in DA[l..r] descending, ties by increasing id.
      for (uint64_t i = raw.l; i <= raw.r; ++i) ++counts[idx.da_at(i)];
      std::vector<std::pair<uint32_t, uint64_t>> by_freq;
      by_freq.reserve(raw.docs.size());
      for (uint32_t g : raw.docs) {
        by_freq.emplace_back(g, counts[g]);
        counts[g] = 0;
      }
      std::sort(by_freq.begin(), by_freq.end(), [](const auto& a, const auto& b2) {
        if (a.second != b2.second) return a.second > b2.second;
        return a.first < b2.first;
      });
      std::vector<uint32_t> seq;
      std::vector<uint64_t> freqs;
      seq.reserve(by_freq.size());
      freqs.reserve(by_freq.size());
      for (const auto& [g, f] : by_freq) {
        seq.push_back(g);
        freqs.push_back(f);
      }
      node.docs = repair_compress(seq, terminal_limit);
      if (p.with_freqs) node.freqs = encode_freqs(freqs, raw.r - raw.l + 1);
    }
    p.stored.push_back(std::move(node));
  }
  return p;
}

namespace {

// Walks the maximal stored ranges inside [sp,ep] left to right; uncovered
// margins go to the callback.
template <typename OnStored, typename OnMargin>
void decompose(const PdlIndex& p, uint64_t sp, uint64_t ep, OnStored on_stored,
               OnMargin on_margin) {
  auto it = std::lower_bound(p.stored.begin(), p.stored.end(), sp,
                             [](const PdlStoredNode& node, uint64_t pos) { return node.l < pos; });
  uint64_t pos = sp;
  while (pos <= ep) {
    while (it != p.stored.end() && it->l < pos) ++it;
    while (it != p.stored.end() && it->l <= ep && it->r > ep) ++it;
    if (it == p.stored.end() || it->l > ep) {
      on_margin(pos, ep);
      return;
    }
    if (it->l > pos) on_margin(pos, it->l - 1);
    on_stored(*it);
    pos = it->r + 1;
  }
}

void check_query_range(const PdlIndex& p, uint64_t sp, uint64_t ep) {
  if (sp < 1 || sp > ep || ep > p.n()) fail(Errc::out_of_bounds, "query range");
}

}  // namespace

ListResult pdl_list(const PdlIndex& p, const SuffixIndex& idx, const Collection& c, uint64_t sp,
                    uint64_t ep) {
  if (p.mode != PdlMode::listing) fail(Errc::wrong_mode, "index not built for listing");
  check_query_range(p, sp, ep);
  std::vector<uint32_t> docs;
  decompose(
      p, sp, ep,
      [&](const PdlStoredNode& node) {
        std::vector<uint32_t> stored_docs = repair_decompress(node.docs);
        docs.insert(docs.end(), stored_docs.begin(), stored_docs.end());
      },
      [&](uint64_t l, uint64_t r) {
        for (uint64_t pos : locate(idx, l, r))
          docs.push_back(static_cast<uint32_t>(c.starts.rank1(pos)));
      });
  std::sort(docs.begin(), docs.end());
  docs.erase(std::unique(docs.begin(), docs.end()), docs.end());
  ListResult result;
  result.docc = docs.size();
  result.occ = ep - sp + 1;
  result.docs = std::move(docs);
  return result;
}

TopkResult pdl_topk(const PdlIndex& p, const SuffixIndex& idx, const Collection& c, uint64_t sp,
                    uint64_t ep, uint64_t k) {
  if (p.mode != PdlMode::topk) fail(Errc::wrong_mode, "index not built for top-k");
  if (k < 1) fail(Errc::invalid_params, "k must be at least 1");
  check_query_range(p, sp, ep);

  TopkResult result;
  if (p.beta == 0.0) {
    // A pattern's range is a tree node range: either stored exactly, or small
    // enough to live inside one leaf block.
    auto it = std::lower_bound(p.stored.begin(), p.stored.end(), sp,
                               [](const PdlStoredNode& node, uint64_t pos) { return node.l < pos; });
    while (it != p.stored.end() && it->l == sp && it->r != ep) ++it;
    if (it != p.stored.end() && it->l == sp && it->r == ep) {
      std::vector<uint32_t> ids = repair_expand_prefix(it->docs, k);
      if (p.with_freqs) {
        std::vector<uint64_t> freqs = decode_freqs_prefix(it->freqs, k);
        for (size_t t = 0; t < ids.size(); ++t) result.items.emplace_back(ids[t], freqs[t]);
      } else {
        for (uint32_t g : ids) result.items.emplace_back(g, 0);
        result.freqs_valid = false;
      }
      return result;
    }
    auto items = topk_brute_d(idx, sp, ep, k);
    if (!p.with_freqs) {
      for (auto& [g, f] : items) f = 0;
      result.freqs_valid = false;
    }
    result.items = std::move(items);
    return result;
  }

  if (!p.with_freqs) fail(Errc::missing_freqs, "stored sets carry no frequencies");
  // Covered ranges are disjoint, so decoded counts and margin counts sum
  // exactly to the range frequencies.
  std::vector<uint64_t> counts(static_cast<size_t>(c.d) + 1, 0);
  std::vector<uint32_t> touched;
  auto bump = [&](uint32_t g, uint64_t by) {
    if (counts[g] == 0) touched.push_back(g);
    counts[g] += by;
  };
  decompose(
      p, sp, ep,
      [&](const PdlStoredNode& node) {
        std::vector<uint32_t> ids = repair_decompress(node.docs);
        std::vector<uint64_t> freqs = decode_freqs(node.freqs);
        for (size_t t = 0; t < ids.size(); ++t) bump(ids[t], freqs[t]);
      },
      [&](uint64_t l, uint64_t r) {
        for (uint64_t i = l; i <= r; ++i) bump(idx.da_at(i), 1);
      });
  std::vector<std::pair<uint32_t, uint64_t>> items;
  items.reserve(touched.size());
  for (uint32_t g : touched) items.emplace_back(g, counts[g]);
  result.items = select_topk(std::move(items), k);
  return result;
}

bool pdl_is_laminar(const PdlIndex& p) {
  std::vector<std::pair<uint64_t, uint64_t>> open;
  for (const auto& node : p.stored) {
    while (!open.empty() && open.back().second < node.l) open.pop_back();
    if (!open.empty() && node.r > open.back().second) return false;  // crossing pair
    open.emplace_back(node.l, node.r);
  }
  return true;
}

}  // namespace dgx
