#include "dgx/doclist.hpp"

#include <algorithm>

namespace dgx {

namespace {

void check_range(uint64_t sp, uint64_t ep, uint64_t n) {
  if (sp < 1 || sp > ep || ep > n) fail(Errc::out_of_bounds, "query range");
}

ListResult finish(std::vector<uint32_t> docs, uint64_t sp, uint64_t ep) {
  std::sort(docs.begin(), docs.end());
  docs.erase(std::unique(docs.begin(), docs.end()), docs.end());
  ListResult r;
  r.docc = docs.size();
  r.occ = ep - sp + 1;
  r.docs = std::move(docs);
  return r;
}

}  // namespace

ListResult list_brute_l(const SuffixIndex& idx, const Collection& c, uint64_t sp, uint64_t ep) {
  check_range(sp, ep, idx.n());
  std::vector<uint32_t> docs;
  docs.reserve(ep - sp + 1);
  for (uint64_t pos : locate(idx, sp, ep)) docs.push_back(static_cast<uint32_t>(c.starts.rank1(pos)));
  return finish(std::move(docs), sp, ep);
}

ListResult list_brute_d(const SuffixIndex& idx, uint64_t sp, uint64_t ep) {
  check_range(sp, ep, idx.n());
  std::vector<uint32_t> docs(idx.da.begin() + (sp - 1), idx.da.begin() + ep);
  return finish(std::move(docs), sp, ep);
}

ListResult list_mut(const SuffixIndex& idx, const RmqIndex& rmq_c, uint64_t sp, uint64_t ep,
                    MutStats* stats) {
  check_range(sp, ep, idx.n());
  std::vector<uint32_t> docs;
  // Explicit stack; each visited subrange either reports its minimum-C
  // position or terminates.
  std::vector<std::pair<uint64_t, uint64_t>> pending{{sp, ep}};
  while (!pending.empty()) {
    auto [l, r] = pending.back();
    pending.pop_back();
    if (l > r) continue;
    if (stats) ++stats->visits;
    uint64_t i = rmq_c.query(l, r);
    if (idx.c_at(i) >= sp) continue;  // every document in [l,r] already has an occurrence before l
    docs.push_back(idx.da_at(i));
    if (stats) ++stats->reports;
    if (i + 1 <= r) pending.push_back({i + 1, r});
    if (l + 1 <= i) pending.push_back({l, i - 1});
  }
  return finish(std::move(docs), sp, ep);
}

namespace {

template <typename DocAt>
ListResult sada_walk(const RmqIndex& rmq_c, uint64_t sp, uint64_t ep, SeenSet& seen,
                     DocAt doc_at) {
  std::vector<uint32_t> docs;
  seen.reset();
  // Preorder left to right: left subrange fully processed before the right,
  // so a repeated document is always caught by the seen set.
  std::vector<std::pair<uint64_t, uint64_t>> pending{{sp, ep}};
  while (!pending.empty()) {
    auto [l, r] = pending.back();
    pending.pop_back();
    if (l > r) continue;
    uint64_t i = rmq_c.query(l, r);
    uint32_t g = doc_at(i);
    if (!seen.insert(g)) continue;
    docs.push_back(g);
    if (i + 1 <= r) pending.push_back({i + 1, r});
    if (l + 1 <= i) pending.push_back({l, i - 1});
  }
  return finish(std::move(docs), sp, ep);
}

}  // namespace

ListResult list_sada_d(const SuffixIndex& idx, const RmqIndex& rmq_c, uint64_t sp, uint64_t ep,
                       SeenSet& seen) {
  check_range(sp, ep, idx.n());
  return sada_walk(rmq_c, sp, ep, seen, [&](uint64_t i) { return idx.da_at(i); });
}

ListResult list_sada_l(const SuffixIndex& idx, const Collection& c, const RmqIndex& rmq_c,
                       uint64_t sp, uint64_t ep, SeenSet& seen) {
  check_range(sp, ep, idx.n());
  return sada_walk(rmq_c, sp, ep, seen, [&](uint64_t i) {
    return static_cast<uint32_t>(c.starts.rank1(idx.sa_at(i)));
  });
}

namespace {

template <typename DocAt>
ListResult ilcp_walk(const SuffixIndex& idx, const RmqIndex& rmq_ilcp, uint64_t sp, uint64_t ep,
                     uint64_t m, DocAt doc_at) {
  if (m == 0) fail(Errc::contract_violation, "pattern length must be at least 1");
  std::vector<uint32_t> docs;
  // ILCP[i] < m exactly at first occurrences inside a length-m pattern range,
  // so each report is distinct by construction.
  std::vector<std::pair<uint64_t, uint64_t>> pending{{sp, ep}};
  while (!pending.empty()) {
    auto [l, r] = pending.back();
    pending.pop_back();
    if (l > r) continue;
    uint64_t i = rmq_ilcp.query(l, r);
    if (idx.ilcp_at(i) >= m) continue;
    docs.push_back(doc_at(i));
    if (i + 1 <= r) pending.push_back({i + 1, r});
    if (l + 1 <= i) pending.push_back({l, i - 1});
  }
  return finish(std::move(docs), sp, ep);
}

}  // namespace

ListResult list_ilcp_d(const SuffixIndex& idx, const RmqIndex& rmq_ilcp, uint64_t sp, uint64_t ep,
                       uint64_t m) {
  check_range(sp, ep, idx.n());
  return ilcp_walk(idx, rmq_ilcp, sp, ep, m, [&](uint64_t i) { return idx.da_at(i); });
}

ListResult list_ilcp_l(const SuffixIndex& idx, const Collection& c, const RmqIndex& rmq_ilcp,
                       uint64_t sp, uint64_t ep, uint64_t m) {
  check_range(sp, ep, idx.n());
  return ilcp_walk(idx, rmq_ilcp, sp, ep, m, [&](uint64_t i) {
    return static_cast<uint32_t>(c.starts.rank1(idx.sa_at(i)));
  });
}

ListResult list_ilcp_runs(const SuffixIndex& idx, const RmqIndex& rmq_runs, uint64_t sp,
                          uint64_t ep, uint64_t m) {
  check_range(sp, ep, idx.n());
  if (m == 0) fail(Errc::contract_violation, "pattern length must be at least 1");
  const auto& runs = idx.ilcp_runs;
  // Run index interval intersecting [sp,ep].
  auto run_of = [&](uint64_t rank) {
    auto it = std::upper_bound(runs.begin(), runs.end(), rank,
                               [](uint64_t v, const IlcpRun& run) { return v < run.start; });
    return static_cast<uint64_t>(it - runs.begin());  // 1-based run index
  };
  uint64_t rs = run_of(sp), re = run_of(ep);
  std::vector<uint32_t> docs;
  // A qualifying run may contain positions of already-reported documents, so
  // the union is deduplicated at the end like the brute-force variants.
  std::vector<std::pair<uint64_t, uint64_t>> pending{{rs, re}};
  while (!pending.empty()) {
    auto [l, r] = pending.back();
    pending.pop_back();
    if (l > r) continue;
    uint64_t t = rmq_runs.query(l, r);
    if (runs[t - 1].value >= m) continue;
    uint64_t lo = std::max(sp, runs[t - 1].start);
    uint64_t hi = std::min(ep, runs[t - 1].start + runs[t - 1].length - 1);
    for (uint64_t j = lo; j <= hi; ++j) docs.push_back(idx.da_at(j));
    if (t + 1 <= r) pending.push_back({t + 1, r});
    if (l + 1 <= t) pending.push_back({l, t - 1});
  }
  return finish(std::move(docs), sp, ep);
}

std::vector<std::pair<uint32_t, uint64_t>> count_freqs(const SuffixIndex& idx, uint64_t sp,
                                                       uint64_t ep) {
  check_range(sp, ep, idx.n());
  std::vector<uint32_t> docs(idx.da.begin() + (sp - 1), idx.da.begin() + ep);
  std::sort(docs.begin(), docs.end());
  std::vector<std::pair<uint32_t, uint64_t>> freqs;
  for (size_t i = 0; i < docs.size();) {
    size_t j = i;
    while (j < docs.size() && docs[j] == docs[i]) ++j;
    freqs.emplace_back(docs[i], j - i);
    i = j;
  }
  return freqs;
}

std::vector<std::pair<uint32_t, uint64_t>> select_topk(
    std::vector<std::pair<uint32_t, uint64_t>> freqs, uint64_t k) {
  std::sort(freqs.begin(), freqs.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (freqs.size() > k) freqs.resize(k);
  return freqs;
}

std::vector<std::pair<uint32_t, uint64_t>> topk_brute_d(const SuffixIndex& idx, uint64_t sp,
                                                        uint64_t ep, uint64_t k) {
  return select_topk(count_freqs(idx, sp, ep), k);
}

std::vector<std::pair<uint32_t, uint64_t>> topk_brute_l(const SuffixIndex& idx,
                                                        const Collection& c, uint64_t sp,
                                                        uint64_t ep, uint64_t k) {
  check_range(sp, ep, idx.n());
  std::vector<uint32_t> docs;
  docs.reserve(ep - sp + 1);
  for (uint64_t pos : locate(idx, sp, ep)) docs.push_back(static_cast<uint32_t>(c.starts.rank1(pos)));
  std::sort(docs.begin(), docs.end());
  std::vector<std::pair<uint32_t, uint64_t>> freqs;
  for (size_t i = 0; i < docs.size();) {
    size_t j = i;
    while (j < docs.size() && docs[j] == docs[i]) ++j;
    freqs.emplace_back(docs[i], j - i);
    i = j;
  }
  return select_topk(std::move(freqs), k);
}

}  // namespace dgx
