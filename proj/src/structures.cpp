#include "dgx/structures.hpp"

#include <algorithm>

namespace dgx {

const char* structure_name(StructureKind s) {
  switch (s) {
    case StructureKind::brute_l: return "brute-l";
    case StructureKind::brute_d: return "brute-d";
    case StructureKind::mut: return "mut";
    case StructureKind::sada_d: return "sada-d";
    case StructureKind::sada_l: return "sada-l";
    case StructureKind::ilcp_d: return "ilcp-d";
    case StructureKind::ilcp_l: return "ilcp-l";
    case StructureKind::ilcp_runs: return "ilcp-runs";
    case StructureKind::pdl: return "pdl";
  }
  return "?";
}

StructureKind parse_structure(const std::string& name) {
  for (StructureKind s : kAllStructures)
    if (name == structure_name(s)) return s;
  fail(Errc::invalid_params, "unknown structure " + name);
}

bool topk_capable(StructureKind s) {
  return s == StructureKind::brute_l || s == StructureKind::brute_d || s == StructureKind::pdl;
}

bool IndexBundle::has(StructureKind s) const {
  return std::find(structures.begin(), structures.end(), s) != structures.end();
}

namespace {

struct Needs {
  bool da = false;
  bool c_arr = false;
  bool ilcp = false;
  bool runs = false;
  bool rmq_c = false;
  bool rmq_ilcp = false;
  bool rmq_runs = false;
  bool pdl = false;
};

// Pieces a structure touches at query time; build-only inputs (LCP for the
// PDL sweep, DA behind every builder) are transient.
Needs runtime_needs(const IndexBundle& bundle) {
  Needs need;
  for (StructureKind s : bundle.structures) {
    switch (s) {
      case StructureKind::brute_l: break;
      case StructureKind::brute_d: need.da = true; break;
      case StructureKind::mut:
        need.da = need.c_arr = need.rmq_c = true;
        break;
      case StructureKind::sada_d:
        need.da = need.rmq_c = true;
        break;
      case StructureKind::sada_l: need.rmq_c = true; break;
      case StructureKind::ilcp_d:
        need.da = need.ilcp = need.rmq_ilcp = true;
        break;
      case StructureKind::ilcp_l:
        need.ilcp = need.rmq_ilcp = true;
        break;
      case StructureKind::ilcp_runs:
        need.da = need.runs = need.rmq_runs = true;
        break;
      case StructureKind::pdl:
        need.pdl = true;
        if (bundle.pdl && bundle.pdl->mode == PdlMode::topk) need.da = true;
        break;
    }
  }
  return need;
}

void ensure_pieces(IndexBundle& bundle, const PdlOptions& opt) {
  SuffixIndex& idx = bundle.idx;
  bool want_pdl = bundle.has(StructureKind::pdl);
  Needs need = runtime_needs(bundle);
  bool want_da = need.da || (want_pdl && !bundle.pdl) || need.c_arr || need.rmq_c ||
                 (opt.mode == PdlMode::topk && want_pdl);
  if (want_da && idx.da.empty()) idx.da = build_da(idx, bundle.c);
  if ((need.c_arr || need.rmq_c) && idx.c.empty()) idx.c = build_c(idx.da);
  if ((need.ilcp || need.runs || need.rmq_ilcp || need.rmq_runs) && idx.ilcp.empty())
    build_ilcp(bundle.c, idx);
  if (need.rmq_c && !bundle.rmq_c) bundle.rmq_c = build_rmq(idx.c);
  if (need.rmq_ilcp && !bundle.rmq_ilcp) bundle.rmq_ilcp = build_rmq(idx.ilcp);
  if (need.rmq_runs && !bundle.rmq_runs) {
    std::vector<uint32_t> run_values;
    run_values.reserve(idx.ilcp_runs.size());
    for (const IlcpRun& run : idx.ilcp_runs) run_values.push_back(run.value);
    bundle.rmq_runs = build_rmq(std::move(run_values));
  }
  if (want_pdl && !bundle.pdl) {
    if (idx.lcp.empty()) idx.lcp = build_lcp(bundle.c, idx);
    bundle.pdl = build_pdl(idx, bundle.c, opt.b, opt.beta, opt.mode, opt.with_freqs);
  }
}

void prune_pieces(IndexBundle& bundle) {
  Needs need = runtime_needs(bundle);
  SuffixIndex& idx = bundle.idx;
  idx.lcp = {};
  if (!need.da) idx.da = {};
  if (!need.c_arr) idx.c = {};
  if (!need.ilcp) idx.ilcp = {};
  if (!need.runs) idx.ilcp_runs = {};
  if (!need.rmq_c) bundle.rmq_c.reset();
  if (!need.rmq_ilcp) bundle.rmq_ilcp.reset();
  if (!need.rmq_runs) bundle.rmq_runs.reset();
  if (!need.pdl) bundle.pdl.reset();
}

}  // namespace

IndexBundle build_bundle(Collection c, const std::vector<StructureKind>& structures,
                         const PdlOptions& pdl_options, std::string collection_name) {
  IndexBundle bundle;
  bundle.collection_name = std::move(collection_name);
  bundle.c = std::move(c);
  bundle.idx.sa = build_sa(bundle.c);
  for (StructureKind s : structures)
    if (!bundle.has(s)) bundle.structures.push_back(s);
  ensure_pieces(bundle, pdl_options);
  prune_pieces(bundle);
  return bundle;
}

void add_structure(IndexBundle& bundle, StructureKind s, const PdlOptions& pdl_options) {
  if (bundle.has(s)) return;
  bundle.structures.push_back(s);
  ensure_pieces(bundle, pdl_options);
  prune_pieces(bundle);
}

void drop_structure(IndexBundle& bundle, StructureKind s) {
  std::erase(bundle.structures, s);
  prune_pieces(bundle);
}

namespace {

void require(bool present, const char* what) {
  if (!present) fail(Errc::invalid_params, std::string(what) + " not prepared in this index");
}

}  // namespace

ListResult list_range(const IndexBundle& bundle, StructureKind s, uint64_t sp, uint64_t ep,
                      uint64_t m, SeenSet& seen) {
  const SuffixIndex& idx = bundle.idx;
  switch (s) {
    case StructureKind::brute_l: return list_brute_l(idx, bundle.c, sp, ep);
    case StructureKind::brute_d:
      require(!idx.da.empty(), "document array");
      return list_brute_d(idx, sp, ep);
    case StructureKind::mut:
      require(!idx.c.empty() && bundle.rmq_c.has_value(), "mut");
      return list_mut(idx, *bundle.rmq_c, sp, ep);
    case StructureKind::sada_d:
      require(!idx.da.empty() && bundle.rmq_c.has_value(), "sada-d");
      return list_sada_d(idx, *bundle.rmq_c, sp, ep, seen);
    case StructureKind::sada_l:
      require(bundle.rmq_c.has_value(), "sada-l");
      return list_sada_l(idx, bundle.c, *bundle.rmq_c, sp, ep, seen);
    case StructureKind::ilcp_d:
      require(!idx.da.empty() && bundle.rmq_ilcp.has_value(), "ilcp-d");
      return list_ilcp_d(idx, *bundle.rmq_ilcp, sp, ep, m);
    case StructureKind::ilcp_l:
      require(bundle.rmq_ilcp.has_value(), "ilcp-l");
      return list_ilcp_l(idx, bundle.c, *bundle.rmq_ilcp, sp, ep, m);
    case StructureKind::ilcp_runs:
      require(!idx.da.empty() && bundle.rmq_runs.has_value(), "ilcp-runs");
      return list_ilcp_runs(idx, *bundle.rmq_runs, sp, ep, m);
    case StructureKind::pdl:
      require(bundle.pdl.has_value(), "pdl");
      return pdl_list(*bundle.pdl, idx, bundle.c, sp, ep);
  }
  fail(Errc::invalid_params, "unknown structure");
}

TopkResult topk_range(const IndexBundle& bundle, StructureKind s, uint64_t sp, uint64_t ep,
                      uint64_t k) {
  TopkResult result;
  switch (s) {
    case StructureKind::brute_d:
      require(!bundle.idx.da.empty(), "document array");
      result.items = topk_brute_d(bundle.idx, sp, ep, k);
      return result;
    case StructureKind::brute_l:
      result.items = topk_brute_l(bundle.idx, bundle.c, sp, ep, k);
      return result;
    case StructureKind::pdl:
      require(bundle.pdl.has_value(), "pdl");
      return pdl_topk(*bundle.pdl, bundle.idx, bundle.c, sp, ep, k);
    default:
      fail(Errc::wrong_mode, std::string(structure_name(s)) + " answers listing only");
  }
}

ListResult run_list(const IndexBundle& bundle, StructureKind s, const std::string& pattern,
                    SeenSet& seen) {
  auto range = find(bundle.idx, bundle.c, pattern);
  if (!range) return {};
  return list_range(bundle, s, range->sp, range->ep, pattern.size(), seen);
}

TopkResult run_topk(const IndexBundle& bundle, StructureKind s, const std::string& pattern,
                    uint64_t k) {
  auto range = find(bundle.idx, bundle.c, pattern);
  if (!range) return {};
  return topk_range(bundle, s, range->sp, range->ep, k);
}

}  // namespace dgx
