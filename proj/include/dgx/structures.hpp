#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dgx/corpus.hpp"
#include "dgx/doclist.hpp"
#include "dgx/pdl.hpp"
#include "dgx/rmq.hpp"
#include "dgx/suffixes.hpp"

namespace dgx {

enum class StructureKind {
  brute_l,
  brute_d,
  mut,
  sada_d,
  sada_l,
  ilcp_d,
  ilcp_l,
  ilcp_runs,
  pdl,
};

inline constexpr std::array<StructureKind, 9> kAllStructures = {
    StructureKind::brute_l, StructureKind::brute_d, StructureKind::mut,
    StructureKind::sada_d,  StructureKind::sada_l,  StructureKind::ilcp_d,
    StructureKind::ilcp_l,  StructureKind::ilcp_runs, StructureKind::pdl,
};

StructureKind parse_structure(const std::string& name);
const char* structure_name(StructureKind s);

bool topk_capable(StructureKind s);

struct PdlOptions {
  uint64_t b = 256;
  double beta = 16.0;
  PdlMode mode = PdlMode::listing;
  bool with_freqs = false;
};

// One collection with every piece its structures need. The suffix array is
// always present (find runs on it); the rest is built per structure.
struct IndexBundle {
  std::string collection_name;
  Collection c;
  SuffixIndex idx;
  std::optional<RmqIndex> rmq_c;
  std::optional<RmqIndex> rmq_ilcp;
  std::optional<RmqIndex> rmq_runs;
  std::optional<PdlIndex> pdl;
  std::vector<StructureKind> structures;

  bool has(StructureKind s) const;
};

IndexBundle build_bundle(Collection c, const std::vector<StructureKind>& structures,
                         const PdlOptions& pdl_options, std::string collection_name);

// Adds one structure (and its missing pieces) to an existing bundle.
void add_structure(IndexBundle& bundle, StructureKind s, const PdlOptions& pdl_options);

// Drops the pieces only this structure needed, keeping text and suffix array.
void drop_structure(IndexBundle& bundle, StructureKind s);

// Listing over a precomputed find range; m is the pattern length (the ILCP
// structures require m >= 1).
ListResult list_range(const IndexBundle& bundle, StructureKind s, uint64_t sp, uint64_t ep,
                      uint64_t m, SeenSet& seen);

TopkResult topk_range(const IndexBundle& bundle, StructureKind s, uint64_t sp, uint64_t ep,
                      uint64_t k);

// find + list_range / topk_range; absent patterns give empty results.
ListResult run_list(const IndexBundle& bundle, StructureKind s, const std::string& pattern,
                    SeenSet& seen);
TopkResult run_topk(const IndexBundle& bundle, StructureKind s, const std::string& pattern,
                    uint64_t k);

// ".dgx" container: the text and suffix array always travel with the index;
// per-structure sections as needed. Rank and RMQ tables are rebuilt on load.
void save_index(const std::filesystem::path& path, const IndexBundle& bundle);
IndexBundle load_index(const std::filesystem::path& path);

}  // namespace dgx
