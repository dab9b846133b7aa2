#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "dgx/structures.hpp"

namespace dgx {

// Idealized bit-packed footprint: every array at the exact per-value width
// its content needs, tables and payloads counted separately from the 72-bit
// array headers.
struct SizeBreakdown {
  std::vector<std::pair<std::string, uint64_t>> sections;  // label, bits
  uint64_t total_bits = 0;

  double bpc(uint64_t n) const { return static_cast<double>(total_bits) / static_cast<double>(n); }
  std::string to_string() const;  // "SA:123;B:45"
};

SizeBreakdown measure_size(const IndexBundle& bundle, StructureKind s);

enum class QueryMode { list, topk };

const char* query_mode_name(QueryMode m);
QueryMode parse_query_mode(const std::string& name);

struct BenchOptions {
  QueryMode mode = QueryMode::list;
  uint64_t k = 10;
  bool include_find = false;  // diagnostics: fold find into the timed loop
  int threads = 1;            // shards the untimed find phase only
  uint64_t seed = 0;          // recorded in the row
};

struct BenchRow {
  std::string collection;
  std::string structure;
  std::string params;
  std::string mode;
  uint64_t k = 0;
  double size_bpc = 0.0;
  std::string size_breakdown;
  uint64_t patterns = 0;
  double total_time_s = 0.0;
  double avg_occ = 0.0;
  double avg_docc = 0.0;
  double occ_docc_ratio = 0.0;
  uint64_t seed = 0;
};

// find runs first and stays out of the timing; the timed loop answers the
// precomputed ranges on one thread.
BenchRow run_queries(const IndexBundle& bundle, StructureKind s,
                     const std::vector<std::string>& patterns, const BenchOptions& opt);

inline constexpr const char* kCsvHeader =
    "collection,structure,params,mode,k,size_bpc,size_breakdown,patterns,total_time_s,avg_occ,"
    "avg_docc,occ_docc_ratio,seed";

std::string csv_line(const BenchRow& row);
void write_csv(const std::filesystem::path& path, const std::vector<BenchRow>& rows);
void write_json(const std::filesystem::path& path, const std::vector<BenchRow>& rows);

struct StatsRow {
  uint64_t size_bytes = 0;
  uint32_t d = 0;
  double avg_doc_len = 0.0;
  uint64_t patterns = 0;
  double avg_occ = 0.0;
  double avg_docc = 0.0;
  double occ_docc_ratio = 0.0;
};

// idx needs sa and da; pattern aggregates use find + count_freqs.
StatsRow collection_stats(const Collection& c, const SuffixIndex& idx,
                          const std::vector<std::string>& patterns);

std::string format_stats_row(const std::string& name, const StatsRow& row);

}  // namespace dgx
