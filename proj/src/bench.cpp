#include "dgx/bench.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "dgx/serial.hpp"
#include "json.hpp"

namespace dgx {

namespace {

uint64_t max_value(const std::vector<uint32_t>& a) {
  uint64_t m = 0;
  for (uint32_t v : a) m = std::max<uint64_t>(m, v);
  return m;
}

uint64_t max_value(const std::vector<uint64_t>& a) {
  uint64_t m = 0;
  for (uint64_t v : a) m = std::max(m, v);
  return m;
}

uint64_t array_bits(uint64_t count, uint64_t max_val) {
  return count * std::max<uint32_t>(1, bit_width_of(max_val));
}

uint64_t rank_bitvector_bits(uint64_t n) {
  uint64_t words = (n + 63) / 64;
  return 64 * words + 64 * (words + 1);  // payload words plus cumulative counts
}

uint64_t rmq_bits(const RmqIndex& r, uint64_t n) {
  return r.table_cells() * bit_width_of(n) + array_bits(r.size(), max_value(r.values()));
}

}  // namespace

std::string SizeBreakdown::to_string() const {
  std::string out;
  for (const auto& [label, bits] : sections) {
    if (!out.empty()) out += ';';
    out += label + ':' + std::to_string(bits);
  }
  return out;
}

SizeBreakdown measure_size(const IndexBundle& bundle, StructureKind s) {
  const SuffixIndex& idx = bundle.idx;
  const Collection& c = bundle.c;
  uint64_t n = c.n;
  SizeBreakdown out;
  auto add = [&](const char* label, uint64_t bits) { out.sections.emplace_back(label, bits); };

  uint32_t da_width = bit_width_of(std::max<uint64_t>(c.d, 2) - 1);
  switch (s) {
    case StructureKind::brute_l:
      add("SA", array_bits(n, n));
      add("B", rank_bitvector_bits(n));
      break;
    case StructureKind::brute_d:
      add("DA", n * da_width);
      break;
    case StructureKind::mut:
      add("DA", n * da_width);
      add("C", array_bits(n, max_value(idx.c)));
      add("RMQ", rmq_bits(*bundle.rmq_c, n));
      break;
    case StructureKind::sada_d:
      add("DA", n * da_width);
      add("RMQ", rmq_bits(*bundle.rmq_c, n));
      break;
    case StructureKind::sada_l:
      add("SA", array_bits(n, n));
      add("B", rank_bitvector_bits(n));
      add("RMQ", rmq_bits(*bundle.rmq_c, n));
      break;
    case StructureKind::ilcp_d:
      add("DA", n * da_width);
      add("ILCP", array_bits(n, max_value(idx.ilcp)));
      add("RMQ", rmq_bits(*bundle.rmq_ilcp, n));
      break;
    case StructureKind::ilcp_l:
      add("SA", array_bits(n, n));
      add("B", rank_bitvector_bits(n));
      add("ILCP", array_bits(n, max_value(idx.ilcp)));
      add("RMQ", rmq_bits(*bundle.rmq_ilcp, n));
      break;
    case StructureKind::ilcp_runs: {
      add("DA", n * da_width);
      uint64_t runs = idx.ilcp_runs.size();
      uint64_t max_run_value = 0;
      for (const IlcpRun& run : idx.ilcp_runs)
        max_run_value = std::max<uint64_t>(max_run_value, run.value);
      add("RUNS", array_bits(runs, n) + array_bits(runs, max_run_value));
      add("RMQ", rmq_bits(*bundle.rmq_runs, n));
      break;
    }
    case StructureKind::pdl: {
      const PdlIndex& p = *bundle.pdl;
      if (p.mode == PdlMode::listing) {
        add("SA", array_bits(n, n));
        add("B", rank_bitvector_bits(n));
      } else {
        add("DA", n * da_width);
      }
      add("PDLB", array_bits(p.block_ends.size(), n));
      add("PDLN", 2 * array_bits(p.stored.size(), n));
      uint64_t grammar_bits = 0;
      for (const PdlStoredNode& node : p.stored) {
        uint64_t max_symbol = node.docs.terminal_limit + node.docs.rules.size();
        grammar_bits += node.docs.symbol_count() * bit_width_of(max_symbol);
      }
      add("PDLS", grammar_bits);
      if (p.with_freqs) {
        uint64_t freq_bits = 0;
        for (const PdlStoredNode& node : p.stored) {
          freq_bits += array_bits(node.freqs.run_lengths.size(), max_value(node.freqs.run_lengths));
          freq_bits += array_bits(node.freqs.head_gaps.size(), max_value(node.freqs.head_gaps));
        }
        add("PDLF", freq_bits);
      }
      break;
    }
  }
  add("HDR", 72 * out.sections.size());
  for (const auto& [label, bits] : out.sections) out.total_bits += bits;
  return out;
}

const char* query_mode_name(QueryMode m) { return m == QueryMode::list ? "list" : "topk"; }

QueryMode parse_query_mode(const std::string& name) {
  if (name == "list") return QueryMode::list;
  if (name == "topk") return QueryMode::topk;
  fail(Errc::invalid_params, "unknown mode " + name);
}

namespace {

std::string pdl_params(const PdlIndex& p) {
  std::ostringstream out;
  out << "b=" << p.b << ";beta=" << p.beta << ";mode=" << (p.mode == PdlMode::listing ? "listing" : "topk");
  if (p.with_freqs) out << "+f";
  return out.str();
}

struct FoundRange {
  bool present = false;
  uint64_t sp = 0;
  uint64_t ep = 0;
  uint64_t m = 0;
};

}  // namespace

BenchRow run_queries(const IndexBundle& bundle, StructureKind s,
                     const std::vector<std::string>& patterns, const BenchOptions& opt) {
  if (patterns.empty()) fail(Errc::empty_input, "no patterns");

  std::vector<FoundRange> ranges(patterns.size());
  auto find_one = [&](size_t i) {
    auto range = find(bundle.idx, bundle.c, patterns[i]);
    if (range) ranges[i] = {true, range->sp, range->ep, patterns[i].size()};
  };
  if (!opt.include_find) {
#ifdef _OPENMP
    if (opt.threads > 1) {
      int64_t count = static_cast<int64_t>(patterns.size());
#pragma omp parallel for num_threads(opt.threads) schedule(static)
      for (int64_t i = 0; i < count; ++i) find_one(static_cast<size_t>(i));
    } else {
      for (size_t i = 0; i < patterns.size(); ++i) find_one(i);
    }
#else
    for (size_t i = 0; i < patterns.size(); ++i) find_one(i);
#endif
  }

  uint64_t occ_sum = 0;
  uint64_t docc_sum = 0;
  SeenSet seen;
  auto started = std::chrono::steady_clock::now();
  for (size_t i = 0; i < patterns.size(); ++i) {
    if (opt.include_find) find_one(i);
    if (!ranges[i].present) continue;
    occ_sum += ranges[i].ep - ranges[i].sp + 1;
    if (opt.mode == QueryMode::list) {
      ListResult r = list_range(bundle, s, ranges[i].sp, ranges[i].ep, ranges[i].m, seen);
      docc_sum += r.docc;
    } else {
      TopkResult r = topk_range(bundle, s, ranges[i].sp, ranges[i].ep, opt.k);
      docc_sum += r.items.size();
    }
  }
  auto stopped = std::chrono::steady_clock::now();

  SizeBreakdown size = measure_size(bundle, s);
  BenchRow row;
  row.collection = bundle.collection_name;
  row.structure = structure_name(s);
  row.params = (s == StructureKind::pdl) ? pdl_params(*bundle.pdl) : "-";
  row.mode = query_mode_name(opt.mode);
  row.k = (opt.mode == QueryMode::topk) ? opt.k : 0;
  row.size_bpc = size.bpc(bundle.c.n);
  row.size_breakdown = size.to_string();
  row.patterns = patterns.size();
  row.total_time_s = std::chrono::duration<double>(stopped - started).count();
  row.avg_occ = static_cast<double>(occ_sum) / static_cast<double>(patterns.size());
  row.avg_docc = static_cast<double>(docc_sum) / static_cast<double>(patterns.size());
  row.occ_docc_ratio =
      docc_sum == 0 ? 1.0 : static_cast<double>(occ_sum) / static_cast<double>(docc_sum);
  row.seed = opt.seed;
  return row;
}

namespace {

std::string fmt(double v, int precision) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(precision) << v;
  return out.str();
}

}  // namespace

std::string csv_line(const BenchRow& row) {
  std::ostringstream out;
  out << row.collection << ',' << row.structure << ',' << row.params << ',' << row.mode << ','
      << row.k << ',' << fmt(row.size_bpc, 4) << ',' << row.size_breakdown << ',' << row.patterns
      << ',' << fmt(row.total_time_s, 6) << ',' << fmt(row.avg_occ, 6) << ','
      << fmt(row.avg_docc, 6) << ',' << fmt(row.occ_docc_ratio, 6) << ',' << row.seed;
  return out.str();
}

void write_csv(const std::filesystem::path& path, const std::vector<BenchRow>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_error, "cannot open for writing: " + path.string());
  out << kCsvHeader << '\n';
  for (const BenchRow& row : rows) out << csv_line(row) << '\n';
  if (!out) fail(Errc::io_error, "write failed: " + path.string());
}

void write_json(const std::filesystem::path& path, const std::vector<BenchRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const BenchRow& row : rows) {
    arr.push_back({{"collection", row.collection},
                   {"structure", row.structure},
                   {"params", row.params},
                   {"mode", row.mode},
                   {"k", row.k},
                   {"size_bpc", row.size_bpc},
                   {"size_breakdown", row.size_breakdown},
                   {"patterns", row.patterns},
                   {"total_time_s", row.total_time_s},
                   {"avg_occ", row.avg_occ},
                   {"avg_docc", row.avg_docc},
                   {"occ_docc_ratio", row.occ_docc_ratio},
                   {"seed", row.seed}});
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_error, "cannot open for writing: " + path.string());
  out << arr.dump(2) << '\n';
  if (!out) fail(Errc::io_error, "write failed: " + path.string());
}

StatsRow collection_stats(const Collection& c, const SuffixIndex& idx,
                          const std::vector<std::string>& patterns) {
  StatsRow row;
  row.size_bytes = c.n;
  row.d = c.d;
  row.avg_doc_len = static_cast<double>(c.n) / static_cast<double>(c.d);
  row.patterns = patterns.size();
  if (patterns.empty()) return row;
  uint64_t occ_sum = 0;
  uint64_t docc_sum = 0;
  for (const std::string& p : patterns) {
    auto range = find(idx, c, p);
    if (!range) continue;
    occ_sum += range->ep - range->sp + 1;
    docc_sum += count_freqs(idx, range->sp, range->ep).size();
  }
  row.avg_occ = static_cast<double>(occ_sum) / static_cast<double>(patterns.size());
  row.avg_docc = static_cast<double>(docc_sum) / static_cast<double>(patterns.size());
  row.occ_docc_ratio =
      docc_sum == 0 ? 1.0 : static_cast<double>(occ_sum) / static_cast<double>(docc_sum);
  return row;
}

std::string format_stats_row(const std::string& name, const StatsRow& row) {
  std::ostringstream out;
  out << name << '\t' << "size_bytes=" << row.size_bytes << '\t' << "d=" << row.d << '\t'
      << "avg_doclen=" << fmt(row.avg_doc_len, 0) << '\t' << "patterns=" << row.patterns << '\t'
      << "avg_occ=" << fmt(row.avg_occ, 1) << '\t' << "avg_docc=" << fmt(row.avg_docc, 1) << '\t'
      << "occ_docc=" << fmt(row.occ_docc_ratio, 2);
  return out.str();
}

}  // namespace dgx
