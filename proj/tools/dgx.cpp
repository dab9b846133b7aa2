#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "dgx/bench.hpp"
#include "dgx/datagen.hpp"
#include "dgx/structures.hpp"

namespace {

namespace fs = std::filesystem;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) dgx::fail(dgx::Errc::io_error, "cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string to_hex(const std::string& bytes) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char b : bytes) {
    out += digits[b >> 4];
    out += digits[b & 0xf];
  }
  return out;
}

std::vector<dgx::StructureKind> parse_structure_list(const std::string& arg) {
  if (arg == "all")
    return {dgx::kAllStructures.begin(), dgx::kAllStructures.end()};
  std::vector<dgx::StructureKind> out;
  std::istringstream ss(arg);
  std::string name;
  while (std::getline(ss, name, ','))
    if (!name.empty()) out.push_back(dgx::parse_structure(name));
  if (out.empty()) dgx::fail(dgx::Errc::invalid_params, "empty structure list");
  return out;
}

dgx::PdlOptions parse_pdl_options(uint64_t b, double beta, const std::string& mode) {
  dgx::PdlOptions opt;
  opt.b = b;
  opt.beta = beta;
  if (mode == "list") {
    opt.mode = dgx::PdlMode::listing;
  } else if (mode == "topk") {
    opt.mode = dgx::PdlMode::topk;
  } else if (mode == "topk+f") {
    opt.mode = dgx::PdlMode::topk;
    opt.with_freqs = true;
  } else {
    dgx::fail(dgx::Errc::invalid_params, "unknown pdl mode " + mode);
  }
  return opt;
}

struct GenArgs {
  std::string kind = "dna";
  uint32_t bases = 1;
  uint32_t variants = 1;
  uint64_t length = 1000;
  double rate = 0.01;
  uint64_t seed = 0;
  std::string source;
  std::string out;
  std::string patterns_out;
  uint64_t pattern_length = 7;
  uint64_t pattern_sample = 10000;
  uint64_t pattern_keep = 1000;
  bool hex = false;
};

void run_gen(const GenArgs& a) {
  std::cerr << "# gen kind=" << a.kind << " bases=" << a.bases << " variants=" << a.variants
            << " length=" << a.length << " rate=" << a.rate << " seed=" << a.seed
            << " source=" << (a.source.empty() ? "-" : a.source) << " out=" << a.out;
  if (!a.patterns_out.empty())
    std::cerr << " patterns_out=" << a.patterns_out << " pattern_length=" << a.pattern_length
              << " pattern_sample=" << a.pattern_sample << " pattern_keep=" << a.pattern_keep
              << " hex=" << a.hex;
  std::cerr << "\n";

  dgx::GenSpec spec;
  spec.kind = dgx::parse_gen_kind(a.kind);
  spec.base_count = a.bases;
  spec.variants_per_base = a.variants;
  spec.base_length = a.length;
  spec.rate = a.rate;
  spec.seed = a.seed;
  if (!a.source.empty()) spec.source = read_file(a.source);
  dgx::Collection c = dgx::gen_collection(spec);
  dgx::save_docs(c, a.out);
  std::cerr << "# wrote " << a.out << " n=" << c.n << " d=" << c.d << "\n";

  if (!a.patterns_out.empty()) {
    dgx::SuffixIndex idx;
    idx.sa = dgx::build_sa(c);
    idx.da = dgx::build_da(idx, c);
    auto patterns = dgx::gen_patterns_substr(c, a.pattern_length, a.pattern_sample, a.pattern_keep,
                                             idx, a.seed);
    dgx::write_patterns(a.patterns_out, patterns, a.hex);
    std::cerr << "# wrote " << a.patterns_out << " patterns=" << patterns.size() << "\n";
  }
}

struct BuildArgs {
  std::string input;
  std::string out;
  std::string structures = "all";
  uint64_t pdl_b = 256;
  double pdl_beta = 16.0;
  std::string pdl_mode = "list";
};

void run_build(const BuildArgs& a) {
  std::cerr << "# build input=" << a.input << " out=" << a.out << " structures=" << a.structures
            << " pdl-b=" << a.pdl_b << " pdl-beta=" << a.pdl_beta << " pdl-mode=" << a.pdl_mode
            << "\n";
  dgx::Collection c =
      fs::is_directory(a.input) ? dgx::load_docs_dir(a.input) : dgx::load_docs(a.input);
  auto structures = parse_structure_list(a.structures);
  auto pdl_opt = parse_pdl_options(a.pdl_b, a.pdl_beta, a.pdl_mode);
  dgx::IndexBundle bundle =
      dgx::build_bundle(std::move(c), structures, pdl_opt, fs::path(a.input).stem().string());
  dgx::save_index(a.out, bundle);
  std::cerr << "# wrote " << a.out << " n=" << bundle.c.n << " d=" << bundle.c.d << "\n";
}

struct QueryArgs {
  std::string index;
  std::string structure;
  std::string patterns;
  std::string mode = "list";
  uint64_t k = 10;
  bool hex = false;
};

void run_query(const QueryArgs& a) {
  std::cerr << "# query index=" << a.index << " structure=" << a.structure
            << " patterns=" << a.patterns << " mode=" << a.mode << " k=" << a.k
            << " hex=" << a.hex << "\n";
  dgx::IndexBundle bundle = dgx::load_index(a.index);
  dgx::StructureKind s = dgx::parse_structure(a.structure);
  if (!bundle.has(s))
    dgx::fail(dgx::Errc::invalid_params,
              "index does not carry structure " + std::string(dgx::structure_name(s)));
  dgx::QueryMode mode = dgx::parse_query_mode(a.mode);
  auto patterns = dgx::read_patterns(a.patterns, a.hex);
  dgx::SeenSet seen;
  for (const std::string& p : patterns) {
    std::string shown = a.hex ? to_hex(p) : p;
    auto range = dgx::find(bundle.idx, bundle.c, p);
    if (!range) {
      std::cout << shown << "\t-\n";
      continue;
    }
    std::string rendered;
    if (mode == dgx::QueryMode::list) {
      dgx::ListResult r = dgx::list_range(bundle, s, range->sp, range->ep, p.size(), seen);
      for (size_t i = 0; i < r.docs.size(); ++i) {
        if (i) rendered += ',';
        rendered += std::to_string(r.docs[i]);
      }
    } else {
      dgx::TopkResult r = dgx::topk_range(bundle, s, range->sp, range->ep, a.k);
      for (size_t i = 0; i < r.items.size(); ++i) {
        if (i) rendered += ',';
        rendered += std::to_string(r.items[i].first);
        if (r.freqs_valid) rendered += ':' + std::to_string(r.items[i].second);
      }
    }
    std::cout << shown << '\t' << (rendered.empty() ? "-" : rendered) << "\n";
  }
}

struct BenchArgs {
  std::string index;
  std::string patterns;
  std::string mode = "list";
  uint64_t k = 10;
  std::string csv;
  std::string json;
  std::string structures;
  int threads = 1;
  bool include_find = false;
  uint64_t seed = 0;
  bool hex = false;
};

void run_bench(const BenchArgs& a) {
  std::cerr << "# bench index=" << a.index << " patterns=" << a.patterns << " mode=" << a.mode
            << " k=" << a.k << " csv=" << a.csv << " json=" << (a.json.empty() ? "-" : a.json)
            << " structures=" << (a.structures.empty() ? "(from index)" : a.structures)
            << " threads=" << a.threads << " include-find=" << a.include_find
            << " seed=" << a.seed << " hex=" << a.hex << "\n";
  dgx::IndexBundle bundle = dgx::load_index(a.index);
  dgx::QueryMode mode = dgx::parse_query_mode(a.mode);
  std::vector<dgx::StructureKind> structures;
  if (a.structures.empty()) {
    for (dgx::StructureKind s : bundle.structures)
      if (mode == dgx::QueryMode::list || dgx::topk_capable(s)) structures.push_back(s);
  } else {
    structures = parse_structure_list(a.structures);
    for (dgx::StructureKind s : structures)
      if (!bundle.has(s))
        dgx::fail(dgx::Errc::invalid_params,
                  "index does not carry structure " + std::string(dgx::structure_name(s)));
  }
  if (structures.empty()) dgx::fail(dgx::Errc::invalid_params, "no structures to benchmark");
  auto patterns = dgx::read_patterns(a.patterns, a.hex);

  dgx::BenchOptions opt;
  opt.mode = mode;
  opt.k = a.k;
  opt.include_find = a.include_find;
  opt.threads = a.threads;
  opt.seed = a.seed;
  std::vector<dgx::BenchRow> rows;
  for (dgx::StructureKind s : structures) {
    rows.push_back(dgx::run_queries(bundle, s, patterns, opt));
    std::cerr << "# " << dgx::structure_name(s) << " time_s=" << rows.back().total_time_s << "\n";
  }
  dgx::write_csv(a.csv, rows);
  if (!a.json.empty()) dgx::write_json(a.json, rows);
  std::cerr << "# wrote " << a.csv << "\n";
}

struct StatsArgs {
  std::string input;
  std::string patterns;
  bool hex = false;
};

void run_stats(const StatsArgs& a) {
  std::cerr << "# stats input=" << a.input << " patterns=" << (a.patterns.empty() ? "-" : a.patterns)
            << " hex=" << a.hex << "\n";
  dgx::Collection c =
      fs::is_directory(a.input) ? dgx::load_docs_dir(a.input) : dgx::load_docs(a.input);
  dgx::SuffixIndex idx;
  idx.sa = dgx::build_sa(c);
  idx.da = dgx::build_da(idx, c);
  std::vector<std::string> patterns;
  if (!a.patterns.empty()) patterns = dgx::read_patterns(a.patterns, a.hex);
  dgx::StatsRow row = dgx::collection_stats(c, idx, patterns);
  std::cout << dgx::format_stats_row(fs::path(a.input).stem().string(), row) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"document listing and top-k retrieval over concatenated collections"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a synthetic collection");
  gen_cmd->add_option("--kind", gen.kind, "dna|concat|version")->required();
  gen_cmd->add_option("--bases", gen.bases, "base documents");
  gen_cmd->add_option("--variants", gen.variants, "variants per base");
  gen_cmd->add_option("--length", gen.length, "base document length");
  gen_cmd->add_option("--rate", gen.rate, "mutation rate in [0,1)");
  gen_cmd->add_option("--seed", gen.seed, "generator seed");
  gen_cmd->add_option("--source", gen.source, "source file to draw bases from");
  gen_cmd->add_option("--out", gen.out, "output .docs path")->required();
  gen_cmd->add_option("--patterns-out", gen.patterns_out, "also sample a pattern file");
  gen_cmd->add_option("--pattern-length", gen.pattern_length, "sampled substring length");
  gen_cmd->add_option("--pattern-sample", gen.pattern_sample, "substrings sampled");
  gen_cmd->add_option("--pattern-keep", gen.pattern_keep, "patterns kept after ranking");
  gen_cmd->add_flag("--hex", gen.hex, "write patterns hex-encoded");

  BuildArgs build;
  auto* build_cmd = app.add_subcommand("build", "build and serialize an index");
  build_cmd->add_option("--input", build.input, ".docs file or document directory")->required();
  build_cmd->add_option("--out", build.out, "output .dgx path")->required();
  build_cmd->add_option("--structures", build.structures, "comma list or 'all'");
  build_cmd->add_option("--pdl-b", build.pdl_b, "pdl block size");
  build_cmd->add_option("--pdl-beta", build.pdl_beta, "pdl storing factor (0 or >= 1)");
  build_cmd->add_option("--pdl-mode", build.pdl_mode, "list|topk|topk+f");

  QueryArgs query;
  auto* query_cmd = app.add_subcommand("query", "answer patterns from an index");
  query_cmd->add_option("--index", query.index, ".dgx path")->required();
  query_cmd->add_option("--structure", query.structure, "structure name")->required();
  query_cmd->add_option("--patterns", query.patterns, "pattern file")->required();
  query_cmd->add_option("--mode", query.mode, "list|topk");
  query_cmd->add_option("--k", query.k, "top-k size");
  query_cmd->add_flag("--hex", query.hex, "patterns are hex-encoded");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "time queries and record CSV");
  bench_cmd->add_option("--index", bench.index, ".dgx path")->required();
  bench_cmd->add_option("--patterns", bench.patterns, "pattern file")->required();
  bench_cmd->add_option("--mode", bench.mode, "list|topk");
  bench_cmd->add_option("--k", bench.k, "top-k size");
  bench_cmd->add_option("--csv", bench.csv, "CSV output path")->required();
  bench_cmd->add_option("--json", bench.json, "JSON mirror path");
  bench_cmd->add_option("--structures", bench.structures, "subset to run (default: from index)");
  bench_cmd->add_option("--threads", bench.threads, "find-phase worker count");
  bench_cmd->add_flag("--include-find", bench.include_find, "time find together with queries");
  bench_cmd->add_option("--seed", bench.seed, "seed recorded in rows");
  bench_cmd->add_flag("--hex", bench.hex, "patterns are hex-encoded");

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "print collection statistics");
  stats_cmd->add_option("--input", stats.input, ".docs file or document directory")->required();
  stats_cmd->add_option("--patterns", stats.patterns, "pattern file");
  stats_cmd->add_flag("--hex", stats.hex, "patterns are hex-encoded");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (gen_cmd->parsed()) run_gen(gen);
    if (build_cmd->parsed()) run_build(build);
    if (query_cmd->parsed()) run_query(query);
    if (bench_cmd->parsed()) run_bench(bench);
    if (stats_cmd->parsed()) run_stats(stats);
  } catch (const dgx::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
