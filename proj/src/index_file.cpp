#include <fstream>
#include <sstream>

#include "dgx/serial.hpp"
#include "dgx/structures.hpp"
#include "json.hpp"

namespace dgx {

namespace {

using nlohmann::json;

std::string packed_u32(const std::vector<uint32_t>& a) {
  std::ostringstream buf(std::ios::binary);
  Writer w(buf);
  w.array_u32(a);
  return buf.str();
}

std::string packed_u64(const std::vector<uint64_t>& a) {
  std::ostringstream buf(std::ios::binary);
  Writer w(buf);
  w.array_u64(a);
  return buf.str();
}

std::string rmq_payload(const char* source_tag, const RmqIndex& r) {
  std::ostringstream buf(std::ios::binary);
  buf.write(source_tag, 4);
  Writer w(buf);
  w.array_u32(r.values());
  return buf.str();
}

const char* pdl_mode_name(PdlMode mode) {
  return mode == PdlMode::listing ? "listing" : "topk";
}

}  // namespace

void save_index(const std::filesystem::path& path, const IndexBundle& bundle) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::io_error, "cannot open for writing: " + path.string());
  write_header(out);

  json meta;
  meta["collection"] = bundle.collection_name;
  json names = json::array();
  for (StructureKind s : bundle.structures) names.push_back(structure_name(s));
  meta["structures"] = names;
  if (bundle.pdl) {
    meta["pdl"] = {{"b", bundle.pdl->b},
                   {"beta", bundle.pdl->beta},
                   {"mode", pdl_mode_name(bundle.pdl->mode)},
                   {"with_freqs", bundle.pdl->with_freqs}};
  }
  write_section(out, "META", meta.dump());

  write_section(out, "TEXT", bundle.c.text);
  write_section(out, "SA  ", packed_u32(bundle.idx.sa));
  if (!bundle.idx.da.empty()) write_section(out, "DA  ", packed_u32(bundle.idx.da));
  if (!bundle.idx.c.empty()) write_section(out, "C   ", packed_u32(bundle.idx.c));
  if (!bundle.idx.ilcp.empty()) write_section(out, "ILCP", packed_u32(bundle.idx.ilcp));
  if (!bundle.idx.ilcp_runs.empty()) {
    std::vector<uint64_t> starts;
    std::vector<uint32_t> values;
    starts.reserve(bundle.idx.ilcp_runs.size());
    values.reserve(bundle.idx.ilcp_runs.size());
    for (const IlcpRun& run : bundle.idx.ilcp_runs) {
      starts.push_back(run.start);
      values.push_back(run.value);
    }
    write_section(out, "RUNS", packed_u64(starts) + packed_u32(values));
  }
  if (bundle.rmq_c) write_section(out, "RMQ ", rmq_payload("C   ", *bundle.rmq_c));
  if (bundle.rmq_ilcp) write_section(out, "RMQ ", rmq_payload("ILCP", *bundle.rmq_ilcp));
  if (bundle.rmq_runs) write_section(out, "RMQ ", rmq_payload("RUNV", *bundle.rmq_runs));

  if (bundle.pdl) {
    const PdlIndex& p = *bundle.pdl;
    write_section(out, "PDLB", packed_u64(p.block_ends));
    std::vector<uint64_t> ls;
    std::vector<uint64_t> rs;
    ls.reserve(p.stored.size());
    rs.reserve(p.stored.size());
    for (const PdlStoredNode& node : p.stored) {
      ls.push_back(node.l);
      rs.push_back(node.r);
    }
    write_section(out, "PDLN", packed_u64(ls) + packed_u64(rs));

    std::ostringstream grams(std::ios::binary);
    Writer gw(grams);
    gw.u64(p.stored.size());
    for (const PdlStoredNode& node : p.stored) {
      gw.u32(node.docs.terminal_limit);
      std::vector<uint32_t> lefts;
      std::vector<uint32_t> rights;
      lefts.reserve(node.docs.rules.size());
      rights.reserve(node.docs.rules.size());
      for (const auto& [a, b] : node.docs.rules) {
        lefts.push_back(a);
        rights.push_back(b);
      }
      gw.array_u32(lefts);
      gw.array_u32(rights);
      gw.array_u32(node.docs.sequence);
    }
    write_section(out, "PDLS", grams.str());

    if (p.with_freqs) {
      std::ostringstream freqs(std::ios::binary);
      Writer fw(freqs);
      fw.u64(p.stored.size());
      for (const PdlStoredNode& node : p.stored) {
        fw.array_u64(node.freqs.run_lengths);
        fw.array_u64(node.freqs.head_gaps);
      }
      write_section(out, "PDLF", freqs.str());
    }
  }
  if (!out) fail(Errc::io_error, "write failed: " + path.string());
}

IndexBundle load_index(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::io_error, "cannot open: " + path.string());
  read_header(in);

  IndexBundle bundle;
  bool have_text = false;
  bool have_sa = false;
  std::vector<std::string> structure_names;
  PdlOptions pdl_opt;
  bool have_pdl_meta = false;
  std::vector<uint64_t> run_starts;
  std::vector<uint32_t> run_values;
  std::vector<uint64_t> block_ends;
  std::vector<uint64_t> node_ls;
  std::vector<uint64_t> node_rs;
  std::vector<Grammar> grammars;
  std::vector<FreqEncoding> freq_encodings;
  bool have_blocks = false;
  bool have_nodes = false;
  bool have_grammars = false;
  bool have_freqs = false;

  Section sec;
  while (read_section(in, sec)) {
    std::istringstream ss(sec.payload, std::ios::binary);
    Reader r(ss);
    if (sec.tag == "META") {
      json meta = json::parse(sec.payload, nullptr, false);
      if (meta.is_discarded()) fail(Errc::malformed_input, "unreadable index metadata");
      bundle.collection_name = meta.value("collection", std::string());
      for (const auto& name : meta.value("structures", json::array()))
        structure_names.push_back(name.get<std::string>());
      if (meta.contains("pdl")) {
        const json& p = meta["pdl"];
        pdl_opt.b = p.value("b", uint64_t{0});
        pdl_opt.beta = p.value("beta", 0.0);
        pdl_opt.mode =
            p.value("mode", std::string("listing")) == "topk" ? PdlMode::topk : PdlMode::listing;
        pdl_opt.with_freqs = p.value("with_freqs", false);
        have_pdl_meta = true;
      }
    } else if (sec.tag == "TEXT") {
      bundle.c = collection_from_text(sec.payload);
      have_text = true;
    } else if (sec.tag == "SA  ") {
      bundle.idx.sa = r.array_u32();
      have_sa = true;
    } else if (sec.tag == "DA  ") {
      bundle.idx.da = r.array_u32();
    } else if (sec.tag == "C   ") {
      bundle.idx.c = r.array_u32();
    } else if (sec.tag == "ILCP") {
      bundle.idx.ilcp = r.array_u32();
    } else if (sec.tag == "RUNS") {
      run_starts = r.array_u64();
      run_values = r.array_u32();
    } else if (sec.tag == "RMQ ") {
      char source[4];
      r.bytes(source, 4);
      std::string source_tag(source, 4);
      RmqIndex rmq_index = build_rmq(r.array_u32());
      if (source_tag == "C   ")
        bundle.rmq_c = std::move(rmq_index);
      else if (source_tag == "ILCP")
        bundle.rmq_ilcp = std::move(rmq_index);
      else if (source_tag == "RUNV")
        bundle.rmq_runs = std::move(rmq_index);
      else
        fail(Errc::malformed_input, "unknown rmq source " + source_tag);
    } else if (sec.tag == "PDLB") {
      block_ends = r.array_u64();
      have_blocks = true;
    } else if (sec.tag == "PDLN") {
      node_ls = r.array_u64();
      node_rs = r.array_u64();
      have_nodes = true;
    } else if (sec.tag == "PDLS") {
      uint64_t count = r.u64();
      grammars.resize(count);
      for (uint64_t t = 0; t < count; ++t) {
        Grammar& g = grammars[t];
        g.terminal_limit = r.u32();
        std::vector<uint32_t> lefts = r.array_u32();
        std::vector<uint32_t> rights = r.array_u32();
        if (lefts.size() != rights.size()) fail(Errc::malformed_input, "rule arrays disagree");
        g.rules.reserve(lefts.size());
        for (size_t i = 0; i < lefts.size(); ++i) g.rules.emplace_back(lefts[i], rights[i]);
        g.sequence = r.array_u32();
      }
      have_grammars = true;
    } else if (sec.tag == "PDLF") {
      uint64_t count = r.u64();
      freq_encodings.resize(count);
      for (uint64_t t = 0; t < count; ++t) {
        freq_encodings[t].run_lengths = r.array_u64();
        freq_encodings[t].head_gaps = r.array_u64();
      }
      have_freqs = true;
    }
    // Unknown tags are skipped for forward compatibility.
  }

  if (!have_text || !have_sa) fail(Errc::malformed_input, "index lacks text or suffix array");
  if (bundle.idx.sa.size() != bundle.c.n)
    fail(Errc::malformed_input, "suffix array length disagrees with text");

  for (const std::string& name : structure_names)
    bundle.structures.push_back(parse_structure(name));

  if (!run_starts.empty()) {
    if (run_values.size() != run_starts.size()) fail(Errc::malformed_input, "run arrays disagree");
    bundle.idx.ilcp_runs.reserve(run_starts.size());
    for (size_t t = 0; t < run_starts.size(); ++t) {
      uint64_t next = (t + 1 < run_starts.size()) ? run_starts[t + 1] : bundle.c.n + 1;
      if (next <= run_starts[t]) fail(Errc::malformed_input, "run starts not increasing");
      bundle.idx.ilcp_runs.push_back({run_starts[t], next - run_starts[t], run_values[t]});
    }
  }

  if (bundle.has(StructureKind::pdl)) {
    if (!have_pdl_meta || !have_blocks || !have_nodes || !have_grammars)
      fail(Errc::malformed_input, "pdl sections incomplete");
    if (node_ls.size() != node_rs.size() || node_ls.size() != grammars.size())
      fail(Errc::malformed_input, "pdl node arrays disagree");
    PdlIndex p;
    p.b = pdl_opt.b;
    p.beta = pdl_opt.beta;
    p.mode = pdl_opt.mode;
    p.with_freqs = pdl_opt.with_freqs;
    p.block_ends = std::move(block_ends);
    if (p.with_freqs && (!have_freqs || freq_encodings.size() != grammars.size()))
      fail(Errc::malformed_input, "pdl frequency sections incomplete");
    p.stored.resize(grammars.size());
    for (size_t t = 0; t < grammars.size(); ++t) {
      p.stored[t].l = node_ls[t];
      p.stored[t].r = node_rs[t];
      p.stored[t].docs = std::move(grammars[t]);
      if (p.with_freqs) p.stored[t].freqs = std::move(freq_encodings[t]);
    }
    bundle.pdl = std::move(p);
  }
  return bundle;
}

}  // namespace dgx
