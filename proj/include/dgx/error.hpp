#pragma once

#include <stdexcept>
#include <string>

namespace dgx {

// Error identities surfaced by the library. Query/build preconditions map to
// one of these; the CLI translates them into exit code 2.
enum class Errc {
  empty_collection,
  forbidden_byte,
  out_of_bounds,
  empty_array,
  contract_violation,
  empty_input,
  malformed_grammar,
  malformed_input,
  not_monotone,
  invalid_params,
  wrong_mode,
  missing_freqs,
  source_too_short,
  empty_distribution,
  pattern_length_exceeds_docs,
  io_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

}  // namespace dgx
