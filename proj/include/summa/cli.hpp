#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "summa/json_io.hpp"

namespace summa::cli {

enum class Format { Json, Text };

struct Options {
  std::string command;
  std::vector<std::string> files;
  Format format = Format::Json;
  bool certify = false;
  bool oracle = false;
  std::size_t max_terms = 10000;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitPrecondition = 3;

/// Report body for one parsed problem. Throws SchemaError when the command
/// does not take the problem's kind.
Json run_command(const Options& opts, const Problem& problem);

/// "path = value" lines, one per leaf, in document order.
std::string flatten_text(const Json& doc);

/// Full pipeline for one input text: parse, run, render. Errors go to `err`
/// and select the exit code.
struct FileResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};
FileResult process_text(const Options& opts, const std::string& text, const std::string& source);

/// Entry point of the `summa` binary.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace summa::cli
