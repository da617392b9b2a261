#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "fincat/io.hpp"

namespace fincat::cli {

inline constexpr std::uint64_t kDefaultSeed = 7;

struct Report {
  Report() = default;
  explicit Report(std::string verb_, std::string status_ = "ok")
      : verb(std::move(verb_)), status(std::move(status_)) {}

  std::string verb;
  std::string status = "ok";  // ok | fail | error
  io::Json payload = io::Json::object();
  std::vector<std::string> witnesses;
  std::vector<std::string> text;  // human-readable rendering

  io::Json to_json() const;
};

/// 0 for ok, 1 for fail, 2 for error.
int exit_code(const Report& r);

/// The registered walkthroughs: "floor-ceiling", "wp", "quantifiers".
/// Throws UnknownDemo.
Report run_demo(const std::string& name, std::uint64_t seed = kDefaultSeed);
std::vector<std::string> demo_names();

/// Whole command line without the program name. Writes the report to `out`
/// (diagnostics for errors go to `err` unless --json) and returns the exit
/// code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fincat::cli
