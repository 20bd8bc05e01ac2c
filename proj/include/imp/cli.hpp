#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "imp/concrete.hpp"

namespace imp::cli {

enum class Command { Run, Vcg, Absint, Check };
enum class Format { Text, Json };

/// Exit statuses shared by every subcommand.
enum Exit : int {
  kOk = 0,
  kUsage = 1,           // parse or configuration error
  kRuntimeError = 2,
  kOutOfFuel = 3,
  kCounterexample = 4,  // refuted condition or annotation violation
};

struct RunConfig {
  Command command = Command::Run;
  std::string program;  // program text, already read from file/stdin
  std::string env;
  std::string abenv;
  std::optional<std::string> post;
  Fuel fuel = 10000;
  std::size_t samples = 1000;
  Format format = Format::Text;
  bool verify = false;
};

int cmd_run(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_vcg(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_absint(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_check(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Dispatches on cfg.command; turns parse and setup errors into kUsage.
int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full command line front end: `imp run|vcg|absint|check [options] <file|->`.
int main(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
         std::ostream& err);

}  // namespace imp::cli
