#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace schurlab::cli {

enum class Command { verify, constants, aut, schurity, quotient, paper, exportp };
enum class OutputFormat { human, machine };
enum class Expectation { schurian, non_schurian };

struct RunConfig {
  Command command = Command::verify;
  std::string group_spec;
  std::optional<std::string> partition_path;
  std::optional<Expectation> expect;
  OutputFormat format = OutputFormat::human;
  std::uint32_t order_cap = 2187;
  bool parallel = false;

  // paper / export
  std::string family;
  std::uint32_t n = 4;
  std::optional<std::string> output_path;

  // quotient: generator tokens of U and L
  std::string upper_gens;
  std::string lower_gens;
};

/// Exit codes: 0 success, 1 semantic failure (not an S-ring, expectation
/// mismatch), 2 usage or input error.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace schurlab::cli
