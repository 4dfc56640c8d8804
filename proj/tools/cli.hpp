#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "radgen/groebner.hpp"

namespace radgen::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kFalse = 1, kInputError = 2, kBudget = 3 };

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = {"construct",      "verify", "intersect", "minimal-primes", "height",
                                                 "stci",           "chain",  "sv-combine", "reproduce"};
  return names;
}

struct JobSpec {
  std::string command;
  std::vector<std::string> ring;
  std::vector<std::vector<std::string>> ideals;
  std::optional<std::size_t> s, t, h;
  std::vector<std::size_t> a;
  std::vector<std::vector<unsigned>> e;  // sv-combine exponents, parallel to ideals
  std::string example;                   // reproduce target
  FieldMode field = FieldMode::rational();
  std::uint64_t max_steps = 1'000'000;
  std::size_t max_t = 4;  // cap for reproduce corollary2
};

// Reads the structured job document. Throws InvalidInput naming the field.
JobSpec parse_job(const Json& doc);

struct Outcome {
  Json report;
  int exit_code = kOk;
};

// Runs one job. Input problems surface as exceptions; run_safely maps them
// to exit codes and an error report.
Outcome run(const JobSpec& job);
Outcome run_safely(const JobSpec& job);

// example1 | example2 | example3 | corollary2
Outcome reproduce(const std::string& name, const JobSpec& params);

// Full command-line entry point; returns the process exit code.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace radgen::cli
