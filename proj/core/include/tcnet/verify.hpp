#pragma once

#include <optional>
#include <string>
#include <vector>

// Self-checks run by `tcnet verify`. Each suite returns one Check per
// comparison group; a suite passes when every check does.
namespace tcnet::verify {

struct Check {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteOptions {
  std::optional<int> d;
  std::optional<int> n_max;
};

const std::vector<std::string>& suite_names();

/// Throws DomainError for an unknown suite name.
std::vector<Check> run_suite(const std::string& suite, const SuiteOptions& options = {});

bool all_passed(const std::vector<Check>& checks);

}  // namespace tcnet::verify
