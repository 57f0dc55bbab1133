#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace tcnet::cli {

/// One line of JSON output. Counts are decimal strings, rationals are
/// {"num","den"} string pairs and floats are strings with 17 significant digits.
struct OutputRecord {
  std::string command;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::string method;
  nlohmann::ordered_json results = nlohmann::ordered_json::object();

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

void to_json(nlohmann::ordered_json& j, const OutputRecord& r);
void from_json(const nlohmann::ordered_json& j, OutputRecord& r);

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the tool on argv-style arguments (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tcnet::cli
