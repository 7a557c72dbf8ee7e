#ifndef LANDAU_CLI_RUN_RECORD_HPP
#define LANDAU_CLI_RUN_RECORD_HPP

// One command invocation: flat, insertion-ordered key/value maps for inputs,
// outputs and solver configuration. JSON schema:
//
//   {"command": str, "version": str,
//    "inputs": {k: v}, "outputs": {k: v}, "config": {k: v}}
//
// with v a bool, integer, finite double or string.

#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

namespace landau::cli {

using Value = std::variant<bool, std::int64_t, double, std::string>;

class FlatMap {
 public:
  using Entry = std::pair<std::string, Value>;

  /// Inserts or overwrites, keeping the first insertion position.
  FlatMap& set(std::string key, Value value);

  template <typename T>
  FlatMap& set(std::string key, const T& value) {
    if constexpr (std::is_same_v<T, bool>) {
      return set(std::move(key), Value{value});
    } else if constexpr (std::is_integral_v<T>) {
      return set(std::move(key), Value{static_cast<std::int64_t>(value)});
    } else if constexpr (std::is_floating_point_v<T>) {
      return set(std::move(key), Value{static_cast<double>(value)});
    } else {
      return set(std::move(key), Value{std::string(value)});
    }
  }

  const Value* find(std::string_view key) const;
  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

  bool operator==(const FlatMap&) const = default;

 private:
  std::vector<Entry> entries_;
};

struct RunRecord {
  std::string command;
  FlatMap inputs;
  FlatMap outputs;
  FlatMap config;
  std::string version;

  nlohmann::ordered_json to_json() const;
  /// Throws InputError on schema violations.
  static RunRecord from_json(const nlohmann::ordered_json& j);

  bool operator==(const RunRecord&) const = default;
};

/// Shortest decimal form that parses back to the same double.
std::string format_double(double x);

/// Text form used for CSV cells and plain-text output.
std::string to_text(const Value& v);

/// RFC 4180 quoting when the cell contains a comma, quote or line break.
std::string csv_cell(std::string_view text);

/// Version string compiled into the tools.
std::string version();

}  // namespace landau::cli

#endif  // LANDAU_CLI_RUN_RECORD_HPP
