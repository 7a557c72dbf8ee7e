#include "landau/cli/run_record.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "landau/errors.hpp"

#ifndef LANDAU_VERSION
#define LANDAU_VERSION "unknown"
#endif

namespace landau::cli {

namespace {

nlohmann::ordered_json map_to_json(const FlatMap& map) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [key, value] : map.entries()) {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, double>) {
            if (!std::isfinite(v)) throw InputError("run record: non-finite value for '" + key + "'");
          }
          j[key] = v;
        },
        value);
  }
  return j;
}

FlatMap map_from_json(const nlohmann::ordered_json& j, const char* field) {
  if (!j.is_object()) throw InputError(std::string("run record: '") + field + "' must be an object");
  FlatMap map;
  for (const auto& [key, v] : j.items()) {
    if (v.is_boolean()) {
      map.set(key, Value{v.get<bool>()});
    } else if (v.is_number_integer()) {
      map.set(key, Value{v.get<std::int64_t>()});
    } else if (v.is_number_float()) {
      map.set(key, Value{v.get<double>()});
    } else if (v.is_string()) {
      map.set(key, Value{v.get<std::string>()});
    } else {
      throw InputError("run record: '" + key + "' is not a scalar");
    }
  }
  return map;
}

}  // namespace

FlatMap& FlatMap::set(std::string key, Value value) {
  auto it = std::find_if(entries_.begin(), entries_.end(), [&](const Entry& e) { return e.first == key; });
  if (it != entries_.end()) {
    it->second = std::move(value);
  } else {
    entries_.emplace_back(std::move(key), std::move(value));
  }
  return *this;
}

const Value* FlatMap::find(std::string_view key) const {
  for (const auto& e : entries_) {
    if (e.first == key) return &e.second;
  }
  return nullptr;
}

nlohmann::ordered_json RunRecord::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["version"] = version;
  j["inputs"] = map_to_json(inputs);
  j["outputs"] = map_to_json(outputs);
  j["config"] = map_to_json(config);
  return j;
}

RunRecord RunRecord::from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object()) throw InputError("run record: expected an object");
  for (const char* key : {"command", "version", "inputs", "outputs", "config"}) {
    if (!j.contains(key)) throw InputError(std::string("run record: missing '") + key + "'");
  }
  RunRecord r;
  r.command = j.at("command").get<std::string>();
  r.version = j.at("version").get<std::string>();
  r.inputs = map_from_json(j.at("inputs"), "inputs");
  r.outputs = map_from_json(j.at("outputs"), "outputs");
  r.config = map_from_json(j.at("config"), "config");
  return r;
}

std::string format_double(double x) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, result.ptr);
}

std::string to_text(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(x);
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(x);
        } else {
          return x;
        }
      },
      v);
}

std::string csv_cell(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string version() { return LANDAU_VERSION; }

}  // namespace landau::cli
