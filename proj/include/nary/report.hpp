#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace nary {

// Flat, ordered key/value report. Text output is one "key: value" line per
// entry; JSON output keeps the same keys and ordering. Both renderings are
// byte-identical across runs for identical inputs.
class Report {
 public:
  using Value = std::variant<std::string, long long, bool>;

  void add(std::string key, std::string value) { entries_.emplace_back(std::move(key), std::move(value)); }
  void add(std::string key, const char* value) { add(std::move(key), std::string(value)); }
  void add(std::string key, long long value) { entries_.emplace_back(std::move(key), value); }
  void add(std::string key, int value) { add(std::move(key), static_cast<long long>(value)); }
  void add(std::string key, bool value) { entries_.emplace_back(std::move(key), value); }
  void add_status(std::string key, bool pass) { add(std::move(key), pass ? "pass" : "fail"); }

  const std::vector<std::pair<std::string, Value>>& entries() const { return entries_; }

  std::string text() const;
  nlohmann::ordered_json json() const;

 private:
  std::vector<std::pair<std::string, Value>> entries_;
};

}  // namespace nary
