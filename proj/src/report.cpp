#include "nary/report.hpp"

#include <sstream>

namespace nary {

std::string Report::text() const {
  std::ostringstream out;
  for (const auto& [key, value] : entries_) {
    out << key << ": ";
    if (const auto* s = std::get_if<std::string>(&value))
      out << *s;
    else if (const auto* n = std::get_if<long long>(&value))
      out << *n;
    else
      out << (std::get<bool>(value) ? "true" : "false");
    out << "\n";
  }
  return out.str();
}

nlohmann::ordered_json Report::json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [key, value] : entries_) {
    if (const auto* s = std::get_if<std::string>(&value))
      j[key] = *s;
    else if (const auto* n = std::get_if<long long>(&value))
      j[key] = *n;
    else
      j[key] = std::get<bool>(value);
  }
  return j;
}

}  // namespace nary
