#pragma once

#include <json.hpp>

#include <optional>
#include <string>

namespace s2det {

// Machine-readable result of one check. Object keys serialize in sorted order.
struct Certificate {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  bool pass = true;
  nlohmann::json numbers = nlohmann::json::object();
  nlohmann::json witnesses;  // null when there is nothing to show
  // Name of the statement that failed, empty on success.
  std::string violated;
  std::optional<double> wall_time;

  void fail(std::string statement);
  nlohmann::json to_json() const;
  std::string dump() const { return to_json().dump(); }
};

}  // namespace s2det
