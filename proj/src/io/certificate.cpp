#include "s2det/certificate.hpp"

namespace s2det {

void Certificate::fail(std::string statement) {
  pass = false;
  if (violated.empty()) violated = std::move(statement);
}

nlohmann::json Certificate::to_json() const {
  nlohmann::json j = {
      {"command", command},
      {"parameters", parameters},
      {"outcome", pass ? "pass" : "fail"},
      {"numbers", numbers},
      {"version", S2DET_VERSION},
  };
  if (!witnesses.is_null()) j["witnesses"] = witnesses;
  if (!violated.empty()) j["violated"] = violated;
  if (wall_time) j["wall_time"] = *wall_time;
  return j;
}

}  // namespace s2det
