#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace swd {

/// Outcome of an exhaustive verification sweep.
struct CheckReport {
  std::string check_name;
  nlohmann::json parameters = nlohmann::json::object();
  bool pass = true;
  std::size_t checked = 0;
  std::vector<std::string> witnesses;

  void fail(std::string witness) {
    pass = false;
    // Keep reports readable when a sweep goes badly wrong.
    if (witnesses.size() < 32)
      witnesses.push_back(std::move(witness));
  }
};

} // namespace swd
