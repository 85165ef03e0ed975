#include "swd/json_io.hpp"

#include "swd/errors.hpp"

namespace swd {

using nlohmann::json;

json to_json(const mpz_class& value) {
  if (value.fits_slong_p())
    return value.get_si();
  return value.get_str();
}

json to_json(const Partition& lambda) { return lambda.parts(); }

Partition partition_from_json(const json& j) {
  if (!j.is_array())
    throw ParseError("partition must be a JSON array");
  std::vector<int> parts;
  for (const auto& p : j) {
    if (!p.is_number_integer())
      throw ParseError("partition parts must be integers");
    parts.push_back(p.get<int>());
  }
  try {
    return Partition(std::move(parts));
  } catch (const ConstraintViolation& e) {
    throw ParseError(e.what());
  }
}

namespace {

template <typename Terms>
json terms_to_json(const Terms& terms) {
  json out = json::array();
  for (const auto& [lambda, c] : terms)
    out.push_back({{"partition", to_json(lambda)}, {"coeff", to_json(c)}});
  return out;
}

} // namespace

json to_json(const SchurVector& v) {
  return {{"terms", terms_to_json(v.terms())},
          {"max_degree", v.max_degree()},
          {"max_length", v.max_length() ? json(*v.max_length()) : json(nullptr)}};
}

json to_json(const KVector& v) {
  return {{"basis", to_string(v.basis())},
          {"nu", v.nu().to_string()},
          {"rank", v.rank().to_string()},
          {"terms", terms_to_json(v.terms())}};
}

json to_json(const BlockClass& c) {
  json members = json::array();
  for (const auto& m : c.members)
    members.push_back(to_json(m));
  return {{"kind", c.kind == BlockClass::Kind::Trivial ? "trivial" : "chain"}, {"members", members}};
}

json to_json(const std::optional<OLabel>& label) {
  if (!label)
    return {{"kind", "zero"}};
  return {{"kind", to_string(label->kind)}, {"partition", to_json(label->partition)}};
}

json to_json(const CheckReport& report) {
  return {{"check_name", report.check_name},
          {"parameters", report.parameters},
          {"pass", report.pass},
          {"checked", report.checked},
          {"witnesses", report.witnesses}};
}

json to_json(const TowerVector& tower) {
  json levels = json::array();
  for (const auto& [n, v] : tower.levels)
    levels.push_back({{"rank", n}, {"terms", terms_to_json(v.terms())}, {"mass", to_json(v.mass())}});
  return {{"nu", tower.nu.to_string()},
          {"levels", levels},
          {"compatible", tower.compatible()},
          {"monotone", tower.monotone()},
          {"stabilization_onset", tower.stabilization_onset()}};
}

} // namespace swd
