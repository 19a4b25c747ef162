#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace hf {

// One verification outcome. witness is nonempty exactly when the check
// failed; note carries optional extra information (e.g. "vacuous" for empty
// index families, or computed values worth surfacing).
struct Check {
  std::string name;
  bool pass = false;
  std::string witness;
  std::string note;
};

struct Report {
  std::vector<Check> checks;

  bool all_pass() const;
  void add(std::string name, bool pass, std::string witness = "", std::string note = "");
  void add_pass(std::string name, std::string note = "") { add(std::move(name), true, "", std::move(note)); }
  void add_vacuous(std::string name) { add(std::move(name), true, "", "vacuous"); }
  // Appends another report with every check name prefixed by "prefix.".
  void merge(const std::string& prefix, const Report& other);
  const Check* find(const std::string& name) const;

  // One "CHECK <name>: PASS|FAIL ..." line per check.
  std::string to_text() const;
  nlohmann::ordered_json to_json() const;
};

}  // namespace hf
