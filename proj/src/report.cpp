#include "hf/report.hpp"

namespace hf {

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

void Report::add(std::string name, bool pass, std::string witness, std::string note) {
  checks.push_back({std::move(name), pass, std::move(witness), std::move(note)});
}

void Report::merge(const std::string& prefix, const Report& other) {
  for (const auto& c : other.checks)
    checks.push_back({prefix + "." + c.name, c.pass, c.witness, c.note});
}

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

std::string Report::to_text() const {
  std::string out;
  for (const auto& c : checks) {
    out += "CHECK " + c.name + ": " + (c.pass ? "PASS" : "FAIL");
    if (!c.pass && !c.witness.empty()) out += " [" + c.witness + "]";
    if (!c.note.empty()) out += " (" + c.note + ")";
    out += "\n";
  }
  return out;
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    if (!c.pass) j["witness"] = c.witness;
    if (!c.note.empty()) j["note"] = c.note;
    arr.push_back(std::move(j));
  }
  nlohmann::ordered_json out;
  out["checks"] = std::move(arr);
  return out;
}

}  // namespace hf
