#pragma once

#include <string>
#include <vector>

namespace afa::report {

// One verification check. Notes are informational lines that never gate.
struct Check {
  enum class Status { pass, fail, note };
  std::string id;       // "V1", "W3", "D1", ...
  std::string name;     // kebab-case check name
  Status status = Status::pass;
  std::string witness;  // first failing instance, or note payload
};

struct Report {
  std::vector<Check> checks;

  bool all_passed() const {
    for (const Check& c : checks)
      if (c.status == Check::Status::fail) return false;
    return true;
  }

  void add(std::string id, std::string name, bool passed, std::string witness = "") {
    checks.push_back({std::move(id), std::move(name),
                      passed ? Check::Status::pass : Check::Status::fail,
                      std::move(witness)});
  }

  void note(std::string id, std::string name, std::string payload) {
    checks.push_back({std::move(id), std::move(name), Check::Status::note,
                      std::move(payload)});
  }

  void append(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }

  // One line per check: "V1 compositionality PASS" /
  // "V2 recoverability FAIL: s=c,a" / "D1 collapse NOTE: none".
  std::string to_text() const {
    std::string out;
    for (const Check& c : checks) {
      out += c.id + " " + c.name + " ";
      switch (c.status) {
        case Check::Status::pass: out += "PASS"; break;
        case Check::Status::fail: out += "FAIL"; break;
        case Check::Status::note: out += "NOTE"; break;
      }
      if (!c.witness.empty()) out += ": " + c.witness;
      out += "\n";
    }
    return out;
  }
};

}  // namespace afa::report
