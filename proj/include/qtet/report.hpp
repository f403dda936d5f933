#pragma once

#include <string>
#include <vector>

namespace qtet {

// Structured verification report: empty means everything passed. Check names
// identify the failed axiom or table row so failures localize immediately.
struct Report {
  struct Entry {
    std::string check;
    std::string location;
    std::string detail;
  };

  std::vector<Entry> entries;

  bool ok() const { return entries.empty(); }

  void fail(std::string check, std::string location = "", std::string detail = "") {
    entries.push_back({std::move(check), std::move(location), std::move(detail)});
  }

  void merge(const Report& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  }

  std::string summary() const {
    if (ok()) return "ok";
    std::string s;
    for (const auto& e : entries) {
      s += e.check;
      if (!e.location.empty()) s += " @ " + e.location;
      if (!e.detail.empty()) s += " : " + e.detail;
      s += "\n";
    }
    return s;
  }
};

}  // namespace qtet
