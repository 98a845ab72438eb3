#pragma once

#include <string>
#include <vector>

namespace hyperfield {

/// One named property check with an optional witness for failures.
struct CheckItem {
  std::string name;
  bool passed = true;
  std::string witness;
};

struct CheckReport {
  std::vector<CheckItem> items;
  std::vector<std::string> notes;

  bool all_passed() const {
    for (const auto& i : items)
      if (!i.passed) return false;
    return true;
  }

  void add(std::string name, bool passed, std::string witness = "") {
    items.push_back({std::move(name), passed, std::move(witness)});
  }

  std::string to_string() const {
    std::string out;
    for (const auto& i : items) {
      out += i.name;
      out += i.passed ? ": PASS" : ": FAIL";
      if (!i.passed && !i.witness.empty()) {
        out += "  [";
        out += i.witness;
        out += ']';
      }
      out += '\n';
    }
    for (const auto& n : notes) {
      out += "note: ";
      out += n;
      out += '\n';
    }
    return out;
  }
};

}  // namespace hyperfield
