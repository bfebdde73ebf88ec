#pragma once

#include <string>

namespace koszul {

enum class Verdict { pass, fail, abstain, not_applicable };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::abstain: return "abstain";
    case Verdict::not_applicable: return "not_applicable";
  }
  return "abstain";
}

inline Verdict verdict_of(bool ok) { return ok ? Verdict::pass : Verdict::fail; }

/// One line of a condition-by-condition report.
struct ChecklistItem {
  std::string name;
  Verdict verdict = Verdict::abstain;
  std::string detail;
};

}  // namespace koszul
