#pragma once

#include <string_view>

namespace bpow {

/// Result of checking one property on one instance. `skipped` marks
/// vacuous ranges and refused searches, never a silent pass.
enum class Outcome { pass, fail, skipped };

constexpr std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::skipped: return "skipped";
  }
  return "?";
}

constexpr Outcome outcome_of(bool ok) { return ok ? Outcome::pass : Outcome::fail; }

}  // namespace bpow
