#pragma once

#include <cstdint>
#include <string_view>

namespace linsyz {

enum class Tristate : std::uint8_t { no, yes, unknown };

/// Outcome of one verification check. `falsification` marks an observation
/// contradicting a proved statement, which always points at a bug here.
enum class Verdict : std::uint8_t { pass, fail, unknown, falsification };

constexpr std::string_view to_string(Tristate t) {
  switch (t) {
    case Tristate::no: return "no";
    case Tristate::yes: return "yes";
    case Tristate::unknown: return "unknown";
  }
  return "?";
}

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::unknown: return "unknown";
    case Verdict::falsification: return "FALSIFICATION";
  }
  return "?";
}

/// Worst-of merge: falsification > fail > unknown > pass.
constexpr Verdict merge(Verdict a, Verdict b) {
  auto rank = [](Verdict v) {
    switch (v) {
      case Verdict::pass: return 0;
      case Verdict::unknown: return 1;
      case Verdict::fail: return 2;
      case Verdict::falsification: return 3;
    }
    return 3;
  };
  return rank(a) >= rank(b) ? a : b;
}

}  // namespace linsyz
