#include "resconv/decision.hpp"

#include <algorithm>

namespace resconv {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Proven:
      return "Proven";
    case Verdict::Refuted:
      return "Refuted";
    case Verdict::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

Decision both(const Decision &a, const Decision &b) {
  if (a.is_refuted()) return a;
  if (b.is_refuted()) return b;
  if (a.is_unknown() || b.is_unknown()) {
    return Decision::unknown(std::max(a.bound(), b.bound()), a.is_unknown() ? a.reason() : b.reason());
  }
  Certificate c = *a.witness();
  c.steps.insert(c.steps.end(), b.witness()->steps.begin(), b.witness()->steps.end());
  return Decision::proven(std::move(c), std::max(a.bound(), b.bound()));
}

}  // namespace resconv
