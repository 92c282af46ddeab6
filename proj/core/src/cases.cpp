#include "artifact/cases.hpp"

#include <stdexcept>

namespace artifact {

CaseDescriptor describe(CaseKind kind, int n) {
  if (n < 1 || n > kMaxCaseN)
    throw std::out_of_range("case parameter n = " + std::to_string(n) + " outside [1, " +
                            std::to_string(kMaxCaseN) + "]");
  switch (kind) {
    case CaseKind::PGL_Q:
      return {kind, n, n, n * (n + 1), 2};
    case CaseKind::PGL_E:
      return {kind, n, n, n * (n + 1), 2};
    case CaseKind::SO_even_E:
      return {kind, n, 2 * n - 1, 2 * n * n, 1};
    case CaseKind::SO_odd_E:
      return {kind, n, 2 * n, 2 * n * (n + 1), 1};
  }
  throw std::invalid_argument("unknown case");
}

std::string case_name(CaseKind kind) {
  switch (kind) {
    case CaseKind::PGL_Q: return "pgl-q";
    case CaseKind::PGL_E: return "pgl-e";
    case CaseKind::SO_even_E: return "so-even";
    case CaseKind::SO_odd_E: return "so-odd";
  }
  return "?";
}

CaseKind parse_case(std::string_view name) {
  for (CaseKind k : kAllCases)
    if (case_name(k) == name) return k;
  throw std::invalid_argument("unknown case '" + std::string(name) + "' (expected pgl-q, pgl-e, so-even or so-odd)");
}

bool over_imaginary_quadratic(CaseKind kind) { return kind != CaseKind::PGL_Q; }

std::string group_G(CaseKind kind, int n) {
  auto s = [](int k) { return std::to_string(k); };
  switch (kind) {
    case CaseKind::PGL_Q:
      return "PGL(" + s(n) + ")/R x PGL(" + s(n + 1) + ")/R x PGL(" + s(n) + ")/R x PGL(" + s(n + 1) + ")/R";
    case CaseKind::PGL_E:
      return "PGL(" + s(n) + ")/C x PGL(" + s(n + 1) + ")/C";
    case CaseKind::SO_even_E:
      return "SO(" + s(2 * n) + ")/C x SO(" + s(2 * n + 1) + ")/C";
    case CaseKind::SO_odd_E:
      return "SO(" + s(2 * n + 1) + ")/C x SO(" + s(2 * n + 2) + ")/C";
  }
  return {};
}

std::string group_H(CaseKind kind, int n) {
  auto s = [](int k) { return std::to_string(k); };
  switch (kind) {
    case CaseKind::PGL_Q: return "GL(" + s(n) + ")/R x GL(" + s(n) + ")/R";
    case CaseKind::PGL_E: return "GL(" + s(n) + ")/C";
    case CaseKind::SO_even_E: return "SO(" + s(2 * n) + ")/C";
    case CaseKind::SO_odd_E: return "SO(" + s(2 * n + 1) + ")/C";
  }
  return {};
}

}  // namespace artifact
