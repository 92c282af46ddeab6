#pragma once

// The four group families and their case constants.

#include <array>
#include <string>
#include <string_view>

namespace artifact {

enum class CaseKind { PGL_Q, PGL_E, SO_even_E, SO_odd_E };

inline constexpr std::array<CaseKind, 4> kAllCases = {CaseKind::PGL_Q, CaseKind::PGL_E, CaseKind::SO_even_E,
                                                      CaseKind::SO_odd_E};
inline constexpr int kMaxCaseN = 12;

enum class Factor { M, N };

/// Case parameters: central shift r, predicted (2 pi i)-power m, exponent e.
struct CaseDescriptor {
  CaseKind kind;
  int n;
  int r;
  int m;
  int e;
};

CaseDescriptor describe(CaseKind kind, int n);  // throws for n outside [1, 12]

/// CLI names: pgl-q, pgl-e, so-even, so-odd.
std::string case_name(CaseKind kind);
CaseKind parse_case(std::string_view name);
bool over_imaginary_quadratic(CaseKind kind);

/// Group specifications understood by rootsys::parse_group.
std::string group_G(CaseKind kind, int n);
std::string group_H(CaseKind kind, int n);

}  // namespace artifact
