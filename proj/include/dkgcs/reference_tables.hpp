#pragma once

// Published E+/E- reference values (R = 1, m = 1, three decimals) and the
// entrywise comparison used by `dkgcs table --reproduce`.

#include <span>
#include <string_view>
#include <vector>

#include "dkgcs/spectrum.hpp"

namespace dkg {

enum class ReferenceTable {
  kTable1,  // rational profile
  kTable2,  // sinc profile
};

ReferenceTable parse_reference_table(std::string_view text);
std::string_view to_string(ReferenceTable t);
CurvatureCase curvature_of(ReferenceTable t);

struct ReferenceEntry {
  int alpha_numerator;
  int n;
  Branch branch;
  double re;
  double im;
};

/// 36 entries: alpha in {1/2, 3/2, 7/2}, n = 0..5, both branches.
std::span<const ReferenceEntry> reference_entries(ReferenceTable t);

struct EntryComparison {
  ReferenceEntry reference;
  Complex computed;
  double deviation;  // max(|d re|, |d im|)
  bool within;
};

struct TableComparison {
  ReferenceTable table;
  double tolerance;
  RadicalForm form;
  std::vector<EntryComparison> entries;
  double max_deviation = 0.0;
  /// Same comparison with each (alpha, n) pair matched as an unordered set,
  /// i.e. ignoring which root carries the + label.
  double max_unordered_deviation = 0.0;

  bool all_within() const;
  std::size_t failures() const;
};

TableComparison compare_with_reference(ReferenceTable t, double tolerance,
                                       RadicalForm form = RadicalForm::kPrincipal);

}  // namespace dkg
