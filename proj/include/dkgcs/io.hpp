#pragma once

// CSV and JSON emission. Numbers are printed with %.17g in JSON and %.9g
// in CSV so output is byte-stable for a fixed configuration.

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "dkgcs/coherent.hpp"
#include "dkgcs/reference_tables.hpp"
#include "dkgcs/spectrum.hpp"

namespace dkg {

enum class OutputFormat { kCsv, kJson };

OutputFormat parse_output_format(std::string_view text);
std::string_view to_string(OutputFormat f);

std::string csv_number(double v);
/// "null" for non-finite values.
std::string json_number(double v);
std::string json_string(std::string_view s);
std::string format_complex(Complex z);  // "a+bi" with %.15g parts

void write_spectrum(std::ostream& os, const SpectrumTable& table, OutputFormat format);

struct ProfileMeta {
  CurvatureCase curvature;
  DunklAlpha alpha;
  int n;
  std::optional<Branch> branch;
  Complex xi;
  double tau;
  bool evolved;
  PhaseConvention phase;
  bool by_analogy;  // x-domain obtained through r = (scale) x^2 for rational/sinc
  std::optional<std::string> warning;
};

struct ProfileBlock {
  ProfileMeta meta;
  DensityProfile profile;
};

void write_profiles(std::ostream& os, const std::vector<ProfileBlock>& blocks, OutputFormat format);

void write_table_comparison(std::ostream& os, const TableComparison& cmp, OutputFormat format);

}  // namespace dkg
