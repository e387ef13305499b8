#include "dkgcs/io.hpp"

#include <cmath>
#include <cstdio>

namespace dkg {

namespace {

std::string printf_number(double v, const char* fmt) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, fmt, v == 0.0 ? 0.0 : v);
  return buffer;
}

std::string meta_line(const ProfileMeta& m, double integral) {
  std::string line = "# case=" + std::string(to_string(m.curvature)) + ",alpha=" + m.alpha.str() +
                     ",n=" + std::to_string(m.n);
  if (m.branch) line += ",branch=" + std::string(to_string(*m.branch));
  line += ",xi=" + format_complex(m.xi) + ",tau=" + printf_number(m.tau, "%.15g") +
          ",phase_convention=" + std::string(to_string(m.phase)) +
          ",normalization_integral=" + printf_number(integral, "%.17g") +
          ",x_mapping=" + (m.by_analogy ? "by-analogy" : "direct");
  if (m.warning) line += ",warning=" + *m.warning;
  return line;
}

void write_meta_json(std::ostream& os, const ProfileMeta& m, double integral) {
  os << "{\"case\":" << json_string(to_string(m.curvature)) << ",\"alpha\":" << json_string(m.alpha.str())
     << ",\"n\":" << m.n << ",\"branch\":" << (m.branch ? json_string(to_string(*m.branch)) : "null")
     << ",\"xi\":{\"re\":" << json_number(m.xi.real()) << ",\"im\":" << json_number(m.xi.imag()) << "}"
     << ",\"tau\":" << json_number(m.tau) << ",\"evolved\":" << (m.evolved ? "true" : "false")
     << ",\"phase_convention\":" << json_string(to_string(m.phase))
     << ",\"normalization_integral\":" << json_number(integral)
     << ",\"x_mapping\":" << json_string(m.by_analogy ? "by-analogy" : "direct")
     << ",\"warning\":" << (m.warning ? json_string(*m.warning) : "null") << "}";
}

}  // namespace

OutputFormat parse_output_format(std::string_view text) {
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "json") return OutputFormat::kJson;
  throw ParseError("output format must be 'csv' or 'json'; got '" + std::string(text) + "'");
}

std::string_view to_string(OutputFormat f) { return f == OutputFormat::kCsv ? "csv" : "json"; }

std::string csv_number(double v) { return printf_number(v, "%.9g"); }

std::string json_number(double v) {
  if (!std::isfinite(v)) return "null";
  return printf_number(v, "%.17g");
}

std::string json_string(std::string_view s) {
  std::string out = "\"";
  for (char ch : s) {
    switch (ch) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buffer[8];
          std::snprintf(buffer, sizeof buffer, "\\u%04x", ch);
          out += buffer;
        } else {
          out += ch;
        }
    }
  }
  return out + "\"";
}

std::string format_complex(Complex z) {
  const double im = z.imag() == 0.0 ? 0.0 : z.imag();
  std::string out = printf_number(z.real(), "%.15g");
  out += (std::signbit(im) ? "-" : "+") + printf_number(std::abs(im), "%.15g") + "i";
  return out;
}

void write_spectrum(std::ostream& os, const SpectrumTable& table, OutputFormat format) {
  const std::string name(to_string(table.curvature));
  if (format == OutputFormat::kCsv) {
    os << "case,alpha,n,re_e_plus,im_e_plus,re_e_minus,im_e_minus\n";
    for (const SpectrumRow& row : table.rows) {
      const EnergyPair& e = row.energies;
      os << name << ',' << row.alpha.str() << ',' << e.n << ',' << csv_number(e.e_plus.real()) << ','
         << csv_number(e.e_plus.imag()) << ',';
      if (e.e_minus) os << csv_number(e.e_minus->real()) << ',' << csv_number(e.e_minus->imag());
      else os << ',';
      os << '\n';
    }
    return;
  }
  os << "[";
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const SpectrumRow& row = table.rows[i];
    const EnergyPair& e = row.energies;
    os << (i ? ",\n " : "\n ") << "{\"case\":" << json_string(name) << ",\"alpha\":" << json_string(row.alpha.str())
       << ",\"n\":" << e.n << ",\"re_e_plus\":" << json_number(e.e_plus.real())
       << ",\"im_e_plus\":" << json_number(e.e_plus.imag()) << ",\"re_e_minus\":"
       << (e.e_minus ? json_number(e.e_minus->real()) : "null") << ",\"im_e_minus\":"
       << (e.e_minus ? json_number(e.e_minus->imag()) : "null") << "}";
  }
  os << "\n]\n";
}

void write_profiles(std::ostream& os, const std::vector<ProfileBlock>& blocks, OutputFormat format) {
  if (format == OutputFormat::kCsv) {
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      const ProfileBlock& block = blocks[b];
      if (b) os << '\n';
      os << meta_line(block.meta, block.profile.integral) << '\n' << "x,re,im,density\n";
      const DensityProfile& p = block.profile;
      for (std::size_t i = 0; i < p.x.size(); ++i) {
        os << csv_number(p.x[i]) << ',' << csv_number(p.amplitude[i].real()) << ','
           << csv_number(p.amplitude[i].imag()) << ',' << csv_number(p.density[i]) << '\n';
      }
    }
    return;
  }
  os << "[";
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const ProfileBlock& block = blocks[b];
    const DensityProfile& p = block.profile;
    os << (b ? ",\n " : "\n ") << "{\"metadata\":";
    write_meta_json(os, block.meta, p.integral);
    os << ",\"data\":[";
    for (std::size_t i = 0; i < p.x.size(); ++i) {
      os << (i ? "," : "") << "{\"x\":" << json_number(p.x[i]) << ",\"re\":" << json_number(p.amplitude[i].real())
         << ",\"im\":" << json_number(p.amplitude[i].imag()) << ",\"density\":" << json_number(p.density[i]) << "}";
    }
    os << "]}";
  }
  os << "\n]\n";
}

void write_table_comparison(std::ostream& os, const TableComparison& cmp, OutputFormat format) {
  const std::string name(to_string(cmp.table));
  if (format == OutputFormat::kCsv) {
    os << "# table=" << name << ",case=" << to_string(curvature_of(cmp.table))
       << ",radical=" << to_string(cmp.form) << ",tolerance=" << csv_number(cmp.tolerance)
       << ",max_deviation=" << csv_number(cmp.max_deviation)
       << ",max_unordered_deviation=" << csv_number(cmp.max_unordered_deviation)
       << ",failures=" << cmp.failures() << '\n';
    os << "alpha,n,branch,ref_re,ref_im,re,im,deviation,within\n";
    for (const EntryComparison& e : cmp.entries) {
      os << DunklAlpha::from_numerator(e.reference.alpha_numerator).str() << ',' << e.reference.n << ','
         << to_string(e.reference.branch) << ',' << csv_number(e.reference.re) << ',' << csv_number(e.reference.im)
         << ',' << csv_number(e.computed.real()) << ',' << csv_number(e.computed.imag()) << ','
         << csv_number(e.deviation) << ',' << (e.within ? "true" : "false") << '\n';
    }
    return;
  }
  os << "{\"table\":" << json_string(name) << ",\"case\":" << json_string(to_string(curvature_of(cmp.table)))
     << ",\"radical\":" << json_string(to_string(cmp.form)) << ",\"tolerance\":" << json_number(cmp.tolerance)
     << ",\"max_deviation\":" << json_number(cmp.max_deviation)
     << ",\"max_unordered_deviation\":" << json_number(cmp.max_unordered_deviation)
     << ",\"failures\":" << cmp.failures() << ",\"pass\":" << (cmp.all_within() ? "true" : "false")
     << ",\"entries\":[";
  for (std::size_t i = 0; i < cmp.entries.size(); ++i) {
    const EntryComparison& e = cmp.entries[i];
    os << (i ? ",\n  " : "\n  ") << "{\"alpha\":"
       << json_string(DunklAlpha::from_numerator(e.reference.alpha_numerator).str()) << ",\"n\":" << e.reference.n
       << ",\"branch\":" << json_string(to_string(e.reference.branch)) << ",\"ref_re\":" << json_number(e.reference.re)
       << ",\"ref_im\":" << json_number(e.reference.im) << ",\"re\":" << json_number(e.computed.real())
       << ",\"im\":" << json_number(e.computed.imag()) << ",\"deviation\":" << json_number(e.deviation)
       << ",\"within\":" << (e.within ? "true" : "false") << "}";
  }
  os << "\n]}\n";
}

}  // namespace dkg
