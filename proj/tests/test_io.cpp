#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "dkgcs/io.hpp"
#include "dkgcs/verify.hpp"

using dkg::Complex;
using dkg::DunklAlpha;
using dkg::OutputFormat;

TEST_CASE("number formats") {
  CHECK(dkg::csv_number(0.1) == "0.1");
  CHECK(dkg::csv_number(0.123456789012) == "0.123456789");
  CHECK(dkg::csv_number(-0.0) == "0");
  CHECK(dkg::json_number(0.1) == "0.10000000000000001");
  CHECK(dkg::json_number(NAN) == "null");
  CHECK(dkg::json_string("a\"b\\c\n") == "\"a\\\"b\\\\c\\n\"");
  CHECK(dkg::format_complex({0.5, -0.25}) == "0.5-0.25i");
  CHECK(dkg::format_complex({1.0, -0.0}) == "1+0i");
  CHECK(dkg::parse_output_format("json") == OutputFormat::kJson);
  CHECK_THROWS_AS(dkg::parse_output_format("xml"), dkg::ParseError);
}

TEST_CASE("spectrum CSV and JSON") {
  const std::vector<DunklAlpha> alphas{DunklAlpha::from_numerator(1)};
  const auto g = dkg::spectrum_table(dkg::CurvatureCase::kGaussian, alphas, 1, 1.0, 1.0);
  std::ostringstream csv;
  dkg::write_spectrum(csv, g, OutputFormat::kCsv);
  std::istringstream lines(csv.str());
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(header == "case,alpha,n,re_e_plus,im_e_plus,re_e_minus,im_e_minus");
  CHECK(row.rfind("gaussian,1/2,0,", 0) == 0);
  CHECK(row.substr(row.size() - 2) == ",,");

  std::ostringstream js;
  const auto r = dkg::spectrum_table(dkg::CurvatureCase::kRational, alphas, 5, 1.0, 1.0);
  dkg::write_spectrum(js, r, OutputFormat::kJson);
  const auto doc = nlohmann::json::parse(js.str());
  REQUIRE(doc.size() == 6);
  CHECK(doc[0]["alpha"] == "1/2");
  CHECK(doc[0]["re_e_plus"].get<double>() == r.rows[0].energies.e_plus.real());
  CHECK(doc[5]["im_e_minus"].get<double>() == r.rows[5].energies.e_minus->imag());

  std::ostringstream gj;
  dkg::write_spectrum(gj, g, OutputFormat::kJson);
  CHECK(nlohmann::json::parse(gj.str())[0]["re_e_minus"].is_null());
}

TEST_CASE("profile blocks carry metadata") {
  const DunklAlpha a = DunklAlpha::from_numerator(1);
  const auto lam = dkg::coherent_scale(dkg::CurvatureCase::kSinc, 1, a, 1.0, 1.0, dkg::Branch::kPlus);
  const auto p = dkg::CoherentParams::make({0.5, 0.2}, a, lam, 1, 0.5);
  const auto grid = dkg::linear_grid(0.1, 1.0, 10);
  dkg::ProfileMeta meta{dkg::CurvatureCase::kSinc, a, 1, dkg::Branch::kPlus, p.xi, 0.5, true,
                        dkg::PhaseConvention::kCorrected, true, std::nullopt};
  const std::vector<dkg::ProfileBlock> blocks{{meta, dkg::density_profile(grid, p, true)},
                                              {meta, dkg::density_profile(grid, p, false)}};
  std::ostringstream csv;
  dkg::write_profiles(csv, blocks, OutputFormat::kCsv);
  const std::string text = csv.str();
  CHECK(text.rfind("# case=sinc,alpha=1/2,n=1,branch=plus,xi=0.5+0.2i,tau=0.5,", 0) == 0);
  CHECK(text.find("x_mapping=by-analogy") != std::string::npos);
  CHECK(text.find("\nx,re,im,density\n") != std::string::npos);

  std::ostringstream js;
  dkg::write_profiles(js, blocks, OutputFormat::kJson);
  const auto doc = nlohmann::json::parse(js.str());
  REQUIRE(doc.size() == 2);
  CHECK(doc[0]["metadata"]["phase_convention"] == "corrected");
  CHECK(doc[0]["metadata"]["warning"].is_null());
  CHECK(doc[0]["data"].size() == 10);
  CHECK(doc[0]["data"][3]["density"].get<double>() == blocks[0].profile.density[3]);
}

TEST_CASE("table comparison and verify report serialize as JSON") {
  std::ostringstream js;
  dkg::write_table_comparison(js, dkg::compare_with_reference(dkg::ReferenceTable::kTable2, 1e-2), OutputFormat::kJson);
  const auto doc = nlohmann::json::parse(js.str());
  CHECK(doc["pass"] == true);
  CHECK(doc["entries"].size() == 36);

  dkg::VerifyOptions o;
  o.suites = {"casimir"};
  std::ostringstream rep;
  dkg::write_verify_report(rep, dkg::run_verify(o));
  const auto r = nlohmann::json::parse(rep.str());
  CHECK(r["ok"] == true);
  REQUIRE(r["checks"].size() == 1);
  CHECK(r["checks"][0]["status"] == "pass");
  CHECK(r["checks"][0]["value"].get<double>() < 1e-13);
}
