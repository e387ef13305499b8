#include "dkgcs/model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

namespace dkg {

namespace {

constexpr double kDegenerateGap = 1e-14;

std::string strip_spaces(std::string_view text) {
  std::string out;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') out.push_back(ch);
  }
  return out;
}

double parse_real(std::string_view text, std::string_view whole) {
  if (text.empty() || text == "+") return 1.0;
  if (text == "-") return -1.0;
  std::string buffer(text);
  if (buffer.front() == '+') buffer.erase(0, 1);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(buffer, &used);
  } catch (const std::exception&) {
    throw ParseError("invalid complex literal: '" + std::string(whole) + "'");
  }
  if (used != buffer.size()) throw ParseError("invalid complex literal: '" + std::string(whole) + "'");
  return value;
}

}  // namespace

std::string_view to_string(CurvatureCase c) {
  switch (c) {
    case CurvatureCase::kGaussian:
      return "gaussian";
    case CurvatureCase::kRational:
      return "rational";
    case CurvatureCase::kSinc:
      return "sinc";
  }
  return "unknown";
}

CurvatureCase parse_curvature_case(std::string_view text) {
  if (text == "gaussian") return CurvatureCase::kGaussian;
  if (text == "rational") return CurvatureCase::kRational;
  if (text == "sinc") return CurvatureCase::kSinc;
  throw ParseError("unknown curvature case '" + std::string(text) + "' (gaussian, rational, sinc)");
}

DunklAlpha DunklAlpha::from_numerator(int numerator) {
  if (numerator <= 0 || numerator % 2 == 0) {
    throw DomainError("alpha must be a positive half-odd integer p/2 with p odd; got numerator " +
                      std::to_string(numerator));
  }
  return DunklAlpha(numerator);
}

DunklAlpha DunklAlpha::parse(std::string_view text) {
  const std::string s = strip_spaces(text);
  const auto slash = s.find('/');
  if (slash == std::string::npos || s.substr(slash + 1) != "2") {
    throw ParseError("alpha must be written as p/2 with p odd, e.g. 3/2; got '" + s + "'");
  }
  int numerator = 0;
  const char* first = s.data();
  const char* last = s.data() + slash;
  const auto [ptr, ec] = std::from_chars(first, last, numerator);
  if (ec != std::errc() || ptr != last || slash == 0) {
    throw ParseError("alpha numerator is not an integer: '" + s + "'");
  }
  if (numerator <= 0 || numerator % 2 == 0) {
    throw ParseError("alpha must be a positive half-odd integer (p odd); got '" + s + "'");
  }
  return DunklAlpha(numerator);
}

std::string DunklAlpha::str() const { return std::to_string(numerator_) + "/2"; }

PhysParams PhysParams::make(DunklAlpha alpha, double R, double m, Parity parity) {
  if (parity != Parity::kEven) {
    throw UnsupportedParity("only the even-parity sector (delta = 1) is implemented");
  }
  if (!(R > 0.0) || !std::isfinite(R)) throw DomainError("curvature constant R must be positive");
  if (!(m > 0.0) || !std::isfinite(m)) throw DomainError("mass m must be positive");
  return PhysParams{alpha, R, m, parity};
}

Complex casimir_eigenvalue(DunklAlpha alpha) { return Complex(-dunkl_constant(alpha), 0.0); }

AlgebraData algebra_data(DunklAlpha alpha) {
  const Complex k = bargmann_index(alpha);
  return AlgebraData{k, k - 0.5, casimir_eigenvalue(alpha), dunkl_constant(alpha)};
}

double profile_a(CurvatureCase curvature, double x, double R) {
  const double ax = std::abs(x);
  switch (curvature) {
    case CurvatureCase::kGaussian:
      return std::exp(-R * ax * ax);
    case CurvatureCase::kRational:
      return (1.0 - R * ax * ax) / (1.0 + R * ax * ax);
    case CurvatureCase::kSinc: {
      const double t = ax * std::sqrt(R);
      if (t < 1e-4) {
        const double t2 = t * t;
        return 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
      }
      return std::sin(t) / t;
    }
  }
  return 1.0;
}

Complex scale_factor(CurvatureCase curvature, Complex e_squared, double R, double m) {
  const Complex gap = e_squared - m * m;
  if (std::abs(gap) < kDegenerateGap) {
    throw DegenerateError("scale factor vanishes: E^2 equals m^2");
  }
  switch (curvature) {
    case CurvatureCase::kGaussian:
      return principal_sqrt(2.0 * R * gap);
    case CurvatureCase::kRational:
      return principal_sqrt(4.0 * R * gap);
    case CurvatureCase::kSinc:
      return principal_sqrt(R * gap / 3.0);
  }
  return {};
}

Complex parse_complex(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) throw ParseError("empty complex literal");
  if (s.back() != 'i' && s.back() != 'j') return {parse_real(s, s), 0.0};

  const std::string body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not part of an exponent.
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, parse_real(body, s)};
  return {parse_real(body.substr(0, split), s), parse_real(body.substr(split), s)};
}

}  // namespace dkg
