#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "ddseries/exact/rational.hpp"

namespace ddseries::resummation {

using exact::Rational;

enum class Provenance { Paper, ExternalFile, Synthetic };

std::string to_string(Provenance p);
Provenance parse_provenance(const std::string& text);

struct CoefficientEntry {
  int n = 0;
  Rational value;
  Provenance tag = Provenance::Synthetic;
};

// alpha_1, alpha_2, ... with a provenance tag per entry.
struct CoefficientSource {
  std::vector<CoefficientEntry> entries;  // sorted by n, n = 1 .. size
  std::string origin;

  int size() const { return static_cast<int>(entries.size()); }
  // Dense coefficient list with index 0 holding alpha_0 = 0.
  std::vector<Rational> series() const;
};

// 1, 1, 2, 6, 27, 157: the published first six SAW coefficients of beta_c in s = 1/(2d).
CoefficientSource saw_published_source();
// Coefficients of 2d mu expanded in s, 1 - s - s^2 - 3 s^3 - 16 s^4 - 102 s^5 (index 0 .. 5).
std::vector<Rational> saw_published_mu_series();

CoefficientSource geometric_source(int length);              // alpha_n = 1
CoefficientSource alternating_factorial_source(int length);  // alpha_n = (-1)^{n+1} (n-1)!
CoefficientSource catalan_source(int length);                // alpha_n = C_{n-1}

// [{"n": int, "value": "num/den", "tag": "paper|external-file|synthetic"}]
nlohmann::json to_json(const CoefficientSource& src);
// Entries must be exactly n = 1 .. L in some order; tag "paper" entries are
// not trusted here, validate_source checks them.
CoefficientSource source_from_json(const nlohmann::json& j, const std::string& origin);
CoefficientSource load_source(const std::string& path);

struct SourceReport {
  bool passed = true;
  std::vector<std::string> violations;
  std::vector<std::string> notes;
  std::vector<int> signs;  // sign of alpha_n, n = 1 .. L
};

// Paper-tagged entries n <= 6 must equal the published values; if entries
// 12 and 13 are present they must both be negative.
SourceReport validate_source(const CoefficientSource& src);
nlohmann::json to_json(const SourceReport& report);

}  // namespace ddseries::resummation
