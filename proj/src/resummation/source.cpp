#include "ddseries/resummation/source.hpp"

#include <algorithm>
#include <fstream>

#include "ddseries/error.hpp"

namespace ddseries::resummation {

namespace {

const std::vector<long> kPublishedAlpha = {1, 1, 2, 6, 27, 157};

CoefficientSource synthetic(int length, const std::string& origin, auto&& value_of) {
  if (length < 0) throw PreconditionError("source length must be non-negative");
  CoefficientSource src;
  src.origin = origin;
  for (int n = 1; n <= length; ++n) src.entries.push_back({n, value_of(n), Provenance::Synthetic});
  return src;
}

}  // namespace

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Paper:
      return "paper";
    case Provenance::ExternalFile:
      return "external-file";
    case Provenance::Synthetic:
      return "synthetic";
  }
  return "synthetic";
}

Provenance parse_provenance(const std::string& text) {
  if (text == "paper") return Provenance::Paper;
  if (text == "external-file") return Provenance::ExternalFile;
  if (text == "synthetic") return Provenance::Synthetic;
  throw PreconditionError("unknown coefficient tag '" + text + "'");
}

std::vector<Rational> CoefficientSource::series() const {
  std::vector<Rational> out(entries.size() + 1, Rational(0));
  for (const auto& e : entries) out.at(static_cast<std::size_t>(e.n)) = e.value;
  return out;
}

CoefficientSource saw_published_source() {
  CoefficientSource src;
  src.origin = "published SAW coefficients alpha_1..alpha_6";
  for (int n = 1; n <= 6; ++n) src.entries.push_back({n, Rational(kPublishedAlpha[n - 1]), Provenance::Paper});
  return src;
}

std::vector<Rational> saw_published_mu_series() {
  return {Rational(1), Rational(-1), Rational(-1), Rational(-3), Rational(-16), Rational(-102)};
}

CoefficientSource geometric_source(int length) {
  return synthetic(length, "geometric toy", [](int) -> Rational { return Rational(1); });
}

CoefficientSource alternating_factorial_source(int length) {
  return synthetic(length, "alternating factorial toy", [](int n) -> Rational {
    Rational v(exact::factorial(static_cast<unsigned long>(n - 1)));
    return n % 2 == 1 ? v : Rational(-v);
  });
}

CoefficientSource catalan_source(int length) {
  return synthetic(length, "Catalan toy", [](int n) -> Rational {
    const auto m = static_cast<unsigned long>(n - 1);
    return Rational(exact::binomial(2 * m, m)) / Rational(static_cast<long>(m + 1));
  });
}

nlohmann::json to_json(const CoefficientSource& src) {
  auto out = nlohmann::json::array();
  for (const auto& e : src.entries) {
    out.push_back({{"n", e.n}, {"value", exact::to_string(e.value)}, {"tag", to_string(e.tag)}});
  }
  return out;
}

CoefficientSource source_from_json(const nlohmann::json& j, const std::string& origin) {
  if (!j.is_array()) throw PreconditionError("coefficient file must hold a JSON array");
  CoefficientSource src;
  src.origin = origin;
  for (const auto& item : j) {
    if (!item.is_object() || !item.contains("n") || !item.contains("value") || !item.contains("tag")) {
      throw PreconditionError("coefficient entries need n, value and tag");
    }
    if (!item.at("n").is_number_integer() || !item.at("value").is_string() || !item.at("tag").is_string()) {
      throw PreconditionError("coefficient entry has a field of the wrong type");
    }
    src.entries.push_back({item.at("n").get<int>(), exact::parse_rational(item.at("value").get<std::string>()),
                           parse_provenance(item.at("tag").get<std::string>())});
  }
  std::sort(src.entries.begin(), src.entries.end(), [](const auto& a, const auto& b) { return a.n < b.n; });
  for (std::size_t i = 0; i < src.entries.size(); ++i) {
    if (src.entries[i].n != static_cast<int>(i) + 1) {
      throw PreconditionError("coefficient indices must be exactly 1 .. L without gaps or repeats");
    }
  }
  return src;
}

CoefficientSource load_source(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open coefficient file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError("coefficient file " + path + " is not valid JSON: " + e.what());
  }
  return source_from_json(j, path);
}

SourceReport validate_source(const CoefficientSource& src) {
  SourceReport report;
  bool any_paper = false;
  for (const auto& e : src.entries) {
    report.signs.push_back(sgn(e.value));
    if (e.tag != Provenance::Paper) continue;
    any_paper = true;
    if (e.n > 6) {
      report.passed = false;
      report.violations.push_back("alpha_" + std::to_string(e.n) + " is tagged paper but only n <= 6 are published");
    } else if (e.value != kPublishedAlpha[static_cast<std::size_t>(e.n - 1)]) {
      report.passed = false;
      report.violations.push_back("alpha_" + std::to_string(e.n) + " = " + exact::to_string(e.value) +
                                  " differs from the published " + std::to_string(kPublishedAlpha[e.n - 1]));
    }
  }
  const bool has_external = std::any_of(src.entries.begin(), src.entries.end(),
                                        [](const auto& e) { return e.tag == Provenance::ExternalFile; });
  for (int n : {12, 13}) {
    if (src.size() < n) continue;
    const auto& e = src.entries[static_cast<std::size_t>(n - 1)];
    if (e.tag == Provenance::ExternalFile && sgn(e.value) >= 0) {
      report.passed = false;
      report.violations.push_back("alpha_" + std::to_string(n) + " must be negative");
    }
  }
  if (!any_paper && !has_external) report.notes.push_back("synthetic source: no published constraints apply");
  return report;
}

nlohmann::json to_json(const SourceReport& report) {
  return {{"passed", report.passed}, {"violations", report.violations}, {"notes", report.notes}, {"signs", report.signs}};
}

}  // namespace ddseries::resummation
