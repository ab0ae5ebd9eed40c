#pragma once

// JSON for fans, certificates and reports.

#include "rooftop/drum.hpp"
#include "rooftop/flip.hpp"
#include "rooftop/quadric.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace rooftop::cli {

using Json = nlohmann::ordered_json;

/// Malformed input; `location` is a JSON pointer or a byte offset.
class FormatError : public std::runtime_error {
public:
  FormatError(std::string location, const std::string& message)
      : std::runtime_error(location + ": " + message), location_(std::move(location)) {}
  const std::string& location() const { return location_; }

private:
  std::string location_;
};

Json to_json(const Integer& x);
Json to_json(const Rational& x);
Json to_json(const LatticeVector& v);
Json to_json(const RationalVector& v);
Json to_json(const IntMatrix& m);

/// {"lattice_rank", "rays", "maximal_cones"}.
Json fan_to_json(const Fan& fan);
Fan fan_from_json(const Json& j);
/// Parses text and then the fan schema; both failures raise FormatError.
Fan parse_fan(const std::string& text);

Json flip_report_to_json(const FlipReport& r);
Json quotient_summary_to_json(const QuotientData& q);
Json segre_to_json(const SegreCertificate& c);
Json mukai_to_json(const MukaiCertificate& c);

/// First failing reason of a report, empty when it passes.
std::string failure_reason(const FlipReport& r);
std::string failure_reason(const SegreCertificate& c);
std::string failure_reason(const MukaiCertificate& c);

}  // namespace rooftop::cli
