#pragma once

#include "tstar/analysis.hpp"
#include "tstar/arc.hpp"
#include "tstar/explore.hpp"
#include "tstar/switching.hpp"

#include <json.hpp>

namespace tstar {

// JSON views used by the command-line reports.  Key sets are stable;
// nlohmann::json orders keys, so identical inputs serialize identically.
nlohmann::json json_of(const ProjPoint& p);
nlohmann::json json_of(const AffPoint& p);
nlohmann::json json_of(const AffLine& l);
nlohmann::json json_of(const SrgParams& p);
nlohmann::json json_of(const SpectrumResult& s);
nlohmann::json json_of(const IntersectionProfile& p);
nlohmann::json json_of(const SwitchingConfig& c);
nlohmann::json json_of(const WqhReport& r);
nlohmann::json json_of(const GeometricityReport& r);
nlohmann::json json_of(const WitnessReport& r);
nlohmann::json json_of(const Fingerprint& f);

} // namespace tstar
