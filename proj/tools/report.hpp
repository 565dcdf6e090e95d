#pragma once

#include <string>

#include "json.hpp"
#include "plesken/checker.hpp"
#include "plesken/density.hpp"

namespace plesken {

using Json = nlohmann::ordered_json;

Json factor_json(const FactorDescriptor& f);
Json analysis_json(const Analysis& a, const std::string& mode);

Json to_json(const ConjectureReport& r);
Json to_json(const OrdinaryReport& r);
Json to_json(const DensityResult& r);

std::string to_text(const ConjectureReport& r);
std::string to_text(const OrdinaryReport& r);
std::string to_text(const DensityResult& r);

}  // namespace plesken
