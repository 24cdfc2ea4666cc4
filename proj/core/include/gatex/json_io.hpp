#pragma once

#include <string>

#include "json.hpp"

#include "gatex/forbidden.hpp"
#include "gatex/galled.hpp"
#include "gatex/modular.hpp"
#include "gatex/recognize.hpp"
#include "gatex/solve.hpp"
#include "gatex/twinwidth.hpp"
#include "gatex/twinwidth_verify.hpp"

namespace gatex {

nlohmann::json mdt_json(const ModularDecomposition& mdt);
std::string mdt_dot(const ModularDecomposition& mdt);

nlohmann::json network_json(const LabeledNetwork& nt);
std::string network_dot(const LabeledNetwork& nt);

nlohmann::json verdict_json(const GatexVerdict& v);
nlohmann::json catalog_json(const ForbiddenCatalog& c);

nlohmann::json sequence_json(const ContractionSequence& s);
ContractionSequence sequence_from_json(const nlohmann::json& j);
nlohmann::json replay_json(const ReplayReport& r, int d);

}  // namespace gatex
