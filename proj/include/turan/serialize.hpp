#pragma once

#include <string>

#include "json.hpp"
#include "turan/construct.hpp"
#include "turan/entropy.hpp"
#include "turan/forest.hpp"
#include "turan/hypergraph.hpp"
#include "turan/optimize.hpp"
#include "turan/verify.hpp"

namespace turan {

nlohmann::json to_json(const Hypergraph& g);
nlohmann::json to_json(const PartialHypergraph& f);
nlohmann::json to_json(const OptResult& r);
nlohmann::json to_json(const EntropicResult& r);
nlohmann::json to_json(const RatioSequence& r);
nlohmann::json to_json(const CheckReport& r);
nlohmann::json to_json(const CriterionResult& r);
nlohmann::json to_json(const DerivedConstraint& c);
nlohmann::json to_json(const CertifyResult& c);
nlohmann::json to_json(const DesignSearchResult& d);
nlohmann::json to_json(const SampledHom& s);

// Deterministic dump: objects with sorted keys (nlohmann default) and every
// floating number printed with 17 significant digits.
std::string dump17(const nlohmann::json& j, int indent = 2);

}  // namespace turan
