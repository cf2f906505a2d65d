#pragma once

#include <json.hpp>

#include "extlab/extension.hpp"
#include "extlab/harmonic.hpp"
#include "extlab/measure.hpp"
#include "extlab/sft.hpp"

namespace extlab {

using Json = nlohmann::json;

Json to_json(const LatticePoint& p);
Json to_json(const Domain& d);
Domain domain_from_json(const Json& j);  // [[0],[1],[3]]
std::vector<Domain> schedule_from_json(const Json& j);  // [[[0],[1]], [[0],[1],[2]]]
PeriodVector periods_from_json(const Json& j);

std::string symbols_key(const Symbols& s);  // "0,1,1"
Symbols symbols_from_key(const std::string& key, std::size_t length, int alphabet);

// {"dim", "alphabet", "domain", "masses": {"0,1": "p/q", ...}}; zero masses omitted.
Json to_json(const SignedMeasure& mu);
// Throw std::invalid_argument on malformed documents; measure_from_json also
// rejects tables that are not probability measures.
SignedMeasure signed_measure_from_json(const Json& j);
Measure measure_from_json(const Json& j);

Json to_json(const WordSet& w);
WordSet word_set_from_json(const Json& j);

Json to_json(const TorusMeasure& nu);
Json to_json(const RefutationReport& r);
Json to_json(const CharacterTable& t);  // complex values tagged approximate

}  // namespace extlab
