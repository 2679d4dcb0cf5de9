#pragma once

#include <json.hpp>

#include "degent/entropy.hpp"
#include "degent/extremal.hpp"
#include "degent/recognition.hpp"
#include "degent/verify.hpp"

namespace degent {

// All emitters use ordered maps and 9-decimal rounding so repeated runs
// produce byte-identical documents.
using Json = nlohmann::ordered_json;

double round_9dp(double x);

Json entropy_to_json(const EntropyReport& r);
Json recognition_to_json(const RecognitionResult& r, const std::string& kind);
Json extremal_to_json(const ExtremalResult& r, int n, long m, bool bipartite);
Json report_to_json(const VerificationReport& r);
Json table1_to_json(const std::vector<Table1Cell>& cells);
Json explore_to_json(const ExploreResult& r);

}  // namespace degent
