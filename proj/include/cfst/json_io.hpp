#pragma once

// JSON/CSV encodings of the report types. Exact numbers travel as decimal
// strings ("p" or "p/q"); the few genuinely approximate quantities (growth
// estimates, inequality thresholds) are doubles tagged with "approx": true.

#include "cfst/cf.hpp"
#include "cfst/criteria.hpp"
#include "cfst/repetition.hpp"
#include "cfst/subshift.hpp"
#include "cfst/words.hpp"

#include <json.hpp>

#include <string>

namespace cfst::io {

using json = nlohmann::ordered_json;

json to_json(const RepetitionWitness& wit);
json to_json(const PeriodicityEvidence& pe);
json to_json(const GrowthStats& g);
json to_json(const Enclosure& e);
json to_json(const QuadraticPoly& p);
json to_json(const QuadraticSurd& s);
json to_json(const InequalityCheck& c);
json to_json(const WitnessDiagnostics& d);
json to_json(const CriterionReport& r);
json to_json(const ComplexityProfile& p);
json to_json(const RecurrenceStats& r);

// Columns: n, p_n, p_n_minus_n, worst_gap, gap_ratio. Either input may be
// null; missing columns are left blank.
std::string subshift_csv(const ComplexityProfile* profile, const RecurrenceStats* stats);

// {"base":2,"states":2,"initial":0,"transitions":[[0,1],[1,0]],"output":[0,1]}
Dfao dfao_from_json(const json& j);

}  // namespace cfst::io
