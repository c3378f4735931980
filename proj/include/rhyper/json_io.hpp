#pragma once

#include <json.hpp>

#include "rhyper/hypergraph.hpp"
#include "rhyper/mcstar.hpp"
#include "rhyper/theta.hpp"
#include "rhyper/verify.hpp"
#include "rhyper/words.hpp"

namespace rhyper {

using nlohmann::json;

json perm_to_json(const Perm& p);
Perm perm_from_json(const json& j);

json letter_to_json(const Letter& w);
Letter letter_from_json(const json& j);

json word_to_json(const CycWord& w);
CycWord word_from_json(const json& j);  // canonicalizes; throws on killed words

json wordsum_to_json(const WordSum& ws);

json term_to_json(const GraphTerm& g);
GraphTerm term_from_json(const json& j);

// HSum <-> sorted array of term objects
json hsum_to_json(const HSum& h);
HSum hsum_from_json(const json& j);

// family spec: "darboux" | "graded" | "zero" | {"d":..,"entries":[...]}
// with optional "lambdas": ["1","2","-3",...]
ThetaFamily family_from_json(const json& j, int N);

json report_to_json(const Report& r);
std::string report_to_csv(const Report& r);

}  // namespace rhyper
