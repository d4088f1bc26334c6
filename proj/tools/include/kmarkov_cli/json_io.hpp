#pragma once

#include "json.hpp"
#include <string>

#include "kmarkov/lattice.hpp"
#include "kmarkov/markov.hpp"
#include "kmarkov/poset.hpp"
#include "kmarkov/skein.hpp"
#include "kmarkov/verify.hpp"

namespace kmarkov::cli {

using Json = nlohmann::ordered_json;

// Readers throw ValidationError on malformed input. Writers emit every number
// as a decimal string.
Json poset_to_json(const FencePoset& p);
FencePoset poset_from_json(const Json& j);

Json word_to_json(const CrossingWord& w);
CrossingWord word_from_json(const Json& j);

Json polyline_to_json(const PolylineArc& arc);
PolylineArc polyline_from_json(const Json& j);

Json resolution_to_json(const Resolution& r, const IdentityCheck& check);
Json sweep_to_json(const SweepResult& r);
Json ptolemy_to_json(const PtolemyReport& r);
Json aigner_to_json(const AignerReport& r);
Json recurrences_to_json(const RecurrenceReport& r);
Json collisions_to_json(const std::vector<Collision>& c);
Json compare_orders_to_json(const OrderComparison& c);

Json read_json_file(const std::string& path);
std::string dump(const Json& j);

}  // namespace kmarkov::cli
