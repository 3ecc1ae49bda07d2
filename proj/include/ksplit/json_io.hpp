#pragma once

#include <optional>

#include <json.hpp>

#include "ksplit/bounds.hpp"
#include "ksplit/freeness.hpp"
#include "ksplit/graph.hpp"
#include "ksplit/probabilistic.hpp"

namespace ksplit {

using Json = nlohmann::ordered_json;

Json to_json(const VerificationReport& r);
Json witness_json(const std::optional<Embedding>& e);
Json to_json(const JansonDiagnostics& d);
Json to_json(const ConcentrationReport& c);
Json to_json(const PairFailureEstimate& e);
Json to_json(const FailureStats& f);
Json to_json(const TuranInterval& t);
Json to_json(const BoundEnd& b);
Json to_json(const BoundReport& r);
Json to_json(const RamseyBounds& r);
Json to_json(const Case1Certificate& c);
Json to_json(const TrimResult& t);  // the trimmed graph itself is omitted

}  // namespace ksplit
