#pragma once

#include <json.hpp>

#include "apedwards/descent.hpp"
#include "apedwards/find.hpp"
#include "apedwards/models.hpp"
#include "apedwards/progression.hpp"
#include "apedwards/search.hpp"
#include "apedwards/weierstrass.hpp"

namespace apedwards {

using Json = nlohmann::ordered_json;

Json to_json(const WPoint& p);
Json to_json(const WeierstrassCurve& c);
Json to_json(const APSpec& spec);
Json to_json(const IndexSets& sets);
Json to_json(const ModuliObject& obj);
Json to_json(const QuadricModel& model);
Json to_json(const RankCertificate& cert);
Json to_json(const SearchResult& res);
Json to_json(const ScanReport& rep);
Json to_json(const FindDResult& res);

/// classify output: progression, index sets and moduli object.
Json classification_json(const APSpec& spec);

}  // namespace apedwards
