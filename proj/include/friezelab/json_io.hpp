#pragma once

#include <json.hpp>

#include "friezelab/arquiver.hpp"
#include "friezelab/exchange.hpp"
#include "friezelab/frieze.hpp"
#include "friezelab/polygon.hpp"
#include "friezelab/quiver.hpp"
#include "friezelab/seed.hpp"

namespace friezelab {

using Json = nlohmann::ordered_json;

// Missing fields and wrong arities raise MalformedInput; type mismatches
// surface as nlohmann::json exceptions; mathematically invalid objects
// raise the module's own errors.

Json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j, std::size_t nvars);

Json to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);

Json to_json(const Seed& s);
Seed seed_from_json(const Json& j);

Json to_json(const Diagonal& d);
Diagonal diagonal_from_json(const Json& j);

Json to_json(const Triangulation& t);
Triangulation triangulation_from_json(const Json& j);

Json to_json(const Frieze& f);
Frieze frieze_from_json(const Json& j);

Json to_json(const LightningBolt& b);
/// Accepts {"n":..,"cells":[[a,b],...]} or the inline string "a:LR...".
LightningBolt bolt_from_json(const Json& j);

Json to_json(const ZQVertex& v);
ZQVertex zq_vertex_from_json(const Json& j);

Json to_json(const ExchangeGraph& g);
Json to_json(const FiniteTypeResult& r);
Json to_json(const CanonicalForm& c);

/// Symbolic frieze cells [{"a":..,"b":..,"poly":..}] sorted by diagonal.
Json symbolic_cells_to_json(const std::map<Diagonal, LaurentPoly>& cells);

}  // namespace friezelab
