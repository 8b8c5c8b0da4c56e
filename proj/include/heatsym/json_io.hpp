#pragma once

#include <json.hpp>

#include "heatsym/conslaw.hpp"
#include "heatsym/relations.hpp"

namespace heatsym {

// Insertion-ordered JSON so every emitted document is byte-deterministic.
using Json = nlohmann::ordered_json;

// Polynomial <-> [{"exp":[a,b,c,d],"coeff":"p/q"}, ...], canonical order,
// denominator omitted when 1.
Json poly_to_json(const Polynomial& p);
Polynomial poly_from_json(const Json& j);

// DiffFunction <-> [{"deriv":[i,j,k,m],"poly":[...]}, ...], canonical order.
Json diff_to_json(const DiffFunction& f);
DiffFunction diff_from_json(const Json& j);

// ConservedVector <-> {"Tt":...,"Tx":...,"Ty":...,"Tz":...}.
Json conserved_to_json(const ConservedVector& T);
ConservedVector conserved_from_json(const Json& j);

// PointVectorField <-> {"xi":{"t","x","y","z"},"eta_lin","eta_free"}.
Json generator_to_json(const PointVectorField& x);
PointVectorField generator_from_json(const Json& j);

Json word_to_json(const OperatorWord& w);  // array of indices

// Relation fixture: array of {"name","lhs","rhs","source","as_printed"}
// plus the optional "typo" and "corrects" fields.
std::vector<WordRelation> relations_from_json(const Json& j);

}  // namespace heatsym
