#pragma once

#include <json.hpp>

#include "p1/birkhoff.hpp"
#include "p1/cocharacter.hpp"
#include "p1/double_coset.hpp"
#include "p1/graded.hpp"
#include "p1/morphism.hpp"

namespace p1 {

using Json = nlohmann::json;

/// Field access that reports the offending key as a parse diagnostic.
const Json& require_key(const Json& j, const char* key);

Json to_json(const FieldDescriptor& field);
FieldDescriptor field_from_json(const Json& j);

Json to_json(const LaurentMatrix& m);
LaurentMatrix matrix_from_json(const Json& j, const FieldDescriptor& field);

Json to_json(const TransitionBundle& e);
TransitionBundle bundle_from_json(const Json& j);

Json to_json(const SplittingType& type);

Json to_json(const GradedVectorSpace& v);
GradedVectorSpace graded_from_json(const Json& j);

Json to_json(const Cocharacter& chi);
Cocharacter cocharacter_from_json(const Json& j);

Json to_json(const BirkhoffWitness& w);
Json to_json(const HNFiltration& hn);
Json to_json(const DoubleCosetWitness& w);
Json to_json(const EulerWitness& w);
Json to_json(const CohomologyDims& dims);

} // namespace p1
