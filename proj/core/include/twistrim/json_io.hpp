#pragma once

#include <nlohmann/json.hpp>

#include "twistrim/covers.hpp"
#include "twistrim/group_engine.hpp"
#include "twistrim/laurent_poly.hpp"
#include "twistrim/presentation.hpp"
#include "twistrim/surgery_classifier.hpp"

namespace twistrim {

using Json = nlohmann::ordered_json;

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
Json integer_to_json(const Integer& n);
Integer integer_from_json(const Json& j);

/// {min_exp, coeffs}
Json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

/// {generators, relators, meridian}; meridian is 1-based like the letters.
Json to_json(const GroupPresentation& p);
GroupPresentation presentation_from_json(const Json& j);

/// {free_rank, torsion, text}
Json to_json(const AbelianInvariants& a);
AbelianInvariants abelian_from_json(const Json& j);

/// {order} or {infinite: true}
Json to_json(const CoverOrder& o);
CoverOrder cover_order_from_json(const Json& j);

Json to_json(const Pi1Verdict& v);
Pi1Verdict pi1_from_json(const Json& j);

Json to_json(const SurgeryReport& r);
/// Inverse of to_json; throws std::invalid_argument on schema violations.
SurgeryReport report_from_json(const Json& j);

}  // namespace twistrim
