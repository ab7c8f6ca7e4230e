#pragma once

#include <string>

#include "json.hpp"

#include "clustertilt/cluster_algebra.hpp"
#include "clustertilt/repcat.hpp"
#include "clustertilt/tilting.hpp"
#include "clustertilt/verification.hpp"

namespace clustertilt::cli {

using Json = nlohmann::json;

Json to_json(const Root& r);
// {"n": n, "b": exchange matrix, "arrows": [[from, to, multiplicity], ...]};
// arrows use 1-based vertices.
Json to_json(const Quiver& q);
// Rendered string, term list and denominator vector.
Json to_json(const LaurentPolynomial& p);
Json to_json(const CheckResult& r);
Json to_json(const VerificationReport& r);

Json atlas_json(const RootSystem& rs, const ExchangeGraphAtlas& atlas);
Json homtable_json(const ClusterCategory& cc);
// Q_T of a tilting object with its relation kinds.
Json end_presentation_json(const ClusterCategory& cc, const TiltingObject& t, const EndPresentation& e,
                           const Quiver& seed_quiver);

}  // namespace clustertilt::cli
