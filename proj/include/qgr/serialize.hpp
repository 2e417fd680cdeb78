#pragma once

#include "json.hpp"
#include "qgr/quiver.hpp"
#include "qgr/verify.hpp"

namespace qgr {

/// Stable JSON form of a constructed representation. Field order is part of
/// the contract; matrix entries are rationals in "a" or "a/b" string form.
nlohmann::ordered_json representation_to_json(const Construction& c);

struct LoadedRepresentation {
  Representation<Rational> rep;
  DimensionVector e;
};

/// Inverse of representation_to_json; validates shapes, arrow endpoints and
/// the monomial order against the canonical one for (n, d). Throws
/// std::invalid_argument on any mismatch.
LoadedRepresentation representation_from_json(const nlohmann::json& j);

nlohmann::ordered_json report_to_json(const VerificationReport& r);

/// Point lists for the points/grass subcommands, as arrays of coordinate
/// string arrays.
nlohmann::ordered_json points_to_json(const std::vector<ProjPoint<Fp>>& points);
nlohmann::ordered_json grass_points_to_json(const std::vector<GrassPoint>& points);

}  // namespace qgr
