#ifndef CREMONA_MAPDOC_HPP
#define CREMONA_MAPDOC_HPP

#include <string>

#include "net.hpp"

namespace cremona {

inline constexpr const char* kMapSchema = "cremona.map/1";
inline constexpr const char* kPointsSchema = "cremona.points/1";

// Canonical JSON rendering: terms in the global monomial order, coefficients
// as exact "p/q" strings, keys alphabetical, two-space indent.  Rendering the
// same map twice is byte-identical.
std::string render_map_json(const CremonaMap& m);
CremonaMap parse_map_json(const std::string& text); // Err::ParseError on bad input

std::string render_points_json(const AssignedBasePoints& bp);
AssignedBasePoints parse_points_json(const std::string& text);

} // namespace cremona

#endif
