#ifndef CREMONA_FIXTURES_HPP
#define CREMONA_FIXTURES_HPP

#include <optional>
#include <string>
#include <vector>

#include "net.hpp"

namespace cremona {

// Bundled example maps with exact integer coefficients, together with their
// known plane base points and expected multiplicities.  Maps whose nets also
// have infinitely near base points are flagged: they can be verified
// (multiplicities, Jacobian, inverse pairs) but not factored.
struct FixtureMap {
    std::string name;
    CremonaMap map;
    std::optional<MultiIndex> htype;
    AssignedBasePoints proper_points; // stated plane base points with multiplicities
    bool all_base_points_proper;
    std::string inverse_name;  // empty when no inverse is bundled
    bool inverse_derived;      // true: computed by the offline elimination tool
    std::string description;
};

// The ten example maps (two quartics with their printed inverses, two
// quintics, four sextics).
const std::vector<FixtureMap>& fixtures();

// Inverses of the quintic/sextic fixtures, derived once by exact linear
// elimination (tools/derive_inverse.py) and committed here.
const std::vector<FixtureMap>& derived_inverse_fixtures();

// Look up across both lists; null when absent.
const FixtureMap* find_fixture(const std::string& name);

} // namespace cremona

#endif
