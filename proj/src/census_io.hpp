#ifndef CREMONA_CENSUS_IO_HPP
#define CREMONA_CENSUS_IO_HPP

#include <string>

#include "hudson.hpp"

namespace cremona {

inline constexpr const char* kCensusSchema = "cremona.census/1";

// Full census document for one degree: every Noether solution with its
// verdict, the admissible components with dimensions and reduction traces,
// and the dimension formulas.  Pure function of d; byte-deterministic.
std::string census_json(long long d);

// Resolves CREMONA_CACHE_DIR, then XDG_CACHE_HOME/cremona, then
// ~/.cache/cremona, then ./.cremona-cache.
std::string default_cache_dir();

// Read-through cache: returns the cached document when present and valid,
// otherwise regenerates and writes it atomically (temp file + rename).
std::string census_cached(long long d, const std::string& cache_dir);

std::string census_cache_path(const std::string& cache_dir, long long d);

} // namespace cremona

#endif
