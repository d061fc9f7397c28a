#ifndef CREMONA_HUDSON_HPP
#define CREMONA_HUDSON_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "multiindex.hpp"

namespace cremona {

// One step of Hudson's reduction: undoing a quadratic transformation at the
// three maximal multiplicities m1 >= m2 >= m3 drops the degree to
// d' = 2d - m1 - m2 - m3 = d + epsilon.
struct QStep {
    MultiIndex input;
    std::array<long long, 3> centers; // m1, m2, m3
    long long epsilon;                // d - m1 - m2 - m3
    MultiIndex output;                // degree d'
};

// First three entries of the multiplicity profile.
std::array<long long, 3> top_three(const MultiIndex& nu);

// m1 + m2 <= d (every degree-2 Noether solution qualifies).
bool is_one_irreducible(const MultiIndex& nu);

// Single reduction step; requires degree >= 3, Noether equations, and
// 1-irreducibility.
QStep q_reduce(const MultiIndex& nu);

struct Admissibility {
    enum class Kind { Admissible, Reducible, NoetherFailure };

    Kind kind;
    std::vector<QStep> trace;  // full for Admissible, partial for Reducible
    long long reducible_at_step = 0; // 1-based, set when Reducible
    NoetherStatus noether;           // set when NoetherFailure

    bool admissible() const { return kind == Kind::Admissible; }
};

// Hudson's test: iterate q until the degree reaches 2, requiring
// 1-irreducibility at every step.
Admissibility is_admissible(const MultiIndex& nu);

// One irreducible component of the space of pure-degree-d birational maps.
struct ComponentRecord {
    MultiIndex htype;
    long long reduced_length; // r
    long long length;         // rho
    long long dimension;      // 8 + 2r
    bool de_jonquieres;
    bool symmetric;
    std::vector<QStep> reduction_trace;
};

// All admissible Noether solutions of degree d, in enumeration order.
std::vector<ComponentRecord> census(long long d);

long long dim_biro(long long d);               // 4d + 6
long long dim_bir(long long d);                // max(4d+6, d(d+1)/2 + 7)
long long dim_bira(long long d, long long a);  // a(a+3)/2 + dim_bir(d-a), with dim 8 at d-a = 1

// Classical bounds over the admissible types of one degree; throws
// Err::BoundViolation naming the offending type if any check fails.
struct BoundsReport {
    long long degree = 0;
    long long max_reduced_length = 0;
    std::vector<MultiIndex> max_length_attainers;
    long long max_non_de_jonquieres_reduced_length = 0; // 0 when none
    long long component_count = 0;
};

BoundsReport verify_bounds(long long d);

} // namespace cremona

#endif
