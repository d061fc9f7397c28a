#ifndef CREMONA_NET_HPP
#define CREMONA_NET_HPP

#include <vector>

#include "cremona_map.hpp"
#include "hudson.hpp"
#include "multiindex.hpp"

namespace cremona {

// Interpolation data: pairwise distinct plane points with positive assigned
// multiplicities.
class AssignedBasePoints {
public:
    struct Entry {
        ProjPoint point;
        long long multiplicity;
    };

    AssignedBasePoints() = default;
    explicit AssignedBasePoints(std::vector<Entry> entries);

    const std::vector<Entry>& entries() const { return entries_; }
    size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    long long sum_of_squares() const;
    long long sum() const;

private:
    std::vector<Entry> entries_;
};

// Reduced-echelon basis (global monomial order) of the degree-d forms
// vanishing to order >= m at each assigned point.  May be empty.
std::vector<Form> interpolate(int degree, const AssignedBasePoints& bp);

// Homaloidal net from an admissible H-type at the given points, multiplicities
// assigned in order against the sorted profile.  SpecialPosition when the
// interpolation space does not have dimension 3 or the basis has a common
// factor.
CremonaMap build_net(const MultiIndex& nu, const std::vector<ProjPoint>& points);

// Degree-2 map with base points exactly p1, p2, p3: the standard quadratic
// conjugated by the linear map sending the coordinate points there.  An
// involution up to a scalar.
CremonaMap quadratic_map(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3);

// Strict transform of the net under the quadratic centered at three of its
// base points; the pure degree drops to 2d - m1 - m2 - m3.
CremonaMap apply_quadratic(const CremonaMap& m, const std::array<ProjPoint, 3>& centers,
                           const std::array<long long, 3>& mults);

// gamma = linear_tail o q_n o ... o q_1 (projectively, after gcd stripping)
struct Factorization {
    std::vector<CremonaMap> quadratics; // in the order applied to the source
    std::vector<std::array<ProjPoint, 3>> centers; // centers of each quadratic
    Mat3 linear_tail;
    CremonaMap original;
    std::vector<int> degree_sequence; // pure degrees after each quadratic, ending at 1
};

Factorization factor_quadratics(const CremonaMap& m, const AssignedBasePoints& hints);

// recompose the factorization; projectively equal to `original`
CremonaMap recompose(const Factorization& fact);

// inverse through the factorization (each quadratic is an involution); for
// degree-1 maps the hints are ignored
CremonaMap inverse(const CremonaMap& m, const AssignedBasePoints& hints);

} // namespace cremona

#endif
