#ifndef CREMONA_POINT_HPP
#define CREMONA_POINT_HPP

#include <array>
#include <string>

#include "rational.hpp"

namespace cremona {

// A rational point of the projective plane, normalized so that the first
// nonzero coordinate is 1; equality is then plain component equality.
class ProjPoint {
public:
    ProjPoint(Rational x, Rational y, Rational z);

    const std::array<Rational, 3>& coords() const { return c_; }
    const Rational& operator[](size_t i) const { return c_[i]; }

    // index of the first nonzero (== 1) coordinate
    int pivot() const { return pivot_; }

    bool operator==(const ProjPoint& o) const { return c_ == o.c_; }

    std::string to_string() const; // "[0:0:1]"

private:
    std::array<Rational, 3> c_;
    int pivot_;
};

} // namespace cremona

#endif
