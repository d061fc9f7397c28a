#include "point.hpp"

namespace cremona {

ProjPoint::ProjPoint(Rational x, Rational y, Rational z) : c_{std::move(x), std::move(y), std::move(z)} {
    pivot_ = -1;
    for (int i = 0; i < 3; ++i) {
        if (c_[static_cast<size_t>(i)] != 0) {
            pivot_ = i;
            break;
        }
    }
    if (pivot_ < 0) fail(Err::AllZero, "projective point needs a nonzero coordinate");
    const Rational lead = c_[static_cast<size_t>(pivot_)];
    for (auto& v : c_) v /= lead;
}

std::string ProjPoint::to_string() const {
    return "[" + rational_to_string(c_[0]) + ":" + rational_to_string(c_[1]) + ":" +
           rational_to_string(c_[2]) + "]";
}

} // namespace cremona
