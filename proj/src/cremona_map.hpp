#ifndef CREMONA_CREMONA_MAP_HPP
#define CREMONA_CREMONA_MAP_HPP

#include <array>
#include <optional>
#include <string>

#include "form.hpp"
#include "matrix.hpp"

namespace cremona {

// A rational self-map of the plane given by three equal-degree forms, not all
// zero, considered up to a common scalar.  `pure` records whether the
// components are known coprime; it is computed on demand when unknown.
class CremonaMap {
public:
    CremonaMap(Form f1, Form f2, Form f3, std::optional<bool> pure_known = std::nullopt);

    int degree() const { return f_[0].degree(); }
    const Form& component(size_t i) const { return f_[i]; }
    const std::array<Form, 3>& components() const { return f_; }

    bool pure() const; // gcd3 of the components is a constant
    std::optional<bool> pure_if_known() const { return pure_; }

    static CremonaMap identity();              // [x : y : z]
    static CremonaMap standard_quadratic();    // [yz : xz : xy]
    static CremonaMap from_matrix(const Mat3& M); // rows as linear forms

    std::string to_string() const;

private:
    std::array<Form, 3> f_;
    std::optional<bool> pure_;
};

// equality up to a common scalar on all three coefficient rows
bool projectively_equal(const CremonaMap& a, const CremonaMap& b);

// the canonical representative of the projective class: coprime integer
// coefficients, first nonzero coefficient positive
CremonaMap normalized_content(const CremonaMap& m);

// outer(inner): component-wise substitution, degree = product
CremonaMap compose(const CremonaMap& outer, const CremonaMap& inner);

struct StripResult {
    CremonaMap map;     // components divided by the common factor; pure
    Form common_factor; // normalized, leading coefficient 1
};

StripResult strip_gcd(const CremonaMap& m);

// true iff the map is [x*h : y*h : z*h] for some form h
bool is_identity_up_to_factor(const CremonaMap& m);

// both compositions are the identity up to a factor
bool verify_inverse_pair(const CremonaMap& g, const CremonaMap& h);

bool jacobian_nonzero(const CremonaMap& m);

// multiplicity of the net at p: the minimum over the three components
int net_multiplicity_at(const CremonaMap& m, const ProjPoint& p);

// image of a point not in the base locus
ProjPoint apply(const CremonaMap& m, const ProjPoint& p);

} // namespace cremona

#endif
