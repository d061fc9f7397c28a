#include "cremona_map.hpp"

namespace cremona {

CremonaMap::CremonaMap(Form f1, Form f2, Form f3, std::optional<bool> pure_known)
    : f_{std::move(f1), std::move(f2), std::move(f3)}, pure_(pure_known) {
    if (f_[0].degree() != f_[1].degree() || f_[1].degree() != f_[2].degree())
        fail(Err::DegreeMismatch, "map components must have equal degrees");
    if (f_[0].is_zero() && f_[1].is_zero() && f_[2].is_zero())
        fail(Err::AllZero, "map components must not all be zero");
    if (f_[0].degree() < 1) fail(Err::InvalidArgument, "map components must have degree >= 1");
}

bool CremonaMap::pure() const {
    if (pure_.has_value()) return *pure_;
    return gcd3(f_[0], f_[1], f_[2]).is_constant();
}

CremonaMap CremonaMap::identity() {
    return CremonaMap(Form::variable(Var::X), Form::variable(Var::Y), Form::variable(Var::Z), true);
}

CremonaMap CremonaMap::standard_quadratic() {
    return CremonaMap(Form::variable(Var::Y) * Form::variable(Var::Z),
                      Form::variable(Var::X) * Form::variable(Var::Z),
                      Form::variable(Var::X) * Form::variable(Var::Y), true);
}

CremonaMap CremonaMap::from_matrix(const Mat3& M) {
    if (M.det() == 0) fail(Err::SingularMatrix, "linear map needs an invertible matrix");
    std::array<Form, 3> rows;
    for (int r = 0; r < 3; ++r) {
        Form lf(1);
        lf = lf + scale(Form::variable(Var::X), M.at(r, 0));
        lf = lf + scale(Form::variable(Var::Y), M.at(r, 1));
        lf = lf + scale(Form::variable(Var::Z), M.at(r, 2));
        rows[static_cast<size_t>(r)] = lf;
    }
    return CremonaMap(rows[0], rows[1], rows[2], true);
}

std::string CremonaMap::to_string() const {
    return "[" + f_[0].to_string() + " : " + f_[1].to_string() + " : " + f_[2].to_string() + "]";
}

bool projectively_equal(const CremonaMap& a, const CremonaMap& b) {
    if (a.degree() != b.degree()) return false;
    // find the scalar on the first nonzero coefficient of a, then compare
    for (size_t i = 0; i < 3; ++i) {
        const Form& fa = a.component(i);
        const Form& fb = b.component(i);
        if (fa.is_zero() != fb.is_zero()) return false;
        if (fa.is_zero()) continue;
        const Rational ca = fa.leading_coeff();
        if (fb.coeff(fa.leading_monomial()) == 0) return false;
        const Rational lambda = fb.coeff(fa.leading_monomial()) / ca;
        for (size_t j = 0; j < 3; ++j)
            if (!(scale(a.component(j), lambda) == b.component(j))) return false;
        return true;
    }
    return false;
}

CremonaMap normalized_content(const CremonaMap& m) {
    Integer den_lcm = 1;
    Integer num_gcd = 0;
    for (size_t i = 0; i < 3; ++i) {
        for (const auto& [mono, c] : m.component(i).terms()) {
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        }
    }
    Rational scale_by = make_rational(den_lcm, num_gcd);
    for (size_t i = 0; i < 3; ++i) {
        if (m.component(i).is_zero()) continue;
        if (m.component(i).leading_coeff() * scale_by < 0) scale_by = -scale_by;
        break;
    }
    return CremonaMap(scale(m.component(0), scale_by), scale(m.component(1), scale_by),
                      scale(m.component(2), scale_by), m.pure_if_known());
}

CremonaMap compose(const CremonaMap& outer, const CremonaMap& inner) {
    return CremonaMap(substitute(outer.component(0), inner.component(0), inner.component(1), inner.component(2)),
                      substitute(outer.component(1), inner.component(0), inner.component(1), inner.component(2)),
                      substitute(outer.component(2), inner.component(0), inner.component(1), inner.component(2)));
}

StripResult strip_gcd(const CremonaMap& m) {
    const Form h = gcd3(m.component(0), m.component(1), m.component(2));
    if (h.is_constant())
        return {normalized_content(CremonaMap(m.component(0), m.component(1), m.component(2), true)),
                Form::constant(1)};
    return {normalized_content(CremonaMap(divexact(m.component(0), h), divexact(m.component(1), h),
                                          divexact(m.component(2), h), true)),
            h};
}

bool is_identity_up_to_factor(const CremonaMap& m) {
    const Form& f1 = m.component(0);
    const Form& f2 = m.component(1);
    const Form& f3 = m.component(2);
    const Form x = Form::variable(Var::X);
    const Form y = Form::variable(Var::Y);
    const Form z = Form::variable(Var::Z);
    return (f1 * y - f2 * x).is_zero() && (f1 * z - f3 * x).is_zero() && (f2 * z - f3 * y).is_zero();
}

bool verify_inverse_pair(const CremonaMap& g, const CremonaMap& h) {
    return is_identity_up_to_factor(compose(g, h)) && is_identity_up_to_factor(compose(h, g));
}

bool jacobian_nonzero(const CremonaMap& m) {
    return !jacobian_det(m.component(0), m.component(1), m.component(2)).is_zero();
}

int net_multiplicity_at(const CremonaMap& m, const ProjPoint& p) {
    int best = m.degree() + 1;
    for (size_t i = 0; i < 3; ++i) {
        if (m.component(i).is_zero()) continue;
        best = std::min(best, multiplicity_at(m.component(i), p));
    }
    return best;
}

ProjPoint apply(const CremonaMap& m, const ProjPoint& p) {
    const Rational v0 = evaluate(m.component(0), p);
    const Rational v1 = evaluate(m.component(1), p);
    const Rational v2 = evaluate(m.component(2), p);
    if (v0 == 0 && v1 == 0 && v2 == 0)
        fail(Err::InvalidArgument, "point " + p.to_string() + " is in the base locus");
    return ProjPoint(v0, v1, v2);
}

} // namespace cremona
