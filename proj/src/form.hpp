#ifndef CREMONA_FORM_HPP
#define CREMONA_FORM_HPP

#include <map>
#include <string>

#include "matrix.hpp"
#include "monomial.hpp"
#include "point.hpp"
#include "rational.hpp"

namespace cremona {

// A homogeneous trivariate polynomial over Q.  Stored sparsely in the global
// monomial order; only nonzero coefficients are kept.  The zero form carries
// an explicit degree tag so that addition never has to guess.
class Form {
public:
    using TermMap = std::map<Monomial, Rational, MonomialBefore>;

    Form() : degree_(0) {}     // zero form of degree 0
    explicit Form(int degree); // zero form of that degree
    static Form term(const Monomial& m, const Rational& coeff);
    static Form variable(Var v);
    static Form constant(const Rational& c); // degree 0

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return degree_ == 0 || is_zero(); }
    size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // zero if absent
    Rational coeff(const Monomial& m) const;
    // largest monomial; form must be nonzero
    const Monomial& leading_monomial() const;
    const Rational& leading_coeff() const;

    void add_term(const Monomial& m, const Rational& coeff); // accumulate

    bool operator==(const Form& o) const = default;
    // arbitrary total order (degree, then term maps); for use in containers
    bool operator<(const Form& o) const {
        if (degree_ != o.degree_) return degree_ < o.degree_;
        return terms_ < o.terms_;
    }

    std::string to_string() const;

private:
    int degree_;
    TermMap terms_;
};

Form operator+(const Form& f, const Form& g); // DegreeMismatch unless one side zero
Form operator-(const Form& f, const Form& g);
Form operator-(const Form& f);
Form operator*(const Form& f, const Form& g);
Form scale(const Form& f, const Rational& c);

Rational evaluate(const Form& f, const ProjPoint& p);
Rational evaluate(const Form& f, const std::array<Rational, 3>& v);

Form partial(const Form& f, Var v); // ZeroDegree on degree-0 input

// determinant of the matrix of partials; degree 3(d-1) or zero
Form jacobian_det(const Form& f1, const Form& f2, const Form& f3);

Form pow(const Form& f, int e);

// f(g1, g2, g3): substitute equal-degree forms for the variables
Form substitute(const Form& f, const Form& gx, const Form& gy, const Form& gz);

// f(M * (x,y,z)^T); SingularMatrix when det M = 0
Form linear_substitute(const Form& f, const Mat3& M);

// order of vanishing at p (0 when f(p) != 0); f must be nonzero
int multiplicity_at(const Form& f, const ProjPoint& p);

// gcd normalized with leading coefficient 1; gcd3 = gcd(gcd(f1,f2),f3)
Form gcd(const Form& f, const Form& g);
Form gcd3(const Form& f1, const Form& f2, const Form& f3);

// exact division; internal error when not exact
Form divexact(const Form& f, const Form& g);

// exact division attempt; false (and untouched out) when g does not divide f
bool try_divexact(const Form& f, const Form& g, Form& out);

// divide by the gcd of the coefficients and make the leading coefficient 1
Form normalized(const Form& f);

} // namespace cremona

#endif
