#ifndef CREMONA_MONOMIAL_HPP
#define CREMONA_MONOMIAL_HPP

#include <compare>
#include <vector>

namespace cremona {

enum class Var : int { X = 0, Y = 1, Z = 2 };

// Exponent triple of a trivariate monomial x^a y^b z^c.
struct Monomial {
    int a = 0, b = 0, c = 0;

    int total() const { return a + b + c; }
    int exp(Var v) const { return v == Var::X ? a : (v == Var::Y ? b : c); }

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Graded lexicographic order with x > y > z; the single global order used for
// normalization, printing and hashing.  Returns true when lhs precedes rhs,
// i.e. lhs is the larger monomial.
struct MonomialBefore {
    bool operator()(const Monomial& l, const Monomial& r) const {
        if (l.total() != r.total()) return l.total() > r.total();
        if (l.a != r.a) return l.a > r.a;
        if (l.b != r.b) return l.b > r.b;
        return l.c > r.c;
    }
};

// All monomials of one degree, largest first.
inline std::vector<Monomial> monomials_of_degree(int d) {
    std::vector<Monomial> out;
    for (int a = d; a >= 0; --a)
        for (int b = d - a; b >= 0; --b) out.push_back({a, b, d - a - b});
    return out;
}

} // namespace cremona

#endif
