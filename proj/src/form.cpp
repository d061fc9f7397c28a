#include "form.hpp"

#include <algorithm>

#include "upoly.hpp"

namespace cremona {

Form::Form(int degree) : degree_(degree) {
    if (degree < 0) fail(Err::InvalidArgument, "form degree must be non-negative");
}

Form Form::term(const Monomial& m, const Rational& coeff) {
    Form f(m.total());
    if (coeff != 0) f.terms_[m] = coeff;
    return f;
}

Form Form::variable(Var v) {
    Monomial m;
    if (v == Var::X) m = {1, 0, 0};
    else if (v == Var::Y) m = {0, 1, 0};
    else m = {0, 0, 1};
    return term(m, 1);
}

Form Form::constant(const Rational& c) { return term({0, 0, 0}, c); }

Rational Form::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& Form::leading_monomial() const {
    if (is_zero()) fail(Err::AllZero, "zero form has no leading monomial");
    return terms_.begin()->first;
}

const Rational& Form::leading_coeff() const {
    if (is_zero()) fail(Err::AllZero, "zero form has no leading coefficient");
    return terms_.begin()->second;
}

void Form::add_term(const Monomial& m, const Rational& coeff) {
    if (m.total() != degree_)
        fail(Err::DegreeMismatch, "monomial of degree " + std::to_string(m.total()) +
                                      " in form of degree " + std::to_string(degree_));
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

std::string Form::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool neg = c < 0;
        const Rational mag = neg ? Rational(-c) : c;
        if (first) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        first = false;
        std::string vars;
        auto app = [&vars](char name, int e) {
            if (e == 0) return;
            if (!vars.empty()) vars += "*";
            vars += name;
            if (e > 1) vars += "^" + std::to_string(e);
        };
        app('x', m.a);
        app('y', m.b);
        app('z', m.c);
        if (vars.empty()) {
            s += rational_to_string(mag);
        } else if (mag == 1) {
            s += vars;
        } else {
            s += rational_to_string(mag) + "*" + vars;
        }
    }
    return s;
}

Form operator+(const Form& f, const Form& g) {
    if (f.is_zero() && g.is_zero()) {
        if (f.degree() != g.degree())
            fail(Err::DegreeMismatch, "adding zero forms of different degrees");
        return f;
    }
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    if (f.degree() != g.degree())
        fail(Err::DegreeMismatch, "adding forms of degrees " + std::to_string(f.degree()) + " and " +
                                      std::to_string(g.degree()));
    Form s = f;
    for (const auto& [m, c] : g.terms()) s.add_term(m, c);
    return s;
}

Form operator-(const Form& f) { return scale(f, Rational(-1)); }

Form operator-(const Form& f, const Form& g) { return f + (-g); }

Form operator*(const Form& f, const Form& g) {
    Form p(f.degree() + g.degree());
    for (const auto& [mf, cf] : f.terms())
        for (const auto& [mg, cg] : g.terms())
            p.add_term({mf.a + mg.a, mf.b + mg.b, mf.c + mg.c}, cf * cg);
    return p;
}

Form scale(const Form& f, const Rational& c) {
    Form s(f.degree());
    if (c == 0) return s;
    for (const auto& [m, v] : f.terms()) s.add_term(m, v * c);
    return s;
}

Rational evaluate(const Form& f, const std::array<Rational, 3>& v) {
    Rational total = 0;
    for (const auto& [m, c] : f.terms()) {
        Rational t = c;
        for (int i = 0; i < m.a; ++i) t *= v[0];
        for (int i = 0; i < m.b; ++i) t *= v[1];
        for (int i = 0; i < m.c; ++i) t *= v[2];
        total += t;
    }
    return total;
}

Rational evaluate(const Form& f, const ProjPoint& p) { return evaluate(f, p.coords()); }

Form partial(const Form& f, Var v) {
    if (f.degree() == 0) fail(Err::ZeroDegree, "cannot differentiate a degree-0 form");
    Form d(f.degree() - 1);
    for (const auto& [m, c] : f.terms()) {
        const int e = m.exp(v);
        if (e == 0) continue;
        Monomial n = m;
        if (v == Var::X) --n.a;
        else if (v == Var::Y) --n.b;
        else --n.c;
        d.add_term(n, c * e);
    }
    return d;
}

Form jacobian_det(const Form& f1, const Form& f2, const Form& f3) {
    if (f1.degree() != f2.degree() || f2.degree() != f3.degree())
        fail(Err::DegreeMismatch, "Jacobian needs equal degrees");
    if (f1.degree() < 1) fail(Err::DegreeMismatch, "Jacobian needs degree >= 1");
    std::array<std::array<Form, 3>, 3> J = {{
        {partial(f1, Var::X), partial(f1, Var::Y), partial(f1, Var::Z)},
        {partial(f2, Var::X), partial(f2, Var::Y), partial(f2, Var::Z)},
        {partial(f3, Var::X), partial(f3, Var::Y), partial(f3, Var::Z)},
    }};
    Form det(3 * (f1.degree() - 1));
    det = det + J[0][0] * (J[1][1] * J[2][2] - J[1][2] * J[2][1]);
    det = det - J[0][1] * (J[1][0] * J[2][2] - J[1][2] * J[2][0]);
    det = det + J[0][2] * (J[1][0] * J[2][1] - J[1][1] * J[2][0]);
    return det;
}

Form pow(const Form& f, int e) {
    if (e < 0) fail(Err::InvalidArgument, "negative form power");
    Form acc = Form::constant(1);
    for (int i = 0; i < e; ++i) acc = acc * f;
    return acc;
}

Form substitute(const Form& f, const Form& gx, const Form& gy, const Form& gz) {
    if (gx.degree() != gy.degree() || gy.degree() != gz.degree())
        fail(Err::DegreeMismatch, "substitution needs equal-degree forms");
    const int gd = gx.degree();
    std::vector<Form> px, py, pz;
    auto powers = [&](const Form& g) {
        std::vector<Form> p;
        p.push_back(Form::constant(1));
        for (int i = 1; i <= f.degree(); ++i) p.push_back(p.back() * g);
        return p;
    };
    px = powers(gx);
    py = powers(gy);
    pz = powers(gz);
    Form out(f.degree() * gd);
    for (const auto& [m, c] : f.terms()) {
        Form t = scale(px[static_cast<size_t>(m.a)] * py[static_cast<size_t>(m.b)], c);
        out = out + t * pz[static_cast<size_t>(m.c)];
    }
    return out;
}

Form linear_substitute(const Form& f, const Mat3& M) {
    if (M.det() == 0) fail(Err::SingularMatrix, "linear substitution needs an invertible matrix");
    std::array<Form, 3> rows;
    for (int r = 0; r < 3; ++r) {
        Form lf(1);
        lf = lf + scale(Form::variable(Var::X), M.at(r, 0));
        lf = lf + scale(Form::variable(Var::Y), M.at(r, 1));
        lf = lf + scale(Form::variable(Var::Z), M.at(r, 2));
        rows[static_cast<size_t>(r)] = lf;
    }
    return substitute(f, rows[0], rows[1], rows[2]);
}

int multiplicity_at(const Form& f, const ProjPoint& p) {
    if (f.is_zero()) fail(Err::AllZero, "multiplicity of the zero form is undefined");
    // send p to [0:0:1] by an invertible change of coordinates: complete p
    // with the two standard basis vectors away from its pivot coordinate
    const int k = p.pivot();
    std::array<ProjPoint, 2> basis = {
        ProjPoint(Rational(k == 0 ? 0 : 1), Rational(k == 0 ? 1 : 0), 0),
        ProjPoint(0, Rational(k == 2 ? 1 : 0), Rational(k == 2 ? 0 : 1)),
    };
    const Mat3 M = Mat3::from_columns(basis[0], basis[1], p);
    const Form g = linear_substitute(f, M); // now the point of interest is [0:0:1]
    int best = f.degree();
    for (const auto& [m, c] : g.terms()) best = std::min(best, m.a + m.b);
    return best;
}

namespace {

PolyXYZ to_tower(const Form& f) {
    PolyXYZ out;
    for (const auto& [m, c] : f.terms()) {
        PolyZ pz;
        pz.set_coeff(m.c, c);
        PolyYZ py;
        py.set_coeff(m.b, pz);
        PolyYZ cur = out.deg() >= m.a ? out.coeff(m.a) : PolyYZ();
        out.set_coeff(m.a, cur + py);
    }
    return out;
}

Form from_tower(const PolyXYZ& p) {
    Form::TermMap terms;
    int degree = 0;
    for (int a = 0; a <= p.deg(); ++a) {
        const PolyYZ& py = p.coeff(a);
        for (int b = 0; b <= py.deg(); ++b) {
            const PolyZ& pz = py.coeff(b);
            for (int c = 0; c <= pz.deg(); ++c) {
                if (pz.coeff(c) == 0) continue;
                terms[{a, b, c}] = pz.coeff(c);
                degree = std::max(degree, a + b + c);
            }
        }
    }
    Form f(degree);
    for (auto& [m, v] : terms) {
        if (m.total() != degree)
            fail(Err::Internal, "gcd of homogeneous forms came out inhomogeneous");
        f.add_term(m, v);
    }
    return f;
}

} // namespace

Form normalized(const Form& f) {
    if (f.is_zero()) return f;
    return scale(f, 1 / f.leading_coeff());
}

Form gcd(const Form& f, const Form& g) {
    if (f.is_zero() && g.is_zero()) fail(Err::AllZero, "gcd of zero forms");
    if (f.is_zero()) return normalized(g);
    if (g.is_zero()) return normalized(f);
    return normalized(from_tower(upoly_gcd(to_tower(f), to_tower(g))));
}

Form gcd3(const Form& f1, const Form& f2, const Form& f3) {
    if (f1.is_zero() && f2.is_zero() && f3.is_zero()) fail(Err::AllZero, "gcd of zero forms");
    if (f1.is_zero()) return gcd(f2, f3);
    if (f2.is_zero()) return gcd(f1, f3);
    return gcd(gcd(f1, f2), f3);
}

bool try_divexact(const Form& f, const Form& g, Form& out) {
    if (g.is_zero()) fail(Err::Internal, "division by the zero form");
    Form q(f.degree() - g.degree());
    if (f.is_zero()) {
        out = std::move(q);
        return true;
    }
    if (f.degree() < g.degree()) return false;
    Form r = f;
    const Monomial lg = g.leading_monomial();
    const Rational lc = g.leading_coeff();
    while (!r.is_zero()) {
        const Monomial lr = r.leading_monomial();
        const Monomial qm{lr.a - lg.a, lr.b - lg.b, lr.c - lg.c};
        if (qm.a < 0 || qm.b < 0 || qm.c < 0) return false;
        const Rational qc = r.leading_coeff() / lc;
        q.add_term(qm, qc);
        r = r - Form::term(qm, qc) * g;
    }
    out = std::move(q);
    return true;
}

Form divexact(const Form& f, const Form& g) {
    Form q;
    if (!try_divexact(f, g, q)) fail(Err::Internal, "inexact form division");
    return q;
}

} // namespace cremona
