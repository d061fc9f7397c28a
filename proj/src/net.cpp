#include "net.hpp"

#include <algorithm>

namespace cremona {

AssignedBasePoints::AssignedBasePoints(std::vector<Entry> entries) : entries_(std::move(entries)) {
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].multiplicity < 1)
            fail(Err::InvalidArgument, "assigned multiplicities must be positive");
        for (size_t j = i + 1; j < entries_.size(); ++j)
            if (entries_[i].point == entries_[j].point)
                fail(Err::InvalidArgument, "assigned base points must be pairwise distinct: " +
                                               entries_[i].point.to_string());
    }
}

long long AssignedBasePoints::sum_of_squares() const {
    long long s = 0;
    for (const Entry& e : entries_) s += e.multiplicity * e.multiplicity;
    return s;
}

long long AssignedBasePoints::sum() const {
    long long s = 0;
    for (const Entry& e : entries_) s += e.multiplicity;
    return s;
}

namespace {

Rational falling(int base, int k) {
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= base - i;
    return r;
}

Rational power(const Rational& base, int e) {
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

Form line_through(const ProjPoint& a, const ProjPoint& b) {
    // coefficients are the cross product of representatives
    const auto& u = a.coords();
    const auto& v = b.coords();
    Form l(1);
    l = l + scale(Form::variable(Var::X), u[1] * v[2] - u[2] * v[1]);
    l = l + scale(Form::variable(Var::Y), u[2] * v[0] - u[0] * v[2]);
    l = l + scale(Form::variable(Var::Z), u[0] * v[1] - u[1] * v[0]);
    if (l.is_zero()) fail(Err::CoincidentCenters, "no line through coincident points");
    return l;
}

// Strip a composite whose inner factor is the quadratic centered at the given
// points.  When the outer factor is pure, every common factor of the raw
// components lies on the three lines joining the centers, so the full gcd
// comes out by dividing those lines out greedily.  Far cheaper than a general
// polynomial gcd at this degree.
CremonaMap strip_exceptional_lines(const CremonaMap& raw, const std::array<ProjPoint, 3>& centers) {
    std::array<Form, 3> f = {raw.component(0), raw.component(1), raw.component(2)};
    const std::array<Form, 3> lines = {line_through(centers[1], centers[2]),
                                       line_through(centers[0], centers[2]),
                                       line_through(centers[0], centers[1])};
    for (const Form& l : lines) {
        while (true) {
            std::array<Form, 3> q;
            bool all = true;
            for (size_t i = 0; i < 3 && all; ++i) all = try_divexact(f[i], l, q[i]);
            if (!all) break;
            f = std::move(q);
        }
    }
    return normalized_content(CremonaMap(std::move(f[0]), std::move(f[1]), std::move(f[2]), true));
}

} // namespace

std::vector<Form> interpolate(int degree, const AssignedBasePoints& bp) {
    if (degree < 1) fail(Err::InvalidArgument, "interpolation needs degree >= 1");
    for (const auto& e : bp.entries())
        if (e.multiplicity > degree) return {}; // only the zero form vanishes that deep

    const std::vector<Monomial> cols = monomials_of_degree(degree);
    Matrix A(0, cols.size());

    // Vanishing to order >= m at p is m(m+1)/2 linear conditions: all
    // order-(m-1) partials vanish there (the lower orders follow from the
    // Euler relation for homogeneous forms).
    for (const auto& e : bp.entries()) {
        const auto& p = e.point.coords();
        const int m = static_cast<int>(e.multiplicity);
        for (int i = 0; i <= m - 1; ++i) {
            for (int j = 0; j <= m - 1 - i; ++j) {
                const int k = m - 1 - i - j;
                std::vector<Rational> row;
                row.reserve(cols.size());
                for (const Monomial& mono : cols) {
                    if (mono.a < i || mono.b < j || mono.c < k) {
                        row.emplace_back(0);
                        continue;
                    }
                    Rational v = falling(mono.a, i) * falling(mono.b, j) * falling(mono.c, k);
                    v *= power(p[0], mono.a - i) * power(p[1], mono.b - j) * power(p[2], mono.c - k);
                    row.push_back(std::move(v));
                }
                A.append_row(row);
            }
        }
    }

    std::vector<Form> basis;
    for (const auto& vec : A.nullspace()) {
        Form f(degree);
        for (size_t c = 0; c < cols.size(); ++c)
            if (vec[c] != 0) f.add_term(cols[c], vec[c]);
        basis.push_back(std::move(f));
    }
    return basis;
}

CremonaMap build_net(const MultiIndex& nu, const std::vector<ProjPoint>& points) {
    const Admissibility adm = is_admissible(nu);
    if (!adm.admissible())
        fail(Err::NotAdmissible, "multi-index " + nu.to_string() + " is not admissible");

    const MultiplicityProfile profile = multiplicities(nu);
    if (points.size() != profile.size())
        fail(Err::InvalidArgument, "H-type " + nu.to_string() + " needs " +
                                       std::to_string(profile.size()) + " points, got " +
                                       std::to_string(points.size()));

    std::vector<AssignedBasePoints::Entry> entries;
    entries.reserve(points.size());
    for (size_t i = 0; i < points.size(); ++i) entries.push_back({points[i], profile[i]});
    const AssignedBasePoints bp(std::move(entries));

    std::vector<Form> basis = interpolate(static_cast<int>(nu.degree()), bp);
    if (basis.size() != 3)
        fail(Err::SpecialPosition,
             "interpolation space has dimension " + std::to_string(basis.size()) + ", expected 3",
             static_cast<long long>(basis.size()));
    if (!gcd3(basis[0], basis[1], basis[2]).is_constant())
        fail(Err::SpecialPosition, "interpolation basis has a common factor", 3);

    return CremonaMap(std::move(basis[0]), std::move(basis[1]), std::move(basis[2]), true);
}

CremonaMap quadratic_map(const ProjPoint& p1, const ProjPoint& p2, const ProjPoint& p3) {
    if (p1 == p2 || p1 == p3 || p2 == p3)
        fail(Err::CoincidentCenters, "quadratic centers must be pairwise distinct");
    const Mat3 A = Mat3::from_columns(p1, p2, p3);
    if (A.det() == 0) fail(Err::CollinearCenters, "quadratic centers must not be collinear");

    // conjugate [yz:xz:xy] by the basis change: components A * sigma(adj(A) x)
    const Mat3 B = A.adjugate();
    std::array<Form, 3> L;
    for (int r = 0; r < 3; ++r) {
        Form lf(1);
        lf = lf + scale(Form::variable(Var::X), B.at(r, 0));
        lf = lf + scale(Form::variable(Var::Y), B.at(r, 1));
        lf = lf + scale(Form::variable(Var::Z), B.at(r, 2));
        L[static_cast<size_t>(r)] = lf;
    }
    const std::array<Form, 3> sig = {L[1] * L[2], L[0] * L[2], L[0] * L[1]};
    std::array<Form, 3> comp;
    for (int r = 0; r < 3; ++r) {
        Form f(2);
        for (int c = 0; c < 3; ++c) f = f + scale(sig[static_cast<size_t>(c)], A.at(r, c));
        comp[static_cast<size_t>(r)] = f;
    }
    return normalized_content(CremonaMap(comp[0], comp[1], comp[2], true));
}

CremonaMap apply_quadratic(const CremonaMap& m, const std::array<ProjPoint, 3>& centers,
                           const std::array<long long, 3>& mults) {
    const CremonaMap omega = quadratic_map(centers[0], centers[1], centers[2]);
    for (size_t i = 0; i < 3; ++i) {
        const int found = net_multiplicity_at(m, centers[i]);
        if (found != mults[i])
            fail(Err::MultiplicityMismatch, "net multiplicity at " + centers[i].to_string() + " is " +
                                                std::to_string(found) + ", expected " +
                                                std::to_string(mults[i]));
    }
    // apply the quadratic to the source: the net transforms by substitution of
    // the involution's components, then the fixed lines split off
    if (m.pure()) return strip_exceptional_lines(compose(m, omega), centers);
    return strip_gcd(compose(m, omega)).map;
}

namespace {

Mat3 linear_matrix_of(const CremonaMap& m) {
    if (m.degree() != 1) fail(Err::Internal, "expected a degree-1 map");
    Mat3 M;
    const Monomial mx{1, 0, 0}, my{0, 1, 0}, mz{0, 0, 1};
    for (int r = 0; r < 3; ++r) {
        M.at(r, 0) = m.component(static_cast<size_t>(r)).coeff(mx);
        M.at(r, 1) = m.component(static_cast<size_t>(r)).coeff(my);
        M.at(r, 2) = m.component(static_cast<size_t>(r)).coeff(mz);
    }
    return M;
}

} // namespace

Factorization factor_quadratics(const CremonaMap& m, const AssignedBasePoints& hints) {
    if (m.degree() < 2) fail(Err::InvalidArgument, "factorization needs a map of degree >= 2");
    if (!m.pure()) fail(Err::InvalidArgument, "factorization needs a pure map");

    Factorization fact{{}, {}, Mat3::identity(), m, {}};
    CremonaMap cur = m;
    std::vector<AssignedBasePoints::Entry> pts = hints.entries();

    while (cur.degree() > 1) {
        const long long d = cur.degree();

        for (const auto& e : pts) {
            const int found = net_multiplicity_at(cur, e.point);
            if (found != e.multiplicity)
                fail(Err::MultiplicityMismatch, "net multiplicity at " + e.point.to_string() + " is " +
                                                    std::to_string(found) + ", expected " +
                                                    std::to_string(e.multiplicity));
        }

        long long sq = 0, lin = 0;
        for (const auto& e : pts) {
            sq += e.multiplicity * e.multiplicity;
            lin += e.multiplicity;
        }
        if (sq != d * d - 1 || lin != 3 * (d - 1))
            fail(Err::InfinitelyNearUnsupported,
                 "listed base points account for " + std::to_string(sq) + "/" +
                     std::to_string(d * d - 1) + " of the self-intersection; the net has base points "
                     "outside the plane (infinitely near), which this factorization does not handle");

        std::stable_sort(pts.begin(), pts.end(),
                         [](const auto& a, const auto& b) { return a.multiplicity > b.multiplicity; });
        const auto& c1 = pts[0];
        const auto& c2 = pts[1];
        const auto& c3 = pts[2];
        if (c1.multiplicity + c2.multiplicity > d)
            fail(Err::NotOneIrreducible, "top multiplicities " + std::to_string(c1.multiplicity) + "+" +
                                             std::to_string(c2.multiplicity) + " exceed the degree " +
                                             std::to_string(d));

        const std::array<ProjPoint, 3> step_centers = {c1.point, c2.point, c3.point};
        const CremonaMap omega = quadratic_map(step_centers[0], step_centers[1], step_centers[2]);
        const CremonaMap next = strip_exceptional_lines(compose(cur, omega), step_centers);

        const long long eps = c1.multiplicity + c2.multiplicity + c3.multiplicity - d;
        const long long expected_degree = d - eps;
        if (next.degree() != expected_degree)
            fail(Err::Internal, "degree after quadratic is " + std::to_string(next.degree()) +
                                    ", expected " + std::to_string(expected_degree));

        std::vector<AssignedBasePoints::Entry> new_pts;
        for (size_t i = 0; i < 3; ++i) {
            const long long nm = pts[i].multiplicity - eps;
            if (nm > 0) new_pts.push_back({pts[i].point, nm});
        }
        for (size_t i = 3; i < pts.size(); ++i)
            new_pts.push_back({apply(omega, pts[i].point), pts[i].multiplicity});

        fact.quadratics.push_back(omega);
        fact.centers.push_back(step_centers);
        fact.degree_sequence.push_back(static_cast<int>(next.degree()));
        cur = next;
        pts = AssignedBasePoints(std::move(new_pts)).entries(); // re-validate distinctness
    }

    fact.linear_tail = linear_matrix_of(cur);
    if (fact.linear_tail.det() == 0) fail(Err::Internal, "degenerate linear tail");
    return fact;
}

CremonaMap recompose(const Factorization& fact) {
    CremonaMap cur = CremonaMap::from_matrix(fact.linear_tail);
    for (size_t i = fact.quadratics.size(); i-- > 0;)
        cur = strip_exceptional_lines(compose(cur, fact.quadratics[i]), fact.centers[i]);
    return cur;
}

CremonaMap inverse(const CremonaMap& m, const AssignedBasePoints& hints) {
    if (m.degree() == 1) return CremonaMap::from_matrix(linear_matrix_of(m).inverse());
    const Factorization fact = factor_quadratics(m, hints);
    // w_1 o w_2 o ... o w_s o tail^{-1}, built left-associated so that every
    // intermediate strip has a quadratic as its inner factor
    CremonaMap cur = fact.quadratics.front();
    for (size_t i = 1; i < fact.quadratics.size(); ++i)
        cur = strip_exceptional_lines(compose(cur, fact.quadratics[i]), fact.centers[i]);
    cur = compose(cur, CremonaMap::from_matrix(fact.linear_tail.inverse()));
    return normalized_content(CremonaMap(cur.component(0), cur.component(1), cur.component(2), true));
}

} // namespace cremona
