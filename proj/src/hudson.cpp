#include "hudson.hpp"

#include <algorithm>

namespace cremona {

std::array<long long, 3> top_three(const MultiIndex& nu) {
    if (reduced_length(nu) < 3)
        fail(Err::TooFewPoints, "need at least 3 base points, multi-index " + nu.to_string() +
                                    " has " + std::to_string(reduced_length(nu)));
    const MultiplicityProfile p = multiplicities(nu);
    return {p[0], p[1], p[2]};
}

bool is_one_irreducible(const MultiIndex& nu) {
    if (nu.degree() == 2) return true;
    const auto m = top_three(nu);
    return m[0] + m[1] <= nu.degree();
}

namespace {

// The single reduction step shared by q_reduce and is_admissible.  Works on a
// mutable copy of the counts, scanning from the highest index downward and
// consuming counts, exactly like the published test script.  Returns the step
// on success; when the input is not 1-irreducible, returns nothing and sets
// m_out to the offending top multiplicities.
std::optional<QStep> try_q_step(const MultiIndex& nu, std::array<long long, 3>& m_out) {
    const long long d = nu.degree();
    std::vector<long long> v = nu.counts(); // v[i-1] = nu_i

    std::array<long long, 3> m{};
    long long t = d;     // candidate multiplicity, scanned downward
    long long avail = 0; // counts not yet consumed at index t
    for (int j = 0; j < 3; ++j) {
        while (avail == 0) {
            --t;
            if (t < 1)
                fail(Err::TooFewPoints, "fewer than 3 base points in " + nu.to_string());
            avail = v[static_cast<size_t>(t - 1)];
        }
        m[static_cast<size_t>(j)] = t;
        v[static_cast<size_t>(t - 1)] -= 1;
        avail -= 1;
    }
    m_out = m;

    if (m[0] + m[1] > d) return std::nullopt;

    const long long eps = d - m[0] - m[1] - m[2];
    for (int j = 0; j < 3; ++j) {
        const long long k = m[static_cast<size_t>(j)] + eps;
        if (k > 0) v[static_cast<size_t>(k - 1)] += 1;
    }

    const long long d_new = d + eps;
    if (d_new < 2 || d_new >= d)
        fail(Err::Internal, "reduced degree " + std::to_string(d_new) + " out of range for " + nu.to_string());
    for (size_t i = static_cast<size_t>(d_new - 1); i < v.size(); ++i)
        if (v[i] != 0)
            fail(Err::Internal, "nonzero entry beyond reduced degree in " + nu.to_string());
    v.resize(static_cast<size_t>(d_new - 1));

    return QStep{nu, m, eps, MultiIndex(d_new, std::move(v))};
}

} // namespace

QStep q_reduce(const MultiIndex& nu) {
    if (nu.degree() == 2) fail(Err::DegreeTooSmall, "cannot reduce a degree-2 multi-index");
    if (!noether_status(nu).ok())
        fail(Err::InvalidArgument, "q-reduction requires Noether's equations, " + nu.to_string() + " fails them");
    std::array<long long, 3> m{};
    auto step = try_q_step(nu, m);
    if (!step)
        fail(Err::NotOneIrreducible, nu.to_string() + " is not 1-irreducible: m1+m2 = " +
                                         std::to_string(m[0] + m[1]) + " > " + std::to_string(nu.degree()));
    return *std::move(step);
}

Admissibility is_admissible(const MultiIndex& nu) {
    Admissibility result;
    const NoetherStatus st = noether_status(nu);
    if (!st.ok()) {
        result.kind = Admissibility::Kind::NoetherFailure;
        result.noether = st;
        return result;
    }

    MultiIndex cur = nu;
    long long step_no = 1;
    while (cur.degree() > 2) {
        std::array<long long, 3> m{};
        auto step = try_q_step(cur, m);
        if (!step) {
            result.kind = Admissibility::Kind::Reducible;
            result.reducible_at_step = step_no;
            return result;
        }
        cur = step->output;
        result.trace.push_back(*std::move(step));
        ++step_no;
    }
    result.kind = Admissibility::Kind::Admissible;
    return result;
}

std::vector<ComponentRecord> census(long long d) {
    std::vector<ComponentRecord> records;
    for (MultiIndex& nu : enumerate_noether(d)) {
        Admissibility adm = is_admissible(nu);
        if (!adm.admissible()) continue;
        const long long r = reduced_length(nu);
        records.push_back(ComponentRecord{
            nu,
            r,
            length(nu),
            8 + 2 * r,
            is_de_jonquieres(nu),
            is_symmetric(nu),
            std::move(adm.trace),
        });
    }
    return records;
}

long long dim_biro(long long d) {
    if (d < 2) fail(Err::OutOfRange, "dim of pure-degree locus needs d >= 2");
    return 4 * d + 6;
}

long long dim_bir(long long d) {
    if (d < 2) fail(Err::OutOfRange, "dim of degree-d locus needs d >= 2");
    return std::max(4 * d + 6, d * (d + 1) / 2 + 7);
}

long long dim_bira(long long d, long long a) {
    if (d < 2) fail(Err::OutOfRange, "dim of degree-d locus needs d >= 2");
    if (a < 1 || a > d - 1) fail(Err::OutOfRange, "common-factor degree must satisfy 1 <= a <= d-1");
    const long long base = a * (a + 3) / 2; // dim of the projective space of degree-a factors
    if (a == d - 1) return base + 8;        // degree-1 residual maps form PGL(3)
    return base + dim_bir(d - a);
}

BoundsReport verify_bounds(long long d) {
    if (d < 2) fail(Err::OutOfRange, "bounds need d >= 2");
    BoundsReport rep;
    rep.degree = d;

    const auto records = census(d);
    rep.component_count = static_cast<long long>(records.size());

    for (const ComponentRecord& rec : records) {
        if (rec.reduced_length > rep.max_reduced_length) {
            rep.max_reduced_length = rec.reduced_length;
            rep.max_length_attainers.clear();
        }
        if (rec.reduced_length == rep.max_reduced_length)
            rep.max_length_attainers.push_back(rec.htype);
        if (!rec.de_jonquieres)
            rep.max_non_de_jonquieres_reduced_length =
                std::max(rep.max_non_de_jonquieres_reduced_length, rec.reduced_length);
    }

    for (const ComponentRecord& rec : records) {
        const MultiIndex& nu = rec.htype;
        const auto m = top_three(nu);
        const long long m_sum = m[0] + m[1] + m[2];
        if (m_sum < d + 1)
            fail(Err::BoundViolation, "Noether inequality fails for " + nu.to_string());
        const bool equality = (m_sum == d + 1);
        if (equality != (rec.symmetric || rec.de_jonquieres))
            fail(Err::BoundViolation,
                 "Noether-inequality equality case mismatch for " + nu.to_string());

        // at most one base point of multiplicity > d/2
        long long big = 0;
        for (long long i = 1; i < d; ++i)
            if (2 * i > d) big += nu.count(i);
        if (big > 1)
            fail(Err::BoundViolation, "more than one base point of multiplicity > d/2 in " + nu.to_string());

        if (d >= 3 && rec.reduced_length == 2 * d - 1 && !rec.de_jonquieres)
            fail(Err::BoundViolation, "maximal point count attained by non-de-Jonquieres " + nu.to_string());
        if (d >= 4 && !rec.de_jonquieres && rec.reduced_length > d + 2)
            fail(Err::BoundViolation, "non-de-Jonquieres " + nu.to_string() + " has more than d+2 base points");
    }

    if (d >= 3 && rep.max_reduced_length != 2 * d - 1)
        fail(Err::BoundViolation, "maximal base-point count is not 2d-1 at degree " + std::to_string(d));

    return rep;
}

} // namespace cremona
