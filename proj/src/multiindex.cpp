#include "multiindex.hpp"

#include <algorithm>
#include <functional>

namespace cremona {

MultiIndex::MultiIndex(long long degree, std::vector<long long> counts)
    : degree_(degree), counts_(std::move(counts)) {
    if (degree_ < 2)
        fail(Err::DegreeTooSmall, "multi-index degree must be at least 2, got " + std::to_string(degree_));
    if (static_cast<long long>(counts_.size()) != degree_ - 1)
        fail(Err::WrongLength, "multi-index of degree " + std::to_string(degree_) + " needs " +
                                   std::to_string(degree_ - 1) + " entries, got " +
                                   std::to_string(counts_.size()));
    for (long long c : counts_)
        if (c < 0) fail(Err::NegativeEntry, "multi-index entries must be non-negative");
}

std::string MultiIndex::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < counts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(counts_[i]);
    }
    s += ")";
    return s;
}

NoetherStatus noether_status(const MultiIndex& nu) {
    const long long d = nu.degree();
    long long sq = 0, lin = 0;
    for (long long i = 1; i < d; ++i) {
        sq += i * i * nu.count(i);
        lin += i * nu.count(i);
    }
    // self-intersection first, then genus, matching the admissibility script
    if (sq != d * d - 1) return {NoetherCheck::SelfIntersectionMismatch, sq - (d * d - 1)};
    if (lin != 3 * (d - 1)) return {NoetherCheck::GenusMismatch, lin - 3 * (d - 1)};
    return {NoetherCheck::Ok, 0};
}

MultiplicityProfile::MultiplicityProfile(std::vector<long long> values) : values_(std::move(values)) {
    for (size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] <= 0) fail(Err::InvalidArgument, "multiplicities must be positive");
        if (i > 0 && values_[i] > values_[i - 1])
            fail(Err::InvalidArgument, "multiplicities must be non-increasing");
    }
}

long long MultiplicityProfile::sum() const {
    long long s = 0;
    for (long long m : values_) s += m;
    return s;
}

long long MultiplicityProfile::sum_of_squares() const {
    long long s = 0;
    for (long long m : values_) s += m * m;
    return s;
}

MultiplicityProfile multiplicities(const MultiIndex& nu) {
    std::vector<long long> values;
    for (long long i = nu.degree() - 1; i >= 1; --i)
        for (long long k = 0; k < nu.count(i); ++k) values.push_back(i);
    if (values.empty()) fail(Err::EmptyMultiIndex, "multi-index has no nonzero entry");
    return MultiplicityProfile(std::move(values));
}

long long reduced_length(const MultiIndex& nu) {
    long long r = 0;
    for (long long c : nu.counts()) r += c;
    return r;
}

long long length(const MultiIndex& nu) {
    long long rho = 0;
    for (long long i = 1; i < nu.degree(); ++i) rho += i * (i + 1) * nu.count(i) / 2;
    return rho;
}

std::vector<MultiIndex> enumerate_noether(long long d) {
    if (d < 2) fail(Err::DegreeTooSmall, "enumeration needs degree >= 2");
    std::vector<MultiIndex> out;
    std::vector<long long> counts(static_cast<size_t>(d - 1), 0);

    // Nested search from i = d-1 down to 2, nu_i bounded by the remaining
    // square sum; nu_1 is then forced and must satisfy both remainders.
    std::function<void(long long, long long, long long)> rec =
        [&](long long i, long long sq_left, long long lin_left) {
            if (i == 1) {
                if (sq_left == lin_left && lin_left >= 0) {
                    counts[0] = lin_left;
                    out.emplace_back(d, counts);
                }
                return;
            }
            long long hi = std::min(sq_left / (i * i), lin_left / i);
            for (long long v = hi; v >= 0; --v) {
                counts[static_cast<size_t>(i - 1)] = v;
                rec(i - 1, sq_left - i * i * v, lin_left - i * v);
            }
            counts[static_cast<size_t>(i - 1)] = 0;
        };
    rec(d - 1, d * d - 1, 3 * (d - 1));
    return out;
}

bool is_de_jonquieres(const MultiIndex& nu) {
    const long long d = nu.degree();
    if (d == 2) return nu.count(1) == 3;
    if (nu.count(d - 1) != 1 || nu.count(1) != 2 * d - 2) return false;
    for (long long i = 2; i <= d - 2; ++i)
        if (nu.count(i) != 0) return false;
    return true;
}

bool is_symmetric(const MultiIndex& nu) {
    int nonzero = 0;
    for (long long c : nu.counts())
        if (c != 0) ++nonzero;
    return nonzero == 1;
}

bool check_identity_2dm1(const MultiIndex& nu) {
    const long long d = nu.degree();
    long long s = 0;
    for (long long i = 1; i < d; ++i) s += i * (d - i) * nu.count(i);
    return s == (d - 1) * (2 * d - 1);
}

} // namespace cremona
