#ifndef CREMONA_MULTIINDEX_HPP
#define CREMONA_MULTIINDEX_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"

namespace cremona {

// The H-type of a homaloidal net of degree d: counts (nu_1,...,nu_{d-1}),
// where nu_i is the number of base points of multiplicity i (infinitely near
// ones included). Immutable after construction.
class MultiIndex {
public:
    MultiIndex(long long degree, std::vector<long long> counts);

    long long degree() const { return degree_; }
    const std::vector<long long>& counts() const { return counts_; }
    // nu_i, 1-based, i in [1, d-1]
    long long count(long long i) const { return counts_.at(static_cast<size_t>(i - 1)); }

    bool operator==(const MultiIndex& o) const = default;

    std::string to_string() const; // "(8,0,0,1)"

private:
    long long degree_;
    std::vector<long long> counts_;
};

enum class NoetherCheck {
    Ok,
    SelfIntersectionMismatch, // sum i^2 nu_i != d^2 - 1, checked first
    GenusMismatch,            // sum i nu_i != 3(d-1)
};

struct NoetherStatus {
    NoetherCheck check = NoetherCheck::Ok;
    long long deficit = 0; // signed: (sum) - (expected)

    bool ok() const { return check == NoetherCheck::Ok; }
};

NoetherStatus noether_status(const MultiIndex& nu);

// Base-point multiplicities m_1 >= m_2 >= ... >= m_r, r = sum nu_i.
class MultiplicityProfile {
public:
    explicit MultiplicityProfile(std::vector<long long> values);

    const std::vector<long long>& values() const { return values_; }
    size_t size() const { return values_.size(); }
    long long operator[](size_t i) const { return values_[i]; }

    long long sum() const;
    long long sum_of_squares() const;

private:
    std::vector<long long> values_;
};

// Multiplicity extraction: value j repeated nu_j times, highest first.
MultiplicityProfile multiplicities(const MultiIndex& nu);

long long reduced_length(const MultiIndex& nu); // r   = sum nu_i
long long length(const MultiIndex& nu);         // rho = sum i(i+1) nu_i / 2

// All solutions of  sum i^2 nu_i = d^2-1,  sum i nu_i = 3(d-1)  for fixed d,
// in lexicographically decreasing order on the reversed tuple
// (nu_{d-1},...,nu_1), so the de Jonquieres type comes first when present.
std::vector<MultiIndex> enumerate_noether(long long d);

bool is_de_jonquieres(const MultiIndex& nu);
bool is_symmetric(const MultiIndex& nu);

// (d-1)(2d-1) == sum i(d-i) nu_i; holds for every Noether solution.
bool check_identity_2dm1(const MultiIndex& nu);

} // namespace cremona

#endif
