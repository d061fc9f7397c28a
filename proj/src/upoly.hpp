#ifndef CREMONA_UPOLY_HPP
#define CREMONA_UPOLY_HPP

#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

// Univariate polynomials over a generic coefficient ring, stacked three deep
// to view trivariate forms as elements of Q[z][y][x].  Used only for gcd
// computation: content/primitive-part recursion with subresultant
// pseudo-remainder sequences.

namespace cremona {

template <class R>
class UPoly;

template <class R>
struct RingOps; // is_zero, zero, one, add, sub, mul, neg, divexact, gcd

template <>
struct RingOps<Rational> {
    static bool is_zero(const Rational& a) { return a == 0; }
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational add(const Rational& a, const Rational& b) { return a + b; }
    static Rational sub(const Rational& a, const Rational& b) { return a - b; }
    static Rational mul(const Rational& a, const Rational& b) { return a * b; }
    static Rational neg(const Rational& a) { return -a; }
    static Rational divexact(const Rational& a, const Rational& b) {
        if (b == 0) fail(Err::Internal, "division by zero rational");
        return a / b;
    }
    // over a field every nonzero element is a unit
    static Rational gcd(const Rational& a, const Rational& b) {
        return (a == 0 && b == 0) ? Rational(0) : Rational(1);
    }
};

template <class R>
class UPoly {
public:
    UPoly() = default; // zero polynomial

    static UPoly constant(R c) {
        UPoly p;
        if (!RingOps<R>::is_zero(c)) p.c_.push_back(std::move(c));
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    int deg() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const R& lc() const { return c_.back(); }
    const R& coeff(int i) const { return c_[static_cast<size_t>(i)]; }

    void set_coeff(int i, R v) {
        if (i >= static_cast<int>(c_.size())) c_.resize(static_cast<size_t>(i) + 1, RingOps<R>::zero());
        c_[static_cast<size_t>(i)] = std::move(v);
        trim();
    }

    void trim() {
        while (!c_.empty() && RingOps<R>::is_zero(c_.back())) c_.pop_back();
    }

    std::vector<R> c_; // c_[i] multiplies t^i; invariant: back() nonzero

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        UPoly s;
        s.c_.resize(std::max(a.c_.size(), b.c_.size()), RingOps<R>::zero());
        for (size_t i = 0; i < a.c_.size(); ++i) s.c_[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) s.c_[i] = RingOps<R>::add(s.c_[i], b.c_[i]);
        s.trim();
        return s;
    }

    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        UPoly s;
        s.c_.resize(std::max(a.c_.size(), b.c_.size()), RingOps<R>::zero());
        for (size_t i = 0; i < a.c_.size(); ++i) s.c_[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) s.c_[i] = RingOps<R>::sub(s.c_[i], b.c_[i]);
        s.trim();
        return s;
    }

    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        UPoly p;
        if (a.is_zero() || b.is_zero()) return p;
        p.c_.resize(a.c_.size() + b.c_.size() - 1, RingOps<R>::zero());
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                p.c_[i + j] = RingOps<R>::add(p.c_[i + j], RingOps<R>::mul(a.c_[i], b.c_[j]));
        p.trim();
        return p;
    }

    UPoly scaled(const R& s) const {
        UPoly p;
        p.c_.reserve(c_.size());
        for (const R& v : c_) p.c_.push_back(RingOps<R>::mul(v, s));
        p.trim();
        return p;
    }

    UPoly div_scalar_exact(const R& s) const {
        UPoly p;
        p.c_.reserve(c_.size());
        for (const R& v : c_) p.c_.push_back(RingOps<R>::divexact(v, s));
        return p;
    }

    UPoly shifted(int k) const { // multiply by t^k
        UPoly p;
        if (is_zero()) return p;
        p.c_.resize(c_.size() + static_cast<size_t>(k), RingOps<R>::zero());
        for (size_t i = 0; i < c_.size(); ++i) p.c_[i + static_cast<size_t>(k)] = c_[i];
        return p;
    }
};

template <class R>
R upoly_content(const UPoly<R>& p) {
    R c = RingOps<R>::zero();
    for (const R& v : p.c_)
        if (!RingOps<R>::is_zero(v)) c = RingOps<R>::gcd(c, v);
    return c;
}

// pseudo-remainder: lc(B)^(deg A - deg B + 1) * A = Q*B + prem(A, B)
template <class R>
UPoly<R> upoly_prem(UPoly<R> A, const UPoly<R>& B) {
    if (B.is_zero()) fail(Err::Internal, "pseudo-remainder by zero");
    int e = A.deg() - B.deg() + 1;
    const R& lb = B.lc();
    while (!A.is_zero() && A.deg() >= B.deg()) {
        UPoly<R> t = B.shifted(A.deg() - B.deg()).scaled(A.lc());
        A = A.scaled(lb) - t;
        --e;
    }
    for (; e > 0; --e) A = A.scaled(lb);
    return A;
}

// exact polynomial division; fails internally if not exact
template <class R>
UPoly<R> upoly_divexact(UPoly<R> A, const UPoly<R>& B) {
    if (B.is_zero()) fail(Err::Internal, "polynomial division by zero");
    UPoly<R> Q;
    if (A.is_zero()) return Q;
    if (A.deg() < B.deg()) fail(Err::Internal, "inexact polynomial division");
    Q.c_.resize(static_cast<size_t>(A.deg() - B.deg()) + 1, RingOps<R>::zero());
    while (!A.is_zero()) {
        if (A.deg() < B.deg()) fail(Err::Internal, "inexact polynomial division");
        R q = RingOps<R>::divexact(A.lc(), B.lc());
        const int k = A.deg() - B.deg();
        A = A - B.shifted(k).scaled(q);
        if (!A.is_zero() && A.deg() >= B.deg() + k)
            fail(Err::Internal, "inexact polynomial division");
        Q.c_[static_cast<size_t>(k)] = std::move(q);
    }
    Q.trim();
    return Q;
}

template <class R>
R ring_pow(R base, int e) {
    R acc = RingOps<R>::one();
    for (int i = 0; i < e; ++i) acc = RingOps<R>::mul(acc, base);
    return acc;
}

// subresultant PRS gcd (content/primitive-part Euclid)
template <class R>
UPoly<R> upoly_gcd(UPoly<R> A, UPoly<R> B) {
    if (A.is_zero()) return B;
    if (B.is_zero()) return A;

    const R ca = upoly_content(A);
    const R cb = upoly_content(B);
    A = A.div_scalar_exact(ca);
    B = B.div_scalar_exact(cb);
    const R d = RingOps<R>::gcd(ca, cb);

    if (A.deg() < B.deg()) std::swap(A, B);
    R g = RingOps<R>::one();
    R h = RingOps<R>::one();
    while (true) {
        const int delta = A.deg() - B.deg();
        UPoly<R> rem = upoly_prem(A, B);
        if (rem.is_zero()) break;
        if (B.deg() == 0 || rem.deg() == 0) {
            // primitive parts are coprime
            return UPoly<R>::constant(d);
        }
        A = std::move(B);
        B = rem.div_scalar_exact(RingOps<R>::mul(g, ring_pow(h, delta)));
        g = A.lc();
        if (delta > 0) h = RingOps<R>::divexact(ring_pow(g, delta), ring_pow(h, delta - 1));
    }
    const R cB = upoly_content(B);
    return B.div_scalar_exact(cB).scaled(d);
}

template <class R>
struct RingOps<UPoly<R>> {
    static bool is_zero(const UPoly<R>& a) { return a.is_zero(); }
    static UPoly<R> zero() { return UPoly<R>(); }
    static UPoly<R> one() { return UPoly<R>::constant(RingOps<R>::one()); }
    static UPoly<R> add(const UPoly<R>& a, const UPoly<R>& b) { return a + b; }
    static UPoly<R> sub(const UPoly<R>& a, const UPoly<R>& b) { return a - b; }
    static UPoly<R> mul(const UPoly<R>& a, const UPoly<R>& b) { return a * b; }
    static UPoly<R> neg(const UPoly<R>& a) { return UPoly<R>() - a; }
    static UPoly<R> divexact(const UPoly<R>& a, const UPoly<R>& b) { return upoly_divexact(a, b); }
    static UPoly<R> gcd(const UPoly<R>& a, const UPoly<R>& b) { return upoly_gcd(a, b); }
};

using PolyZ = UPoly<Rational>;      // Q[z]
using PolyYZ = UPoly<PolyZ>;        // Q[z][y]
using PolyXYZ = UPoly<PolyYZ>;      // Q[z][y][x]

} // namespace cremona

#endif
