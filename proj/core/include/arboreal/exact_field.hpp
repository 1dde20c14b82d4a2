#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "arboreal/errors.hpp"
#include "arboreal/factor.hpp"

namespace arboreal {

using Rat = mpq_class;

bool is_square(const Int& n);
std::optional<Rat> sqrt_Q(const Rat& x);
bool is_square_Q(const Rat& x);
Int squarefree_kernel(const Rat& x);  // x != 0; num*den with square factors removed, signed

// a + b*sqrt(d). Tag d = 0 marks a plain rational that adopts the tag of the
// other operand in mixed arithmetic; nonzero tags are squarefree and not 1.
class QuadElem {
public:
    QuadElem() = default;
    QuadElem(const Rat& a) : a_(a) {}  // NOLINT: implicit lift from Q
    QuadElem(long a) : a_(a) {}        // NOLINT
    QuadElem(const Rat& a, const Rat& b, const Int& d);

    static QuadElem sqrt_of(const Int& d) { return QuadElem(0, 1, d); }

    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }
    const Int& d() const { return d_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }

    QuadElem conj() const;
    Rat norm() const { return a_ * a_ - Rat(d_) * b_ * b_; }
    QuadElem inverse() const;
    QuadElem with_tag(const Int& d) const;

    QuadElem& operator+=(const QuadElem& o);
    QuadElem& operator-=(const QuadElem& o);
    QuadElem& operator*=(const QuadElem& o);
    QuadElem& operator/=(const QuadElem& o) { return *this *= o.inverse(); }

    friend QuadElem operator+(QuadElem x, const QuadElem& y) { return x += y; }
    friend QuadElem operator-(QuadElem x, const QuadElem& y) { return x -= y; }
    friend QuadElem operator*(QuadElem x, const QuadElem& y) { return x *= y; }
    friend QuadElem operator/(QuadElem x, const QuadElem& y) { return x /= y; }
    QuadElem operator-() const;

    friend bool operator==(const QuadElem& x, const QuadElem& y);

private:
    Int merge_tag(const QuadElem& o) const;

    Rat a_{0};
    Rat b_{0};
    Int d_{0};
};

bool is_square_quad(const QuadElem& x);

// Uniform helpers for code generic over Rat and QuadElem.
inline bool is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool is_zero(const QuadElem& x) { return x.is_zero(); }
inline Rat inverse(const Rat& x) { return 1 / x; }
inline QuadElem inverse(const QuadElem& x) { return x.inverse(); }
inline Rat conj(const Rat& x) { return x; }
inline QuadElem conj(const QuadElem& x) { return x.conj(); }

template <class F>
F power(F base, unsigned long e) {
    F r(1);
    while (e) {
        if (e & 1u) r = F(r * base);
        e >>= 1;
        if (e) base = F(base * base);
    }
    return r;
}

template <class F>
struct ProjPoint {
    F s{0};
    F t{1};

    bool is_infinity() const { return is_zero(t); }
};

template <class F>
ProjPoint<F> make_point(const F& s, const F& t) {
    if (is_zero(s) && is_zero(t)) throw DomainError("projective point (0,0)");
    return {s, t};
}

template <class F>
ProjPoint<F> infinity_point() {
    return {F(1), F(0)};
}

template <class F>
bool same_point(const ProjPoint<F>& p, const ProjPoint<F>& q) {
    return is_zero(F(p.s * q.t - p.t * q.s));
}

// [s:1] or [1:0].
ProjPoint<QuadElem> normalize(const ProjPoint<QuadElem>& p);
// Primitive integer coordinates, first nonzero coordinate positive.
ProjPoint<Rat> normalize(const ProjPoint<Rat>& p);

ProjPoint<QuadElem> lift(const ProjPoint<Rat>& p);

// Affine value s/t of a finite point.
template <class F>
F affine(const ProjPoint<F>& p) {
    if (p.is_infinity()) throw DomainError("point at infinity has no affine value");
    return F(p.s / p.t);
}

template <class F>
struct CrossRatio {
    bool infinite = false;
    F value{0};
};

// (a-b)(c-e) / ((a-c)(b-e)) in homogeneous form. Throws Indeterminate on 0/0.
template <class F>
CrossRatio<F> cross_ratio(const ProjPoint<F>& a, const ProjPoint<F>& b, const ProjPoint<F>& c,
                          const ProjPoint<F>& e) {
    auto det = [](const ProjPoint<F>& p, const ProjPoint<F>& q) { return F(p.s * q.t - p.t * q.s); };
    const F num = F(det(a, b) * det(c, e));
    const F den = F(det(a, c) * det(b, e));
    if (is_zero(den)) {
        if (is_zero(num)) throw Indeterminate("cross ratio is 0/0");
        return {true, F(0)};
    }
    return {false, F(num / den)};
}

Rat parse_rat(std::string_view text);
std::string format_rat(const Rat& x);
QuadElem parse_quad(std::string_view text);
std::string format_quad(const QuadElem& x);

inline std::string format(const Rat& x) { return format_rat(x); }
inline std::string format(const QuadElem& x) { return format_quad(x); }

template <class F>
std::string format(const ProjPoint<F>& p) {
    return "[" + format(p.s) + ":" + format(p.t) + "]";
}

}  // namespace arboreal
