#pragma once

#include <string>
#include <vector>

#include "arboreal/bareiss.hpp"
#include "arboreal/exact_field.hpp"

namespace arboreal {

// sum_i c_i X^{m-i} Y^i. Leading zeros are allowed: the formal degree is kept,
// so a root at [1:0] is visible.
template <class F>
class BForm {
public:
    BForm() : c_{F(0)} {}
    explicit BForm(std::vector<F> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw DomainError("binary form needs at least one coefficient");
    }

    static BForm constant(const F& a) { return BForm({a}); }
    static BForm X() { return BForm({F(1), F(0)}); }
    static BForm Y() { return BForm({F(0), F(1)}); }
    static BForm linear(const F& a, const F& b) { return BForm({a, b}); }  // aX + bY

    unsigned degree() const { return static_cast<unsigned>(c_.size() - 1); }
    const std::vector<F>& coeffs() const { return c_; }
    const F& operator[](std::size_t i) const { return c_[i]; }

    bool is_zero() const {
        for (const F& x : c_)
            if (!arboreal::is_zero(x)) return false;
        return true;
    }

    F eval(const F& x, const F& y) const {
        // Horner in x with powers of y folded in.
        F acc = c_[0];
        F ypow(1);
        for (std::size_t i = 1; i < c_.size(); ++i) {
            ypow = F(ypow * y);
            acc = F(acc * x + c_[i] * ypow);
        }
        return acc;
    }

    BForm dX() const {
        const unsigned m = degree();
        if (m == 0) return BForm({F(0)});
        std::vector<F> d;
        d.reserve(m);
        for (unsigned i = 0; i < m; ++i) d.push_back(F(c_[i] * F(long(m - i))));
        return BForm(std::move(d));
    }

    BForm dY() const {
        const unsigned m = degree();
        if (m == 0) return BForm({F(0)});
        std::vector<F> d;
        d.reserve(m);
        for (unsigned i = 1; i <= m; ++i) d.push_back(F(c_[i] * F(long(i))));
        return BForm(std::move(d));
    }

    BForm div_X() const {
        if (!arboreal::is_zero(c_.back())) throw InternalError("form is not divisible by X");
        if (degree() == 0) throw InternalError("cannot divide a constant by X");
        return BForm(std::vector<F>(c_.begin(), c_.end() - 1));
    }

    BForm div_Y() const {
        if (!arboreal::is_zero(c_.front())) throw InternalError("form is not divisible by Y");
        if (degree() == 0) throw InternalError("cannot divide a constant by Y");
        return BForm(std::vector<F>(c_.begin() + 1, c_.end()));
    }

    friend bool operator==(const BForm& a, const BForm& b) { return a.c_ == b.c_; }

    friend BForm operator+(const BForm& a, const BForm& b) {
        a.require_same_degree(b);
        std::vector<F> c(a.c_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = F(a.c_[i] + b.c_[i]);
        return BForm(std::move(c));
    }

    friend BForm operator-(const BForm& a, const BForm& b) {
        a.require_same_degree(b);
        std::vector<F> c(a.c_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = F(a.c_[i] - b.c_[i]);
        return BForm(std::move(c));
    }

    friend BForm operator*(const F& s, const BForm& a) {
        std::vector<F> c(a.c_.size());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = F(s * a.c_[i]);
        return BForm(std::move(c));
    }

    friend BForm operator*(const BForm& a, const BForm& b) {
        std::vector<F> c(a.c_.size() + b.c_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (arboreal::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += F(a.c_[i] * b.c_[j]);
        }
        return BForm(std::move(c));
    }

private:
    void require_same_degree(const BForm& o) const {
        if (c_.size() != o.c_.size()) throw DomainError("adding forms of different degree");
    }

    std::vector<F> c_;
};

template <class F>
BForm<F> pow(const BForm<F>& a, unsigned e) {
    BForm<F> r = BForm<F>::constant(F(1));
    BForm<F> b = a;
    while (e) {
        if (e & 1u) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

inline BForm<QuadElem> lift(const BForm<Rat>& p) {
    std::vector<QuadElem> c;
    for (const Rat& x : p.coeffs()) c.emplace_back(x);
    return BForm<QuadElem>(std::move(c));
}

// Sylvester determinant; constants follow Res(a, Q) = a^{deg Q}.
template <class F>
F resultant(const BForm<F>& p, const BForm<F>& q) {
    const unsigned m = p.degree();
    const unsigned n = q.degree();
    if (m == 0) return power(p[0], n);
    if (n == 0) return power(q[0], m);
    const std::size_t size = m + n;
    Matrix<F> s(size, std::vector<F>(size, F(0)));
    for (unsigned r = 0; r < n; ++r)
        for (unsigned i = 0; i <= m; ++i) s[r][r + i] = p[i];
    for (unsigned r = 0; r < m; ++r)
        for (unsigned j = 0; j <= n; ++j) s[n + r][r + j] = q[j];
    return determinant(s);
}

// J(P, Q) for forms P, Q of a common degree.
template <class F>
BForm<F> substitute(const BForm<F>& j, const BForm<F>& p, const BForm<F>& q) {
    if (p.degree() != q.degree()) throw DomainError("substitution needs forms of equal degree");
    const unsigned n = j.degree();
    std::vector<BForm<F>> ppow{BForm<F>::constant(F(1))}, qpow{BForm<F>::constant(F(1))};
    for (unsigned i = 0; i < n; ++i) {
        ppow.push_back(ppow.back() * p);
        qpow.push_back(qpow.back() * q);
    }
    BForm<F> h(std::vector<F>(static_cast<std::size_t>(n) * p.degree() + 1, F(0)));
    for (unsigned i = 0; i <= n; ++i) {
        if (is_zero(j[i])) continue;
        h = h + j[i] * (ppow[n - i] * qpow[i]);
    }
    return h;
}

template <class F>
F discriminant(const BForm<F>& p) {
    const unsigned m = p.degree();
    if (m == 0) throw DomainError("discriminant of a constant");
    if (m == 1) return F(1);
    if (p.is_zero()) return F(0);
    BForm<F> w = p;
    if (is_zero(w[0])) {
        // Shear (X, kX + Y) has determinant 1 and leaves the discriminant unchanged.
        long k = 1;
        while (is_zero(p.eval(F(1), F(k)))) ++k;
        w = substitute(p, BForm<F>::X(), BForm<F>::linear(F(k), F(1)));
    }
    F r = F(resultant(w, w.dX()) / w[0]);
    if ((static_cast<unsigned long>(m) * (m - 1) / 2) & 1u) r = F(-r);
    return r;
}

// Two forms of equal positive degree with nonzero resultant.
template <class F>
class FormPair {
public:
    FormPair(BForm<F> p, BForm<F> q) : p_(std::move(p)), q_(std::move(q)) {
        if (p_.degree() != q_.degree() || p_.degree() == 0)
            throw DomainError("form pair needs two forms of equal positive degree");
        res_ = resultant(p_, q_);
        if (is_zero(res_)) throw DegenerateMap("P and Q share a root (Res(P,Q) = 0)");
    }

    const BForm<F>& P() const { return p_; }
    const BForm<F>& Q() const { return q_; }
    unsigned degree() const { return p_.degree(); }
    const F& res() const { return res_; }

private:
    BForm<F> p_;
    BForm<F> q_;
    F res_;
};

// (P_X Q - P Q_X)/Y, checked against (P Q_Y - P_Y Q)/X.
template <class F>
BForm<F> homog_differential(const FormPair<F>& pair) {
    const auto& p = pair.P();
    const auto& q = pair.Q();
    BForm<F> d1 = (p.dX() * q - p * q.dX()).div_Y();
    BForm<F> d2 = (p * q.dY() - p.dY() * q).div_X();
    if (!(d1 == d2)) throw InternalError("the two formulas for the homogeneous differential disagree");
    return d1;
}

template <class F>
BForm<F> compose_form(const BForm<F>& j, const FormPair<F>& pair) {
    if (j.degree() == 0) throw DomainError("compose_form needs deg J >= 1");
    return substitute(j, pair.P(), pair.Q());
}

struct IterGuard {
    unsigned long max_degree = 4096;
};

// F^n = (P_n, Q_n), with F^0 = (X, Y).
template <class F>
std::pair<BForm<F>, BForm<F>> iterate_pair(const FormPair<F>& pair, unsigned n, const IterGuard& guard = {}) {
    unsigned long deg = 1;
    for (unsigned i = 0; i < n; ++i) {
        deg *= pair.degree();
        if (deg > guard.max_degree) throw GuardExceeded("iterate degree exceeds " + std::to_string(guard.max_degree));
    }
    BForm<F> pn = BForm<F>::X();
    BForm<F> qn = BForm<F>::Y();
    for (unsigned i = 0; i < n; ++i) {
        BForm<F> np = substitute(pair.P(), pn, qn);
        BForm<F> nq = substitute(pair.Q(), pn, qn);
        pn = std::move(np);
        qn = std::move(nq);
    }
    return {pn, qn};
}

template <class F>
F signed_power(const F& x, long e) {
    if (e >= 0) return power(x, static_cast<unsigned long>(e));
    return inverse(power(x, static_cast<unsigned long>(-e)));
}

template <class F>
bool check_compres(const FormPair<F>& pair, const F& alpha, const F& beta, const F& alpha_t, const F& beta_t) {
    if ((is_zero(alpha) && is_zero(beta)) || (is_zero(alpha_t) && is_zero(beta_t)))
        throw DomainError("check_compres needs (alpha, beta) != (0, 0)");
    const unsigned m = pair.degree();
    const BForm<F> d = homog_differential(pair);
    const BForm<F> r = beta * pair.P() - alpha * pair.Q();
    const BForm<F> rt = beta_t * pair.P() - alpha_t * pair.Q();
    F rhs1 = F(pair.res() * discriminant(r));
    if ((static_cast<unsigned long>(m) * (m - 1) / 2) & 1u) rhs1 = F(-rhs1);
    const bool first = resultant(r, d) == rhs1;
    const F rhs2 = F(power(F(alpha * beta_t - beta * alpha_t), m) * pair.res());
    const bool second = resultant(r, rt) == rhs2;
    return first && second;
}

template <class F>
bool check_compdisc(const BForm<F>& j, const FormPair<F>& pair) {
    const long m = pair.degree();
    const long n = j.degree();
    const BForm<F> h = compose_form(j, pair);
    const BForm<F> d = homog_differential(pair);
    F rhs = F(power(discriminant(j), static_cast<unsigned long>(m)) * signed_power(pair.res(), n * (n - 2)) *
              resultant(h, d));
    if (((m * n * (m - 1)) / 2) & 1) rhs = F(-rhs);
    return discriminant(h) == rhs;
}

template <class F>
bool check_DPQ(const FormPair<F>& pair) {
    if (pair.degree() != 2) throw DomainError("the differential discriminant identity is for degree 2");
    return discriminant(homog_differential(pair)) == F(F(4) * pair.res());
}

// Factorization D = c (theta1 X - eta1 Y)(theta2 X - eta2 Y) of the degree-2
// differential; the lifts live in Q(sqrt delta) and are conjugate when delta
// is not a square.
struct CriticalLifts {
    Rat c;
    Int delta{1};  // 1 when both critical points are rational
    ProjPoint<QuadElem> xi1;
    ProjPoint<QuadElem> xi2;
};

CriticalLifts critical_lifts(const FormPair<Rat>& pair);

// Iterated-discriminant identity for H_n = t0 P_n - s0 Q_n, degree 2.
bool check_iterdisc(const FormPair<Rat>& pair, const Rat& s0, const Rat& t0, unsigned n);

// prod_i H_n(eta_i, theta_i), exact in Q.
Rat critical_product(const FormPair<Rat>& pair, const CriticalLifts& lifts, const Rat& s0, const Rat& t0,
                     unsigned n);

// For a colliding pair at level ell: Res(P,Q) prod H_ell and prod H_n for
// n = ell+1, ell+2 are rational squares.
bool check_discsquare(const FormPair<Rat>& pair, const Rat& s0, const Rat& t0, unsigned ell);

// Iterated polynomial discriminant identity; f given highest degree first.
bool check_polyiter(const std::vector<Rat>& f, const Rat& x0, unsigned n);

// Text form: degree followed by coefficients c0..cm.
template <class F>
std::string format_form(const BForm<F>& p) {
    std::string s = std::to_string(p.degree());
    for (const F& c : p.coeffs()) s += " " + format(c);
    return s;
}

BForm<Rat> parse_form(std::string_view text);

}  // namespace arboreal
