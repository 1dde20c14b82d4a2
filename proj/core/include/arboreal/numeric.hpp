#pragma once

#include <mpfr.h>

#include <string>
#include <vector>

#include "arboreal/dynamics.hpp"

namespace arboreal {

// Owning MPFR value. Binary operations round to the larger operand precision.
class Real {
public:
    explicit Real(mpfr_prec_t prec = 256);
    Real(const Rat& x, mpfr_prec_t prec);
    Real(long x, mpfr_prec_t prec);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // log2 |x|, -inf for zero.
    double log2_abs() const;
    std::string str(int digits = 20) const;

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    Real operator-() const;
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }

    friend Real sqrt(const Real& a);
    friend Real abs(const Real& a);
    friend Real hypot(const Real& a, const Real& b);

private:
    mpfr_t v_;
};

Real sqrt(const Real& a);
Real abs(const Real& a);
Real hypot(const Real& a, const Real& b);

struct Complex {
    Real re, im;

    explicit Complex(mpfr_prec_t prec = 256) : re(prec), im(prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(const Rat& x, mpfr_prec_t prec) : re(x, prec), im(0L, prec) {}

    mpfr_prec_t precision() const { return re.precision(); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    Real abs() const { return hypot(re, im); }
    std::string str(int digits = 20) const;

    friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
    friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b);
    Complex operator-() const { return {-re, -im}; }
};

// Principal root; on the negative real axis the root with Im >= 0.
Complex principal_sqrt(const Complex& z);

// |a - b| / |b|, or |a| when b = 0.
Real relative_error(const Complex& a, const Complex& b);

struct NormalCoeffs {
    Rat A, B, C;
};

// (A, B, C) when f = (A z^2 + B)/(z^2 + C) up to scaling the lift.
std::optional<NormalCoeffs> normal_coeffs(const QuadMap& f);

// Complete preimage tree of x under a normal-form map. Level k holds 2^k
// values; node v at level k has children 2v (principal root) and 2v + 1
// (its negative). The root itself is not stored when it is infinity.
struct PreimageTree {
    ProjPoint<Rat> root;
    unsigned depth = 0;
    mpfr_prec_t precision = 256;
    std::vector<std::vector<Complex>> levels;  // levels[0] is empty for an infinite root

    const Complex& node(unsigned level, std::size_t v) const { return levels.at(level).at(v); }
    std::size_t parent(std::size_t v) const { return v >> 1; }
};

PreimageTree numeric_preimage_tree(const NormalCoeffs& f, const ProjPoint<Rat>& x, unsigned n,
                                   mpfr_prec_t precision = 256);

struct NumericReport {
    mpfr_prec_t precision = 256;
    unsigned n = 0;
    Complex left;
    Complex right;
    Real rel_error;
    double log2_error = 0;
    bool sign_reversed = false;  // alpha_m and -alpha_m swapped (in at least one block)
    bool both_signs_match = false;
    bool matched = false;

    std::string summary() const;
};

// Tolerance used by every numeric check: relative 2^{-precision/2}.
Real numeric_tolerance(mpfr_prec_t precision);

// (prod alpha_i + prod alpha'_i)^2 = 4 q_{l-1} CR(x, f(0), f^l(inf), f(inf)).
NumericReport verify_lemma_Qn(const NormalCoeffs& f, unsigned ell, const ProjPoint<Rat>& x,
                              mpfr_prec_t precision = 256);

// prod beta_i^2 over f^{-n}(w) = q_n (w - f^n(0)) / (w - f^n(inf)).
NumericReport verify_preimage_product(const NormalCoeffs& f, const ProjPoint<Rat>& w, unsigned n,
                                      mpfr_prec_t precision = 256);

// Blockwise product over level n, compared against r_n^2 CR(x, f^{n-l+1}(0), f^n(inf), f(inf)).
NumericReport verify_lemma_Rn(const NormalCoeffs& f, unsigned ell, const ProjPoint<Rat>& x, unsigned n,
                              mpfr_prec_t precision = 256);

}  // namespace arboreal
