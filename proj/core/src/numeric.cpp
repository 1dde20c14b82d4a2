#include "arboreal/numeric.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace arboreal {

Real::Real(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

Real::Real(const Rat& x, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN);
}

Real::Real(long x, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, x, MPFR_RNDN);
}

Real::Real(const Real& o) {
    mpfr_init2(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept {
    mpfr_init2(v_, o.precision());
    mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, o.precision());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

double Real::log2_abs() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    Real t(precision());
    mpfr_abs(t.v_, v_, MPFR_RNDN);
    mpfr_log2(t.v_, t.v_, MPFR_RNDN);
    return t.to_double();
}

std::string Real::str(int digits) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

namespace {

mpfr_prec_t wider(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

}  // namespace

Real operator+(const Real& a, const Real& b) {
    Real r(wider(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b) {
    Real r(wider(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b) {
    Real r(wider(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b) {
    Real r(wider(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

Real Real::operator-() const {
    Real r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

Real sqrt(const Real& a) {
    Real r(a.precision());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Real abs(const Real& a) {
    Real r(a.precision());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
}

Real hypot(const Real& a, const Real& b) {
    Real r(wider(a, b));
    mpfr_hypot(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

std::string Complex::str(int digits) const {
    std::string s = re.str(digits);
    if (!im.is_zero()) s += (im.sign() < 0 ? " - " : " + ") + arboreal::abs(im).str(digits) + "i";
    return s;
}

Complex operator/(const Complex& a, const Complex& b) {
    const Real den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

Complex principal_sqrt(const Complex& z) {
    const mpfr_prec_t p = z.precision();
    if (z.is_zero()) return Complex(p);
    const Real r = z.abs();
    const Real two(2L, p);
    Real re = sqrt((r + z.re) / two);
    Real im = sqrt((r - z.re) / two);
    if (z.im.sign() < 0) im = -im;
    return {std::move(re), std::move(im)};
}

Real relative_error(const Complex& a, const Complex& b) {
    const Real diff = (a - b).abs();
    if (b.is_zero()) return diff;
    return diff / b.abs();
}

Real numeric_tolerance(mpfr_prec_t precision) {
    Real t(1L, precision);
    mpfr_mul_2si(t.get(), t.get(), -static_cast<long>(precision / 2), MPFR_RNDN);
    return t;
}

std::optional<NormalCoeffs> normal_coeffs(const QuadMap& f) {
    const auto& p = f.P();
    const auto& q = f.Q();
    if (sgn(p[1]) != 0 || sgn(q[1]) != 0 || sgn(q[0]) == 0) return std::nullopt;
    return NormalCoeffs{p[0] / q[0], p[2] / q[0], q[2] / q[0]};
}

PreimageTree numeric_preimage_tree(const NormalCoeffs& f, const ProjPoint<Rat>& x, unsigned n,
                                   mpfr_prec_t precision) {
    if (n > 12) throw GuardExceeded("preimage trees are capped at depth 12");
    PreimageTree tree;
    tree.root = normalize(x);
    tree.depth = n;
    tree.precision = precision;
    tree.levels.resize(n + 1);
    if (n == 0) {
        if (!tree.root.is_infinity()) tree.levels[0].emplace_back(affine(tree.root), precision);
        return tree;
    }

    const Complex A(f.A, precision), B(f.B, precision), C(f.C, precision);
    const Real tol = numeric_tolerance(precision);
    auto radicand = [&](const Complex& w) {
        const Complex den = A - w;
        if (den.abs() < tol) throw DomainError("a preimage of infinity appears in the tree");
        return (C * w - B) / den;
    };

    std::vector<Complex> first;
    if (tree.root.is_infinity()) {
        first.push_back(principal_sqrt(Complex(Rat(-f.C), precision)));
    } else {
        const Rat w = affine(tree.root);
        if (w == f.A) throw DomainError("a preimage of infinity appears in the tree");
        tree.levels[0].emplace_back(w, precision);
        first.push_back(principal_sqrt(Complex(Rat((f.C * w - f.B) / (f.A - w)), precision)));
    }
    first.push_back(-first.front());
    tree.levels[1] = std::move(first);

    for (unsigned k = 2; k <= n; ++k) {
        auto& out = tree.levels[k];
        out.reserve(std::size_t{1} << k);
        for (const Complex& w : tree.levels[k - 1]) {
            Complex z = principal_sqrt(radicand(w));
            out.push_back(z);
            out.push_back(-z);
        }
    }
    return tree;
}

std::string NumericReport::summary() const {
    std::ostringstream os;
    os << "n=" << n << " precision=" << precision << " left=" << left.str(12) << " right=" << right.str(12)
       << " log2(rel err)=" << log2_error << " sign=" << (sign_reversed ? "reversed" : "as-labeled")
       << " match=" << (matched ? "yes" : "no");
    return os.str();
}

namespace {

struct Orbits {
    std::vector<ProjPoint<Rat>> zero, inf;
};

Orbits orbits(const NormalCoeffs& f, unsigned n) {
    const QuadMap g = normal_form_map(f.A, f.B, f.C);
    return {forward_orbit(g, ProjPoint<Rat>{Rat(0), Rat(1)}, n), forward_orbit(g, ProjPoint<Rat>{Rat(1), Rat(0)}, n)};
}

Rat finite_cross_ratio(const ProjPoint<Rat>& a, const ProjPoint<Rat>& b, const ProjPoint<Rat>& c,
                       const ProjPoint<Rat>& d) {
    const auto cr = cross_ratio(a, b, c, d);
    if (cr.infinite) throw DomainError("point lies in the forward orbit of f(inf)");
    return cr.value;
}

Complex product(const std::vector<Complex>& level, std::size_t first, std::size_t count, mpfr_prec_t p) {
    Complex out(Rat(1), p);
    for (std::size_t v = first; v < first + count; ++v) out = out * level[2 * v];
    return out;
}

void finish(NumericReport& r) {
    r.rel_error = relative_error(r.left, r.right);
    r.log2_error = r.rel_error.log2_abs();
    r.matched = !(numeric_tolerance(r.precision) < r.rel_error);
}

}  // namespace

NumericReport verify_preimage_product(const NormalCoeffs& f, const ProjPoint<Rat>& w, unsigned n,
                                      mpfr_prec_t precision) {
    if (n == 0) throw DomainError("n must be positive");
    const Orbits o = orbits(f, n);
    const ProjPoint<Rat> pw = normalize(w);
    Rat ratio = 1;
    if (!pw.is_infinity()) {
        const Rat x = affine(pw);
        if (o.zero[n].is_infinity() || o.inf[n].is_infinity())
            throw DomainError("critical orbit reaches infinity");
        const Rat den = x - affine(o.inf[n]);
        if (sgn(den) == 0) throw DomainError("point lies in the forward orbit of f(inf)");
        ratio = (x - affine(o.zero[n])) / den;
    }
    const PreimageTree tree = numeric_preimage_tree(f, pw, n, precision);
    NumericReport r;
    r.precision = precision;
    r.n = n;
    const Complex prod = product(tree.levels[n], 0, std::size_t{1} << (n - 1), precision);
    r.left = prod * prod;
    r.right = Complex(Rat(q_n(f.A, f.B, f.C, n) * ratio), precision);
    finish(r);
    return r;
}

NumericReport verify_lemma_Qn(const NormalCoeffs& f, unsigned ell, const ProjPoint<Rat>& x,
                              mpfr_prec_t precision) {
    const Orbits o = orbits(f, ell);
    const Rat rhs = 4 * q_value(f.A, f.B, f.C, ell) * finite_cross_ratio(normalize(x), o.zero[1], o.inf[ell], o.inf[1]);
    const PreimageTree tree = numeric_preimage_tree(f, x, ell, precision);
    const std::size_t m = std::size_t{1} << (ell - 2);
    const Complex sa = product(tree.levels[ell], 0, m, precision);
    const Complex sb = product(tree.levels[ell], m, m, precision);
    const Complex plus = (sa + sb) * (sa + sb);
    const Complex minus = (sb - sa) * (sb - sa);

    NumericReport r;
    r.precision = precision;
    r.n = ell;
    r.right = Complex(rhs, precision);
    r.left = plus;
    finish(r);
    NumericReport alt = r;
    alt.left = minus;
    alt.sign_reversed = true;
    finish(alt);
    const bool both = r.matched && alt.matched;
    NumericReport& out = (!r.matched && alt.matched) ? alt : r;
    out.both_signs_match = both;
    if (both && sgn(rhs) != 0) out.matched = false;  // exactly one choice may match
    return out;
}

NumericReport verify_lemma_Rn(const NormalCoeffs& f, unsigned ell, const ProjPoint<Rat>& x, unsigned n,
                              mpfr_prec_t precision) {
    if (n < ell + 1) throw DomainError("Rn check needs n >= l + 1");
    if (n > 10) throw GuardExceeded("Rn check is capped at n = 10");
    const Orbits o = orbits(f, n);
    const Rat rn = r_value(f.A, f.B, f.C, n, ell);
    const Rat rhs = rn * rn * finite_cross_ratio(normalize(x), o.zero[n - ell + 1], o.inf[n], o.inf[1]);
    const Complex q(q_value(f.A, f.B, f.C, ell), precision);
    const PreimageTree tree = numeric_preimage_tree(f, x, n, precision);
    const auto& leaves = tree.levels[n];
    const std::size_t m = std::size_t{1} << (ell - 2);
    const std::size_t blocks = std::size_t{1} << (n - ell);

    NumericReport r;
    r.precision = precision;
    r.n = n;
    r.left = Complex(Rat(1), precision);
    for (std::size_t u = 0; u < blocks; ++u) {
        // children of node u at level n - l are 2u and 2u + 1; their level n - 1
        // descendants are consecutive runs of m nodes.
        Complex sa = product(leaves, 2 * u * m, m, precision);
        const Complex sb = product(leaves, (2 * u + 1) * m, m, precision);
        const Complex pr = sa * sb;
        if ((pr + q).abs() < (pr - q).abs()) {
            sa = -sa;
            r.sign_reversed = true;
        }
        r.left = r.left * ((sa + sb) * (sa + sb));
    }
    r.right = Complex(rhs, precision);
    finish(r);
    return r;
}

}  // namespace arboreal
