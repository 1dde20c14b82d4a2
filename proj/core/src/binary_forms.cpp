#include "arboreal/binary_forms.hpp"

#include <sstream>

namespace arboreal {

namespace {

Rat require_rational(const QuadElem& x, const char* what) {
    if (!x.is_rational()) throw InternalError(std::string(what) + " is not rational: " + format_quad(x));
    return x.a();
}

}  // namespace

CriticalLifts critical_lifts(const FormPair<Rat>& pair) {
    if (pair.degree() != 2) throw DomainError("critical lifts are implemented for degree 2");
    const BForm<Rat> d = homog_differential(pair);
    const Rat& e0 = d[0];
    const Rat& e1 = d[1];
    const Rat& e2 = d[2];
    const Rat disc = e1 * e1 - 4 * e0 * e2;
    if (sgn(disc) == 0) throw DegenerateMap("repeated critical point");
    CriticalLifts out;
    if (sgn(e0) == 0) {
        out.c = -e1;
        out.xi1 = {QuadElem(1), QuadElem(0)};
        out.xi2 = {QuadElem(Rat(-e2 / e1)), QuadElem(1)};
        return out;
    }
    out.c = e0;
    const Rat mid = -e1 / (2 * e0);
    if (auto r = sqrt_Q(disc)) {
        const Rat half = *r / (2 * e0);
        out.xi1 = {QuadElem(Rat(mid + half)), QuadElem(1)};
        out.xi2 = {QuadElem(Rat(mid - half)), QuadElem(1)};
        return out;
    }
    out.delta = squarefree_kernel(disc);
    const auto k = sqrt_Q(Rat(disc / Rat(out.delta)));
    if (!k) throw InternalError("discriminant is not delta times a square");
    const QuadElem z(mid, Rat(*k / (2 * e0)), out.delta);
    out.xi1 = {z, QuadElem(1)};
    out.xi2 = {z.conj(), QuadElem(1)};
    return out;
}

Rat critical_product(const FormPair<Rat>& pair, const CriticalLifts& lifts, const Rat& s0, const Rat& t0,
                     unsigned n) {
    const BForm<QuadElem> p = lift(pair.P());
    const BForm<QuadElem> q = lift(pair.Q());
    QuadElem prod(1);
    for (const auto* xi : {&lifts.xi1, &lifts.xi2}) {
        QuadElem x = xi->s;
        QuadElem y = xi->t;
        for (unsigned i = 0; i < n; ++i) {
            QuadElem nx = p.eval(x, y);
            QuadElem ny = q.eval(x, y);
            x = std::move(nx);
            y = std::move(ny);
        }
        prod *= QuadElem(t0) * x - QuadElem(s0) * y;
    }
    return require_rational(prod, "critical product");
}

bool check_iterdisc(const FormPair<Rat>& pair, const Rat& s0, const Rat& t0, unsigned n) {
    if (pair.degree() != 2) throw DomainError("iterated discriminant check is for degree 2");
    if (n == 0) throw DomainError("iterated discriminant check needs n >= 1");
    if (sgn(s0) == 0 && sgn(t0) == 0) throw DomainError("base point (0, 0)");
    const CriticalLifts lifts = critical_lifts(pair);
    auto h = [&](unsigned k) {
        auto [pk, qk] = iterate_pair(pair, k);
        return t0 * pk - s0 * qk;
    };
    const Rat lhs = discriminant(h(n));
    const long d = 2;
    const long dn1 = 1L << (n - 1);
    const long dn = 2 * dn1;
    Rat rhs = power(lifts.c, static_cast<unsigned long>(dn)) * power(discriminant(h(n - 1)), d) *
              signed_power(pair.res(), dn1 * (dn1 - 2)) * critical_product(pair, lifts, s0, t0, n);
    if (((dn * (d - 1)) / 2) & 1) rhs = -rhs;
    return lhs == rhs;
}

bool check_discsquare(const FormPair<Rat>& pair, const Rat& s0, const Rat& t0, unsigned ell) {
    const CriticalLifts lifts = critical_lifts(pair);
    if (!is_square_Q(Rat(pair.res() * critical_product(pair, lifts, s0, t0, ell)))) return false;
    for (unsigned n = ell + 1; n <= ell + 2; ++n)
        if (!is_square_Q(critical_product(pair, lifts, s0, t0, n))) return false;
    return true;
}

bool check_polyiter(const std::vector<Rat>& f, const Rat& x0, unsigned n) {
    if (f.size() < 3) throw DomainError("polynomial must have degree at least 2");
    if (sgn(f.front()) == 0) throw DomainError("leading coefficient is zero");
    if (n == 0) throw DomainError("polynomial check needs n >= 1");
    const unsigned long d = f.size() - 1;
    const Rat a = f.front();
    std::vector<Rat> ycoef(d + 1, Rat(0));
    ycoef.back() = 1;
    const FormPair<Rat> pair{BForm<Rat>(f), BForm<Rat>(ycoef)};
    auto h = [&](unsigned k) {
        auto [pk, qk] = iterate_pair(pair, k);
        return pk - x0 * qk;
    };
    unsigned long dn = 1;
    for (unsigned i = 0; i < n; ++i) dn *= d;
    const BForm<Rat> hn = h(n);
    const Rat lhs = discriminant(hn);
    const Rat prev = discriminant(h(n - 1));
    const Rat crit = resultant(pair.P().dX(), hn) / power(Rat(Rat(long(d)) * a), dn);
    unsigned long a_exp = 1;
    for (unsigned i = 0; i + 1 < 2 * n; ++i) a_exp *= d;
    Rat rhs = power(Rat(long(d)), dn) * power(a, a_exp - 1) * power(prev, d) * crit;
    if (((dn * (d - 1)) / 2) & 1u) rhs = -rhs;
    return lhs == rhs;
}

BForm<Rat> parse_form(std::string_view text) {
    std::istringstream in{std::string(text)};
    unsigned long m;
    if (!(in >> m)) throw ParseError("form must start with its degree");
    std::vector<Rat> c;
    std::string tok;
    while (in >> tok) c.push_back(parse_rat(tok));
    if (c.size() != m + 1) throw ParseError("form of degree " + std::to_string(m) + " needs " +
                                            std::to_string(m + 1) + " coefficients");
    return BForm<Rat>(std::move(c));
}

}  // namespace arboreal
