#include "arboreal/exact_field.hpp"

#include <cctype>
#include <regex>

namespace arboreal {

namespace {

// Drops whitespace, but "1 2" must not read as 12.
std::string strip_spaces(std::string_view text) {
    std::string s;
    bool gap = false;
    for (char c : text) {
        const auto u = static_cast<unsigned char>(c);
        if (std::isspace(u)) {
            gap = !s.empty();
            continue;
        }
        if (gap && std::isdigit(u) && std::isdigit(static_cast<unsigned char>(s.back())))
            throw ParseError("unexpected space inside a number: '" + std::string(text) + "'");
        gap = false;
        s.push_back(c);
    }
    return s;
}

}  // namespace

bool is_square(const Int& n) { return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()); }

std::optional<Rat> sqrt_Q(const Rat& x) {
    if (sgn(x) < 0) return std::nullopt;
    const Int& p = x.get_num();
    const Int& q = x.get_den();
    if (!is_square(p) || !is_square(q)) return std::nullopt;
    Int rp, rq;
    mpz_sqrt(rp.get_mpz_t(), p.get_mpz_t());
    mpz_sqrt(rq.get_mpz_t(), q.get_mpz_t());
    Rat r(rp, rq);
    r.canonicalize();
    return r;
}

bool is_square_Q(const Rat& x) { return sqrt_Q(x).has_value(); }

Int squarefree_kernel(const Rat& x) {
    if (sgn(x) == 0) throw DomainError("square class of zero");
    return squarefree_part(Int(x.get_num() * x.get_den()));
}

QuadElem::QuadElem(const Rat& a, const Rat& b, const Int& d) : a_(a), b_(b) {
    if (d == 0) {
        if (sgn(b) != 0) throw DomainError("irrational part without a field tag");
        return;
    }
    const Int s = squarefree_part(d);
    Int k2 = d / s;
    Int k;
    mpz_sqrt(k.get_mpz_t(), k2.get_mpz_t());
    if (s == 1) {
        a_ += b_ * k;
        b_ = 0;
        return;
    }
    b_ *= k;
    d_ = s;
}

Int QuadElem::merge_tag(const QuadElem& o) const {
    if (d_ == 0) return o.d_;
    if (o.d_ == 0 || o.d_ == d_) return d_;
    throw DomainError("mixing Q(sqrt(" + d_.get_str() + ")) with Q(sqrt(" + o.d_.get_str() + "))");
}

QuadElem QuadElem::conj() const {
    QuadElem r = *this;
    r.b_ = -r.b_;
    return r;
}

QuadElem QuadElem::inverse() const {
    const Rat n = norm();
    if (sgn(n) == 0) throw DomainError("division by zero in Q(sqrt d)");
    QuadElem r = conj();
    r.a_ /= n;
    r.b_ /= n;
    return r;
}

QuadElem QuadElem::with_tag(const Int& d) const {
    QuadElem r = *this;
    r.d_ = r.merge_tag(QuadElem(0, 0, d));
    return r;
}

QuadElem& QuadElem::operator+=(const QuadElem& o) {
    d_ = merge_tag(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
    d_ = merge_tag(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
    d_ = merge_tag(o);
    Rat na = a_ * o.a_ + Rat(d_) * b_ * o.b_;
    Rat nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

QuadElem QuadElem::operator-() const {
    QuadElem r = *this;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

bool operator==(const QuadElem& x, const QuadElem& y) {
    if (x.a_ != y.a_ || x.b_ != y.b_) return false;
    if (sgn(x.b_) == 0) return true;
    return x.d_ == y.d_;
}

bool is_square_quad(const QuadElem& x) {
    if (x.is_rational()) {
        if (is_square_Q(x.a())) return true;
        return x.d() != 0 && is_square_Q(Rat(x.a() / Rat(x.d())));
    }
    auto n = sqrt_Q(x.norm());
    if (!n) return false;
    const Rat plus = (x.a() + *n) / 2;
    const Rat minus = (x.a() - *n) / 2;
    return (sgn(plus) != 0 && is_square_Q(plus)) || (sgn(minus) != 0 && is_square_Q(minus));
}

ProjPoint<QuadElem> normalize(const ProjPoint<QuadElem>& p) {
    if (p.is_infinity()) {
        if (p.s.is_zero()) throw DomainError("projective point (0,0)");
        return {QuadElem(1), QuadElem(0)};
    }
    return {p.s / p.t, QuadElem(1)};
}

ProjPoint<Rat> normalize(const ProjPoint<Rat>& p) {
    if (sgn(p.s) == 0 && sgn(p.t) == 0) throw DomainError("projective point (0,0)");
    Int l = lcm(p.s.get_den(), p.t.get_den());
    Int s = p.s.get_num() * (l / p.s.get_den());
    Int t = p.t.get_num() * (l / p.t.get_den());
    Int g = gcd(s, t);
    s /= g;
    t /= g;
    if (sgn(s) < 0 || (sgn(s) == 0 && sgn(t) < 0)) {
        s = -s;
        t = -t;
    }
    return {Rat(s), Rat(t)};
}

ProjPoint<QuadElem> lift(const ProjPoint<Rat>& p) { return {QuadElem(p.s), QuadElem(p.t)}; }

Rat parse_rat(std::string_view text) {
    static const std::regex re(R"(^([+-]?)(\d+)(?:/(\d+))?$)");
    const std::string s = strip_spaces(text);
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw ParseError("not a rational number: '" + std::string(text) + "'");
    Int num(m[2].str());
    Int den = m[3].matched ? Int(m[3].str()) : Int(1);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    if (m[1].str() == "-") num = -num;
    Rat r(num, den);
    r.canonicalize();
    return r;
}

std::string format_rat(const Rat& x) { return x.get_str(); }

QuadElem parse_quad(std::string_view text) {
    static const std::regex re(R"(^([+-]?\d+(?:/\d+)?)?(?:([+-]?)(?:(\d+(?:/\d+)?)\*)?sqrt\(([+-]?\d+)\))?$)");
    const std::string s = strip_spaces(text);
    std::smatch m;
    if (s.empty() || !std::regex_match(s, m, re))
        throw ParseError("not an element a+b*sqrt(d): '" + std::string(text) + "'");
    const bool has_a = m[1].matched;
    const bool has_root = m[4].matched;
    if (!has_a && !has_root) throw ParseError("empty field element");
    if (has_a && has_root && m[2].str().empty())
        throw ParseError("missing sign before sqrt term in '" + std::string(text) + "'");
    Rat a = has_a ? parse_rat(m[1].str()) : Rat(0);
    if (!has_root) return QuadElem(a);
    Rat b = m[3].matched ? parse_rat(m[3].str()) : Rat(1);
    if (m[2].str() == "-") b = -b;
    Int d(m[4].str());
    if (d == 0) throw ParseError("sqrt(0) is not a field tag");
    return QuadElem(a, b, d);
}

std::string format_quad(const QuadElem& x) {
    if (x.is_rational()) return format_rat(x.a());
    const Rat b = abs(x.b());
    const std::string root = format_rat(b) + "*sqrt(" + x.d().get_str() + ")";
    const std::string sign = sgn(x.b()) < 0 ? "-" : "+";
    if (sgn(x.a()) == 0) return (sign == "-" ? sign : "") + root;
    return format_rat(x.a()) + sign + root;
}

}  // namespace arboreal
