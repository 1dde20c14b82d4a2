#include "arboreal/certify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

namespace arboreal {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::FullM: return "FullM";
        case Verdict::FullMtilde: return "FullMtilde";
        case Verdict::NotFull: return "NotFull";
        case Verdict::DegenerateCriticalHit: return "DegenerateCriticalHit";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

std::string to_string(Analysis a) {
    switch (a) {
        case Analysis::Independent: return "independent";
        case Analysis::Witness: return "witness";
        case Analysis::Inconclusive: return "inconclusive";
        case Analysis::Degenerate: return "degenerate";
    }
    return "?";
}

int exit_code(Verdict v) {
    switch (v) {
        case Verdict::FullM:
        case Verdict::FullMtilde: return 0;
        case Verdict::NotFull: return 1;
        case Verdict::DegenerateCriticalHit: return 4;
        case Verdict::Inconclusive: return 5;
    }
    return 5;
}

SubsetResult subset_square_search(const std::vector<Rat>& values, const SearchLimits& limits) {
    if (values.empty()) throw DomainError("subset search needs at least one value");
    for (const auto& v : values)
        if (sgn(v) == 0) throw DomainError("subset search values must be nonzero");
    auto dep = dependent_subset(square_classes(values, limits.budget));
    if (!dep) return {};
    return {Analysis::Witness, std::move(*dep)};
}

SubsetResult subset_square_search(const std::vector<QuadElem>& values, const Int& delta,
                                  const SearchLimits& limits) {
    if (values.empty()) throw DomainError("subset search needs at least one value");
    std::vector<Rat> norms;
    std::vector<QuadElem> tagged;
    for (const auto& v : values) {
        if (v.is_zero()) throw DomainError("subset search values must be nonzero");
        tagged.push_back(v.with_tag(delta));
        norms.push_back(tagged.back().norm());
    }
    const std::vector<F2Vec> basis = kernel_basis(to_f2(square_classes(norms, limits.budget)));
    if (basis.empty()) return {};
    if (basis.size() > limits.max_log2_candidates) return {Analysis::Inconclusive, {}};

    const std::size_t words = basis.front().size();
    F2Vec cur(words, 0);
    QuadElem prod = QuadElem(1).with_tag(delta);
    std::optional<F2Vec> best;
    const std::uint64_t total = std::uint64_t{1} << basis.size();
    for (std::uint64_t g = 1; g < total; ++g) {
        const F2Vec& b = basis[static_cast<std::size_t>(std::countr_zero(g))];
        for (std::size_t i : mask_indices(b)) {
            const bool now_set = !((cur[i / 64] >> (i % 64)) & 1u);
            prod = now_set ? prod * tagged[i] : prod / tagged[i];
        }
        for (std::size_t w = 0; w < words; ++w) cur[w] ^= b[w];
        if ((!best || mask_less(cur, *best)) && is_square_quad(prod)) best = cur;
    }
    if (!best) return {};
    return {Analysis::Witness, mask_indices(*best)};
}

Certificate certify_max(const QuadMap& f, const ProjPoint<Rat>& x0, unsigned N, const CertifyOptions& opts) {
    QuadMap g = f;
    const auto coll = detect_collision(g, opts.max_iter, opts.kappa.orbit);
    if (!coll) throw DomainError("critical points do not collide within " + std::to_string(opts.max_iter) + " iterates");
    const KappaList kl = kappa_list(g, *coll, x0, N, opts.kappa);

    Certificate c;
    c.P = g.P().coeffs();
    c.Q = g.Q().coeffs();
    c.x0 = kl.x0;
    c.ell = kl.ell;
    c.N = N;
    c.delta = kl.delta;
    c.swapped = coll->swapped;
    c.kappa = kl.kappa;

    const bool degenerate = kl.x0_in_critical_orbit ||
                            std::any_of(c.kappa.begin(), c.kappa.end(), [](const KappaEntry& e) { return e.value.is_zero(); });
    if (degenerate) {
        c.analysis = Analysis::Degenerate;
        for (std::size_t i = 0; i < c.kappa.size(); ++i)
            if (c.kappa[i].value.is_zero()) c.witness.push_back(i + 1);
        c.verdict = Verdict::DegenerateCriticalHit;
        return c;
    }

    SubsetResult res;
    std::vector<std::size_t> index;  // search position -> 1-based kappa index
    if (c.delta_square() || N < c.ell) {
        std::vector<Rat> vals;
        for (std::size_t i = 0; i < N; ++i) {
            if (!c.kappa[i].value.is_rational()) throw InternalError("expected a rational kappa value");
            vals.push_back(c.kappa[i].value.a());
            index.push_back(i + 1);
        }
        res = subset_square_search(vals, opts.search);
    } else {
        const QuadElem& k_ell = c.kappa[c.ell - 1].value;
        if (!k_ell.is_rational() || !is_square_Q(Rat(k_ell.a() * Rat(c.delta))))
            throw InternalError("kappa_l * delta is not a rational square");
        std::vector<QuadElem> vals;
        for (std::size_t i = 0; i < N; ++i) {
            if (i + 1 == c.ell) continue;
            vals.push_back(c.kappa[i].value);
            index.push_back(i + 1);
        }
        if (!vals.empty()) res = subset_square_search(vals, c.delta, opts.search);
    }
    c.analysis = res.analysis;
    for (std::size_t i : res.witness) c.witness.push_back(index[i]);
    switch (res.analysis) {
        case Analysis::Independent: c.verdict = c.delta_square() ? Verdict::FullM : Verdict::FullMtilde; break;
        case Analysis::Witness: c.verdict = Verdict::NotFull; break;
        default: c.verdict = Verdict::Inconclusive; break;
    }
    return c;
}

bool witness_is_square(const Certificate& c) {
    if (c.witness.empty()) return false;
    if (c.delta_square() || c.N < c.ell) {
        Rat prod = 1;
        for (std::size_t i : c.witness) prod *= c.kappa.at(i - 1).value.a();
        return sgn(prod) != 0 && is_square_Q(prod);
    }
    QuadElem prod = QuadElem(1).with_tag(c.delta);
    for (std::size_t i : c.witness) prod = prod * c.kappa.at(i - 1).value.with_tag(c.delta);
    return !prod.is_zero() && is_square_quad(prod);
}

namespace {

constexpr std::string_view header_key = "arboreal-certificate";
constexpr int format_version = 1;

std::string join_rats(const std::vector<Rat>& v) {
    std::string out;
    for (const auto& x : v) out += (out.empty() ? "" : " ") + format_rat(x);
    return out;
}

std::vector<std::string> tokens(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

template <class E>
E parse_enum(const std::string& s, std::initializer_list<E> all) {
    for (E e : all)
        if (to_string(e) == s) return e;
    throw ParseError("unknown value '" + s + "'");
}

unsigned parse_unsigned(const std::string& s) {
    try {
        std::size_t pos = 0;
        const unsigned long v = std::stoul(s, &pos);
        if (pos != s.size()) throw ParseError("bad integer '" + s + "'");
        return static_cast<unsigned>(v);
    } catch (const std::logic_error&) {
        throw ParseError("bad integer '" + s + "'");
    }
}

}  // namespace

std::string serialize(const Certificate& c) {
    std::ostringstream os;
    os << header_key << ": " << format_version << '\n';
    os << "P: " << join_rats(c.P) << '\n';
    os << "Q: " << join_rats(c.Q) << '\n';
    os << "x0: " << format_rat(c.x0.s) << ' ' << format_rat(c.x0.t) << '\n';
    os << "ell: " << c.ell << '\n';
    os << "delta: " << c.delta.get_str() << '\n';
    os << "field: " << (c.delta_square() ? "rational" : "quadratic") << '\n';
    os << "swapped: " << (c.swapped ? "yes" : "no") << '\n';
    os << "N: " << c.N << '\n';
    for (std::size_t i = 0; i < c.kappa.size(); ++i) {
        const auto& e = c.kappa[i];
        os << "kappa." << i + 1 << ": " << format_quad(e.value) << ' ' << to_string(e.kind) << ' '
           << to_string(e.flag) << '\n';
    }
    os << "analysis: " << to_string(c.analysis) << '\n';
    os << "witness:";
    for (std::size_t i : c.witness) os << ' ' << i;
    os << '\n';
    os << "verdict: " << to_string(c.verdict) << '\n';
    return os.str();
}

Certificate parse_certificate(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::map<std::string, std::string> kv;
    std::vector<std::string> order;
    for (std::string line; std::getline(in, line);) {
        if (line.empty()) continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError("expected 'key: value', got '" + line + "'");
        std::string key = line.substr(0, colon);
        std::string value = line.substr(colon + 1);
        if (!value.empty() && value.front() == ' ') value.erase(0, 1);
        if (kv.count(key)) throw ParseError("duplicate key '" + key + "'");
        order.push_back(key);
        kv[key] = value;
    }
    if (order.empty() || order.front() != header_key) throw ParseError("missing certificate header");
    if (parse_unsigned(kv[std::string(header_key)]) != format_version)
        throw ParseError("unsupported certificate version");
    auto need = [&](const std::string& k) -> const std::string& {
        auto it = kv.find(k);
        if (it == kv.end()) throw ParseError("missing key '" + k + "'");
        return it->second;
    };

    Certificate c;
    for (const auto& t : tokens(need("P"))) c.P.push_back(parse_rat(t));
    for (const auto& t : tokens(need("Q"))) c.Q.push_back(parse_rat(t));
    const auto x = tokens(need("x0"));
    if (x.size() != 2) throw ParseError("x0 needs two coordinates");
    c.x0 = ProjPoint<Rat>{parse_rat(x[0]), parse_rat(x[1])};
    c.ell = parse_unsigned(need("ell"));
    c.delta = Int(need("delta"));
    c.swapped = need("swapped") == "yes";
    c.N = parse_unsigned(need("N"));
    for (unsigned i = 1; i <= c.N; ++i) {
        const auto t = tokens(need("kappa." + std::to_string(i)));
        if (t.size() != 3) throw ParseError("kappa line needs value, kind and flag");
        KappaEntry e;
        e.value = parse_quad(t[0]);
        if (!c.delta_square() && !e.value.is_zero()) e.value = e.value.with_tag(c.delta);
        e.kind = parse_enum(t[1], {KappaKind::Discriminant, KappaKind::CrossRatio, KappaKind::EllCrossRatios,
                                   KappaKind::EllDiffDiscriminant});
        e.flag = parse_enum(t[2], {KappaFlag::None, KappaFlag::Zero, KappaFlag::InfinityRule, KappaFlag::Indeterminate});
        c.kappa.push_back(std::move(e));
    }
    c.analysis = parse_enum(need("analysis"),
                            {Analysis::Independent, Analysis::Witness, Analysis::Inconclusive, Analysis::Degenerate});
    for (const auto& t : tokens(need("witness"))) c.witness.push_back(parse_unsigned(t));
    c.verdict = parse_enum(need("verdict"), {Verdict::FullM, Verdict::FullMtilde, Verdict::NotFull,
                                             Verdict::DegenerateCriticalHit, Verdict::Inconclusive});
    return c;
}

}  // namespace arboreal
