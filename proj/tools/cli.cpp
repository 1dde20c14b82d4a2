#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "arboreal/certify.hpp"
#include "arboreal/map_io.hpp"
#include "arboreal/tree_group.hpp"
#include "suites.hpp"

namespace arboreal::cli {

namespace {

enum class Format { Human, Machine };

struct RunConfig {
    std::string input;
    std::string map_text;
    std::string x0_text;
    unsigned N = 6;
    unsigned max_iter = 12;
    unsigned precision = 256;
    std::uint64_t seed = suites::Config{}.seed;
    std::string suite = "all";
    std::uint64_t guard_override = 0;
    Format format = Format::Human;
    std::string output;

    // group queries
    unsigned ell = 2;
    unsigned n = 3;
    std::string portrait;
    std::string node;
};

std::string read_input(const RunConfig& cfg) {
    if (!cfg.map_text.empty()) {
        std::string text = cfg.map_text;
        for (char& c : text)
            if (c == ';') c = '\n';
        return text;
    }
    if (cfg.input.empty()) throw ParseError("no map given: use --input FILE or --map TEXT");
    if (cfg.input == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(cfg.input);
    if (!in) throw ParseError("cannot read '" + cfg.input + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

MapSpec load(const RunConfig& cfg) {
    MapSpec spec = parse_map_spec(read_input(cfg));
    if (!cfg.x0_text.empty()) {
        std::istringstream in(cfg.x0_text);
        std::string s, t;
        if (!(in >> s)) throw ParseError("--x0 needs 's t' or a single rational");
        if (!(in >> t)) t = "1";
        spec.x0 = normalize(ProjPoint<Rat>{parse_rat(s), parse_rat(t)});
    }
    return spec;
}

ProjPoint<Rat> base_point(const MapSpec& spec) {
    if (!spec.x0) throw ParseError("no base point: add an 'x0: s t' line or pass --x0");
    return *spec.x0;
}

OrbitGuard orbit_guard(const RunConfig& cfg) {
    OrbitGuard g;
    if (cfg.guard_override) g.max_bits = cfg.guard_override;
    return g;
}

std::string point_list(const QuadMap& f) { return format(f.crit.xi1) + " " + format(f.crit.xi2); }

std::string nu_text(const std::array<Int, 4>& nu) {
    return "(" + nu[0].get_str() + ", " + nu[1].get_str() + ", " + nu[2].get_str() + ", " + nu[3].get_str() + ")";
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
    const MapSpec spec = load(cfg);
    QuadMap f = build_map(spec.P, spec.Q);
    const auto coll = detect_collision(f, cfg.max_iter, orbit_guard(cfg));
    const Rat disc_d = discriminant(homog_differential(f.pair));
    std::optional<NormalForm> nf;
    std::string nf_note;
    if (f.delta_square()) {
        try {
            nf = normal_form(f);
        } catch (const DegenerateMap& e) {
            nf_note = e.what();
        }
    } else {
        nf_note = "critical points are not rational";
    }

    if (cfg.format == Format::Machine) {
        out << "arboreal-analysis: 1\n";
        out << "P: " << format_form(f.P()).substr(2) << "\nQ: " << format_form(f.Q()).substr(2) << '\n';
        out << "res: " << format_rat(f.pair.res()) << '\n';
        out << "critical: " << point_list(f) << '\n';
        out << "disc_D: " << format_rat(disc_d) << '\n';
        out << "delta: " << f.crit.delta.get_str() << '\n';
        out << "ell: " << (coll ? std::to_string(coll->ell) : "none") << '\n';
        if (coll) out << "swapped: " << (coll->swapped ? "yes" : "no") << '\n';
        if (nf) {
            out << "normal_form: " << format_rat(nf->A) << ' ' << format_rat(nf->B) << ' ' << format_rat(nf->C) << '\n';
            out << "nu: " << nf->nu[0].get_str() << ' ' << nf->nu[1].get_str() << ' ' << nf->nu[2].get_str() << ' '
                << nf->nu[3].get_str() << '\n';
        } else {
            out << "normal_form: none\n";
        }
        return exit_ok;
    }

    out << "map: P = " << format_form(f.P()).substr(2) << ", Q = " << format_form(f.Q()).substr(2) << '\n';
    out << "Res(P,Q) = " << format_rat(f.pair.res()) << '\n';
    out << "critical points: " << point_list(f) << '\n';
    if (f.delta_square())
        out << "delta: 1 (rational critical points; disc D = " << format_rat(disc_d) << ")\n";
    else
        out << "delta: " << f.crit.delta.get_str() << " (non-square; disc D = " << format_rat(disc_d)
            << ", squarefree kernel " << f.crit.delta.get_str() << ")\n";
    if (coll) {
        out << "collision: l = " << coll->ell << (coll->swapped ? " (critical points swapped)" : "") << '\n';
    } else {
        out << "collision: no collision within " << cfg.max_iter << " iterates\n";
    }
    if (nf)
        out << "normal form: (" << format_rat(nf->A) << " z^2 + " << format_rat(nf->B) << ") / (z^2 + "
            << format_rat(nf->C) << "), nu = " << nu_text(nf->nu) << '\n';
    else
        out << "normal form: none (" << nf_note << ")\n";
    return exit_ok;
}

int cmd_kappa(const RunConfig& cfg, std::ostream& out) {
    const MapSpec spec = load(cfg);
    QuadMap f = build_map(spec.P, spec.Q);
    const auto coll = detect_collision(f, cfg.max_iter, orbit_guard(cfg));
    if (!coll) throw DomainError("critical points do not collide within " + std::to_string(cfg.max_iter) + " iterates");
    KappaOptions opts;
    opts.orbit = orbit_guard(cfg);
    const KappaList kl = kappa_list(f, *coll, base_point(spec), cfg.N, opts);
    if (cfg.format == Format::Machine) {
        out << "arboreal-kappa: 1\n";
        out << "ell: " << kl.ell << "\ndelta: " << kl.delta.get_str() << "\nN: " << kl.N << '\n';
        out << "x0_in_critical_orbit: " << (kl.x0_in_critical_orbit ? "yes" : "no") << '\n';
        for (std::size_t i = 0; i < kl.kappa.size(); ++i)
            out << "kappa." << i + 1 << ": " << format_quad(kl.kappa[i].value) << ' ' << to_string(kl.kappa[i].kind)
                << ' ' << to_string(kl.kappa[i].flag) << '\n';
        return exit_ok;
    }
    out << "l = " << kl.ell << ", delta = " << kl.delta.get_str() << ", x0 = " << format(kl.x0) << '\n';
    if (kl.x0_in_critical_orbit) out << "x0 lies in a critical orbit\n";
    for (std::size_t i = 0; i < kl.kappa.size(); ++i) {
        const auto& e = kl.kappa[i];
        out << "kappa_" << i + 1 << " = " << format_quad(e.value) << "  [" << to_string(e.kind);
        if (e.flag != KappaFlag::None) out << ", " << to_string(e.flag);
        out << "]\n";
    }
    return exit_ok;
}

int cmd_certify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const MapSpec spec = load(cfg);
    CertifyOptions opts;
    opts.max_iter = cfg.max_iter;
    opts.kappa.orbit = orbit_guard(cfg);
    const Certificate c = certify_max(build_map(spec.P, spec.Q), base_point(spec), cfg.N, opts);

    // self-audit before anything is printed
    if (c.verdict == Verdict::NotFull && !witness_is_square(c)) {
        err << "internal error: witness product is not a square\n";
        return exit_internal;
    }
    const std::string text = serialize(c);
    if (serialize(parse_certificate(text)) != text) {
        err << "internal error: certificate does not round-trip\n";
        return exit_internal;
    }

    std::ostringstream body;
    if (cfg.format == Format::Machine) {
        body << text;
    } else {
        body << "verdict: " << to_string(c.verdict) << '\n';
        body << "l = " << c.ell << ", delta = " << c.delta.get_str() << ", N = " << c.N << ", x0 = " << format(c.x0)
             << '\n';
        for (std::size_t i = 0; i < c.kappa.size(); ++i) {
            const auto& e = c.kappa[i];
            body << "kappa_" << i + 1 << " = " << format_quad(e.value);
            if (e.flag != KappaFlag::None) body << "  [" << to_string(e.flag) << "]";
            body << '\n';
        }
        body << "analysis: " << to_string(c.analysis);
        if (!c.witness.empty()) {
            body << ", indices";
            for (std::size_t i : c.witness) body << ' ' << i;
        }
        body << '\n';
    }
    out << body.str();
    if (!cfg.output.empty()) {
        // The file always holds the parseable form.
        std::ofstream file(cfg.output);
        if (!file) throw ParseError("cannot write '" + cfg.output + "'");
        file << text;
    }
    return exit_code(c.verdict);
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    suites::Config sc;
    sc.seed = cfg.seed;
    sc.precision = cfg.precision;
    bool ok = true;
    for (const auto& name : [&] {
             auto names = suites::family(cfg.suite);
             if (names.empty()) throw ParseError("unknown suite '" + cfg.suite + "'");
             return names;
         }()) {
        const auto r = suites::run_one(name, sc);
        out << "suite " << r.name << ": " << r.passed << "/" << r.total << (r.ok() ? " pass" : " FAIL") << '\n';
        for (const auto& f : r.failures) out << "  counterexample: " << f << '\n';
        ok = ok && r.ok();
    }
    return ok ? exit_ok : exit_failure;
}

TreeAut portrait(const RunConfig& cfg) {
    if (cfg.portrait.empty()) throw ParseError("--portrait is required");
    return TreeAut::from_hex(cfg.portrait);
}

int cmd_group(const std::string& query, const RunConfig& cfg, std::ostream& out) {
    if (query == "order") {
        const std::uint64_t k = log2_order_M(cfg.ell, cfg.n);
        Int order = 1;
        mpz_mul_2exp(order.get_mpz_t(), order.get_mpz_t(), k);
        if (cfg.format == Format::Machine)
            out << "order: " << order.get_str() << '\n';
        else
            out << "|M_{" << cfg.ell << "," << cfg.n << "}| = 2^" << k << " = " << order.get_str() << '\n';
    } else if (query == "count") {
        Guards g;
        if (cfg.guard_override) g.max_log2_enumeration = static_cast<unsigned>(cfg.guard_override);
        MEnumerator it(cfg.ell, cfg.n, g);
        std::uint64_t count = 0;
        while (it.next()) ++count;
        out << (cfg.format == Format::Machine ? "count: " : "enumerated elements: ") << count << '\n';
    } else if (query == "member") {
        const Membership m = in_group(portrait(cfg), cfg.ell);
        if (cfg.format == Format::Machine) {
            out << "in_mtilde: " << (m.in_mtilde ? "yes" : "no") << "\nin_m: " << (m.in_m() ? "yes" : "no") << '\n';
            if (m.in_mtilde) out << "common_sign: " << m.common.value() << '\n';
        } else if (m.in_m()) {
            out << "in M, common sign +1\n";
        } else if (m.in_mtilde) {
            out << "in M~ but not M, common sign -1\n";
        } else {
            out << "not in M~\n";
        }
    } else if (query == "abelianize") {
        const ParityVector v = abelianize(portrait(cfg), cfg.ell);
        out << (cfg.format == Format::Machine ? "psi:" : "psi =");
        for (Sign s : v) out << ' ' << (s.negative() ? "-1" : "+1");
        out << '\n';
    } else if (query == "cousins") {
        const Parity p = cousins_parity(portrait(cfg), NodeLabel::parse(cfg.node), cfg.ell, cfg.n);
        out << (cfg.format == Format::Machine ? "parity: " : "") << (p == Parity::Odd ? "Odd" : "Even") << '\n';
    } else {
        throw ParseError("unknown group query '" + query + "'");
    }
    return exit_ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"arboreal: arboreal Galois groups of quadratic maps with colliding critical points"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string format = "human";
    std::string query;

    auto add_map = [&](CLI::App* sub) {
        sub->add_option("--input", cfg.input, "map file ('-' for stdin)");
        sub->add_option("--map", cfg.map_text, "inline map text, lines separated by ';'");
        sub->add_option("--x0", cfg.x0_text, "base point 's t' (overrides the file)");
        sub->add_option("--max-iter", cfg.max_iter, "collision search bound")->check(CLI::Range(1, 20));
        sub->add_option("--guard-override", cfg.guard_override, "orbit height guard in bits")->check(CLI::PositiveNumber);
        sub->add_option("--format", format, "human or machine")->check(CLI::IsMember({"human", "machine"}));
    };

    auto* analyze = app.add_subcommand("analyze", "critical points, delta, collision, normal form");
    add_map(analyze);
    auto* kappa = app.add_subcommand("kappa", "the kappa invariants");
    add_map(kappa);
    kappa->add_option("--N", cfg.N, "number of kappa values")->check(CLI::Range(1, 20));
    auto* certify = app.add_subcommand("certify", "maximality certificate");
    add_map(certify);
    certify->add_option("--N", cfg.N, "tree depth")->check(CLI::Range(1, 20));
    certify->add_option("--output", cfg.output, "also write the machine-readable certificate to a file");
    auto* verify = app.add_subcommand("verify", "randomized and exhaustive verification suites");
    verify->add_option("--suite", cfg.suite, "suite or family name, or 'all'");
    verify->add_option("--seed", cfg.seed, "random seed");
    verify->add_option("--precision", cfg.precision, "MPFR precision in bits")->check(CLI::Range(64, 4096));
    auto* group = app.add_subcommand("group", "queries on M_{l,n}");
    group->add_option("query", query, "order | count | member | abelianize | cousins")->required();
    group->add_option("--ell", cfg.ell, "l")->check(CLI::Range(2, 30));
    group->add_option("--n", cfg.n, "n")->check(CLI::Range(1, 30));
    group->add_option("--portrait", cfg.portrait, "automorphism as 'depth:hex'");
    group->add_option("--node", cfg.node, "node label as a 0/1 word (empty for the root)");
    group->add_option("--guard-override", cfg.guard_override, "log2 enumeration bound (at most 40)")
        ->check(CLI::Range(1, 40));
    group->add_option("--format", format, "human or machine")->check(CLI::IsMember({"human", "machine"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return exit_parse;
    }
    cfg.format = format == "machine" ? Format::Machine : Format::Human;

    try {
        if (analyze->parsed()) return cmd_analyze(cfg, out);
        if (kappa->parsed()) return cmd_kappa(cfg, out);
        if (certify->parsed()) return cmd_certify(cfg, out, err);
        if (verify->parsed()) return cmd_verify(cfg, out);
        if (group->parsed()) return cmd_group(query, cfg, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_parse;
    } catch (const DegenerateMap& e) {
        err << "degenerate map: " << e.what() << '\n';
        return exit_degenerate;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_domain;
    }
    return exit_parse;
}

}  // namespace arboreal::cli
