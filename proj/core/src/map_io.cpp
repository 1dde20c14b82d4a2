#include "arboreal/map_io.hpp"

#include <sstream>

namespace arboreal {

namespace {

std::vector<Rat> rats(const std::string& rest, std::size_t want, const std::string& key) {
    std::istringstream in(rest);
    std::vector<Rat> out;
    for (std::string tok; in >> tok;) out.push_back(parse_rat(tok));
    if (out.size() != want)
        throw ParseError("'" + key + "' needs " + std::to_string(want) + " values, got " + std::to_string(out.size()));
    return out;
}

}  // namespace

MapSpec parse_map_spec(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::optional<BForm<Rat>> p, q;
    std::optional<ProjPoint<Rat>> x0;
    unsigned lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        const auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": expected 'key: values'");
        std::string key = line.substr(first, colon - first);
        while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
        const std::string rest = line.substr(colon + 1);
        if (key == "P" || key == "Q") {
            auto& slot = key == "P" ? p : q;
            if (slot) throw ParseError("duplicate '" + key + "' line");
            slot = BForm<Rat>(rats(rest, 3, key));
        } else if (key == "x0") {
            if (x0) throw ParseError("duplicate 'x0' line");
            auto v = rats(rest, 2, key);
            if (sgn(v[0]) == 0 && sgn(v[1]) == 0) throw ParseError("x0 cannot be (0, 0)");
            x0 = normalize(ProjPoint<Rat>{v[0], v[1]});
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (!p || !q) throw ParseError("map needs both 'P' and 'Q' lines");
    return {*p, *q, x0};
}

std::string format_map_spec(const MapSpec& spec) {
    auto line = [](const char* key, const BForm<Rat>& f) {
        std::string s = key;
        for (const auto& c : f.coeffs()) s += " " + format_rat(c);
        return s + "\n";
    };
    std::string out = line("P:", spec.P) + line("Q:", spec.Q);
    if (spec.x0) out += "x0: " + format_rat(spec.x0->s) + " " + format_rat(spec.x0->t) + "\n";
    return out;
}

}  // namespace arboreal
