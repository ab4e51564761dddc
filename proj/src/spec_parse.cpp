#include "shalika/spec_parse.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace shalika {

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

int parse_int(const std::string& s, const std::string& field) {
    std::string t = trim(s);
    int v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || p != t.data() + t.size())
        throw ParseError(field + ": expected an integer, got '" + t + "'");
    return v;
}

Step parse_step(const std::string& s, const std::string& field) {
    if (s.rfind("u:", 0) == 0) {
        auto fa = split(s.substr(2), ',');
        if (fa.size() != 2) throw ParseError(field + ": unramified step needs 'u:f,a'");
        return Step::unramified(parse_int(fa[0], field + ".f"), parse_int(fa[1], field + ".a"));
    }
    auto pq = split(s, ',');
    if (pq.size() != 2) throw ParseError(field + ": ramified step needs 'p,q', got '" + s + "'");
    return Step::ramified(parse_int(pq[0], field + ".p"), parse_int(pq[1], field + ".q"));
}

void check(const GammaSpec& g) {
    try {
        g.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

}  // namespace

Rat parse_rational(const std::string& s, const std::string& field) {
    std::string t = trim(s);
    auto parts = split(t, '/');
    if (parts.size() > 2) throw ParseError(field + ": malformed rational '" + t + "'");
    auto digits = [](const std::string& x) {
        std::size_t i = x.size() > 1 && (x[0] == '-' || x[0] == '+') ? 1 : 0;
        return i < x.size() && std::all_of(x.begin() + i, x.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    for (const auto& p : parts)
        if (!digits(p)) throw ParseError(field + ": malformed rational '" + t + "'");
    Int num(parts[0][0] == '+' ? parts[0].substr(1) : parts[0]);
    Int den = parts.size() == 2 ? Int(parts[1]) : Int(1);
    if (den == 0) throw ParseError(field + ": zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

GammaSpec parse_newton_spec(const std::string& s) {
    GammaSpec g;
    auto branches = split(s, '+');
    for (std::size_t i = 0; i < branches.size(); ++i) {
        std::string bf = "branch " + std::to_string(i + 1);
        if (branches[i].empty()) throw ParseError(bf + ": empty");
        BranchSpec b;
        auto steps = split(branches[i], ';');
        for (std::size_t j = 0; j < steps.size(); ++j)
            b.steps.push_back(parse_step(steps[j], bf + " step " + std::to_string(j + 1)));
        g.branches.push_back(std::move(b));
    }
    check(g);
    return g;
}

std::vector<Rat> parse_puiseux_branch(const std::string& s) {
    std::vector<Rat> r;
    auto xs = split(s, ',');
    for (std::size_t i = 0; i < xs.size(); ++i) r.push_back(parse_rational(xs[i], "exponent " + std::to_string(i + 1)));
    return r;
}

GammaSpec parse_puiseux_spec(const std::string& s) {
    GammaSpec g;
    auto branches = split(s, '+');
    for (std::size_t i = 0; i < branches.size(); ++i) {
        try {
            g.branches.push_back(branch_from_newton(puiseux_to_newton(parse_puiseux_branch(branches[i]))));
        } catch (const ParseError& e) {
            throw ParseError("branch " + std::to_string(i + 1) + ": " + e.what());
        } catch (const std::invalid_argument& e) {
            throw ParseError("branch " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    check(g);
    return g;
}

Partition parse_partition(const std::string& s) {
    std::string t = trim(s);
    if (!t.empty() && t.front() == '[' && t.back() == ']') t = t.substr(1, t.size() - 2);
    std::replace(t.begin(), t.end(), ' ', ',');
    Partition p;
    for (const auto& x : split(t, ','))
        if (!x.empty()) p.push_back(parse_int(x, "partition"));
    if (p.empty()) throw ParseError("partition: empty");
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] < 1 || (i && p[i] > p[i - 1]))
            throw ParseError("partition: parts must be positive and weakly decreasing");
    return p;
}

}  // namespace shalika
