#include "shalika/json_io.hpp"

#include "shalika/spec_parse.hpp"

namespace shalika {

namespace {

const json& field(const json& j, const std::string& key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
    return j.at(key);
}

int as_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
    return j.get<int>();
}

std::string as_string(const json& j, const std::string& where) {
    if (!j.is_string()) throw ParseError(where + ": expected a string");
    return j.get<std::string>();
}

Partition as_partition(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected an integer array");
    Partition p;
    for (const auto& x : j) p.push_back(as_int(x, where));
    return p;
}

json int_json(const Int& k) {
    if (k.fits_slong_p()) return k.get_si();
    return k.get_str();
}

Int int_from(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(j.get<long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
        }
    }
    throw ParseError(where + ": expected an integer");
}

json bipoly_json(const BiPoly& p) {
    json a = json::array();
    for (const auto& [i, k, c] : p.terms()) a.push_back({i, k, int_json(c)});
    return a;
}

BiPoly bipoly_from(const json& j, const std::string& where) {
    if (!j.is_array()) throw ParseError(where + ": expected a term list");
    std::vector<std::tuple<int, int, Int>> ts;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3) throw ParseError(where + ": terms are [i, j, coeff]");
        int qe = as_int(t[0], where), te = as_int(t[1], where);
        if (qe < 0 || te < 0) throw ParseError(where + ": negative exponent");
        ts.emplace_back(qe, te, int_from(t[2], where));
    }
    return BiPoly::from_terms(ts);
}

RatFun ratfun_from(const json& j, const std::string& where) {
    try {
        return RatFun::parse(as_string(j, where));
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
}

}  // namespace

json to_json(const QPoly& p) {
    json a = json::array();
    for (const auto& [e, k] : p.terms()) a.push_back({e, k.get_str()});
    return a;
}

QPoly qpoly_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("qpoly: expected a list of [exponent, coefficient]");
    QPoly p;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2) throw ParseError("qpoly: terms are [exponent, \"num/den\"]");
        int e = as_int(t[0], "qpoly exponent");
        if (e < 0) throw ParseError("qpoly exponent: negative");
        if (p.coeff(e) != 0) throw ParseError("qpoly exponent: repeated");
        p += QPoly::monomial(parse_rational(as_string(t[1], "qpoly coefficient"), "qpoly coefficient"), e);
    }
    return p;
}

json to_json(const SymFun& f) {
    json c = json::array();
    for (const auto& [mu, v] : f.coeffs) c.push_back({mu, v.str()});
    return {{"basis", basis_name(f.basis)}, {"degree", f.degree}, {"coeffs", c}};
}

SymFun symfun_from_json(const json& j) {
    Basis b;
    try {
        b = basis_from_name(as_string(field(j, "basis", "symfun"), "symfun.basis"));
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("symfun.basis: ") + e.what());
    }
    SymFun f(b, as_int(field(j, "degree", "symfun"), "symfun.degree"));
    const json& cs = field(j, "coeffs", "symfun");
    if (!cs.is_array()) throw ParseError("symfun.coeffs: expected a list");
    for (const auto& t : cs) {
        if (!t.is_array() || t.size() != 2) throw ParseError("symfun.coeffs: entries are [partition, ratfun]");
        Partition mu = as_partition(t[0], "symfun.coeffs partition");
        if (mu != sorted_partition(mu) || size(mu) != f.degree)
            throw ParseError("symfun.coeffs partition: " + render(mu) + " is not a partition of " + std::to_string(f.degree));
        f.add(mu, ratfun_from(t[1], "symfun.coeffs value"));
    }
    return f;
}

json to_json(const BranchSpec& b) {
    json steps = json::array();
    for (const auto& s : b.steps) {
        if (s.kind == Step::Kind::ramified) steps.push_back({{"ramified", {s.p, s.q}}});
        else steps.push_back({{"unramified", {{"f", s.f}, {"a", s.a}}}});
    }
    return {{"steps", steps}};
}

BranchSpec branch_from_json(const json& j) {
    if (j.is_object() && j.contains("puiseux")) {
        const json& xs = j.at("puiseux");
        if (!xs.is_array()) throw ParseError("branch.puiseux: expected a list");
        std::vector<Rat> r;
        for (const auto& x : xs) r.push_back(parse_rational(as_string(x, "branch.puiseux"), "branch.puiseux"));
        try {
            return branch_from_newton(puiseux_to_newton(r));
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("branch.puiseux: ") + e.what());
        }
    }
    const json& steps = field(j, "steps", "branch");
    if (!steps.is_array()) throw ParseError("branch.steps: expected a list");
    BranchSpec b;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const json& s = steps[i];
        std::string where = "branch.steps[" + std::to_string(i) + "]";
        if (s.is_object() && s.contains("ramified")) {
            const json& pq = s.at("ramified");
            if (!pq.is_array() || pq.size() != 2) throw ParseError(where + ".ramified: expected [p, q]");
            b.steps.push_back(Step::ramified(as_int(pq[0], where + ".p"), as_int(pq[1], where + ".q")));
        } else if (s.is_object() && s.contains("unramified")) {
            const json& u = s.at("unramified");
            b.steps.push_back(Step::unramified(as_int(field(u, "f", where), where + ".f"),
                                               as_int(field(u, "a", where), where + ".a")));
        } else {
            throw ParseError(where + ": expected 'ramified' or 'unramified'");
        }
    }
    try {
        b.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("branch: ") + e.what());
    }
    return b;
}

json to_json(const GammaSpec& g) {
    json br = json::array();
    for (const auto& b : g.branches) br.push_back(to_json(b));
    json j = {{"branches", br}};
    if (!g.contact.empty()) {
        json c = json::object();
        for (const auto& [ij, v] : g.contact) c[std::to_string(ij.first) + "," + std::to_string(ij.second)] = v.get_str();
        j["contact"] = c;
    }
    if (g.dim_override) j["dim_override"] = *g.dim_override;
    return j;
}

GammaSpec gamma_from_json(const json& j) {
    GammaSpec g;
    const json& br = field(j, "branches", "spec");
    if (!br.is_array()) throw ParseError("spec.branches: expected a list");
    for (const auto& b : br) g.branches.push_back(branch_from_json(b));
    if (j.contains("contact")) {
        const json& c = j.at("contact");
        if (!c.is_object()) throw ParseError("spec.contact: expected an object");
        for (const auto& [k, v] : c.items()) {
            auto comma = k.find(',');
            if (comma == std::string::npos) throw ParseError("spec.contact: key '" + k + "' is not 'i,j'");
            int i, jj;
            try {
                i = std::stoi(k.substr(0, comma));
                jj = std::stoi(k.substr(comma + 1));
            } catch (const std::exception&) {
                throw ParseError("spec.contact: key '" + k + "' is not 'i,j'");
            }
            Rat r = v.is_number_integer() ? Rat(v.get<long>()) : parse_rational(as_string(v, "spec.contact"), "spec.contact");
            g.contact[{i, jj}] = r;
        }
    }
    if (j.contains("dim_override")) g.dim_override = as_int(j.at("dim_override"), "spec.dim_override");
    try {
        g.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("spec: ") + e.what());
    }
    return g;
}

json to_json(const OrbitalReport& r) {
    json bp = json::array();
    for (const auto& [l, p] : r.by_parahoric) bp.push_back({l, to_json(p)});
    return {{"dim_sp", r.dim_sp},
            {"by_parahoric", bp},
            {"components", int_json(r.components)},
            {"top_frobenius", r.top_frobenius},
            {"jacobian_count", to_json(r.jacobian_count)}};
}

OrbitalReport report_from_json(const json& j) {
    OrbitalReport r;
    r.dim_sp = as_int(field(j, "dim_sp", "report"), "report.dim_sp");
    const json& bp = field(j, "by_parahoric", "report");
    if (!bp.is_array()) throw ParseError("report.by_parahoric: expected a list");
    for (const auto& t : bp) {
        if (!t.is_array() || t.size() != 2) throw ParseError("report.by_parahoric: entries are [partition, qpoly]");
        r.by_parahoric.emplace(as_partition(t[0], "report.by_parahoric"), qpoly_from_json(t[1]));
    }
    r.components = int_from(field(j, "components", "report"), "report.components");
    r.top_frobenius = as_partition(field(j, "top_frobenius", "report"), "report.top_frobenius");
    r.jacobian_count = qpoly_from_json(field(j, "jacobian_count", "report"));
    return r;
}

json to_json(const QTRatFun& f) { return {{"num", bipoly_json(f.num())}, {"den", bipoly_json(f.den())}}; }

QTRatFun qtratfun_from_json(const json& j) {
    BiPoly num = bipoly_from(field(j, "num", "qtratfun"), "qtratfun.num");
    BiPoly den = bipoly_from(field(j, "den", "qtratfun"), "qtratfun.den");
    if (den.is_zero()) throw ParseError("qtratfun.den: zero");
    return QTRatFun(num, den);
}

json to_json(const QTCoeffMap& f) {
    json c = json::array();
    for (const auto& [l, v] : f.coeffs) c.push_back({l, to_json(v)});
    return {{"m", f.m}, {"n", f.n}, {"coeffs", c}};
}

QTCoeffMap qtmap_from_json(const json& j) {
    QTCoeffMap f;
    f.m = as_int(field(j, "m", "qtmap"), "qtmap.m");
    f.n = as_int(field(j, "n", "qtmap"), "qtmap.n");
    const json& cs = field(j, "coeffs", "qtmap");
    if (!cs.is_array()) throw ParseError("qtmap.coeffs: expected a list");
    for (const auto& t : cs) {
        if (!t.is_array() || t.size() != 2) throw ParseError("qtmap.coeffs: entries are [partition, qtratfun]");
        Partition l = as_partition(t[0], "qtmap.coeffs partition");
        if (l != sorted_partition(l) || size(l) != f.n) throw ParseError("qtmap.coeffs partition: not a partition of n");
        f.coeffs.emplace(l, qtratfun_from_json(t[1]));
    }
    return f;
}

}  // namespace shalika
