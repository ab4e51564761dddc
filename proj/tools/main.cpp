#include "shalika/json_io.hpp"
#include "shalika/spec_parse.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace shalika;

namespace {

struct Input {
    std::string newton, puiseux, spec_file;
};

void add_input(CLI::App* cmd, Input& in) {
    auto* g = cmd->add_option_group("input");
    g->add_option("--newton", in.newton, "Newton pairs, e.g. \"2,1;2,3\", \"u:2,1\", \"2,3+2,3\"");
    g->add_option("--puiseux", in.puiseux, "Puiseux exponents, e.g. \"7/4,3/2\"");
    g->add_option("--spec", in.spec_file, "GammaSpec JSON file");
    g->require_option(1);
}

GammaSpec load(const Input& in) {
    if (!in.newton.empty()) return parse_newton_spec(in.newton);
    if (!in.puiseux.empty()) return parse_puiseux_spec(in.puiseux);
    std::ifstream f(in.spec_file);
    if (!f) throw ParseError("--spec: cannot open '" + in.spec_file + "'");
    json j = json::parse(f, nullptr, false);
    if (j.is_discarded()) throw ParseError("--spec: invalid JSON in '" + in.spec_file + "'");
    return gamma_from_json(j);
}

std::string pairs_str(const NewtonPairs& ps) {
    std::string s = "[";
    for (std::size_t i = 0; i < ps.size(); ++i)
        s += (i ? ",[" : "[") + std::to_string(ps[i].first) + "," + std::to_string(ps[i].second) + "]";
    return s + "]";
}

json pairs_json(const NewtonPairs& ps) {
    json a = json::array();
    for (auto [p, q] : ps) a.push_back({p, q});
    return a;
}

void print_symfun(const SymFun& f, bool as_json) {
    if (as_json) std::cout << to_json(f).dump() << "\n";
    else std::cout << f.str() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Shalika germs, orbital integrals and master symmetric functions"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false, serial = false;
    int cap = 0;
    app.add_flag("--json", as_json, "JSON output");
    app.add_flag("--serial", serial, "disable OpenMP kernels");
    app.add_option("--cap", cap, "symmetric-function degree cap")->check(CLI::PositiveNumber);

    Input in;
    auto* msf = app.add_subcommand("msf", "master symmetric function in the e basis");
    std::string basis = "e";
    msf->add_option("--basis", basis, "e|h|p|th")->check(CLI::IsMember({"e", "h", "p", "th"}));
    add_input(msf, in);

    auto* germs = app.add_subcommand("germs", "germ expansion");
    std::string kind = "shalika";
    bool check = false;
    germs->add_option("--kind", kind, "shalika|steinberg|dyck")->check(CLI::IsMember({"shalika", "steinberg", "dyck"}));
    germs->add_flag("--check", check, "compare against the transition-matrix route");
    add_input(germs, in);

    auto* orbital = app.add_subcommand("orbital", "parahoric orbital integrals");
    std::string parahoric;
    bool all = false;
    auto* po = orbital->add_option("--parahoric", parahoric, "partition, e.g. 2,1,1");
    orbital->add_flag("--all", all, "every partition of n and the full report")->excludes(po);
    add_input(orbital, in);

    auto* jac = app.add_subcommand("jacobian", "point count of the compactified Jacobian");
    add_input(jac, in);

    auto* comps = app.add_subcommand("components", "component count and top Frobenius character");
    add_input(comps, in);

    auto* superpoly = app.add_subcommand("superpoly", "superpolynomial");
    bool qt = false;
    superpoly->add_flag("--qt", qt, "full a,q,t superpolynomial (torus knots only)");
    add_input(superpoly, in);

    auto* conv = app.add_subcommand("convert", "convert branch data");
    std::string to;
    conv->add_option("--to", to, "newton|puiseux|cabling")->required()->check(CLI::IsMember({"newton", "puiseux", "cabling"}));
    add_input(conv, in);

    auto* delta = app.add_subcommand("delta", "dimension of the affine Springer fiber");
    add_input(delta, in);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (const char* env = std::getenv("SHALIKA_DEGREE_CAP")) {
            try {
                int c = std::stoi(env);
                if (c < 1) throw std::invalid_argument("cap");
                set_degree_cap(c);
            } catch (const std::exception&) {
                throw ParseError(std::string("SHALIKA_DEGREE_CAP: expected a positive integer, got '") + env + "'");
            }
        }
        if (cap) set_degree_cap(cap);
        const Exec exec = serial ? Exec::serial : Exec::parallel;
        GammaSpec spec = load(in);
        for (std::size_t i = 0; i < spec.branches.size(); ++i) {
            const auto& st = spec.branches[i].steps;
            if (!st.empty() && st.back().kind == Step::Kind::ramified && st.back().q < st.back().p)
                std::cerr << "warning: branch " << i + 1 << ": outermost step has q < p\n";
        }

        if (*msf) {
            print_symfun(convert(master_symfun(spec, exec), basis_from_name(basis)), as_json);
        } else if (*germs) {
            SymFun f = master_symfun(spec, exec);
            Basis b = kind == "shalika" ? Basis::TH : kind == "steinberg" ? Basis::H : Basis::E;
            if (check) {
                SymFun w = waldspurger_master(spec);
                bool ok = w == f;
                std::cerr << (ok ? "routes agree\n" : "routes differ\n");
                if (!ok) {
                    std::cerr << "  dyck route: " << f.str() << "\n  transition route: " << w.str() << "\n";
                    return 1;
                }
            }
            print_symfun(convert(f, b), as_json);
        } else if (*orbital) {
            if (all) {
                OrbitalReport r = orbital_report(spec, exec);
                if (as_json) {
                    std::cout << to_json(r).dump() << "\n";
                } else {
                    std::cout << "dim " << r.dim_sp << "\n";
                    for (const auto& [l, p] : r.by_parahoric) std::cout << render(l) << " " << p.str() << "\n";
                    std::cout << "components " << r.components << "\ntop_frobenius " << render(r.top_frobenius) << "\n";
                }
            } else {
                Partition l = parahoric.empty() ? Partition{spec.degree()} : parse_partition(parahoric);
                if (size(l) != spec.degree())
                    throw ParseError("--parahoric: partition of " + std::to_string(size(l)) + ", spec has degree " +
                                     std::to_string(spec.degree()));
                QPoly p = orbital_integral(spec, l);
                if (as_json) std::cout << json{{"partition", l}, {"value", to_json(p)}}.dump() << "\n";
                else std::cout << p.str() << "\n";
            }
        } else if (*jac) {
            QPoly p = jacobian_count(spec);
            if (as_json) std::cout << to_json(p).dump() << "\n";
            else std::cout << p.str() << "\n";
        } else if (*comps) {
            SymFun f = master_symfun(spec, exec);
            Partition nu = top_frobenius(f);
            Int c = contingency_count(nu, Partition(size(nu), 1));
            if (as_json) std::cout << json{{"components", c.fits_slong_p() ? json(c.get_si()) : json(c.get_str())}, {"top_frobenius", nu}}.dump() << "\n";
            else std::cout << c << " " << render(nu) << "\n";
        } else if (*superpoly) {
            if (qt) {
                if (spec.branches.size() != 1 || spec.branches[0].steps.size() != 1 ||
                    spec.branches[0].steps[0].kind != Step::Kind::ramified)
                    throw ParseError("--qt: needs a single Newton pair (torus knot)");
                const Step& s = spec.branches[0].steps[0];
                QTCoeffMap f = torus_msf_qt(s.q, s.p, exec);
                auto p = superpolynomial(f);
                if (as_json) {
                    json a = json::array();
                    for (const auto& c : p) a.push_back(to_json(c));
                    std::cout << json{{"coeffs", to_json(f)}, {"superpolynomial", a}}.dump() << "\n";
                } else {
                    std::cout << render_superpolynomial(p) << "\n";
                }
            } else {
                RatFun v = pair_with_e(master_symfun(spec, exec), Partition{spec.degree()});
                if (as_json) std::cout << json(v.str()).dump() << "\n";
                else std::cout << v.str() << "\n";
            }
        } else if (*conv) {
            json out = json::array();
            std::string text;
            for (std::size_t i = 0; i < spec.branches.size(); ++i) {
                NewtonPairs ps = spec.branches[i].newton_pairs();
                std::string s;
                if (to == "newton") {
                    s = pairs_str(ps);
                    out.push_back(pairs_json(ps));
                } else if (to == "cabling") {
                    s = pairs_str(newton_to_cabling(ps));
                    out.push_back(pairs_json(newton_to_cabling(ps)));
                } else {
                    json a = json::array();
                    s = "[";
                    auto r = newton_to_puiseux(ps);
                    for (std::size_t k = 0; k < r.size(); ++k) {
                        s += (k ? "," : "") + r[k].get_str();
                        a.push_back(r[k].get_str());
                    }
                    s += "]";
                    out.push_back(a);
                }
                text += (i ? " + " : "") + s;
            }
            if (as_json) std::cout << out.dump() << "\n";
            else std::cout << text << "\n";
        } else if (*delta) {
            int d = dim_sp(spec);
            if (as_json) std::cout << json{{"dim_sp", d}}.dump() << "\n";
            else std::cout << d << "\n";
        }
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
