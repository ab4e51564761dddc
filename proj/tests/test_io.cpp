#include "shalika/json_io.hpp"
#include "shalika/spec_parse.hpp"

#include <doctest.h>

using namespace shalika;

TEST_SUITE("io") {

TEST_CASE("inline newton syntax") {
    GammaSpec g = parse_newton_spec("2,1;2,3");
    REQUIRE(g.branches.size() == 1);
    CHECK(g.branches[0].newton_pairs() == NewtonPairs{{2, 1}, {2, 3}});
    GammaSpec h = parse_newton_spec("2,3 + 2,3");
    CHECK(h.branches.size() == 2);
    GammaSpec u = parse_newton_spec("2,3;u:2,1");
    REQUIRE(u.branches[0].steps.size() == 2);
    CHECK(u.branches[0].steps[1] == Step::unramified(2, 1));
    CHECK_THROWS_AS(parse_newton_spec("2,x"), ParseError);
    CHECK_THROWS_AS(parse_newton_spec("2,4"), ParseError);
    CHECK_THROWS_AS(parse_newton_spec("2,3+"), ParseError);
    CHECK_THROWS_AS(parse_newton_spec("u:1,0"), ParseError);
    try {
        parse_newton_spec("2,1;2,y");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("step 2") != std::string::npos);
    }
}

TEST_CASE("inline puiseux syntax") {
    GammaSpec g = parse_puiseux_spec("7/4,3/2");
    CHECK(g.branches[0].newton_pairs() == NewtonPairs{{2, 1}, {2, 3}});
    CHECK(parse_puiseux_spec("3/2+3/2").branches.size() == 2);
    CHECK_THROWS_AS(parse_puiseux_spec("3/2,7/4"), ParseError);
    CHECK_THROWS_AS(parse_puiseux_spec("3/0"), ParseError);
    CHECK(parse_partition("[2,1,1]") == Partition{2, 1, 1});
    CHECK(parse_partition("3 1") == Partition{3, 1});
    CHECK_THROWS_AS(parse_partition("1,2"), ParseError);
}

TEST_CASE("qpoly json") {
    QPoly p = QPoly::parse("q^8+2*q^7+q^6") + QPoly::monomial(Rat(-1, 3), 0);
    json j = to_json(p);
    CHECK(j.dump() == R"([[0,"-1/3"],[6,"1"],[7,"2"],[8,"1"]])");
    CHECK(qpoly_from_json(j) == p);
    CHECK(qpoly_from_json(json::parse(R"([[1,"4/2"]])")) == QPoly::monomial(Rat(2), 1));
    CHECK_THROWS_AS(qpoly_from_json(json::parse(R"([[-1,"1"]])")), ParseError);
    CHECK_THROWS_AS(qpoly_from_json(json::parse(R"([[1,"x"]])")), ParseError);
}

TEST_CASE("symfun json") {
    SymFun f = master_symfun(parse_newton_spec("2,1;2,3"));
    json j = to_json(f);
    CHECK(j["basis"] == "e");
    CHECK(j["degree"] == 4);
    CHECK(symfun_from_json(j) == f);
    CHECK(symfun_from_json(j).str() == f.str());
    SymFun th = convert(f, Basis::TH);
    CHECK(symfun_from_json(json::parse(to_json(th).dump())).coeffs == th.coeffs);
    CHECK_THROWS_AS(symfun_from_json(json::parse(R"({"basis":"x","degree":1,"coeffs":[]})")), ParseError);
    CHECK_THROWS_AS(symfun_from_json(json::parse(R"({"basis":"e","degree":2,"coeffs":[[[1],"1"]]})")), ParseError);
}

TEST_CASE("spec json") {
    json j = json::parse(R"({"branches":[{"steps":[{"ramified":[2,1]},{"ramified":[2,3]}]},
                                          {"steps":[{"unramified":{"f":2,"a":1}}]},
                                          {"puiseux":["7/4","3/2"]}],
                             "contact":{"0,1":"3/2"}, "dim_override": 8})");
    GammaSpec g = gamma_from_json(j);
    CHECK(g.branches.size() == 3);
    CHECK(g.branches[2].newton_pairs() == NewtonPairs{{2, 1}, {2, 3}});
    CHECK(g.contact.at({0, 1}) == Rat(3, 2));
    CHECK(g.dim_override == 8);
    GammaSpec back = gamma_from_json(to_json(g));
    CHECK(to_json(back) == to_json(g));
    CHECK_THROWS_AS(gamma_from_json(json::parse(R"({"branches":[{"steps":[{"ramified":[2,4]}]}]})")), ParseError);
    CHECK_THROWS_AS(gamma_from_json(json::parse(R"({"branches":[{"steps":[{"other":1}]}]})")), ParseError);
    CHECK_THROWS_AS(gamma_from_json(json::parse(R"({"nope":[]})")), ParseError);
}

TEST_CASE("report json") {
    OrbitalReport r = orbital_report(parse_newton_spec("2,1;2,3"));
    json j = to_json(r);
    OrbitalReport back = report_from_json(json::parse(j.dump()));
    CHECK(back.dim_sp == r.dim_sp);
    CHECK(back.by_parahoric == r.by_parahoric);
    CHECK(back.components == r.components);
    CHECK(back.top_frobenius == r.top_frobenius);
    CHECK(back.jacobian_count == r.jacobian_count);
    CHECK(to_json(back) == j);
}

TEST_CASE("q,t json") {
    QTCoeffMap f = torus_msf_qt(3, 2);
    json j = to_json(f);
    QTCoeffMap back = qtmap_from_json(json::parse(j.dump()));
    CHECK(back.m == 3);
    CHECK(back.n == 2);
    CHECK(back.coeffs == f.coeffs);
    QTRatFun w = QTRatFun::monomial(2, 1) / (QTRatFun(1) - QTRatFun::monomial(1, 1));
    CHECK(qtratfun_from_json(to_json(w)) == w);
    CHECK_THROWS_AS(qtratfun_from_json(json::parse(R"({"num":[[0,0,1]],"den":[]})")), ParseError);
}

}  // TEST_SUITE
