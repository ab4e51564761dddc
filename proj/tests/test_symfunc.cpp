#include "shalika/symfunc.hpp"

#include <doctest.h>

#include <random>

using namespace shalika;

namespace {

RatFun R(const std::string& s) { return RatFun::parse(s); }

SymFun random_symfun(std::mt19937& g, Basis b, int n) {
    std::uniform_int_distribution<int> coef(-3, 3);
    SymFun f(b, n);
    for (const auto& l : partitions(n)) {
        int a = coef(g), c = coef(g);
        if (a || c) f.add(l, RatFun(QPoly::monomial(Rat(a), 0) + QPoly::monomial(Rat(c), 1)));
    }
    return f;
}

const Basis all_bases[] = {Basis::E, Basis::H, Basis::P, Basis::TH};

}  // namespace

TEST_SUITE("symfunc") {

TEST_CASE("th_2 expansions") {
    SymFun th2 = SymFun::basis_element(Basis::TH, {2});
    SymFun p = convert(th2, Basis::P);
    CHECK(p.coeffs.size() == 2);
    CHECK(p.coeff({1, 1}) == R("(q+1)/2"));
    CHECK(p.coeff({2}) == R("(1-q)/2"));
    SymFun e = convert(th2, Basis::E);
    CHECK(e.coeff({1, 1}) == RatFun(1));
    CHECK(e.coeff({2}) == R("q-1"));
    SymFun e3 = SymFun::basis_element(Basis::E, {3});
    CHECK(convert(e3, Basis::E).str() == "e[3]");
}

TEST_CASE("multiply") {
    SymFun a = SymFun::basis_element(Basis::TH, {2});
    SymFun b = SymFun::basis_element(Basis::TH, {1, 1});
    CHECK(multiply(a, b) == SymFun::basis_element(Basis::TH, {2, 1, 1}));
    SymFun f = SymFun::basis_element(Basis::E, {1, 1}) + SymFun::basis_element(Basis::E, {2}) * R("q");
    SymFun sq = multiply(f, f);
    CHECK(sq.str() == "e[1,1,1,1] + 2*q*e[2,1,1] + q^2*e[2,2]");
    CHECK(multiply(f, SymFun::one(Basis::E)) == f);
    CHECK(multiply(convert(f, Basis::P), convert(f, Basis::H)) == sq);
}

TEST_CASE("hall pairing") {
    SymFun e1111 = SymFun::basis_element(Basis::E, {1, 1, 1, 1});
    CHECK(hall_pair(e1111, e1111) == RatFun(24));
    CHECK(hall_pair(SymFun::basis_element(Basis::P, {2}), SymFun::basis_element(Basis::P, {1, 1})) == RatFun(0));
    SymFun f = SymFun::basis_element(Basis::E, {1, 1}) + SymFun::basis_element(Basis::E, {2}) * R("q");
    CHECK(hall_pair(f, SymFun::basis_element(Basis::E, {2})) == R("1+q"));
    CHECK(pair_with_e(f, {2}) == R("1+q"));
    CHECK_THROWS(hall_pair(f, e1111));
    for (int n = 1; n <= 6; ++n)
        for (const auto& a : partitions(n))
            for (const auto& b : partitions(n)) {
                SymFun ea = SymFun::basis_element(Basis::E, a), eb = SymFun::basis_element(Basis::E, b);
                CHECK(hall_pair(ea, eb) == RatFun(contingency_count(a, b)));
                CHECK(hall_pair(SymFun::basis_element(Basis::P, a), SymFun::basis_element(Basis::P, b)) ==
                      (a == b ? RatFun(zee(a)) : RatFun(0)));
            }
}

TEST_CASE("omega") {
    SymFun e = SymFun::basis_element(Basis::E, {2, 1});
    CHECK(omega(e) == SymFun::basis_element(Basis::H, {2, 1}));
    CHECK(omega(SymFun::basis_element(Basis::P, {2})) == SymFun::basis_element(Basis::P, {2}) * RatFun(-1));
    std::mt19937 g(3);
    for (int n = 1; n <= 5; ++n)
        for (Basis b : all_bases) {
            SymFun f = random_symfun(g, b, n), h = random_symfun(g, Basis::E, n);
            CHECK(omega(omega(f)) == f);
            CHECK(hall_pair(omega(f), omega(h)) == hall_pair(f, h));
        }
}

TEST_CASE("adams") {
    CHECK(adams(SymFun::basis_element(Basis::E, {1}), 2) == SymFun::basis_element(Basis::P, {2}));
    SymFun f = SymFun::basis_element(Basis::TH, {2, 1});
    CHECK(adams(f, 1) == f);
    CHECK(adams(SymFun::basis_element(Basis::P, {1, 1}), 2) == SymFun::basis_element(Basis::P, {2, 2}));
}

TEST_CASE("nabla at t = 1") {
    SymFun f = SymFun::basis_element(Basis::TH, {2}) + SymFun::basis_element(Basis::TH, {1, 1});
    SymFun g = nabla_t1(f, 1);
    CHECK(g.coeff({2}) == R("q"));
    CHECK(g.coeff({1, 1}) == RatFun(1));
    CHECK(nabla_t1(f, 0) == f);
    SymFun a = SymFun::basis_element(Basis::TH, {3, 1}), b = SymFun::basis_element(Basis::TH, {2, 2});
    CHECK(nabla_t1(multiply(a, b), 2) == multiply(nabla_t1(a, 2), nabla_t1(b, 2)));
    SymFun u = nabla_t1(adams(SymFun::basis_element(Basis::E, {1}), 2), 1) * RatFun(-1);
    CHECK(convert(u, Basis::E).str() == "e[1,1] + 2*q*e[2]");
}

TEST_CASE("conversion round trips") {
    std::mt19937 g(11);
    for (int n = 1; n <= 6; ++n)
        for (Basis a : all_bases)
            for (Basis b : all_bases) {
                SymFun f = random_symfun(g, a, n);
                SymFun back = convert(convert(f, b), a);
                CHECK(back.basis == a);
                CHECK(back.coeffs == f.coeffs);
            }
}

TEST_CASE("e_n as a signed sum of h over compositions") {
    for (int n = 1; n <= 8; ++n) {
        SymFun s(Basis::H, n);
        for (const auto& al : compositions(n))
            s.add(sorted_partition(al), (n - static_cast<int>(al.size())) % 2 ? RatFun(-1) : RatFun(1));
        CHECK(convert(s, Basis::E) == SymFun::basis_element(Basis::E, {n}));
    }
}

TEST_CASE("degree cap") {
    int old = degree_cap();
    set_degree_cap(3);
    CHECK_THROWS(convert(SymFun::basis_element(Basis::E, {2, 2}), Basis::P));
    set_degree_cap(old);
    CHECK_NOTHROW(convert(SymFun::basis_element(Basis::E, {2, 2}), Basis::P));
}

}  // TEST_SUITE
