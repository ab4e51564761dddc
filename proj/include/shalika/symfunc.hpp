#pragma once

#include "shalika/combinat.hpp"

#include <map>
#include <string>

namespace shalika {

enum class Basis { E, H, P, TH };

std::string basis_name(Basis b);
Basis basis_from_name(const std::string& s);

// Homogeneous symmetric function with coefficients in Q(q).
struct SymFun {
    Basis basis = Basis::E;
    int degree = 0;
    std::map<Partition, RatFun> coeffs;

    SymFun() = default;
    SymFun(Basis b, int n) : basis(b), degree(n) {}
    static SymFun one(Basis b = Basis::E);
    static SymFun basis_element(Basis b, const Partition& lambda, const RatFun& c = RatFun(1));

    RatFun coeff(const Partition& lambda) const;
    void add(const Partition& lambda, const RatFun& c);
    bool is_zero() const { return coeffs.empty(); }

    SymFun& operator+=(const SymFun& o);
    SymFun& operator-=(const SymFun& o);
    SymFun operator*(const RatFun& c) const;
    // Terms in ascending lexicographic order, e.g. "(q+1)*e[1,1] + q*e[2]".
    std::string str() const;
};

bool operator==(const SymFun& a, const SymFun& b);
inline bool operator!=(const SymFun& a, const SymFun& b) { return !(a == b); }
inline SymFun operator+(SymFun a, const SymFun& b) { return a += b; }
inline SymFun operator-(SymFun a, const SymFun& b) { return a -= b; }

// Degree cap for basis changes (default 12).
int degree_cap();
void set_degree_cap(int cap);

// c_lambda = prod_i prod_{j<=lambda_i} (1 - q^j)
RatFun c_lambda(const Partition& lambda);
// b_mu = prod_i (1 - q^{mu_i})
RatFun b_mu(const Partition& mu);

// Expansion of the basis element B_lambda in the P basis.
const std::map<Partition, RatFun>& to_p_column(Basis b, const Partition& lambda);
// Expansion of p_mu in the basis B.
const std::map<Partition, RatFun>& from_p_column(Basis b, const Partition& mu);

SymFun convert(const SymFun& f, Basis target);
SymFun multiply(const SymFun& f, const SymFun& g);
RatFun hall_pair(const SymFun& f, const SymFun& g);
// <f, e_lambda> through contingency counts, f converted to E.
RatFun pair_with_e(const SymFun& f, const Partition& lambda);
SymFun omega(const SymFun& f);
SymFun adams(const SymFun& f, int r);
SymFun nabla_t1(const SymFun& f, int a);
SymFun substitute_power(const SymFun& f, int k);

}  // namespace shalika
