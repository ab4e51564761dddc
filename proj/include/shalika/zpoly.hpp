#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace shalika {

using Int = mpz_class;
using Rat = mpq_class;

// Dense polynomial in q with integer coefficients. c[i] is the coefficient
// of q^i; the highest stored coefficient is never zero.
struct ZPoly {
    std::vector<Int> c;

    ZPoly() = default;
    explicit ZPoly(const Int& k);
    static ZPoly monomial(const Int& k, int e);

    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const Int& lc() const { return c.back(); }
    bool is_constant() const { return c.size() <= 1; }
    bool is_one() const { return c.size() == 1 && c[0] == 1; }
    int valuation() const;

    void trim();
    bool operator==(const ZPoly& o) const { return c == o.c; }
    bool operator!=(const ZPoly& o) const { return c != o.c; }
};

ZPoly operator+(const ZPoly& a, const ZPoly& b);
ZPoly operator-(const ZPoly& a, const ZPoly& b);
ZPoly operator-(const ZPoly& a);
ZPoly operator*(const ZPoly& a, const ZPoly& b);
ZPoly operator*(const ZPoly& a, const Int& k);

ZPoly shift(const ZPoly& a, int e);
Int content(const ZPoly& a);
ZPoly primitive_part(const ZPoly& a);
ZPoly divexact(const ZPoly& a, const Int& k);
// Exact quotient a/b; throws std::domain_error if b does not divide a in Z[q].
ZPoly divexact(const ZPoly& a, const ZPoly& b);
bool divides(const ZPoly& b, const ZPoly& a);
ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b);
// gcd in Z[q], normalized to positive leading coefficient.
ZPoly gcd(const ZPoly& a, const ZPoly& b);
ZPoly substitute_power(const ZPoly& a, int k);
ZPoly pow(const ZPoly& a, int e);
Int eval(const ZPoly& a, const Int& x);
std::string render(const ZPoly& a, const std::string& var = "q");

}  // namespace shalika
