#pragma once

#include "shalika/qpoly.hpp"

#include <tuple>
#include <vector>

namespace shalika {

// Polynomial in t whose coefficients are ZPoly in q: c[j] multiplies t^j.
struct BiPoly {
    std::vector<ZPoly> c;

    BiPoly() = default;
    explicit BiPoly(const ZPoly& p);
    static BiPoly monomial(const Int& k, int qe, int te);

    bool is_zero() const { return c.empty(); }
    int tdeg() const { return static_cast<int>(c.size()) - 1; }
    void trim();
    bool operator==(const BiPoly& o) const { return c == o.c; }
    // Terms as (q exponent, t exponent, coefficient), sorted.
    std::vector<std::tuple<int, int, Int>> terms() const;
    static BiPoly from_terms(const std::vector<std::tuple<int, int, Int>>& ts);
};

BiPoly operator+(const BiPoly& a, const BiPoly& b);
BiPoly operator-(const BiPoly& a, const BiPoly& b);
BiPoly operator-(const BiPoly& a);
BiPoly operator*(const BiPoly& a, const BiPoly& b);
BiPoly operator*(const BiPoly& a, const ZPoly& k);
BiPoly gcd(const BiPoly& a, const BiPoly& b);
BiPoly divexact(const BiPoly& a, const BiPoly& b);
bool divides(const BiPoly& b, const BiPoly& a);
BiPoly swap_qt(const BiPoly& a);
ZPoly at_t1(const BiPoly& a);
std::string render(const BiPoly& a);

class QTRatFun {
public:
    QTRatFun() : den_(ZPoly(1)) {}
    QTRatFun(long k) : num_(ZPoly(Int(k))), den_(ZPoly(1)) { if (k == 0) num_.c.clear(); }
    QTRatFun(const RatFun& f);
    QTRatFun(BiPoly num, BiPoly den);
    // q^a t^b, exponents may be negative.
    static QTRatFun monomial(int qe, int te);

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    QTRatFun& operator+=(const QTRatFun& o);
    QTRatFun& operator-=(const QTRatFun& o);
    QTRatFun& operator*=(const QTRatFun& o);
    QTRatFun& operator/=(const QTRatFun& o);
    friend QTRatFun operator+(QTRatFun a, const QTRatFun& b) { return a += b; }
    friend QTRatFun operator-(QTRatFun a, const QTRatFun& b) { return a -= b; }
    friend QTRatFun operator*(QTRatFun a, const QTRatFun& b) { return a *= b; }
    friend QTRatFun operator/(QTRatFun a, const QTRatFun& b) { return a /= b; }
    QTRatFun operator-() const;
    bool operator==(const QTRatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QTRatFun& o) const { return !(*this == o); }

    QTRatFun swap_qt() const;
    // Multiplicity of (t-1) in the reduced numerator and denominator.
    int t1_order_num() const;
    int t1_order_den() const;
    std::string str() const;

private:
    void normalize();
    BiPoly num_;
    BiPoly den_;
};

class PoleError : public std::domain_error {
public:
    PoleError(const std::string& what, int order) : std::domain_error(what), order_(order) {}
    int order() const { return order_; }

private:
    int order_;
};

// Exact t = 1 specialization; throws PoleError carrying the pole order.
RatFun specialize_t1(const QTRatFun& f);

}  // namespace shalika
