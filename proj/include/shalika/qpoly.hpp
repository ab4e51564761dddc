#pragma once

#include "shalika/zpoly.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace shalika {

// Sparse polynomial in q with rational coefficients.
class QPoly {
public:
    QPoly() = default;
    QPoly(long k);
    QPoly(const Rat& k);
    static QPoly monomial(const Rat& k, int e);
    static QPoly from_zpoly(const ZPoly& p);

    const std::map<int, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;
    Rat coeff(int e) const;
    bool has_integer_coeffs() const;
    bool nonnegative_integer() const;
    // Requires integer coefficients.
    ZPoly to_zpoly() const;
    Rat eval(const Rat& x) const;

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    QPoly operator-() const;
    bool operator==(const QPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const QPoly& o) const { return terms_ != o.terms_; }

    // Descending powers, e.g. "q^8+2*q^7+q^6".
    std::string str() const;
    static QPoly parse(const std::string& s);

private:
    void set(int e, const Rat& k);
    std::map<int, Rat> terms_;
};

// q^d * p(1/q); throws if d < degree(p).
QPoly reverse_and_scale(const QPoly& p, int d);
QPoly substitute_power(const QPoly& p, int k);

class RatFun {
public:
    RatFun() : den_(1) {}
    RatFun(long k);
    RatFun(const Int& k);
    RatFun(const Rat& k);
    RatFun(const QPoly& p);
    RatFun(const QPoly& num, const QPoly& den);
    RatFun(ZPoly num, ZPoly den);
    // q^e, e may be negative.
    static RatFun q_power(int e);

    QPoly num() const { return QPoly::from_zpoly(num_); }
    QPoly den() const { return QPoly::from_zpoly(den_); }
    const ZPoly& znum() const { return num_; }
    const ZPoly& zden() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_integral_polynomial() const { return den_.is_one(); }
    QPoly to_qpoly() const;

    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    RatFun& operator*=(const RatFun& o);
    RatFun& operator/=(const RatFun& o);
    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
    RatFun operator-() const;
    RatFun pow(int e) const;
    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    // Value at q = x; throws on a pole.
    Rat eval(const Rat& x) const;
    RatFun substitute_power(int k) const;

    std::string str() const;
    static RatFun parse(const std::string& s);

private:
    void normalize();
    ZPoly num_;
    ZPoly den_;
};

enum class ArithOp { add, sub, mul, div };
RatFun ratfun_arith(const RatFun& a, const RatFun& b, ArithOp op);
RatFun substitute_power(const RatFun& f, int k);

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace shalika
