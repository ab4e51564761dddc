#include "shalika/zpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace shalika {

ZPoly::ZPoly(const Int& k) {
    if (k != 0) c.push_back(k);
}

ZPoly ZPoly::monomial(const Int& k, int e) {
    ZPoly r;
    if (k == 0) return r;
    r.c.assign(e + 1, Int(0));
    r.c[e] = k;
    return r;
}

int ZPoly::valuation() const {
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) return static_cast<int>(i);
    return -1;
}

void ZPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.trim();
    return r;
}

ZPoly operator-(const ZPoly& a) {
    ZPoly r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.trim();
    return r;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            if (b.c[j] != 0) mpz_addmul(r.c[i + j].get_mpz_t(), a.c[i].get_mpz_t(), b.c[j].get_mpz_t());
    }
    r.trim();
    return r;
}

ZPoly operator*(const ZPoly& a, const Int& k) {
    if (k == 0) return ZPoly();
    ZPoly r = a;
    for (auto& x : r.c) x *= k;
    return r;
}

ZPoly shift(const ZPoly& a, int e) {
    if (a.is_zero()) return a;
    ZPoly r;
    if (e >= 0) {
        r.c.assign(e, Int(0));
        r.c.insert(r.c.end(), a.c.begin(), a.c.end());
    } else {
        if (a.valuation() < -e) throw std::domain_error("shift leaves negative exponent");
        r.c.assign(a.c.begin() - e, a.c.end());
    }
    return r;
}

Int content(const ZPoly& a) {
    Int g = 0;
    for (const auto& x : a.c) {
        if (x == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly divexact(const ZPoly& a, const Int& k) {
    if (k == 1) return a;
    ZPoly r = a;
    for (auto& x : r.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
    return r;
}

ZPoly primitive_part(const ZPoly& a) {
    if (a.is_zero()) return a;
    Int g = content(a);
    if (a.lc() < 0) g = -g;
    return divexact(a, g);
}

static bool long_divide(const ZPoly& a, const ZPoly& b, ZPoly& quot) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    quot = ZPoly();
    if (a.degree() < b.degree()) return a.is_zero();
    std::vector<Int> r = a.c;
    std::vector<Int> qv(a.c.size() - b.c.size() + 1);
    const Int& lb = b.lc();
    Int t;
    for (int i = a.degree(); i >= b.degree(); --i) {
        if (r[i] == 0) continue;
        if (!mpz_divisible_p(r[i].get_mpz_t(), lb.get_mpz_t())) return false;
        mpz_divexact(t.get_mpz_t(), r[i].get_mpz_t(), lb.get_mpz_t());
        int s = i - b.degree();
        qv[s] = t;
        for (int j = 0; j <= b.degree(); ++j)
            if (b.c[j] != 0) mpz_submul(r[s + j].get_mpz_t(), t.get_mpz_t(), b.c[j].get_mpz_t());
    }
    for (int i = 0; i < b.degree(); ++i)
        if (r[i] != 0) return false;
    quot.c = std::move(qv);
    quot.trim();
    return true;
}

ZPoly divexact(const ZPoly& a, const ZPoly& b) {
    if (b.is_constant()) {
        if (b.is_zero()) throw std::domain_error("division by zero polynomial");
        return divexact(a, b.c[0]);
    }
    ZPoly q;
    if (!long_divide(a, b, q)) throw std::domain_error("inexact polynomial division");
    return q;
}

bool divides(const ZPoly& b, const ZPoly& a) {
    ZPoly q;
    return long_divide(a, b, q);
}

ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a;
    const int db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        Int lr = r.lc();
        int s = r.degree() - db;
        r = r * b.lc();
        for (int j = 0; j <= db; ++j) r.c[s + j] -= lr * b.c[j];
        r.trim();
    }
    return r;
}

static ZPoly gcd_primitive(ZPoly a, ZPoly b) {
    if (a.degree() < b.degree()) std::swap(a, b);
    if (b.is_constant()) return ZPoly(1);
    if (divides(b, a)) return b;
    while (!b.is_zero()) {
        if (b.is_constant()) return ZPoly(1);
        ZPoly r = primitive_part(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return primitive_part(a);
}

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero()) return primitive_part(b) * content(b);
    if (b.is_zero()) return primitive_part(a) * content(a);
    Int ca = content(a), cb = content(b), cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    int va = a.valuation(), vb = b.valuation();
    int v = std::min(va, vb);
    ZPoly pa = primitive_part(shift(a, -va));
    ZPoly pb = primitive_part(shift(b, -vb));
    ZPoly g;
    if (pa.is_constant() || pb.is_constant()) g = ZPoly(1);
    else if (pa == pb) g = pa;
    else g = gcd_primitive(pa, pb);
    return shift(g, v) * cg;
}

ZPoly substitute_power(const ZPoly& a, int k) {
    if (k < 1) throw std::invalid_argument("substitute_power needs k >= 1");
    if (k == 1 || a.is_constant()) return a;
    ZPoly r;
    r.c.assign(static_cast<std::size_t>(a.degree()) * k + 1, Int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i * k] = a.c[i];
    return r;
}

ZPoly pow(const ZPoly& a, int e) {
    ZPoly r(1), b = a;
    while (e > 0) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

Int eval(const ZPoly& a, const Int& x) {
    Int r = 0;
    for (int i = a.degree(); i >= 0; --i) r = r * x + a.c[i];
    return r;
}

std::string render(const ZPoly& a, const std::string& var) {
    if (a.is_zero()) return "0";
    std::string s;
    for (int i = a.degree(); i >= 0; --i) {
        const Int& k = a.c[i];
        if (k == 0) continue;
        Int m = abs(k);
        if (k < 0) s += "-";
        else if (!s.empty()) s += "+";
        if (i == 0) {
            s += m.get_str();
            continue;
        }
        if (m != 1) s += m.get_str() + "*";
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
}

}  // namespace shalika
