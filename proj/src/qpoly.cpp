#include "shalika/qpoly.hpp"

#include <cctype>

namespace shalika {

QPoly::QPoly(long k) {
    if (k != 0) terms_[0] = Rat(k);
}

QPoly::QPoly(const Rat& k) {
    if (k != 0) terms_[0] = k;
}

QPoly QPoly::monomial(const Rat& k, int e) {
    if (e < 0) throw std::invalid_argument("QPoly exponents are nonnegative");
    QPoly r;
    if (k != 0) r.terms_[e] = k;
    return r;
}

QPoly QPoly::from_zpoly(const ZPoly& p) {
    QPoly r;
    for (std::size_t i = 0; i < p.c.size(); ++i)
        if (p.c[i] != 0) r.terms_[static_cast<int>(i)] = Rat(p.c[i]);
    return r;
}

int QPoly::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

Rat QPoly::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

bool QPoly::has_integer_coeffs() const {
    for (const auto& [e, k] : terms_)
        if (k.get_den() != 1) return false;
    return true;
}

bool QPoly::nonnegative_integer() const {
    for (const auto& [e, k] : terms_)
        if (k.get_den() != 1 || k < 0) return false;
    return true;
}

ZPoly QPoly::to_zpoly() const {
    if (!has_integer_coeffs()) throw std::domain_error("QPoly has non-integer coefficients");
    ZPoly r;
    if (terms_.empty()) return r;
    r.c.assign(degree() + 1, Int(0));
    for (const auto& [e, k] : terms_) r.c[e] = k.get_num();
    return r;
}

Rat QPoly::eval(const Rat& x) const {
    Rat r = 0;
    for (const auto& [e, k] : terms_) {
        Rat p = 1;
        for (int i = 0; i < e; ++i) p *= x;
        r += k * p;
    }
    return r;
}

void QPoly::set(int e, const Rat& k) {
    if (k == 0) terms_.erase(e);
    else terms_[e] = k;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    for (const auto& [e, k] : o.terms_) set(e, coeff(e) + k);
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    for (const auto& [e, k] : o.terms_) set(e, coeff(e) - k);
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    QPoly r;
    for (const auto& [ea, ka] : a.terms_)
        for (const auto& [eb, kb] : b.terms_) r.set(ea + eb, r.coeff(ea + eb) + ka * kb);
    return r;
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& [e, k] : r.terms_) k = -k;
    return r;
}

std::string QPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const int e = it->first;
        Rat m = abs(it->second);
        if (it->second < 0) s += "-";
        else if (!s.empty()) s += "+";
        if (e == 0) {
            s += m.get_str();
            continue;
        }
        if (m != 1) s += m.get_str() + "*";
        s += "q";
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

QPoly QPoly::parse(const std::string& s) {
    RatFun f = RatFun::parse(s);
    if (!f.is_polynomial()) throw ParseError("not a polynomial: " + s);
    return f.to_qpoly();
}

QPoly reverse_and_scale(const QPoly& p, int d) {
    if (d < p.degree()) throw std::domain_error("reverse_and_scale: d below degree");
    QPoly r;
    for (const auto& [e, k] : p.terms()) r += QPoly::monomial(k, d - e);
    return r;
}

QPoly substitute_power(const QPoly& p, int k) {
    if (k < 1) throw std::invalid_argument("substitute_power needs k >= 1");
    QPoly r;
    for (const auto& [e, c] : p.terms()) r += QPoly::monomial(c, e * k);
    return r;
}

// RatFun

namespace {

// Scale a rational polynomial to integer coefficients: returns (zp, s) with p = zp / s.
std::pair<ZPoly, Int> clear_denominators(const QPoly& p) {
    Int l = 1;
    for (const auto& [e, k] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), k.get_den_mpz_t());
    ZPoly r;
    if (p.is_zero()) return {r, l};
    r.c.assign(p.degree() + 1, Int(0));
    for (const auto& [e, k] : p.terms()) r.c[e] = k.get_num() * (l / k.get_den());
    return {r, l};
}

}  // namespace

RatFun::RatFun(long k) : num_(Int(k)), den_(1) {}
RatFun::RatFun(const Int& k) : num_(k), den_(1) {}

RatFun::RatFun(const Rat& k) {
    Rat c = k;
    c.canonicalize();
    num_ = ZPoly(c.get_num());
    den_ = ZPoly(c.get_den());
}

RatFun::RatFun(const QPoly& p) {
    auto [z, s] = clear_denominators(p);
    num_ = std::move(z);
    den_ = ZPoly(s);
    normalize();
}

RatFun::RatFun(const QPoly& num, const QPoly& den) {
    if (den.is_zero()) throw std::domain_error("zero denominator");
    auto [zn, sn] = clear_denominators(num);
    auto [zd, sd] = clear_denominators(den);
    num_ = zn * sd;
    den_ = zd * sn;
    normalize();
}

RatFun::RatFun(ZPoly num, ZPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    normalize();
}

RatFun RatFun::q_power(int e) {
    RatFun r;
    if (e >= 0) r.num_ = ZPoly::monomial(1, e);
    else {
        r.num_ = ZPoly(1);
        r.den_ = ZPoly::monomial(1, -e);
    }
    return r;
}

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = ZPoly(1);
        return;
    }
    if (!den_.is_constant()) {
        ZPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = divexact(num_, g);
            den_ = divexact(den_, g);
        }
    }
    Int g = content(den_);
    if (g != 1) {
        Int cn = content(num_);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cn.get_mpz_t());
        if (g != 1) {
            num_ = divexact(num_, g);
            den_ = divexact(den_, g);
        }
    }
    if (den_.lc() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

QPoly RatFun::to_qpoly() const {
    if (!is_polynomial()) throw std::domain_error("rational function is not a polynomial");
    QPoly r;
    const Int& d = den_.c[0];
    for (std::size_t i = 0; i < num_.c.size(); ++i)
        if (num_.c[i] != 0) r += QPoly::monomial(Rat(num_.c[i], d), static_cast<int>(i));
    return r;
}

RatFun& RatFun::operator+=(const RatFun& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ = num_ + o.num_;
        normalize();
        return *this;
    }
    ZPoly g = gcd(den_, o.den_);
    if (g.is_one()) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
        if (num_.is_zero()) den_ = ZPoly(1);
        else if (den_.lc() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        return *this;
    }
    ZPoly ad = divexact(den_, g), bd = divexact(o.den_, g);
    ZPoly n = num_ * bd + o.num_ * ad;
    if (n.is_zero()) return *this = RatFun();
    ZPoly h = gcd(n, g);
    if (!h.is_one()) {
        n = divexact(n, h);
        g = divexact(g, h);
    }
    num_ = std::move(n);
    den_ = g * ad * bd;
    if (den_.lc() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    return *this;
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
    if (is_zero() || o.is_zero()) return *this = RatFun();
    ZPoly g1 = gcd(num_, o.den_);
    ZPoly g2 = gcd(o.num_, den_);
    ZPoly a = g1.is_one() ? num_ : divexact(num_, g1);
    ZPoly d = g1.is_one() ? o.den_ : divexact(o.den_, g1);
    ZPoly c = g2.is_one() ? o.num_ : divexact(o.num_, g2);
    ZPoly b = g2.is_one() ? den_ : divexact(den_, g2);
    num_ = a * c;
    den_ = b * d;
    if (den_.lc() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    RatFun inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    if (inv.den_.lc() < 0) {
        inv.num_ = -inv.num_;
        inv.den_ = -inv.den_;
    }
    return *this *= inv;
}

RatFun RatFun::pow(int e) const {
    if (e < 0) return RatFun(1) / pow(-e);
    RatFun r;
    r.num_ = shalika::pow(num_, e);
    r.den_ = shalika::pow(den_, e);
    return r;
}

Rat RatFun::eval(const Rat& x) const {
    Rat n = QPoly::from_zpoly(num_).eval(x), d = QPoly::from_zpoly(den_).eval(x);
    if (d == 0) throw std::domain_error("pole at evaluation point");
    return n / d;
}

RatFun RatFun::substitute_power(int k) const {
    return RatFun(shalika::substitute_power(num_, k), shalika::substitute_power(den_, k));
}

RatFun substitute_power(const RatFun& f, int k) { return f.substitute_power(k); }

RatFun ratfun_arith(const RatFun& a, const RatFun& b, ArithOp op) {
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
    }
    throw std::invalid_argument("unknown op");
}

static int term_count(const ZPoly& p) {
    int n = 0;
    for (const auto& x : p.c) n += (x != 0);
    return n;
}

std::string RatFun::str() const {
    std::string n = render(num_);
    if (den_.is_one()) return n;
    if (term_count(num_) > 1) n = "(" + n + ")";
    std::string d = render(den_);
    bool bare = den_.is_constant() || (term_count(den_) == 1 && den_.lc() == 1);
    if (!bare) d = "(" + d + ")";
    return n + "/" + d;
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    RatFun run() {
        RatFun r = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected character");
        return r;
    }

private:
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    char peek() {
        skip();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    [[noreturn]] void fail(const std::string& why) {
        throw ParseError("cannot parse '" + s_ + "' at position " + std::to_string(i_) + ": " + why);
    }
    Int integer() {
        skip();
        std::size_t j = i_;
        while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
        if (j == i_) fail("expected integer");
        Int v(s_.substr(i_, j - i_));
        i_ = j;
        return v;
    }
    RatFun expr() {
        RatFun r;
        char c = peek();
        bool neg = false;
        if (c == '+' || c == '-') {
            neg = c == '-';
            ++i_;
        }
        r = term();
        if (neg) r = -r;
        for (;;) {
            c = peek();
            if (c != '+' && c != '-') break;
            ++i_;
            RatFun t = term();
            if (c == '+') r += t;
            else r -= t;
        }
        return r;
    }
    RatFun term() {
        RatFun r = power();
        for (;;) {
            char c = peek();
            if (c != '*' && c != '/') break;
            ++i_;
            RatFun f = power();
            if (c == '*') r *= f;
            else {
                if (f.is_zero()) fail("division by zero");
                r /= f;
            }
        }
        return r;
    }
    RatFun power() {
        RatFun b = atom();
        if (peek() == '^') {
            ++i_;
            bool neg = false;
            if (peek() == '-') {
                neg = true;
                ++i_;
            }
            Int e = integer();
            if (!e.fits_sint_p()) fail("exponent too large");
            int k = static_cast<int>(e.get_si());
            b = b.pow(neg ? -k : k);
        }
        return b;
    }
    RatFun atom() {
        char c = peek();
        if (c == '(') {
            ++i_;
            RatFun r = expr();
            if (peek() != ')') fail("expected ')'");
            ++i_;
            return r;
        }
        if (c == 'q') {
            ++i_;
            return RatFun::q_power(1);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return RatFun(integer());
        fail("expected number, q or '('");
    }

    const std::string& s_;
    std::size_t i_ = 0;
};

}  // namespace

RatFun RatFun::parse(const std::string& s) { return Parser(s).run(); }

}  // namespace shalika
