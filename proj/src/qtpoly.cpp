#include "shalika/qtpoly.hpp"

#include <algorithm>

namespace shalika {

BiPoly::BiPoly(const ZPoly& p) {
    if (!p.is_zero()) c.push_back(p);
}

BiPoly BiPoly::monomial(const Int& k, int qe, int te) {
    BiPoly r;
    if (k == 0) return r;
    r.c.assign(te + 1, ZPoly());
    r.c[te] = ZPoly::monomial(k, qe);
    return r;
}

void BiPoly::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

std::vector<std::tuple<int, int, Int>> BiPoly::terms() const {
    std::vector<std::tuple<int, int, Int>> out;
    for (std::size_t j = 0; j < c.size(); ++j)
        for (std::size_t i = 0; i < c[j].c.size(); ++i)
            if (c[j].c[i] != 0) out.emplace_back(static_cast<int>(i), static_cast<int>(j), c[j].c[i]);
    std::sort(out.begin(), out.end());
    return out;
}

BiPoly BiPoly::from_terms(const std::vector<std::tuple<int, int, Int>>& ts) {
    BiPoly r;
    for (const auto& [i, j, k] : ts) {
        if (i < 0 || j < 0) throw std::invalid_argument("negative exponent in bivariate polynomial");
        r = r + monomial(k, i, j);
    }
    return r;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t j = 0; j < r.c.size(); ++j) {
        if (j < a.c.size() && j < b.c.size()) r.c[j] = a.c[j] + b.c[j];
        else if (j < a.c.size()) r.c[j] = a.c[j];
        else r.c[j] = b.c[j];
    }
    r.trim();
    return r;
}

BiPoly operator-(const BiPoly& a) {
    BiPoly r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, ZPoly());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            if (!b.c[j].is_zero()) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
    r.trim();
    return r;
}

BiPoly operator*(const BiPoly& a, const ZPoly& k) {
    BiPoly r = a;
    for (auto& x : r.c) x = x * k;
    r.trim();
    return r;
}

namespace {

int tval(const BiPoly& a) {
    for (std::size_t j = 0; j < a.c.size(); ++j)
        if (!a.c[j].is_zero()) return static_cast<int>(j);
    return 0;
}

int qval(const BiPoly& a) {
    int v = -1;
    for (const auto& x : a.c)
        if (!x.is_zero()) v = v < 0 ? x.valuation() : std::min(v, x.valuation());
    return std::max(v, 0);
}

BiPoly shift(const BiPoly& a, int qe, int te) {
    BiPoly r;
    if (a.is_zero()) return r;
    if (te >= 0) {
        r.c.assign(te, ZPoly());
        r.c.insert(r.c.end(), a.c.begin(), a.c.end());
    } else {
        r.c.assign(a.c.begin() - te, a.c.end());
    }
    for (auto& x : r.c)
        if (!x.is_zero()) x = shalika::shift(x, qe);
    return r;
}

ZPoly cont_t(const BiPoly& a) {
    ZPoly g;
    for (const auto& x : a.c) {
        if (x.is_zero()) continue;
        g = g.is_zero() ? primitive_part(x) * content(x) : gcd(g, x);
        if (g.is_one()) break;
    }
    if (!g.is_zero() && g.lc() < 0) g = -g;
    return g;
}

BiPoly div_coeffs(const BiPoly& a, const ZPoly& g) {
    if (g.is_one()) return a;
    BiPoly r = a;
    for (auto& x : r.c)
        if (!x.is_zero()) x = divexact(x, g);
    return r;
}

BiPoly sign_normal(const BiPoly& a) {
    if (!a.is_zero() && a.c.back().lc() < 0) return -a;
    return a;
}

BiPoly pp_t(const BiPoly& a) {
    if (a.is_zero()) return a;
    return sign_normal(div_coeffs(a, cont_t(a)));
}

bool try_divide(const BiPoly& a, const BiPoly& b, BiPoly& quot) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    quot = BiPoly();
    if (a.is_zero()) return true;
    if (a.tdeg() < b.tdeg()) return false;
    BiPoly r = a;
    std::vector<ZPoly> qv(a.c.size() - b.c.size() + 1);
    const ZPoly& lb = b.c.back();
    while (!r.is_zero() && r.tdeg() >= b.tdeg()) {
        ZPoly t;
        if (!divides(lb, r.c.back())) return false;
        t = divexact(r.c.back(), lb);
        int s = r.tdeg() - b.tdeg();
        qv[s] = t;
        for (int j = 0; j <= b.tdeg(); ++j)
            if (!b.c[j].is_zero()) r.c[s + j] = r.c[s + j] - b.c[j] * t;
        r.trim();
    }
    if (!r.is_zero()) return false;
    quot.c = std::move(qv);
    quot.trim();
    return true;
}

BiPoly prem_t(const BiPoly& a, const BiPoly& b) {
    BiPoly r = a;
    const int db = b.tdeg();
    const ZPoly& lb = b.c.back();
    while (!r.is_zero() && r.tdeg() >= db) {
        ZPoly lr = r.c.back();
        int s = r.tdeg() - db;
        r = r * lb;
        for (int j = 0; j <= db; ++j)
            if (!b.c[j].is_zero()) r.c[s + j] = r.c[s + j] - b.c[j] * lr;
        r.trim();
    }
    return r;
}

BiPoly prs(BiPoly a, BiPoly b) {
    if (a.tdeg() < b.tdeg()) std::swap(a, b);
    BiPoly quot;
    if (try_divide(a, b, quot)) return b;
    while (!b.is_zero()) {
        if (b.tdeg() == 0) return BiPoly(ZPoly(1));
        BiPoly r = pp_t(prem_t(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return pp_t(a);
}

}  // namespace

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero()) return sign_normal(b);
    if (b.is_zero()) return sign_normal(a);
    int ta = tval(a), tb = tval(b), qa = qval(a), qb = qval(b);
    BiPoly sa = shift(a, -qa, -ta), sb = shift(b, -qb, -tb);
    ZPoly ca = cont_t(sa), cb = cont_t(sb);
    ZPoly cg = gcd(ca, cb);
    BiPoly pa = pp_t(div_coeffs(sa, ca)), pb = pp_t(div_coeffs(sb, cb));
    BiPoly g;
    if (pa.tdeg() == 0 || pb.tdeg() == 0) g = BiPoly(ZPoly(1));
    else if (pa == pb) g = pa;
    else g = prs(pa, pb);
    return sign_normal(shift(g * cg, std::min(qa, qb), std::min(ta, tb)));
}

BiPoly divexact(const BiPoly& a, const BiPoly& b) {
    BiPoly quot;
    if (!try_divide(a, b, quot)) throw std::domain_error("inexact bivariate division");
    return quot;
}

bool divides(const BiPoly& b, const BiPoly& a) {
    BiPoly quot;
    return try_divide(a, b, quot);
}

BiPoly swap_qt(const BiPoly& a) {
    std::vector<std::tuple<int, int, Int>> ts;
    for (const auto& [i, j, k] : a.terms()) ts.emplace_back(j, i, k);
    return BiPoly::from_terms(ts);
}

ZPoly at_t1(const BiPoly& a) {
    ZPoly r;
    for (const auto& x : a.c) r = r + x;
    return r;
}

std::string render(const BiPoly& a) {
    if (a.is_zero()) return "0";
    auto ts = a.terms();
    std::sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) {
        int dx = std::get<0>(x) + std::get<1>(x), dy = std::get<0>(y) + std::get<1>(y);
        if (dx != dy) return dx > dy;
        return std::get<0>(x) > std::get<0>(y);
    });
    std::string s;
    for (const auto& [i, j, k] : ts) {
        Int m = abs(k);
        if (k < 0) s += "-";
        else if (!s.empty()) s += "+";
        std::string mono;
        if (i > 0) mono += i == 1 ? "q" : "q^" + std::to_string(i);
        if (j > 0) mono += std::string(mono.empty() ? "" : "*") + (j == 1 ? "t" : "t^" + std::to_string(j));
        if (mono.empty()) s += m.get_str();
        else if (m == 1) s += mono;
        else s += m.get_str() + "*" + mono;
    }
    return s;
}

// QTRatFun

QTRatFun::QTRatFun(const RatFun& f) : num_(f.znum()), den_(f.zden()) {}

QTRatFun::QTRatFun(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("zero denominator");
    normalize();
}

QTRatFun QTRatFun::monomial(int qe, int te) {
    QTRatFun r;
    r.num_ = BiPoly::monomial(1, std::max(qe, 0), std::max(te, 0));
    r.den_ = BiPoly::monomial(1, std::max(-qe, 0), std::max(-te, 0));
    return r;
}

void QTRatFun::normalize() {
    if (num_.is_zero()) {
        den_ = BiPoly(ZPoly(1));
        return;
    }
    BiPoly g = gcd(num_, den_);
    if (!(g.tdeg() == 0 && g.c[0].is_one())) {
        num_ = divexact(num_, g);
        den_ = divexact(den_, g);
    }
    if (den_.c.back().lc() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

static bool is_unit(const BiPoly& g) { return g.tdeg() == 0 && g.c[0].is_one(); }

QTRatFun& QTRatFun::operator+=(const QTRatFun& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ = num_ + o.num_;
        normalize();
        return *this;
    }
    BiPoly g = gcd(den_, o.den_);
    BiPoly ad = divexact(den_, g), bd = divexact(o.den_, g);
    BiPoly n = num_ * bd + o.num_ * ad;
    if (n.is_zero()) return *this = QTRatFun();
    if (!is_unit(g)) {
        BiPoly h = gcd(n, g);
        if (!is_unit(h)) {
            n = divexact(n, h);
            g = divexact(g, h);
        }
    }
    num_ = std::move(n);
    den_ = g * ad * bd;
    if (den_.c.back().lc() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    return *this;
}

QTRatFun QTRatFun::operator-() const {
    QTRatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

QTRatFun& QTRatFun::operator-=(const QTRatFun& o) { return *this += -o; }

QTRatFun& QTRatFun::operator*=(const QTRatFun& o) {
    if (is_zero() || o.is_zero()) return *this = QTRatFun();
    BiPoly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
    BiPoly a = is_unit(g1) ? num_ : divexact(num_, g1);
    BiPoly d = is_unit(g1) ? o.den_ : divexact(o.den_, g1);
    BiPoly c = is_unit(g2) ? o.num_ : divexact(o.num_, g2);
    BiPoly b = is_unit(g2) ? den_ : divexact(den_, g2);
    num_ = a * c;
    den_ = b * d;
    if (den_.c.back().lc() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    return *this;
}

QTRatFun& QTRatFun::operator/=(const QTRatFun& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    QTRatFun inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    if (inv.den_.c.back().lc() < 0) {
        inv.num_ = -inv.num_;
        inv.den_ = -inv.den_;
    }
    return *this *= inv;
}

QTRatFun QTRatFun::swap_qt() const { return QTRatFun(shalika::swap_qt(num_), shalika::swap_qt(den_)); }

static int t1_order(BiPoly a) {
    int k = 0;
    while (!a.is_zero() && at_t1(a).is_zero()) {
        // synthetic division by (t - 1)
        std::vector<ZPoly> b(a.c.size() - 1);
        ZPoly carry;
        for (int j = a.tdeg(); j >= 1; --j) {
            carry = carry + a.c[j];
            b[j - 1] = carry;
        }
        a.c = std::move(b);
        a.trim();
        ++k;
    }
    return k;
}

int QTRatFun::t1_order_num() const { return t1_order(num_); }
int QTRatFun::t1_order_den() const { return t1_order(den_); }

std::string QTRatFun::str() const {
    std::string n = render(num_);
    if (den_.tdeg() == 0 && den_.c[0].is_one()) return n;
    return "(" + n + ")/(" + render(den_) + ")";
}

RatFun specialize_t1(const QTRatFun& f) {
    ZPoly d = at_t1(f.den());
    if (d.is_zero()) {
        int k = f.t1_order_den();
        throw PoleError("pole of order " + std::to_string(k) + " at t=1", k);
    }
    return RatFun(at_t1(f.num()), d);
}

}  // namespace shalika
