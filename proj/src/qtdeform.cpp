#include "shalika/qtdeform.hpp"

#include <numeric>
#include <stdexcept>

namespace shalika {

namespace {

using Mono = std::pair<int, int>;  // (q exponent, t exponent)

Mono mul(Mono a, Mono b) { return {a.first + b.first, a.second + b.second}; }
Mono inv(Mono a) { return {-a.first, -a.second}; }

// Running product of factors (1 - M) and monomials.
struct Product {
    BiPoly num = BiPoly(ZPoly(1));
    BiPoly den = BiPoly(ZPoly(1));
    Mono shift{0, 0};

    // (1 - M) = (D - N) / D with M = N / D.
    void factor(Mono m, bool in_den) {
        if (m == Mono{0, 0}) return;
        Mono n{std::max(m.first, 0), std::max(m.second, 0)};
        Mono d{std::max(-m.first, 0), std::max(-m.second, 0)};
        BiPoly f = BiPoly::monomial(1, d.first, d.second) - BiPoly::monomial(1, n.first, n.second);
        if (in_den) {
            den = den * f;
            shift = mul(shift, d);
        } else {
            num = num * f;
            shift = mul(shift, inv(d));
        }
    }
};

}  // namespace

int vanishing_order(const Tableau& T) {
    int pi = 0;
    for (int i = 0; i + 1 < T.size(); ++i)
        if (T.pos[i + 1].second == T.pos[i].second + 1) ++pi;
    return T.size() - static_cast<int>(T.shape.size()) - pi;
}

QTRatFun syt_weight(const Tableau& T, int m, int n) {
    SlopeKey::make(m, n);
    if (T.size() != n) throw std::invalid_argument("tableau size differs from n");
    std::vector<Mono> z;
    for (auto [r, c] : T.pos) z.push_back({c, r});
    Product w;
    for (int i = 1; i <= n; ++i) {
        int e = slope_steps(m, n, i) - 1;
        w.shift = mul(w.shift, {z[i - 1].first * e, z[i - 1].second * e});
    }
    for (int i = 2; i <= n; ++i) {
        w.factor(inv(z[i - 1]), true);
        w.factor(mul({1, 1}, mul(z[i - 2], inv(z[i - 1]))), true);
    }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Mono x = mul(z[i], inv(z[j]));
            w.factor(x, false);
            w.factor(mul({1, 1}, x), false);
            w.factor(mul({1, 0}, x), true);
            w.factor(mul({0, 1}, x), true);
        }
    if (w.den.is_zero()) throw std::domain_error("zero denominator in tableau weight");
    return QTRatFun(w.num, w.den) * QTRatFun::monomial(w.shift.first, w.shift.second);
}

QTCoeffMap torus_msf_qt(int m, int n, Exec exec, int cap) {
    SlopeKey::make(m, n);
    if (n < 1) throw std::invalid_argument("torus_msf_qt needs n >= 1");
    if (n > cap) throw std::domain_error("n = " + std::to_string(n) + " exceeds the q,t cap " + std::to_string(cap));
    QTCoeffMap out;
    out.m = m;
    out.n = n;
    std::vector<std::pair<std::size_t, Tableau>> work;
    const auto& parts = partitions(n);
    for (std::size_t s = 0; s < parts.size(); ++s)
        for (auto& t : syt(parts[s])) work.emplace_back(s, std::move(t));
    std::vector<QTRatFun> acc(parts.size());
    if (exec == Exec::serial) {
        for (const auto& [s, t] : work) acc[s] += syt_weight(t, m, n);
    } else {
        const long nw = static_cast<long>(work.size());
#pragma omp parallel
        {
            std::vector<QTRatFun> local(parts.size());
#pragma omp for schedule(dynamic)
            for (long i = 0; i < nw; ++i) local[work[i].first] += syt_weight(work[i].second, m, n);
#pragma omp critical(qt_merge)
            for (std::size_t s = 0; s < parts.size(); ++s) acc[s] += local[s];
        }
    }
    for (std::size_t s = 0; s < parts.size(); ++s)
        if (!acc[s].is_zero()) out.coeffs.emplace(parts[s], acc[s]);
    return out;
}

std::map<Partition, RatFun> specialize_t1(const QTCoeffMap& f) {
    std::map<Partition, RatFun> r;
    for (const auto& [l, c] : f.coeffs) {
        RatFun v = specialize_t1(c);
        if (!v.is_zero()) r.emplace(l, v);
    }
    return r;
}

std::vector<QTRatFun> superpolynomial(const QTCoeffMap& f) {
    std::vector<QTRatFun> out(f.n + 1);
    for (const auto& [lambda, c] : f.coeffs) {
        // prod over boxes of (z - a), coefficients indexed by the power of a
        std::vector<BiPoly> poly{BiPoly(ZPoly(1))};
        for (int r = 0; r < static_cast<int>(lambda.size()); ++r)
            for (int col = 0; col < lambda[r]; ++col) {
                BiPoly z = BiPoly::monomial(1, col, r);
                std::vector<BiPoly> next(poly.size() + 1);
                for (std::size_t k = 0; k < poly.size(); ++k) {
                    next[k] = next[k] + poly[k] * z;
                    next[k + 1] = next[k + 1] - poly[k];
                }
                poly = std::move(next);
            }
        for (std::size_t k = 0; k < poly.size(); ++k)
            if (!poly[k].is_zero()) out[k] += c * QTRatFun(poly[k], BiPoly(ZPoly(1)));
    }
    return out;
}

std::vector<QTRatFun> superpolynomial(int m, int n, Exec exec) { return superpolynomial(torus_msf_qt(m, n, exec)); }

std::string render_superpolynomial(const std::vector<QTRatFun>& p) {
    std::string s;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k].is_zero()) continue;
        if (!s.empty()) s += " + ";
        std::string c = "(" + p[k].str() + ")";
        if (k == 0) s += c;
        else s += c + "*a" + (k > 1 ? "^" + std::to_string(k) : "");
    }
    return s.empty() ? "0" : s;
}

}  // namespace shalika
