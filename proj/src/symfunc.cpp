#include "shalika/symfunc.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>

namespace shalika {

std::string basis_name(Basis b) {
    switch (b) {
    case Basis::E: return "e";
    case Basis::H: return "h";
    case Basis::P: return "p";
    case Basis::TH: return "th";
    }
    return "?";
}

Basis basis_from_name(const std::string& s) {
    if (s == "e") return Basis::E;
    if (s == "h") return Basis::H;
    if (s == "p") return Basis::P;
    if (s == "th") return Basis::TH;
    throw ParseError("unknown basis '" + s + "'");
}

SymFun SymFun::one(Basis b) {
    SymFun f(b, 0);
    f.coeffs[{}] = RatFun(1);
    return f;
}

SymFun SymFun::basis_element(Basis b, const Partition& lambda, const RatFun& c) {
    SymFun f(b, size(lambda));
    f.add(lambda, c);
    return f;
}

RatFun SymFun::coeff(const Partition& lambda) const {
    auto it = coeffs.find(lambda);
    return it == coeffs.end() ? RatFun() : it->second;
}

void SymFun::add(const Partition& lambda, const RatFun& c) {
    if (c.is_zero()) return;
    if (size(lambda) != degree) throw std::invalid_argument("partition size differs from degree");
    auto it = coeffs.find(lambda);
    if (it == coeffs.end()) {
        coeffs.emplace(lambda, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) coeffs.erase(it);
}

SymFun& SymFun::operator+=(const SymFun& o) {
    if (o.is_zero()) return *this;
    if (is_zero() && (basis != o.basis || degree != o.degree)) return *this = o;
    if (o.basis != basis || o.degree != degree) {
        SymFun c = convert(o, basis);
        if (c.degree != degree) throw std::invalid_argument("adding symmetric functions of different degrees");
        for (const auto& [l, v] : c.coeffs) add(l, v);
        return *this;
    }
    for (const auto& [l, v] : o.coeffs) add(l, v);
    return *this;
}

SymFun& SymFun::operator-=(const SymFun& o) { return *this += o * RatFun(-1); }

SymFun SymFun::operator*(const RatFun& c) const {
    SymFun r(basis, degree);
    if (c.is_zero()) return r;
    for (const auto& [l, v] : coeffs) r.coeffs.emplace(l, v * c);
    return r;
}

std::string SymFun::str() const {
    if (coeffs.empty()) return "0";
    std::string s;
    for (const auto& [l, v] : coeffs) {
        RatFun c = v;
        bool neg = v.is_polynomial() && v.znum().lc() < 0;
        if (neg) c = -v;
        if (!s.empty()) s += neg ? " - " : " + ";
        else if (neg) s += "-";
        std::string elem = basis_name(basis) + render(l);
        const auto& nc = c.znum().c;
        bool monomial = c.zden().is_one() && std::count_if(nc.begin(), nc.end(), [](const Int& x) { return x != 0; }) == 1;
        if (c.is_one()) s += elem;
        else if (monomial) s += c.str() + "*" + elem;
        else s += "(" + c.str() + ")*" + elem;
    }
    return s;
}

bool operator==(const SymFun& a, const SymFun& b) {
    if (a.is_zero() && b.is_zero()) return true;
    if (a.degree != b.degree) return false;
    if (a.basis == b.basis) return a.coeffs == b.coeffs;
    return convert(b, a.basis).coeffs == a.coeffs;
}

static std::atomic<int> g_degree_cap{12};

int degree_cap() { return g_degree_cap.load(); }
void set_degree_cap(int cap) {
    if (cap < 1) throw std::invalid_argument("degree cap must be >= 1");
    g_degree_cap.store(cap);
}

RatFun c_lambda(const Partition& lambda) {
    ZPoly r(1);
    for (int a : lambda)
        for (int j = 1; j <= a; ++j) r = r * (ZPoly(1) - ZPoly::monomial(1, j));
    return RatFun(r, ZPoly(1));
}

RatFun b_mu(const Partition& mu) {
    ZPoly r(1);
    for (int a : mu) r = r * (ZPoly(1) - ZPoly::monomial(1, a));
    return RatFun(r, ZPoly(1));
}

namespace {

using Expansion = std::map<Partition, RatFun>;

void check_cap(int n) {
    if (n > degree_cap())
        throw std::length_error("degree " + std::to_string(n) + " exceeds the configured cap " +
                                std::to_string(degree_cap()));
}

Partition merge(const Partition& a, const Partition& b) {
    Partition r = a;
    r.insert(r.end(), b.begin(), b.end());
    return sorted_partition(std::move(r));
}

Expansion mul_expand(const Expansion& a, const Expansion& b) {
    Expansion r;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b) {
            Partition k = merge(ka, kb);
            auto it = r.find(k);
            if (it == r.end()) r.emplace(k, va * vb);
            else it->second += va * vb;
        }
    for (auto it = r.begin(); it != r.end();) it = it->second.is_zero() ? r.erase(it) : std::next(it);
    return r;
}

int sign_of(const Partition& mu) { return ((size(mu) - static_cast<int>(mu.size())) % 2) ? -1 : 1; }

// Newton: p_k in the E (elementary) or H basis.
Expansion p_k_in(Basis b, int k) {
    Expansion r;
    for (const auto& nu : partitions(k)) {
        std::map<int, int> mult;
        for (int x : nu) ++mult[x];
        Int den = 1;
        for (auto [part, m] : mult) den *= factorial(m);
        Int num = factorial(static_cast<int>(nu.size()) - 1) * k;
        int l = static_cast<int>(nu.size());
        int s = b == Basis::E ? (((k - l) % 2) ? -1 : 1) : (((l - 1) % 2) ? -1 : 1);
        r.emplace(nu, RatFun(Rat(num * s, den)));
    }
    return r;
}

Expansion compute_to_p(Basis b, const Partition& lambda) {
    Expansion r;
    const int n = size(lambda);
    if (b == Basis::P) {
        r.emplace(lambda, RatFun(1));
        return r;
    }
    Int lf = block_factorial(lambda);
    RatFun c = b == Basis::TH ? c_lambda(lambda) : RatFun(1);
    for (const auto& mu : partitions(n)) {
        Int cnt = young_cycle_count(lambda, mu);
        if (cnt == 0) continue;
        Rat k(cnt, lf);
        k.canonicalize();
        if (b == Basis::E) r.emplace(mu, RatFun(k * sign_of(mu)));
        else if (b == Basis::H) r.emplace(mu, RatFun(k));
        else r.emplace(mu, c * RatFun(k) / b_mu(mu));
    }
    return r;
}

Expansion compute_from_p(Basis b, const Partition& mu) {
    Expansion r;
    if (b == Basis::P) {
        r.emplace(mu, RatFun(1));
        return r;
    }
    Basis nb = b == Basis::E ? Basis::E : Basis::H;
    Expansion acc;
    acc.emplace(Partition{}, RatFun(1));
    for (int k : mu) acc = mul_expand(acc, p_k_in(nb, k));
    if (b != Basis::TH) return acc;
    RatFun bm = b_mu(mu);
    for (const auto& [nu, v] : acc) r.emplace(nu, bm * v / c_lambda(nu));
    return r;
}

struct ColumnCache {
    std::mutex mu;
    std::map<std::pair<int, Partition>, Expansion> to_p, from_p;
};

ColumnCache& cache() {
    static ColumnCache c;
    return c;
}

}  // namespace

const std::map<Partition, RatFun>& to_p_column(Basis b, const Partition& lambda) {
    auto& c = cache();
    auto key = std::make_pair(static_cast<int>(b), lambda);
    {
        std::lock_guard<std::mutex> lock(c.mu);
        auto it = c.to_p.find(key);
        if (it != c.to_p.end()) return it->second;
    }
    Expansion e = compute_to_p(b, lambda);
    std::lock_guard<std::mutex> lock(c.mu);
    return c.to_p.emplace(key, std::move(e)).first->second;
}

const std::map<Partition, RatFun>& from_p_column(Basis b, const Partition& mu) {
    auto& c = cache();
    auto key = std::make_pair(static_cast<int>(b), mu);
    {
        std::lock_guard<std::mutex> lock(c.mu);
        auto it = c.from_p.find(key);
        if (it != c.from_p.end()) return it->second;
    }
    Expansion e = compute_from_p(b, mu);
    std::lock_guard<std::mutex> lock(c.mu);
    return c.from_p.emplace(key, std::move(e)).first->second;
}

SymFun convert(const SymFun& f, Basis target) {
    if (f.basis == target) return f;
    check_cap(f.degree);
    SymFun p(Basis::P, f.degree);
    if (f.basis == Basis::P) p = f;
    else
        for (const auto& [l, v] : f.coeffs)
            for (const auto& [mu, w] : to_p_column(f.basis, l)) p.add(mu, v * w);
    if (target == Basis::P) return p;
    SymFun r(target, f.degree);
    for (const auto& [mu, v] : p.coeffs)
        for (const auto& [nu, w] : from_p_column(target, mu)) r.add(nu, v * w);
    return r;
}

SymFun multiply(const SymFun& f, const SymFun& g) {
    if (f.basis != g.basis) return multiply(convert(f, Basis::P), convert(g, Basis::P));
    SymFun r(f.basis, f.degree + g.degree);
    r.coeffs = mul_expand(f.coeffs, g.coeffs);
    return r;
}

RatFun hall_pair(const SymFun& f, const SymFun& g) {
    if (f.degree != g.degree) throw std::invalid_argument("hall_pair: degree mismatch");
    SymFun a = convert(f, Basis::P), b = convert(g, Basis::P);
    RatFun s;
    for (const auto& [mu, v] : a.coeffs) {
        auto it = b.coeffs.find(mu);
        if (it != b.coeffs.end()) s += v * it->second * RatFun(zee(mu));
    }
    return s;
}

RatFun pair_with_e(const SymFun& f, const Partition& lambda) {
    if (f.degree != size(lambda)) throw std::invalid_argument("pair_with_e: degree mismatch");
    SymFun a = convert(f, Basis::E);
    RatFun s;
    for (const auto& [mu, v] : a.coeffs) s += v * RatFun(contingency_count(mu, lambda));
    return s;
}

SymFun omega(const SymFun& f) {
    switch (f.basis) {
    case Basis::E: {
        SymFun r = f;
        r.basis = Basis::H;
        return r;
    }
    case Basis::H: {
        SymFun r = f;
        r.basis = Basis::E;
        return r;
    }
    case Basis::P: {
        SymFun r(Basis::P, f.degree);
        for (const auto& [mu, v] : f.coeffs) r.add(mu, sign_of(mu) < 0 ? -v : v);
        return r;
    }
    case Basis::TH: return convert(omega(convert(f, Basis::P)), Basis::TH);
    }
    throw std::logic_error("bad basis");
}

SymFun adams(const SymFun& f, int r) {
    if (r < 1) throw std::invalid_argument("adams needs r >= 1");
    if (r == 1) return f;
    SymFun p = convert(f, Basis::P);
    SymFun out(Basis::P, f.degree * r);
    for (const auto& [mu, v] : p.coeffs) {
        Partition m = mu;
        for (int& x : m) x *= r;
        out.add(m, v);
    }
    return out;
}

SymFun nabla_t1(const SymFun& f, int a) {
    SymFun th = convert(f, Basis::TH);
    if (a == 0) return th;
    SymFun out(Basis::TH, f.degree);
    for (const auto& [l, v] : th.coeffs) out.add(l, v * RatFun::q_power(a * twist_exponent(l)));
    return out;
}

SymFun substitute_power(const SymFun& f, int k) {
    SymFun p = f.basis == Basis::TH ? convert(f, Basis::P) : f;
    SymFun out(p.basis, p.degree);
    for (const auto& [l, v] : p.coeffs) out.add(l, v.substitute_power(k));
    return out;
}

}  // namespace shalika
