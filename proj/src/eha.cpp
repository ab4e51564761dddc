#include "shalika/eha.hpp"

#include <mutex>
#include <numeric>
#include <omp.h>
#include <tuple>

namespace shalika {

SlopeKey SlopeKey::make(int m, int n) {
    if (n < 1 || m < 0) throw std::invalid_argument("slope needs m >= 0, n >= 1");
    if (std::gcd(m, n) != 1)
        throw std::invalid_argument("slope " + std::to_string(m) + "/" + std::to_string(n) + " is not in lowest terms");
    return {m, n};
}

const SymFun& elementary_slope(int m, int n, int k) {
    static std::mutex mu;
    static std::map<std::tuple<SlopeKey, int>, SymFun> memo;
    SlopeKey key = SlopeKey::make(m, n);
    if (k < 1) throw std::invalid_argument("elementary_slope needs k >= 1");
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find({key, k});
        if (it != memo.end()) return it->second;
    }
    std::map<Partition, ZPoly> acc;
    for (const auto& d : dyck_paths(m, n, k)) {
        ZPoly& z = acc[sorted_partition(d.composition())];
        z = z + ZPoly::monomial(1, d.area);
    }
    SymFun f(Basis::E, k * n);
    for (auto& [l, z] : acc) f.add(l, RatFun(z, ZPoly(1)));
    std::lock_guard<std::mutex> lock(mu);
    return memo.emplace(std::make_tuple(key, k), std::move(f)).first->second;
}

static SymFun plethysm_term(const Partition& lambda, const RatFun& c, int m, int n) {
    SymFun g = SymFun::one(Basis::E);
    for (int part : lambda) g = multiply(g, elementary_slope(m, n, part));
    return g * c;
}

SymFun slope_plethysm(const SymFun& f, int m, int n, Exec exec) {
    SlopeKey::make(m, n);
    SymFun fe = convert(f, Basis::E);
    SymFun out(Basis::E, fe.degree * n);
    std::vector<std::pair<Partition, RatFun>> terms(fe.coeffs.begin(), fe.coeffs.end());
    for (const auto& [l, c] : terms)
        for (int part : l) elementary_slope(m, n, part);
    if (exec == Exec::serial) {
        for (const auto& [l, c] : terms) out += plethysm_term(l, c, m, n);
        return out;
    }
    const long nt = static_cast<long>(terms.size());
#pragma omp parallel
    {
        SymFun local(Basis::E, out.degree);
#pragma omp for schedule(dynamic)
        for (long i = 0; i < nt; ++i) local += plethysm_term(terms[i].first, terms[i].second, m, n);
#pragma omp critical(slope_plethysm_merge)
        out += local;
    }
    return out;
}

RatFun comp_weight(const Composition& alpha, int m, int n, int k) {
    if (m != 0) SlopeKey::make(m, n);
    if (n < 1 || k < 1) throw std::invalid_argument("comp_weight needs n, k >= 1");
    int total = 0;
    std::vector<int> c;
    for (int a : alpha) {
        if (a < 1) throw std::invalid_argument("composition parts must be positive");
        total += a;
        for (int j = 0; j < a; ++j) c.push_back(j);
    }
    if (total != k * n) throw std::invalid_argument("composition size differs from k*n");
    RatFun pre;
    for (int j = 0; j < k; ++j) {
        int e = j;
        for (int s = 1; s <= j; ++s) e += c[(k - s) * n - 1] - c[(k - s) * n];
        pre += RatFun::q_power(e);
    }
    int mono = 0;
    for (int i = 1; i <= total; ++i) mono += c[i - 1] * slope_steps(m, n, i);
    Partition less = alpha;
    less.back() -= 1;
    RatFun w = pre * RatFun::q_power(mono) / c_lambda(sorted_partition(less));
    if ((total - static_cast<int>(alpha.size())) % 2) w = -w;
    return w;
}

SymFun pkm_compositions(int m, int n, int k, Exec exec) {
    if (m != 0) SlopeKey::make(m, n);
    auto comps = compositions(k * n);
    SymFun out(Basis::TH, k * n);
    const RatFun sign = (k - 1) % 2 ? RatFun(-1) : RatFun(1);
    if (exec == Exec::serial) {
        for (const auto& a : comps) out.add(sorted_partition(a), sign * comp_weight(a, m, n, k));
        return out;
    }
    const long nc = static_cast<long>(comps.size());
#pragma omp parallel
    {
        SymFun local(Basis::TH, k * n);
#pragma omp for schedule(dynamic)
        for (long i = 0; i < nc; ++i) local.add(sorted_partition(comps[i]), sign * comp_weight(comps[i], m, n, k));
#pragma omp critical(pkm_merge)
        out += local;
    }
    return out;
}

}  // namespace shalika
