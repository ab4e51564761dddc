#include "shalika/germs.hpp"

#include <functional>
#include <mutex>

namespace shalika {

namespace {

using Vec = std::map<Partition, RatFun>;
using Mat = std::vector<std::vector<RatFun>>;

// Columns: th_lambda (or e_lambda) in the p basis, from |S_lambda cap C_mu|.
Mat th_to_p_matrix(int n) {
    const auto& parts = partitions(n);
    Mat a(parts.size(), std::vector<RatFun>(parts.size()));
    for (std::size_t j = 0; j < parts.size(); ++j) {
        RatFun c = c_lambda(parts[j]);
        Int lf = block_factorial(parts[j]);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            Int cnt = young_cycle_count(parts[j], parts[i]);
            if (cnt != 0) a[i][j] = c * RatFun(Rat(cnt, lf)) / b_mu(parts[i]);
        }
    }
    return a;
}

Mat e_to_p_matrix(int n) {
    const auto& parts = partitions(n);
    Mat a(parts.size(), std::vector<RatFun>(parts.size()));
    for (std::size_t j = 0; j < parts.size(); ++j) {
        Int lf = block_factorial(parts[j]);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            Int cnt = young_cycle_count(parts[j], parts[i]);
            if (cnt == 0) continue;
            Rat k(cnt, lf);
            k.canonicalize();
            if ((n - static_cast<int>(parts[i].size())) % 2) k = -k;
            a[i][j] = RatFun(k);
        }
    }
    return a;
}

std::vector<RatFun> mat_apply(const Mat& a, const std::vector<RatFun>& x) {
    std::vector<RatFun> y(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            if (!a[i][j].is_zero() && !x[j].is_zero()) y[i] += a[i][j] * x[j];
    return y;
}

// Gaussian elimination; a must be invertible.
std::vector<RatFun> solve(Mat a, std::vector<RatFun> b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) throw std::domain_error("singular basis-change matrix");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            RatFun f = a[r][col] / a[col][col];
            for (std::size_t k = col; k < n; ++k)
                if (!a[col][k].is_zero()) a[r][k] -= f * a[col][k];
            if (!b[col].is_zero()) b[r] -= f * b[col];
        }
    }
    for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
    return b;
}

std::vector<RatFun> to_vector(const Vec& v, int n) {
    const auto& parts = partitions(n);
    std::vector<RatFun> x(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        auto it = v.find(parts[i]);
        if (it != v.end()) x[i] = it->second;
    }
    return x;
}

Vec from_vector(const std::vector<RatFun>& x, int n) {
    const auto& parts = partitions(n);
    Vec v;
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (!x[i].is_zero()) v.emplace(parts[i], x[i]);
    return v;
}

Vec unramified_step(const Vec& v, int n, int f, int a) {
    std::vector<RatFun> pv = mat_apply(th_to_p_matrix(n), to_vector(v, n));
    const auto& parts = partitions(n);
    Vec pf;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (pv[i].is_zero()) continue;
        Partition mu = parts[i];
        for (int& x : mu) x *= f;
        pf.emplace(mu, pv[i].substitute_power(f));
    }
    Vec th = from_vector(solve(th_to_p_matrix(n * f), to_vector(pf, n * f)), n * f);
    const bool neg = (n * (f - 1)) % 2;
    Vec out;
    for (const auto& [l, c] : th) {
        RatFun x = c * RatFun::q_power(a * twist_exponent(l));
        out.emplace(l, neg ? -x : x);
    }
    return out;
}

Vec th_product(const Vec& a, const Vec& b) {
    Vec r;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b) {
            Partition k = ka;
            k.insert(k.end(), kb.begin(), kb.end());
            k = sorted_partition(k);
            r[k] += va * vb;
        }
    for (auto it = r.begin(); it != r.end();) it = it->second.is_zero() ? r.erase(it) : std::next(it);
    return r;
}

GermMatrix compute_transition(int p, int q, int n_inner) {
    GermMatrix m;
    m.rows = partitions(p * n_inner);
    m.cols = partitions(n_inner);
    m.entries.assign(m.rows.size(), std::vector<RatFun>(m.cols.size()));
    std::vector<SymFun> pk;
    for (int k = 1; k <= n_inner; ++k) pk.push_back(pkm_compositions(q, p, k, Exec::serial));
    for (std::size_t j = 0; j < m.cols.size(); ++j) {
        const Partition& lp = m.cols[j];
        RatFun c = c_lambda(lp);
        Int lf = block_factorial(lp);
        SymFun col(Basis::TH, p * n_inner);
        for (const auto& mu : partitions(n_inner)) {
            Int cnt = young_cycle_count(lp, mu);
            if (cnt == 0) continue;
            SymFun prod = SymFun::one(Basis::TH);
            for (int part : mu) prod = multiply(prod, pk[part - 1]);
            col += prod * (c * RatFun(Rat(cnt, lf)) / b_mu(mu));
        }
        for (std::size_t i = 0; i < m.rows.size(); ++i) m.entries[i][j] = col.coeff(m.rows[i]);
    }
    return m;
}

}  // namespace

GermMatrix transition_matrix(int p, int q, int n_inner) {
    SlopeKey::make(q, p);
    if (n_inner < 1) throw std::invalid_argument("transition_matrix needs n' >= 1");
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, GermMatrix> memo;
    auto key = std::make_tuple(p, q, n_inner);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    GermMatrix m = compute_transition(p, q, n_inner);
    std::lock_guard<std::mutex> lock(mu);
    return memo.emplace(key, std::move(m)).first->second;
}

SymFun waldspurger_master(const GammaSpec& spec) {
    spec.validate();
    Vec total{{Partition{}, RatFun(1)}};
    int n_total = 0;
    for (const auto& b : spec.branches) {
        Vec v{{Partition{1}, RatFun(1)}};
        int n = 1;
        for (const auto& s : b.steps) {
            if (s.kind == Step::Kind::ramified) {
                GermMatrix m = transition_matrix(s.p, s.q, n);
                Vec w;
                for (std::size_t i = 0; i < m.rows.size(); ++i) {
                    RatFun x;
                    for (std::size_t j = 0; j < m.cols.size(); ++j) {
                        auto it = v.find(m.cols[j]);
                        if (it != v.end() && !m.entries[i][j].is_zero()) x += m.entries[i][j] * it->second;
                    }
                    if (!x.is_zero()) w.emplace(m.rows[i], x);
                }
                v = std::move(w);
                n *= s.p;
            } else {
                v = unramified_step(v, n, s.f, s.a);
                n *= s.f;
            }
        }
        total = th_product(total, v);
        n_total += n;
    }
    std::vector<RatFun> pv = mat_apply(th_to_p_matrix(n_total), to_vector(total, n_total));
    SymFun out(Basis::E, n_total);
    out.coeffs = from_vector(solve(e_to_p_matrix(n_total), pv), n_total);
    return out;
}

GermMatrix renormalized_transition_matrix(int p, int q, int n_inner) {
    GermMatrix m = transition_matrix(p, q, n_inner);
    for (std::size_t i = 0; i < m.rows.size(); ++i)
        for (std::size_t j = 0; j < m.cols.size(); ++j)
            if (!m.entries[i][j].is_zero())
                m.entries[i][j] = m.entries[i][j] * c_lambda(m.rows[i]) / c_lambda(m.cols[j]);
    return m;
}

GermMatrix graph_transition_matrix(int p, int q, int n_inner) {
    SlopeKey::make(q, p);
    const int N = p * n_inner;
    GermMatrix m;
    m.rows = partitions(N);
    m.cols = partitions(n_inner);
    m.entries.assign(m.rows.size(), std::vector<RatFun>(m.cols.size()));
    // F[k]: sum over nonempty edge cuts of a dilated p*k cycle with vertices
    // labelled 1..p*k, keyed by the sorted chain lengths.
    std::vector<std::map<Partition, ZPoly>> F(n_inner + 1);
    for (int k = 1; k <= n_inner; ++k) {
        const int L = p * k;
        for (unsigned long mask = 1; mask < (1UL << L); ++mask) {
            // edge e joins vertex e and e+1 (mod L); set bit = cut
            int start = 0;
            while (!((mask >> ((start + L - 1) % L)) & 1UL)) ++start;
            std::vector<int> chains;
            int w = 0, pos = 0;
            for (int s = 0; s < L; ++s) {
                int v = (start + s) % L;
                w += pos * slope_steps(q, p, v + 1);
                ++pos;
                if ((mask >> v) & 1UL) {
                    chains.push_back(pos);
                    pos = 0;
                }
            }
            ZPoly& z = F[k][sorted_partition(chains)];
            z = z + ZPoly::monomial(1, w);
        }
    }
    for (std::size_t j = 0; j < m.cols.size(); ++j) {
        const Partition& lp = m.cols[j];
        Int lf = block_factorial(lp);
        std::map<Partition, ZPoly> acc;
        for (const auto& mu : partitions(n_inner)) {
            Int cnt = young_cycle_count(lp, mu);
            if (cnt == 0) continue;
            std::map<Partition, ZPoly> prod{{Partition{}, ZPoly(1)}};
            for (int part : mu) {
                std::map<Partition, ZPoly> next;
                for (const auto& [a, za] : prod)
                    for (const auto& [b, zb] : F[part]) {
                        Partition k = a;
                        k.insert(k.end(), b.begin(), b.end());
                        ZPoly& z = next[sorted_partition(k)];
                        z = z + za * zb;
                    }
                prod = std::move(next);
            }
            Int sign = (n_inner - static_cast<int>(mu.size())) % 2 ? -1 : 1;
            for (const auto& [l, z] : prod) acc[l] = acc[l] + z * (cnt * sign);
        }
        for (std::size_t i = 0; i < m.rows.size(); ++i) {
            auto it = acc.find(m.rows[i]);
            if (it == acc.end()) continue;
            RatFun v(it->second, ZPoly(lf));
            if ((N - static_cast<int>(m.rows[i].size())) % 2) v = -v;
            m.entries[i][j] = v;
        }
    }
    return m;
}

}  // namespace shalika
