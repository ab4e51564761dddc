#include "shalika/combinat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

namespace shalika {

int size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

Partition sorted_partition(std::vector<int> parts) {
    parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return parts;
}

Partition transpose(const Partition& p) {
    Partition t;
    if (p.empty()) return t;
    for (int j = 0; j < p[0]; ++j) {
        int c = 0;
        for (int x : p) c += x > j;
        t.push_back(c);
    }
    return t;
}

bool dominates(const Partition& a, const Partition& b) {
    int sa = 0, sb = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa < sb) return false;
    }
    return true;
}

int n_stat(const Partition& p) {
    int s = 0;
    for (std::size_t i = 0; i < p.size(); ++i) s += static_cast<int>(i) * p[i];
    return s;
}

std::string render(const Partition& p) {
    std::string s = "[";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + "]";
}

static void gen_partitions(int n, int maxp, Partition& cur, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, maxp); k >= 1; --k) {
        cur.push_back(k);
        gen_partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}

const std::vector<Partition>& partitions(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<Partition>> memo;
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
    std::vector<Partition> out;
    Partition cur;
    if (n >= 0) gen_partitions(n, n, cur, out);
    return memo.emplace(n, std::move(out)).first->second;
}

std::vector<Composition> compositions(int n) {
    std::vector<Composition> out;
    if (n == 0) return {Composition{}};
    Composition cur;
    std::function<void(int)> rec = [&](int rem) {
        if (rem == 0) {
            out.push_back(cur);
            return;
        }
        for (int k = 1; k <= rem; ++k) {
            cur.push_back(k);
            rec(rem - k);
            cur.pop_back();
        }
    };
    rec(n);
    return out;
}

Composition DyckPath::composition() const {
    Composition c;
    for (int x : row_steps)
        if (x > 0) c.push_back(x);
    return c;
}

std::vector<DyckPath> dyck_paths(int m, int n, int k, bool strict) {
    if (m < 1 || n < 1 || k < 1) throw std::invalid_argument("dyck_paths needs m, n, k >= 1");
    if (std::gcd(m, n) != 1) throw std::invalid_argument("dyck_paths needs coprime (m, n)");
    const int W = k * n, H = k * m;
    std::vector<DyckPath> out;
    std::vector<int> rows;
    std::function<void(int, int, int, int)> rec = [&](int x, int y, int run, int area) {
        if (x == W && y == H) {
            DyckPath d;
            d.row_steps = rows;
            d.row_steps.push_back(run);
            while (!d.row_steps.empty() && d.row_steps.back() == 0) d.row_steps.pop_back();
            d.area = area;
            d.width = W;
            d.height = H;
            out.push_back(std::move(d));
            return;
        }
        if (x < W) rec(x + 1, y, run + 1, area + (m * x) / n - y);
        if (y < H && n * (y + 1) <= m * x) {
            bool touches = n * (y + 1) == m * x && !(x == W && y + 1 == H);
            if (!(strict && touches)) {
                rows.push_back(run);
                rec(x, y + 1, 0, area);
                rows.pop_back();
            }
        }
    };
    rec(0, 0, 0, 0);
    return out;
}

int Tableau::label_at(int row, int col) const {
    for (std::size_t i = 0; i < pos.size(); ++i)
        if (pos[i].first == row && pos[i].second == col) return static_cast<int>(i) + 1;
    throw std::out_of_range("no box at that position");
}

bool Tableau::is_standard() const {
    if (static_cast<int>(pos.size()) != shalika::size(shape)) return false;
    std::vector<std::vector<int>> grid(shape.size());
    for (std::size_t r = 0; r < shape.size(); ++r) grid[r].assign(shape[r], 0);
    for (std::size_t i = 0; i < pos.size(); ++i) {
        auto [r, c] = pos[i];
        if (r < 0 || r >= static_cast<int>(shape.size()) || c < 0 || c >= shape[r]) return false;
        if (grid[r][c] != 0) return false;
        grid[r][c] = static_cast<int>(i) + 1;
    }
    for (std::size_t r = 0; r < shape.size(); ++r)
        for (int c = 0; c < shape[r]; ++c) {
            if (c > 0 && grid[r][c - 1] > grid[r][c]) return false;
            if (r > 0 && grid[r - 1][c] > grid[r][c]) return false;
        }
    return true;
}

std::vector<Tableau> syt(const Partition& shape) {
    std::vector<Tableau> out;
    const int n = size(shape);
    std::vector<int> filled(shape.size(), 0);
    Tableau cur;
    cur.shape = shape;
    std::function<void(int)> rec = [&](int k) {
        if (k > n) {
            out.push_back(cur);
            return;
        }
        for (std::size_t r = 0; r < shape.size(); ++r) {
            int c = filled[r];
            if (c < shape[r] && (r == 0 || filled[r - 1] > c)) {
                ++filled[r];
                cur.pos.emplace_back(static_cast<int>(r), c);
                rec(k + 1);
                cur.pos.pop_back();
                --filled[r];
            }
        }
    };
    rec(1);
    return out;
}

Tableau composition_tableau(const Composition& alpha) {
    Tableau t;
    std::vector<int> height;
    for (int a : alpha) {
        if (a < 1) throw std::invalid_argument("composition parts must be positive");
        if (static_cast<int>(height.size()) < a) height.resize(a, 0);
        for (int c = 0; c < a; ++c) t.pos.emplace_back(height[c]++, c);
    }
    std::vector<int> rows;
    for (auto [r, c] : t.pos) {
        if (static_cast<int>(rows.size()) <= r) rows.resize(r + 1, 0);
        ++rows[r];
    }
    t.shape = rows;
    return t;
}

std::vector<QPoly> content_vector_t1(const Composition& alpha) {
    std::vector<QPoly> z;
    for (int a : alpha)
        for (int j = 0; j < a; ++j) z.push_back(QPoly::monomial(1, j));
    return z;
}

static int ceil_div(long long a, long long b) { return static_cast<int>((a + b - 1) / b); }

int slope_steps(int m, int n, int i, StepMode mode) {
    if (i < 1 || n < 1 || m < 0) throw std::invalid_argument("slope_steps needs i >= 1, n >= 1, m >= 0");
    long long a = static_cast<long long>(i) * m, b = static_cast<long long>(i - 1) * m;
    if (mode == StepMode::ceil) return ceil_div(a, n) - ceil_div(b, n);
    return static_cast<int>(a / n - b / n);
}

Int factorial(int n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Int block_factorial(const Partition& p) {
    Int r = 1;
    for (int x : p) r *= factorial(x);
    return r;
}

Int zee(const Partition& mu) {
    Int r = 1;
    std::map<int, int> mult;
    for (int x : mu) ++mult[x];
    for (auto [k, m] : mult) {
        Int kk = k;
        Int p;
        mpz_pow_ui(p.get_mpz_t(), kk.get_mpz_t(), m);
        r *= p * factorial(m);
    }
    return r;
}

Int young_cycle_count(const Partition& lambda, const Partition& mu) {
    if (size(lambda) != size(mu)) throw std::invalid_argument("young_cycle_count: size mismatch");
    std::map<int, int> mult;
    for (int x : mu) ++mult[x];
    std::vector<int> keys, avail;
    for (auto [k, m] : mult) {
        keys.push_back(k);
        avail.push_back(m);
    }
    Int total = 0;
    // Distribute the cycles of mu among the blocks of lambda.
    std::function<void(std::size_t, Int)> block = [&](std::size_t b, Int acc) {
        if (b == lambda.size()) {
            total += acc;
            return;
        }
        std::vector<int> take(keys.size(), 0);
        std::function<void(std::size_t, int)> pick = [&](std::size_t j, int rem) {
            if (j == keys.size()) {
                if (rem != 0) return;
                Partition rho;
                for (std::size_t i = 0; i < keys.size(); ++i)
                    for (int r = 0; r < take[i]; ++r) rho.push_back(keys[i]);
                for (std::size_t i = 0; i < keys.size(); ++i) avail[i] -= take[i];
                block(b + 1, acc * (factorial(lambda[b]) / zee(rho)));
                for (std::size_t i = 0; i < keys.size(); ++i) avail[i] += take[i];
                return;
            }
            for (int c = 0; c <= avail[j] && c * keys[j] <= rem; ++c) {
                take[j] = c;
                pick(j + 1, rem - c * keys[j]);
            }
            take[j] = 0;
        };
        pick(0, lambda[b]);
    };
    block(0, Int(1));
    return total;
}

Int contingency_count(const Partition& lambda, const Partition& mu) {
    if (size(lambda) != size(mu)) throw std::invalid_argument("contingency_count: size mismatch");
    std::map<std::pair<std::size_t, std::vector<int>>, Int> memo;
    std::function<Int(std::size_t, std::vector<int>)> rows = [&](std::size_t r, std::vector<int> cols) -> Int {
        std::sort(cols.begin(), cols.end(), std::greater<int>());
        while (!cols.empty() && cols.back() == 0) cols.pop_back();
        if (r == lambda.size()) return cols.empty() ? Int(1) : Int(0);
        if (r + 1 == lambda.size()) return Int(1);
        auto key = std::make_pair(r, cols);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Int total = 0;
        std::vector<int> rest = cols;
        std::function<void(std::size_t, int)> fill = [&](std::size_t j, int rem) {
            if (j == cols.size()) {
                if (rem == 0) total += rows(r + 1, rest);
                return;
            }
            for (int x = 0; x <= std::min(rem, cols[j]); ++x) {
                rest[j] = cols[j] - x;
                fill(j + 1, rem - x);
            }
            rest[j] = cols[j];
        };
        fill(0, lambda[r]);
        memo.emplace(key, total);
        return total;
    };
    return rows(0, mu);
}

int twist_exponent(const Partition& lambda) {
    int s = 0;
    for (int x : lambda) s += x * (x - 1) / 2;
    return s;
}

}  // namespace shalika
