#include "shalika/branch.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace shalika {

Step Step::ramified(int p, int q) {
    Step s;
    s.kind = Kind::ramified;
    s.p = p;
    s.q = q;
    return s;
}

Step Step::unramified(int f, int a) {
    Step s;
    s.kind = Kind::unramified;
    s.f = f;
    s.a = a;
    return s;
}

int BranchSpec::degree() const {
    int n = 1;
    for (const auto& s : steps) n *= s.kind == Step::Kind::ramified ? s.p : s.f;
    return n;
}

bool BranchSpec::totally_ramified() const {
    return std::all_of(steps.begin(), steps.end(), [](const Step& s) { return s.kind == Step::Kind::ramified; });
}

NewtonPairs BranchSpec::newton_pairs() const {
    if (!totally_ramified()) throw std::invalid_argument("branch has unramified steps");
    NewtonPairs r;
    for (const auto& s : steps) r.emplace_back(s.p, s.q);
    return r;
}

Rat BranchSpec::leading_exponent() const {
    if (steps.empty()) throw std::invalid_argument("trivial branch has no leading exponent");
    const Step& s = steps.back();
    if (s.kind == Step::Kind::ramified) {
        Rat r(s.q, s.p);
        r.canonicalize();
        return r;
    }
    return Rat(s.a);
}

void BranchSpec::validate() const {
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const Step& s = steps[i];
        std::string where = "step " + std::to_string(i + 1);
        if (s.kind == Step::Kind::ramified) {
            if (s.p < 1 || s.q < 1) throw std::invalid_argument(where + ": ramified step needs p, q >= 1");
            if (std::gcd(s.p, s.q) != 1) throw std::invalid_argument(where + ": ramified step needs gcd(p, q) = 1");
        } else {
            if (s.f < 2) throw std::invalid_argument(where + ": unramified step needs f >= 2");
            if (s.a < 0) throw std::invalid_argument(where + ": unramified step needs a >= 0");
        }
    }
}

int GammaSpec::degree() const {
    int n = 0;
    for (const auto& b : branches) n += b.degree();
    return n;
}

void GammaSpec::validate() const {
    if (branches.empty()) throw std::invalid_argument("spec has no branches");
    for (const auto& b : branches) b.validate();
    for (const auto& [ij, c] : contact) {
        if (ij.first >= ij.second || ij.first < 0 || ij.second >= static_cast<int>(branches.size()))
            throw std::invalid_argument("contact key out of range");
        if (c <= 0) throw std::invalid_argument("contact valuation must be positive");
    }
    if (dim_override && *dim_override < 0) throw std::invalid_argument("dim_override must be >= 0");
}

BranchSpec branch_from_newton(const NewtonPairs& pairs) {
    BranchSpec b;
    for (auto [p, q] : pairs) b.steps.push_back(Step::ramified(p, q));
    b.validate();
    return b;
}

NewtonPairs puiseux_to_newton(const std::vector<Rat>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] <= 0) throw std::invalid_argument("Puiseux exponents must be positive");
        if (i && r[i] >= r[i - 1]) throw std::invalid_argument("Puiseux exponents must be strictly decreasing");
    }
    const int d = static_cast<int>(r.size());
    NewtonPairs out(d);
    Int outer = 1;  // p_{i+1} ... p_d
    for (int i = d - 1; i >= 0; --i) {
        Rat x = i == d - 1 ? r[i] : (r[i] - r[i + 1]) * Rat(outer);
        x.canonicalize();
        if (!x.get_num().fits_sint_p() || !x.get_den().fits_sint_p()) throw std::overflow_error("Newton pair too large");
        out[i] = {static_cast<int>(x.get_den().get_si()), static_cast<int>(x.get_num().get_si())};
        outer *= out[i].first;
    }
    return out;
}

std::vector<Rat> newton_to_puiseux(const NewtonPairs& pairs) {
    const int d = static_cast<int>(pairs.size());
    std::vector<Rat> r(d);
    Int outer = 1;
    for (int i = d - 1; i >= 0; --i) {
        auto [p, q] = pairs[i];
        Rat step(Int(q), Int(p) * outer);
        step.canonicalize();
        r[i] = i == d - 1 ? step : r[i + 1] + step;
        outer *= p;
    }
    return r;
}

NewtonPairs newton_to_cabling(const NewtonPairs& pairs) {
    const int d = static_cast<int>(pairs.size());
    NewtonPairs out(pairs);
    for (int i = d - 2; i >= 0; --i)
        out[i].second = out[i + 1].second * pairs[i + 1].first * pairs[i].first + pairs[i].second;
    return out;
}

Int delta_invariant(const NewtonPairs& pairs) {
    auto cab = newton_to_cabling(pairs);
    const int d = static_cast<int>(pairs.size());
    if (d == 0) return 0;
    Int g = 0;
    for (int i = d - 1; i >= 0; --i) {
        Int p = cab[i].first, a = cab[i].second;
        Int local = (p - 1) * (a - 1) / 2;
        g = i == d - 1 ? local : p * g + local;
    }
    return g;
}

RootData root_data(const BranchSpec& b) {
    RootData r;
    for (const auto& s : b.steps) {
        RootData next;
        if (s.kind == Step::Kind::ramified) {
            next.n = s.p * r.n;
            Rat slope(s.q, s.p);
            next.disc = Rat(next.n * (next.n - r.n)) * slope + Rat(r.n * (r.n - 1) * s.q) + r.disc;
            next.geometric_branches = r.geometric_branches;
        } else {
            next.n = s.f * r.n;
            next.disc = Rat(next.n * (next.n - r.n) * s.a) + Rat(s.f) * (Rat(r.n * (r.n - 1) * s.a) + r.disc);
            next.geometric_branches = s.f * r.geometric_branches;
        }
        next.disc.canonicalize();
        r = next;
    }
    return r;
}

Int branch_dim(const BranchSpec& b) {
    RootData r = root_data(b);
    Rat d = (r.disc - r.n + r.geometric_branches) / 2;
    d.canonicalize();
    if (d.get_den() != 1) throw std::domain_error("branch dimension is not an integer");
    return d.get_num();
}

}  // namespace shalika
