#include "shalika/germs.hpp"

#include <algorithm>
#include <exception>

namespace shalika {

const RatFun& GermMatrix::at(const Partition& row, const Partition& col) const {
    auto r = std::find(rows.begin(), rows.end(), row);
    auto c = std::find(cols.begin(), cols.end(), col);
    if (r == rows.end() || c == cols.end()) throw std::out_of_range("partition not indexing this matrix");
    return entries[r - rows.begin()][c - cols.begin()];
}

SymFun branch_symfun(const BranchSpec& b, Exec exec) {
    b.validate();
    SymFun f = SymFun::basis_element(Basis::E, {1});
    for (const auto& s : b.steps) {
        if (s.kind == Step::Kind::ramified) {
            f = slope_plethysm(f, s.q, s.p, exec);
            continue;
        }
        const int n_cur = f.degree;
        SymFun g = adams(substitute_power(convert(f, Basis::E), s.f), s.f);
        if ((n_cur * (s.f - 1)) % 2) g = g * RatFun(-1);
        f = convert(nabla_t1(g, s.a), Basis::E);
    }
    return f;
}

SymFun master_symfun(const GammaSpec& spec, Exec exec) {
    spec.validate();
    if (spec.degree() > degree_cap())
        throw std::domain_error("degree " + std::to_string(spec.degree()) + " exceeds the cap " + std::to_string(degree_cap()));
    const long nb = static_cast<long>(spec.branches.size());
    std::vector<SymFun> parts(nb, SymFun::one(Basis::E));
    if (exec == Exec::serial) {
        for (long i = 0; i < nb; ++i) parts[i] = branch_symfun(spec.branches[i], exec);
    } else {
        std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < nb; ++i) {
            try {
                parts[i] = branch_symfun(spec.branches[i], exec);
            } catch (...) {
#pragma omp critical(branch_err)
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
    }
    SymFun f = SymFun::one(Basis::E);
    for (const auto& p : parts) f = multiply(f, p);
    return f;
}

GermTable germ_tables(const SymFun& f) {
    GermTable g;
    g.shalika = convert(f, Basis::TH).coeffs;
    g.steinberg = convert(f, Basis::H).coeffs;
    g.dyck = convert(f, Basis::E).coeffs;
    return g;
}

}  // namespace shalika
