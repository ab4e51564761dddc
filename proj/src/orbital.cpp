#include "shalika/orbital.hpp"

#include <algorithm>
#include <stdexcept>

namespace shalika {

int dim_sp(const GammaSpec& spec) {
    spec.validate();
    if (spec.dim_override) return *spec.dim_override;
    Rat total = 0;
    const auto& br = spec.branches;
    for (const auto& b : br) total += Rat(branch_dim(b));
    for (std::size_t i = 0; i < br.size(); ++i)
        for (std::size_t j = i + 1; j < br.size(); ++j) {
            auto it = spec.contact.find({static_cast<int>(i), static_cast<int>(j)});
            Rat c;
            if (it != spec.contact.end()) c = it->second;
            else {
                if (br[i].steps.empty() || br[j].steps.empty())
                    throw std::domain_error("contact between branches " + std::to_string(i) + " and " +
                                            std::to_string(j) + " needs explicit data");
                c = std::min(br[i].leading_exponent(), br[j].leading_exponent());
            }
            total += Rat(br[i].degree() * br[j].degree()) * c;
        }
    total.canonicalize();
    if (total.get_den() != 1)
        throw std::domain_error("dim Sp is not an integer (" + total.get_str() + "); supply contact data or dim_override");
    if (!total.get_num().fits_sint_p()) throw std::overflow_error("dim Sp too large");
    return static_cast<int>(total.get_num().get_si());
}

QPoly orbital_integral(const SymFun& master, int dim, const Partition& lambda) {
    RatFun v = pair_with_e(master, lambda);
    if (!v.is_polynomial()) throw std::logic_error("pairing with e" + render(lambda) + " is not a polynomial");
    QPoly p = v.to_qpoly();
    if (!p.nonnegative_integer())
        throw std::logic_error("pairing with e" + render(lambda) + " has negative or fractional coefficients");
    return reverse_and_scale(p, dim);
}

QPoly orbital_integral(const GammaSpec& spec, const Partition& lambda) {
    if (size(lambda) != spec.degree()) throw std::invalid_argument("partition size differs from spec degree");
    return orbital_integral(master_symfun(spec), dim_sp(spec), lambda);
}

std::map<Partition, QPoly> weight_polynomials(const SymFun& master, int dim, Exec exec) {
    const auto& parts = partitions(master.degree);
    std::vector<QPoly> out(parts.size());
    if (exec == Exec::serial) {
        for (std::size_t i = 0; i < parts.size(); ++i) out[i] = orbital_integral(master, dim, parts[i]);
    } else {
        SymFun e = convert(master, Basis::E);
        const long np = static_cast<long>(parts.size());
        std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < np; ++i) {
            try {
                out[i] = orbital_integral(e, dim, parts[i]);
            } catch (...) {
#pragma omp critical(orbital_err)
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
    }
    std::map<Partition, QPoly> r;
    for (std::size_t i = 0; i < parts.size(); ++i) r.emplace(parts[i], std::move(out[i]));
    return r;
}

std::map<Partition, QPoly> weight_polynomials(const GammaSpec& spec, Exec exec) {
    return weight_polynomials(master_symfun(spec, exec), dim_sp(spec), exec);
}

Partition top_frobenius(const SymFun& master) {
    SymFun e = convert(master, Basis::E);
    std::vector<Partition> support;
    for (const auto& [mu, v] : e.coeffs) support.push_back(mu);
    if (support.empty()) throw std::domain_error("master symmetric function is zero");
    std::vector<Partition> minimal;
    for (const auto& a : support) {
        bool is_min = std::none_of(support.begin(), support.end(),
                                   [&](const Partition& b) { return b != a && dominates(a, b); });
        if (is_min) minimal.push_back(a);
    }
    // Ties in the dominance order are broken toward the lexicographically smallest.
    return *std::min_element(minimal.begin(), minimal.end());
}

Partition top_frobenius(const GammaSpec& spec) { return top_frobenius(master_symfun(spec)); }

Int component_count(const GammaSpec& spec) {
    Partition nu = top_frobenius(spec);
    return contingency_count(nu, Partition(size(nu), 1));
}

QPoly jacobian_count(const GammaSpec& spec) {
    const int n = spec.degree();
    return orbital_integral(master_symfun(spec), dim_sp(spec), Partition{n});
}

OrbitalReport orbital_report(const GammaSpec& spec, Exec exec) {
    OrbitalReport r;
    SymFun f = convert(master_symfun(spec, exec), Basis::E);
    r.dim_sp = dim_sp(spec);
    r.by_parahoric = weight_polynomials(f, r.dim_sp, exec);
    r.top_frobenius = top_frobenius(f);
    r.components = contingency_count(r.top_frobenius, Partition(size(r.top_frobenius), 1));
    r.jacobian_count = r.by_parahoric.at(Partition{spec.degree()});
    return r;
}

}  // namespace shalika
