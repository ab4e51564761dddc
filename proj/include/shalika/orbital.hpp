#pragma once

#include "shalika/germs.hpp"

#include <map>

namespace shalika {

struct OrbitalReport {
    int dim_sp = 0;
    std::map<Partition, QPoly> by_parahoric;
    Int components = 0;
    Partition top_frobenius;
    QPoly jacobian_count;
};

// dim_override, else sum of branch dimensions plus n_i n_j c_ij over pairs.
int dim_sp(const GammaSpec& spec);
QPoly orbital_integral(const GammaSpec& spec, const Partition& lambda);
std::map<Partition, QPoly> weight_polynomials(const GammaSpec& spec, Exec exec = Exec::parallel);
Int component_count(const GammaSpec& spec);
// Dominance-minimal partition with a nonzero Dyck germ.
Partition top_frobenius(const GammaSpec& spec);
QPoly jacobian_count(const GammaSpec& spec);
OrbitalReport orbital_report(const GammaSpec& spec, Exec exec = Exec::parallel);

// Same computations on a precomputed master symmetric function.
QPoly orbital_integral(const SymFun& master, int dim, const Partition& lambda);
std::map<Partition, QPoly> weight_polynomials(const SymFun& master, int dim, Exec exec = Exec::parallel);
Partition top_frobenius(const SymFun& master);

}  // namespace shalika
