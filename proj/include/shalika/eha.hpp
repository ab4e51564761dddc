#pragma once

#include "shalika/symfunc.hpp"

namespace shalika {

// Execution policy for the data-parallel kernels; serial is the reference.
enum class Exec { serial, parallel };

struct SlopeKey {
    int m = 0;
    int n = 1;

    // Throws std::invalid_argument unless gcd(m, n) = 1.
    static SlopeKey make(int m, int n);
    auto operator<=>(const SlopeKey&) const = default;
};

// E_{m,n,k} = sum over Dyck paths of q^area e_D, in the E basis.
const SymFun& elementary_slope(int m, int n, int k);
// e_k -> E_{m,n,k}, extended multiplicatively.
SymFun slope_plethysm(const SymFun& f, int m, int n, Exec exec = Exec::parallel);
RatFun comp_weight(const Composition& alpha, int m, int n, int k);
// P_{km,kn} . 1 at t = 1, in the TH basis.
SymFun pkm_compositions(int m, int n, int k, Exec exec = Exec::parallel);

}  // namespace shalika
