#pragma once

#include "shalika/eha.hpp"
#include "shalika/qtpoly.hpp"

#include <map>
#include <vector>

namespace shalika {

struct QTCoeffMap {
    int m = 1;
    int n = 1;
    // Coefficient of the modified Macdonald element H~_lambda.
    std::map<Partition, QTRatFun> coeffs;
};

constexpr int kDefaultQtCap = 6;

// Weight of T at slope m/n, identically vanishing factors skipped.
QTRatFun syt_weight(const Tableau& T, int m, int n);
// |lambda| - l(lambda) - #{i : boxes i, i+1 in consecutive columns}
int vanishing_order(const Tableau& T);
QTCoeffMap torus_msf_qt(int m, int n, Exec exec = Exec::parallel, int cap = kDefaultQtCap);
std::map<Partition, RatFun> specialize_t1(const QTCoeffMap& f);

// Entry k is the coefficient of a^k.
std::vector<QTRatFun> superpolynomial(const QTCoeffMap& f);
std::vector<QTRatFun> superpolynomial(int m, int n, Exec exec = Exec::parallel);
std::string render_superpolynomial(const std::vector<QTRatFun>& p);

}  // namespace shalika
