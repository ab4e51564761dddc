#pragma once

#include "shalika/branch.hpp"
#include "shalika/eha.hpp"

#include <vector>

namespace shalika {

struct GermTable {
    std::map<Partition, RatFun> shalika;
    std::map<Partition, RatFun> steinberg;
    std::map<Partition, RatFun> dyck;
};

// Rows indexed by partitions of p*n', columns by partitions of n' (both in
// the reverse-lexicographic order of partitions()).
struct GermMatrix {
    std::vector<Partition> rows, cols;
    std::vector<std::vector<RatFun>> entries;

    const RatFun& at(const Partition& row, const Partition& col) const;
};

SymFun branch_symfun(const BranchSpec& b, Exec exec = Exec::parallel);
// Product over branches, in the E basis.
SymFun master_symfun(const GammaSpec& spec, Exec exec = Exec::parallel);
GermTable germ_tables(const SymFun& f);

GermMatrix transition_matrix(int p, int q, int n_inner);
SymFun waldspurger_master(const GammaSpec& spec);
// Experimental: the conjectured graph formula for (c_lambda / c_lambda') M.
GermMatrix graph_transition_matrix(int p, int q, int n_inner);
// (c_lambda / c_lambda') M computed from transition_matrix.
GermMatrix renormalized_transition_matrix(int p, int q, int n_inner);

}  // namespace shalika
