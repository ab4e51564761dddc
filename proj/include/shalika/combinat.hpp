#pragma once

#include "shalika/qpoly.hpp"

#include <utility>
#include <vector>

namespace shalika {

// Weakly decreasing positive parts.
using Partition = std::vector<int>;
// Positive parts in order.
using Composition = std::vector<int>;

int size(const Partition& p);
Partition sorted_partition(std::vector<int> parts);
Partition transpose(const Partition& p);
bool dominates(const Partition& a, const Partition& b);
// n(lambda) = sum (i-1) lambda_i.
int n_stat(const Partition& p);
std::string render(const Partition& p);

// Reverse lexicographic: (n), (n-1,1), ...
const std::vector<Partition>& partitions(int n);
// Lexicographic.
std::vector<Composition> compositions(int n);

struct DyckPath {
    // Number of east steps taken at each height; internal zeros kept,
    // trailing zeros dropped.
    std::vector<int> row_steps;
    int area = 0;
    int width = 0;
    int height = 0;

    Composition composition() const;
};

// Paths in the (k n) x (k m) rectangle weakly below the diagonal; strict
// forbids touching the diagonal except at the two endpoints.
std::vector<DyckPath> dyck_paths(int m, int n, int k, bool strict = false);

struct Tableau {
    Partition shape;
    // pos[i-1] = (row, column) of label i, both 0-based.
    std::vector<std::pair<int, int>> pos;

    int size() const { return static_cast<int>(pos.size()); }
    int label_at(int row, int col) const;
    bool is_standard() const;
};

std::vector<Tableau> syt(const Partition& shape);
Tableau composition_tableau(const Composition& alpha);
std::vector<QPoly> content_vector_t1(const Composition& alpha);

enum class StepMode { ceil, floor };
int slope_steps(int m, int n, int i, StepMode mode = StepMode::ceil);

Int factorial(int n);
// prod of factorials of parts
Int block_factorial(const Partition& p);
// z_mu = prod_k k^{m_k} m_k!
Int zee(const Partition& mu);
Int young_cycle_count(const Partition& lambda, const Partition& mu);
Int contingency_count(const Partition& lambda, const Partition& mu);
int twist_exponent(const Partition& lambda);

}  // namespace shalika
