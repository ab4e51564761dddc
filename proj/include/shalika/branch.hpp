#pragma once

#include "shalika/qpoly.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace shalika {

// (p_i, q_i), innermost first; step i applies slope q_i / p_i.
using NewtonPairs = std::vector<std::pair<int, int>>;

struct Step {
    enum class Kind { ramified, unramified };
    Kind kind = Kind::ramified;
    int p = 1, q = 1;  // ramified
    int f = 2, a = 0;  // unramified: residue degree, twist exponent

    static Step ramified(int p, int q);
    static Step unramified(int f, int a);
    bool operator==(const Step&) const = default;
};

struct BranchSpec {
    std::vector<Step> steps;

    int degree() const;
    bool totally_ramified() const;
    NewtonPairs newton_pairs() const;
    // Valuation of the leading Puiseux term (outermost step).
    Rat leading_exponent() const;
    void validate() const;
};

struct GammaSpec {
    std::vector<BranchSpec> branches;
    // Keys (i, j) with i < j.
    std::map<std::pair<int, int>, Rat> contact;
    std::optional<int> dim_override;

    int degree() const;
    void validate() const;
};

BranchSpec branch_from_newton(const NewtonPairs& pairs);
NewtonPairs puiseux_to_newton(const std::vector<Rat>& exponents);
std::vector<Rat> newton_to_puiseux(const NewtonPairs& pairs);
NewtonPairs newton_to_cabling(const NewtonPairs& pairs);
Int delta_invariant(const NewtonPairs& pairs);

// Discriminant bookkeeping of one branch: root count n, sum over ordered
// root pairs of v(x_i - x_j), and the number of geometric branches.
struct RootData {
    int n = 1;
    Rat disc = 0;
    int geometric_branches = 1;
};
RootData root_data(const BranchSpec& b);
// (disc - n + r) / 2; throws if not an integer.
Int branch_dim(const BranchSpec& b);

}  // namespace shalika
