#pragma once

#include "shalika/branch.hpp"
#include "shalika/combinat.hpp"

#include <string>

namespace shalika {

// Branches separated by '+'; steps by ';' innermost first, each "p,q" or "u:f,a".
GammaSpec parse_newton_spec(const std::string& s);
// Branches separated by '+'; each a comma list of exponents like "7/4,3/2".
GammaSpec parse_puiseux_spec(const std::string& s);
std::vector<Rat> parse_puiseux_branch(const std::string& s);
// "2,1,1", "[2,1,1]" or "2 1 1".
Partition parse_partition(const std::string& s);
Rat parse_rational(const std::string& s, const std::string& field);

}  // namespace shalika
