#pragma once

#include <map>
#include <vector>

#include "akb/abacus.hpp"

namespace akb::detail {

// one subabacus: every t below floor_t holds a bead, t lists the rest in descending order
struct Runner {
    int key = 0;
    int floor_t = 0;
    std::vector<int> t;
};

int runner_floor(const AbacusPair& a);
std::map<int, Runner> runners(const AbacusPair& a, int floor_col);
AbacusPair from_runners(const std::map<int, Runner>& runs, int floor_col, int r, const QuantumChar& e);

}  // namespace akb::detail
