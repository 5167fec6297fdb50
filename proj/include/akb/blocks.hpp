#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "akb/abacus.hpp"

namespace akb {

struct BlockId {
    QuantumChar e = QuantumChar::infinity();
    Multicharge multicharge;
    ResidueContent content;  // beta in the simple-root basis
    int n = 0;
    bool operator==(const BlockId&) const = default;
};

using DominantWeight = std::map<int, int>;

struct Budget {
    std::uint64_t enumeration = 10'000'000;
    std::uint64_t comparisons = 100'000;
    // ABACUS_BUDGET overrides the enumeration cap
    static Budget from_env();
};

class CartanData {
public:
    explicit CartanData(QuantumChar e) : e_(e) {}
    int alpha(int i, int j) const;  // (alpha_i, alpha_j)
    int weight_alpha(int i, int j) const { return e_.residue(i) == e_.residue(j) ? 1 : 0; }  // (Lambda_i, alpha_j)
    const QuantumChar& e() const noexcept { return e_; }

private:
    QuantumChar e_;
};

DominantWeight dominant_weight(const Multicharge& s, const QuantumChar& e);
BlockId block_id(const AbacusPair& a);
// (alpha_j, Lambda - beta)
int pairing(const BlockId& b, int j);
long long defect(const BlockId& b);
// beta + (alpha_j, Lambda - beta) alpha_j
ResidueContent reflect(const BlockId& b, int j);
AbacusPair weyl_sigma(const AbacusPair& a, int j);
std::pair<Multicharge, Permutation> normalize_multicharge(const Multicharge& s, const QuantumChar& e);
std::vector<Multipartition> enumerate_block_members(const BlockId& b, const Budget& budget = {});

struct OrbitResult {
    bool found = false;
    std::vector<int> word;  // reflections applied to b1, in order
    int depth = 0;
};

OrbitResult orbit_reachable(const BlockId& b1, const BlockId& b2, int depth);

}  // namespace akb
