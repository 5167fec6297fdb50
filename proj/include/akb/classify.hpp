#pragma once

#include <map>
#include <optional>
#include <utility>

#include "akb/blocks.hpp"
#include "akb/moves.hpp"

namespace akb {

enum class Verdict { Finite, Infinite };
enum class Detail { None, Simple, TruncatedPoly, BrauerLine };

const char* to_string(Verdict v);
const char* to_string(Detail d);

struct WitnessCoords {
    int kappa1 = 0, iota1 = 0, kappa2 = 0, iota2 = 0;
    bool operator==(const WitnessCoords&) const = default;
};

struct IncomparabilityWitness {
    Multicharge charge;
    Multipartition mu, nu;
    WitnessCoords coords;
    Permutation sigma;
    std::string source;  // which construction produced it
};

struct ReprTypeReport {
    Verdict verdict = Verdict::Finite;
    int weight = 0;
    MovingVector block_moving_vector;
    Multicharge normalized_charge;
    Permutation normalization;
    Multipartition normalized_multipartition;
    Detail detail = Detail::None;
    std::optional<int> degree;  // TruncatedPoly: w + 1
    std::optional<int> edges;   // BrauerLine: a + 1
    std::optional<IncomparabilityWitness> witness;
    bool witness_budget_exhausted = false;
};

using SubabacusMV = std::map<int, long long>;

// coordinates for which `a` plays the role of the first abacus in the definition
std::optional<WitnessCoords> incomparable_abaci(const AbacusPair& a, const AbacusPair& b);
bool satisfies_incomparable(const AbacusPair& a, const AbacusPair& b, const WitnessCoords& w);
Permutation permutation_for_incomparability(const AbacusPair& a, const AbacusPair& b, const WitnessCoords& w);

// searches the block of `member`; throws ErrorCode::Budget if the pairwise scan is cut short
std::optional<IncomparabilityWitness> find_incomparable_pair(const AbacusPair& member, const Budget& budget = {});
std::optional<IncomparabilityWitness> find_incomparable_pair(const BlockId& b, const Budget& budget = {});
// pattern constructions only
std::optional<IncomparabilityWitness> construct_incomparable_pair(const AbacusPair& member);

std::pair<MovingVector, AbacusPair> block_moving_vector(const AbacusPair& p);
ReprTypeReport repr_type(const AbacusPair& p, const Budget& budget = {}, bool search_witness = true);
Verdict schur_repr_type(const ReprTypeReport& rep);

SubabacusMV member_subabacus_vector(const AbacusPair& p);
SubabacusMV subabacus_moving_vector(const BlockId& b, const Budget& budget = {});
int nonzero_components(const SubabacusMV& w);
bool derived_equivalent_weight1(const BlockId& b1, const BlockId& b2, const Budget& budget = {});

}  // namespace akb
