#pragma once

#include <vector>

#include "akb/abacus.hpp"

namespace akb {

enum class OpKind { First, Second };

// the triple [(row, col), index]
struct ElementaryOp {
    Position source;
    int bead_index = 0;  // 0 = unchecked
    OpKind kind = OpKind::First;
    bool operator==(const ElementaryOp&) const = default;
};

struct OperationSet {
    std::vector<ElementaryOp> ops;  // canonical order: (subabacus, bead index, t)
    bool operator==(const OperationSet&) const = default;
};

using MovingVector = std::vector<int>;

int total(const MovingVector& m);

// position (x, y = ke + c) sits at t = k r + (r - x) of subabacus c;
// for infinite e every column is its own subabacus and t = r - x
class TOrder {
public:
    TOrder(int r, QuantumChar e) : r_(r), e_(e) {}

    int subabacus(Position p) const;
    int t(Position p) const;
    Position at(int subabacus, int t) const;
    int r() const noexcept { return r_; }
    const QuantumChar& e() const noexcept { return e_; }

private:
    int r_;
    QuantumChar e_;
};

struct CoreResult {
    AbacusPair core;
    OperationSet ops;
    MovingVector moving_vector;
};

ElementaryOp make_op(Position source, int r, const QuantumChar& e, int bead_index = 0);
Position op_target(const ElementaryOp& op, int r, const QuantumChar& e);
void sort_canonical(OperationSet& set, int r, const QuantumChar& e);
MovingVector tally(const OperationSet& set, int r);

AbacusPair apply_op(const AbacusPair& a, const ElementaryOp& op);
CoreResult core(const AbacusPair& a);
OperationSet operations_between(const AbacusPair& a, const AbacusPair& b);
MovingVector moving_vector_between(const AbacusPair& a, const AbacusPair& b);
AbacusPair remove_rim_hook(const AbacusPair& a, int row, int col);
AbacusPair rotate_rows(const AbacusPair& a, int i);
Multipartition construct_from_vector(const Multicharge& s, const Multicharge& s_star, const MovingVector& m,
                                     const QuantumChar& e);

}  // namespace akb
