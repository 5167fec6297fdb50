#pragma once

#include <string>
#include <vector>

#include "akb/partitions.hpp"

namespace akb {

struct Position {
    int row = 1;
    int col = 0;
    auto operator<=>(const Position&) const = default;
};

// (r+j, h) -> (j, h-e) and (j-r, h) -> (j, h+e) for finite e
Position normalize(Position p, int r, const QuantumChar& e);

// every column below `floor` holds a bead; `beads` lists the beads at or above it
struct RowBeads {
    int floor = 0;
    std::vector<int> beads;
};

class AbacusPair {
public:
    AbacusPair(Multipartition lambda, Multicharge s, QuantumChar e);

    const Multipartition& multipartition() const noexcept { return lambda_; }
    const Multicharge& charge() const noexcept { return s_; }
    const QuantumChar& e() const noexcept { return e_; }
    int rank() const noexcept { return s_.rank(); }
    int size() const noexcept { return lambda_.size(); }

    // every row is fully beaded at columns <= low_col() and empty at columns >= high_col()
    int low_col() const;
    int high_col() const;

    // bead columns of one row, descending
    std::vector<int> row_beads(int row) const;
    RowBeads row(int row, int floor) const;
    std::vector<RowBeads> rows(int floor) const;

    bool operator==(const AbacusPair&) const = default;

private:
    Multipartition lambda_;
    Multicharge s_;
    QuantumChar e_;
};

struct UglovImage {
    Partition partition;
    int charge = 0;
    bool operator==(const UglovImage&) const = default;
};

bool has_bead(const AbacusPair& a, Position p);
AbacusPair pair_from_beads(const std::vector<RowBeads>& rows, const QuantumChar& e);
// single row version: (partition, charge)
std::pair<Partition, int> partition_from_beads(const RowBeads& row);

int n_right(const AbacusPair& a, int row, int col);
// number of beads in column `col`, over all rows
int column_count(const AbacusPair& a, int col);
int subabacus_diff(const AbacusPair& a, int j);
bool is_complete(const AbacusPair& a);
AbacusPair dual(const AbacusPair& a);
UglovImage uglov(const AbacusPair& a);

std::string render(const AbacusPair& a, int lo, int hi);
std::string render(const AbacusPair& a);
// inverse of render; `lo` is the column of the first glyph, everything left of it is beaded
AbacusPair parse_render(const std::string& text, int lo, const QuantumChar& e);

}  // namespace akb
