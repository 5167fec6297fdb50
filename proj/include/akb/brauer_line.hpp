#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace akb {

// straight-line Brauer tree: edge i joins vertices i and i+1
struct BrauerLine {
    int edges = 1;
    int exceptional = 1;   // vertex 1..edges+1
    int multiplicity = 1;  // 1 means no exceptional vertex

    int vertex_multiplicity(int v) const { return (multiplicity > 1 && v == exceptional) ? multiplicity : 1; }
};

// Simple(top) when bottom == 0, otherwise the two-factor module top/bottom
struct CellDescriptor {
    int top = 0;
    int bottom = 0;
    bool in_lambda0 = false;

    bool is_pair() const { return bottom != 0; }
    bool operator==(const CellDescriptor&) const = default;
};

using CellChain = std::vector<CellDescriptor>;

struct ProjectiveShape {
    int edge = 0;
    std::vector<int> lower_arm;  // around vertex `edge`, top to bottom, socle excluded
    std::vector<int> upper_arm;  // around vertex `edge + 1`
};

struct PosetLabel {
    int edge = 0;
    int superscript = 0;  // 0 when the edge labels a single cell
    bool in_lambda0 = false;
    bool operator==(const PosetLabel&) const = default;
};

void validate(const BrauerLine& line);
ProjectiveShape projective_structure(const BrauerLine& line, int edge);
// multiplicity of each simple in the projective cover
std::map<int, int> composition_factors(const ProjectiveShape& p);
std::pair<CellChain, CellChain> cell_chains(const BrauerLine& line);
std::vector<PosetLabel> multiplication_poset(const BrauerLine& line);

std::string to_string(const CellDescriptor& c);
std::string to_string(const PosetLabel& l);

}  // namespace akb
