#include "akb/brauer_line.hpp"

#include <algorithm>

#include "akb/partitions.hpp"

namespace akb {

void validate(const BrauerLine& line)
{
    if (line.edges < 1)
        throw Error(ErrorCode::InvalidArgument, "a Brauer line needs at least one edge");
    if (line.multiplicity < 1)
        throw Error(ErrorCode::InvalidArgument, "multiplicity must be at least 1");
    if (line.multiplicity > 1 && (line.exceptional < 1 || line.exceptional > line.edges + 1))
        throw Error(ErrorCode::InvalidArgument, "exceptional vertex must lie in 1.." + std::to_string(line.edges + 1));
}

namespace {

std::vector<int> arm(const BrauerLine& line, int vertex, int edge)
{
    std::vector<int> around{edge};
    if (vertex - 1 >= 1 && vertex - 1 != edge)
        around.push_back(vertex - 1);
    if (vertex <= line.edges && vertex != edge)
        around.push_back(vertex);
    std::vector<int> seq;
    for (int k = 0; k < line.vertex_multiplicity(vertex); ++k) {
        for (std::size_t t = 1; t < around.size(); ++t)
            seq.push_back(around[t]);
        seq.push_back(around[0]);
    }
    seq.pop_back();
    return seq;
}

void flag_first_tops(CellChain& chain)
{
    std::vector<int> seen;
    for (auto& c : chain) {
        c.in_lambda0 = std::find(seen.begin(), seen.end(), c.top) == seen.end();
        if (c.in_lambda0)
            seen.push_back(c.top);
    }
}

}  // namespace

ProjectiveShape projective_structure(const BrauerLine& line, int edge)
{
    validate(line);
    if (edge < 1 || edge > line.edges)
        throw Error(ErrorCode::InvalidArgument, "edge " + std::to_string(edge) + " outside 1.." + std::to_string(line.edges));
    return {edge, arm(line, edge, edge), arm(line, edge + 1, edge)};
}

std::map<int, int> composition_factors(const ProjectiveShape& p)
{
    std::map<int, int> f;
    f[p.edge] += 2;
    for (int x : p.lower_arm)
        ++f[x];
    for (int x : p.upper_arm)
        ++f[x];
    return f;
}

std::pair<CellChain, CellChain> cell_chains(const BrauerLine& line)
{
    validate(line);
    int n = line.edges;
    CellChain one;
    if (n == 1) {
        for (int k = 0; k <= line.multiplicity; ++k)
            one.push_back({1, 0, false});
    } else {
        for (int k = 0; k < line.vertex_multiplicity(1); ++k)
            one.push_back({1, 0, false});
        for (int i = 2; i <= n; ++i)
            for (int k = 0; k < line.vertex_multiplicity(i); ++k)
                one.push_back({i, i - 1, false});
        for (int k = 0; k < line.vertex_multiplicity(n + 1); ++k)
            one.push_back({n, 0, false});
    }
    CellChain two;
    for (auto it = one.rbegin(); it != one.rend(); ++it)
        two.push_back(it->is_pair() ? CellDescriptor{it->bottom, it->top, false} : *it);
    flag_first_tops(one);
    flag_first_tops(two);
    return {one, two};
}

std::vector<PosetLabel> multiplication_poset(const BrauerLine& line)
{
    auto chain = cell_chains(line).first;
    std::map<int, int> count, seen;
    for (const auto& c : chain)
        ++count[c.top];
    std::vector<PosetLabel> out;
    for (const auto& c : chain) {
        int k = ++seen[c.top];
        out.push_back({c.top, count[c.top] > 1 ? k : 0, c.in_lambda0});
    }
    return out;
}

std::string to_string(const CellDescriptor& c)
{
    if (!c.is_pair())
        return "L" + std::to_string(c.top);
    return std::to_string(c.top) + "/" + std::to_string(c.bottom);
}

std::string to_string(const PosetLabel& l)
{
    std::string s = "a" + std::to_string(l.edge);
    if (l.superscript > 0)
        s += "^" + std::to_string(l.superscript);
    return s;
}

}  // namespace akb
