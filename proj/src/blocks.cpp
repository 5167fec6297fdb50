#include "akb/blocks.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <set>
#include <string>

namespace akb {

Budget Budget::from_env()
{
    Budget b;
    if (const char* v = std::getenv("ABACUS_BUDGET")) {
        char* end = nullptr;
        unsigned long long x = std::strtoull(v, &end, 10);
        if (end == v || *end != '\0')
            throw Error(ErrorCode::InvalidArgument, std::string("ABACUS_BUDGET is not a number: ") + v);
        b.enumeration = x;
    }
    return b;
}

int CartanData::alpha(int i, int j) const
{
    if (!e_.is_finite()) {
        if (i == j)
            return 2;
        return (i - j == 1 || j - i == 1) ? -1 : 0;
    }
    int e = e_.value();
    int d = floor_mod(j - i, e);
    if (d == 0)
        return 2;
    if (e == 2)
        return -2;
    return (d == 1 || d == e - 1) ? -1 : 0;
}

DominantWeight dominant_weight(const Multicharge& s, const QuantumChar& e)
{
    DominantWeight k;
    for (int x : s.values())
        ++k[e.residue(x)];
    return k;
}

BlockId block_id(const AbacusPair& a)
{
    return {a.e(), a.charge(), residue_content(a.multipartition(), a.charge(), a.e()), a.size()};
}

int pairing(const BlockId& b, int j)
{
    CartanData cd(b.e);
    j = b.e.residue(j);
    auto k = dominant_weight(b.multicharge, b.e);
    int v = k.count(j) ? k[j] : 0;
    for (const auto& [i, c] : b.content)
        v -= cd.alpha(j, i) * c;
    return v;
}

long long defect(const BlockId& b)
{
    CartanData cd(b.e);
    auto k = dominant_weight(b.multicharge, b.e);
    long long lam = 0, sq = 0;
    for (const auto& [i, c] : b.content)
        lam += static_cast<long long>(k.count(i) ? k[i] : 0) * c;
    for (const auto& [i, ci] : b.content)
        for (const auto& [j, cj] : b.content)
            sq += static_cast<long long>(cd.alpha(i, j)) * ci * cj;
    return lam - sq / 2;
}

ResidueContent reflect(const BlockId& b, int j)
{
    j = b.e.residue(j);
    ResidueContent out = b.content;
    int p = pairing(b, j);
    out[j] += p;
    if (out[j] == 0)
        out.erase(j);
    return out;
}

AbacusPair weyl_sigma(const AbacusPair& a, int j)
{
    const QuantumChar& e = a.e();
    int lo = a.low_col();
    int hi = a.high_col();
    int pad = e.is_finite() ? e.value() : 1;
    int floor = std::min(lo, j - 1) - pad;
    int top = std::max(hi, j) + pad;
    int rj = e.residue(j), rj1 = e.residue(j - 1);
    std::vector<RowBeads> rows;
    for (int x = 1; x <= a.rank(); ++x) {
        RowBeads rb{floor, {}};
        for (int c = floor; c <= top; ++c) {
            int src = c;
            if (e.residue(c) == rj1)
                src = c + 1;
            else if (e.residue(c) == rj)
                src = c - 1;
            if (has_bead(a, {x, src}))
                rb.beads.push_back(c);
        }
        rows.push_back(rb);
    }
    return pair_from_beads(rows, e);
}

std::pair<Multicharge, Permutation> normalize_multicharge(const Multicharge& s, const QuantumChar& e)
{
    int r = s.rank();
    std::vector<int> reduced;
    for (int x : s.values())
        reduced.push_back(e.residue(x));
    Permutation sigma = identity_permutation(r);
    std::stable_sort(sigma.begin(), sigma.end(), [&](int a, int b) { return reduced[a - 1] < reduced[b - 1]; });
    std::vector<int> out;
    for (int x : sigma)
        out.push_back(reduced[x - 1]);
    return {Multicharge(out), sigma};
}

namespace {

struct Candidate {
    Partition p;
    std::vector<int> counts;  // dense over the block's residues
};

}  // namespace

std::vector<Multipartition> enumerate_block_members(const BlockId& b, const Budget& budget)
{
    int r = b.multicharge.rank();
    auto estimate = count_multipartitions(r, b.n);
    if (estimate > budget.enumeration)
        throw Error(ErrorCode::Budget, "block enumeration would scan " + estimate.str() +
                                           " multipartitions, above the budget of " + std::to_string(budget.enumeration));
    if (content_total(b.content) != b.n)
        return {};
    std::vector<int> keys;
    std::vector<int> target;
    for (const auto& [f, c] : b.content) {
        keys.push_back(f);
        target.push_back(c);
    }
    auto index_of = [&](int f) -> int {
        auto it = std::lower_bound(keys.begin(), keys.end(), f);
        return (it != keys.end() && *it == f) ? static_cast<int>(it - keys.begin()) : -1;
    };

    // per component: partitions of each size whose residues fit inside the target
    std::vector<std::vector<std::vector<Candidate>>> table(r);
    for (int k = 1; k <= r; ++k) {
        table[k - 1].resize(b.n + 1);
        for (int size = 0; size <= b.n; ++size)
            for (const auto& p : partitions_of(size)) {
                Candidate cand{p, std::vector<int>(keys.size(), 0)};
                bool ok = true;
                for (int i = 1; i <= p.length() && ok; ++i)
                    for (int j = 1; j <= p.part(i) && ok; ++j) {
                        int idx = index_of(b.e.residue(j - i + b.multicharge[k]));
                        if (idx < 0 || ++cand.counts[idx] > target[idx])
                            ok = false;
                    }
                if (ok)
                    table[k - 1][size].push_back(std::move(cand));
            }
    }

    std::vector<Multipartition> out;
    std::vector<Partition> cur;
    std::vector<int> left = target;
    auto rec = [&](auto&& self, int slot, int nodes) -> void {
        if (slot == r) {
            if (nodes == 0)
                out.emplace_back(cur);
            return;
        }
        int lo = (slot == r - 1) ? nodes : 0;
        for (int size = lo; size <= nodes; ++size)
            for (const auto& cand : table[slot][size]) {
                bool ok = true;
                for (std::size_t i = 0; i < left.size(); ++i)
                    if (cand.counts[i] > left[i])
                        ok = false;
                if (!ok)
                    continue;
                for (std::size_t i = 0; i < left.size(); ++i)
                    left[i] -= cand.counts[i];
                cur.push_back(cand.p);
                self(self, slot + 1, nodes - size);
                cur.pop_back();
                for (std::size_t i = 0; i < left.size(); ++i)
                    left[i] += cand.counts[i];
            }
    };
    rec(rec, 0, b.n);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<int> reflection_indices(const BlockId& b)
{
    if (b.e.is_finite()) {
        std::vector<int> all(b.e.value());
        for (int j = 0; j < b.e.value(); ++j)
            all[j] = j;
        return all;
    }
    std::set<int> idx;
    for (int x : b.multicharge.values())
        idx.insert(x);
    for (const auto& [f, c] : b.content) {
        idx.insert(f - 1);
        idx.insert(f);
        idx.insert(f + 1);
    }
    return {idx.begin(), idx.end()};
}

}  // namespace

OrbitResult orbit_reachable(const BlockId& b1, const BlockId& b2, int depth)
{
    if (!(b1.e == b2.e))
        throw Error(ErrorCode::InvalidArgument, "blocks have different e");
    if (dominant_weight(b1.multicharge, b1.e) != dominant_weight(b2.multicharge, b2.e))
        throw Error(ErrorCode::InvalidArgument, "blocks have different dominant weights");
    std::map<ResidueContent, std::pair<ResidueContent, int>> parent;
    std::deque<std::pair<ResidueContent, int>> queue;
    parent[b1.content] = {b1.content, -1};
    queue.push_back({b1.content, 0});
    BlockId cur = b1;
    while (!queue.empty()) {
        auto [beta, d] = queue.front();
        queue.pop_front();
        if (beta == b2.content) {
            OrbitResult res{true, {}, depth};
            for (auto at = beta; parent[at].second >= 0; at = parent[at].first)
                res.word.push_back(parent[at].second);
            std::reverse(res.word.begin(), res.word.end());
            return res;
        }
        if (d == depth)
            continue;
        cur.content = beta;
        for (int j : reflection_indices(cur)) {
            if (pairing(cur, j) == 0)
                continue;
            auto next = reflect(cur, j);
            if (parent.count(next))
                continue;
            parent[next] = {beta, j};
            queue.push_back({next, d + 1});
        }
    }
    return {false, {}, depth};
}

}  // namespace akb
