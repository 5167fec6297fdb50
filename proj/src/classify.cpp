#include "akb/classify.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace akb {

const char* to_string(Verdict v) { return v == Verdict::Finite ? "Finite" : "Infinite"; }

const char* to_string(Detail d)
{
    switch (d) {
    case Detail::None: return "None";
    case Detail::Simple: return "Simple";
    case Detail::TruncatedPoly: return "TruncatedPoly";
    case Detail::BrauerLine: return "BrauerLine";
    }
    return "?";
}

namespace {

void check_comparable_pair(const AbacusPair& a, const AbacusPair& b)
{
    if (a.rank() != b.rank())
        throw Error(ErrorCode::InvalidArgument, "abaci have different numbers of rows");
    if (a.charge() != b.charge())
        throw Error(ErrorCode::InvalidArgument, "abaci have different charges");
    if (a.size() != b.size())
        throw Error(ErrorCode::InvalidArgument, "abaci have different sizes");
}

std::pair<int, int> joint_window(const AbacusPair& a, const AbacusPair& b)
{
    return {std::min(a.low_col(), b.low_col()) - 1, std::max(a.high_col(), b.high_col()) + 1};
}

// bead sets over a window, with the wrap convention applied on lookup
class Grid {
public:
    explicit Grid(const AbacusPair& a, int pad)
        : r_(a.rank()), e_(a.e()), pad_(pad), floor_(a.low_col() - pad), top_(a.high_col() + pad), rows_(a.rank())
    {
        for (int x = 1; x <= r_; ++x)
            for (int b : a.row(x, floor_).beads)
                rows_[x - 1].insert(b);
    }

    std::optional<Position> pos(int row, int col) const
    {
        if (!e_.is_finite() && (row < 1 || row > r_))
            return std::nullopt;
        return normalize({row, col}, r_, e_);
    }
    bool has(Position p) const { return p.col < floor_ || rows_[p.row - 1].count(p.col) > 0; }
    std::optional<bool> has(int row, int col) const
    {
        auto p = pos(row, col);
        if (!p)
            return std::nullopt;
        return has(*p);
    }
    bool move(int r0, int c0, int r1, int c1)
    {
        auto src = pos(r0, c0), dst = pos(r1, c1);
        if (!src || !dst || !has(*src) || has(*dst) || src->col < floor_ || dst->col < floor_)
            return false;
        rows_[src->row - 1].erase(src->col);
        rows_[dst->row - 1].insert(dst->col);
        return true;
    }
    AbacusPair pair() const
    {
        std::vector<RowBeads> rows;
        for (const auto& s : rows_)
            rows.push_back(RowBeads{floor_, {s.begin(), s.end()}});
        return pair_from_beads(rows, e_);
    }
    int lo() const { return floor_; }
    int hi() const { return top_; }
    int r() const { return r_; }
    int pad() const { return pad_; }
    bool finite() const { return e_.is_finite(); }

    // columns where (row1) has a bead and (row2) is empty
    std::vector<int> bead_over_hole(int row1, int row2) const
    {
        std::vector<int> out;
        for (int c = lo(); c <= hi(); ++c) {
            auto a = has(row1, c), b = has(row2, c);
            if (a && b && *a && !*b)
                out.push_back(c);
        }
        return out;
    }

private:
    int r_;
    QuantumChar e_;
    int pad_;
    int floor_, top_;
    std::vector<std::set<int>> rows_;
};

struct Move {
    int r0, c0, r1, c1;
};

std::optional<AbacusPair> moved(const Grid& g, std::initializer_list<Move> moves)
{
    Grid copy = g;
    for (const auto& m : moves)
        if (!copy.move(m.r0, m.c0, m.r1, m.c1))
            return std::nullopt;
    return copy.pair();
}

std::optional<IncomparabilityWitness> make_witness(const AbacusPair& a, const AbacusPair& b, const WitnessCoords& w,
                                                   std::string source)
{
    IncomparabilityWitness out;
    out.charge = a.charge();
    out.mu = a.multipartition();
    out.nu = b.multipartition();
    out.coords = w;
    out.sigma = permutation_for_incomparability(a, b, w);
    out.source = std::move(source);
    return out;
}

std::optional<IncomparabilityWitness> verify(const AbacusPair& base, const std::optional<AbacusPair>& mu,
                                              const std::optional<AbacusPair>& nu, const std::string& source)
{
    if (!mu || !nu || mu->charge() != base.charge() || nu->charge() != base.charge())
        return std::nullopt;
    if (mu->multipartition() == nu->multipartition())
        return std::nullopt;
    auto cb = block_id(base);
    if (block_id(*mu) != cb || block_id(*nu) != cb)
        return std::nullopt;
    if (auto w = incomparable_abaci(*mu, *nu))
        return make_witness(*mu, *nu, *w, source);
    if (auto w = incomparable_abaci(*nu, *mu))
        return make_witness(*nu, *mu, *w, source);
    return std::nullopt;
}

using Candidate = std::pair<std::optional<AbacusPair>, std::optional<AbacusPair>>;

void two_runners_two_columns(const Grid& g, std::vector<std::pair<Candidate, std::string>>& out)
{
    int r = g.r();
    for (int j = 1; j <= r; ++j) {
        if (j == r && !g.finite())
            continue;
        auto down = g.bead_over_hole(j, j + 1);
        auto up = g.bead_over_hole(j + 1, j);
        if (down.size() < 2 || up.size() < 2)
            continue;
        int h1 = down[0], h2 = down[1];
        auto bar = moved(g, {{j, h1, j + 1, h1}, {j, h2, j + 1, h2}});
        if (!bar)
            continue;
        std::vector<int> l{h1, h2, up[0], up[1]};
        std::sort(l.begin(), l.end());
        Grid gb(*bar, g.pad());
        auto mu = moved(gb, {{j + 1, l[0], j, l[0]}, {j + 1, l[3], j, l[3]}});
        auto nu = moved(gb, {{j + 1, l[1], j, l[1]}, {j + 1, l[2], j, l[2]}});
        out.push_back({{mu, nu}, "two-runners-two-columns"});
    }
}

void four_runners(const Grid& g, std::vector<std::pair<Candidate, std::string>>& out)
{
    int r = g.r();
    for (int i = 1; i <= r; ++i)
        for (int j = i + 2; j <= r; ++j) {
            if (j == r && (i == 1 || !g.finite()))
                continue;
            auto di = g.bead_over_hole(i, i + 1), ui = g.bead_over_hole(i + 1, i);
            auto dj = g.bead_over_hole(j, j + 1), uj = g.bead_over_hole(j + 1, j);
            if (di.empty() || ui.empty() || dj.empty() || uj.empty())
                continue;
            int l = di[0], lp = ui[0], h = dj[0], hp = uj[0];
            auto bar = moved(g, {{i, l, i + 1, l}, {j, h, j + 1, h}});
            if (!bar)
                continue;
            int l1 = std::min(l, lp), l2 = std::max(l, lp);
            int h1 = std::min(h, hp), h2 = std::max(h, hp);
            Grid gb(*bar, g.pad());
            auto mu = moved(gb, {{i + 1, l2, i, l2}, {j + 1, h1, j, h1}});
            auto nu = moved(gb, {{i + 1, l1, i, l1}, {j + 1, h2, j, h2}});
            out.push_back({{mu, nu}, "four-runners"});
        }
}

void three_runners(const Grid& g, std::vector<std::pair<Candidate, std::string>>& out)
{
    int r = g.r();
    for (int i = 1; i <= r; ++i) {
        if (!g.finite() && i + 2 > r)
            continue;
        auto a1 = g.bead_over_hole(i, i + 1), a2 = g.bead_over_hole(i + 1, i);
        auto a3 = g.bead_over_hole(i + 1, i + 2), a4 = g.bead_over_hole(i + 2, i + 1);
        bool done = false;
        for (int l1 : a1)
            for (int l2 : a2)
                for (int l3 : a3)
                    for (int l4 : a4) {
                        if (done || l1 == l4 || l2 == l3)
                            continue;
                        auto bar = moved(g, {{i, l1, i + 1, l1}, {i + 1, l3, i + 2, l3}});
                        if (!bar)
                            continue;
                        int h1 = std::min(l1, l2), h2 = std::max(l1, l2);
                        int h3 = std::min(l3, l4), h4 = std::max(l3, l4);
                        Grid gb(*bar, g.pad());
                        auto mu = moved(gb, {{i + 1, h2, i, h2}, {i + 2, h3, i + 1, h3}});
                        auto nu = moved(gb, {{i + 1, h1, i, h1}, {i + 2, h4, i + 1, h4}});
                        out.push_back({{mu, nu}, "three-runners-three-columns"});
                        done = true;
                    }
    }
}

void four_rows_one_column(const Grid& g, std::vector<std::pair<Candidate, std::string>>& out)
{
    int r = g.r();
    for (int i1 = 1; i1 <= r; ++i1)
        for (int i2 = i1 + 1; i2 <= r; ++i2)
            for (int i3 = i2 + 1; i3 <= r; ++i3)
                for (int i4 = i3 + 1; i4 <= r; ++i4) {
                    auto d13 = g.bead_over_hole(i1, i3), d24 = g.bead_over_hole(i2, i4);
                    auto u13 = g.bead_over_hole(i3, i1), u24 = g.bead_over_hole(i4, i2);
                    std::vector<int> common;
                    std::set_intersection(d13.begin(), d13.end(), d24.begin(), d24.end(), std::back_inserter(common));
                    if (common.empty() || u13.empty() || u24.empty())
                        continue;
                    int h = common[0], h1 = u13[0], h2 = u24[0];
                    auto bar = moved(g, {{i1, h, i3, h}, {i2, h, i4, h}});
                    if (!bar)
                        continue;
                    int l1 = std::min(h, h1), l3 = std::max(h, h1);
                    int l2 = std::min(h, h2), l4 = std::max(h, h2);
                    Grid gb(*bar, g.pad());
                    auto mu = moved(gb, {{i3, l3, i1, l3}, {i4, l2, i2, l2}});
                    auto nu = moved(gb, {{i3, l1, i1, l1}, {i4, l4, i2, l4}});
                    out.push_back({{mu, nu}, "four-rows-one-column"});
                }
}

std::vector<std::pair<Candidate, std::string>> pattern_candidates(const AbacusPair& a)
{
    int pad = (a.e().is_finite() ? a.e().value() : 1) + 2;
    Grid g(a, pad);
    std::vector<std::pair<Candidate, std::string>> out;
    two_runners_two_columns(g, out);
    four_runners(g, out);
    three_runners(g, out);
    four_rows_one_column(g, out);
    return out;
}

std::optional<IncomparabilityWitness> brute_force(const AbacusPair& member, const Budget& budget)
{
    auto id = block_id(member);
    auto members = enumerate_block_members(id, budget);
    std::vector<AbacusPair> ab;
    for (const auto& m : members)
        ab.emplace_back(m, member.charge(), member.e());
    std::uint64_t comparisons = 0;
    for (std::size_t p = 0; p < ab.size(); ++p)
        for (std::size_t q = p + 1; q < ab.size(); ++q) {
            if (++comparisons > budget.comparisons)
                throw Error(ErrorCode::Budget, "witness search stopped after " + std::to_string(budget.comparisons) +
                                                   " pairwise comparisons");
            if (auto w = incomparable_abaci(ab[p], ab[q]))
                return make_witness(ab[p], ab[q], *w, "pairwise-scan");
            if (auto w = incomparable_abaci(ab[q], ab[p]))
                return make_witness(ab[q], ab[p], *w, "pairwise-scan");
        }
    return std::nullopt;
}

}  // namespace

std::optional<WitnessCoords> incomparable_abaci(const AbacusPair& a, const AbacusPair& b)
{
    check_comparable_pair(a, b);
    auto [lo, hi] = joint_window(a, b);
    int r = a.rank();
    std::vector<std::optional<int>> right(r + 1), left(r + 1);
    for (int x = 1; x <= r; ++x) {
        for (int c = hi; c >= lo; --c) {
            bool pa = has_bead(a, {x, c}), pb = has_bead(b, {x, c});
            if (pa != pb) {
                if (pa)
                    right[x] = c;
                break;
            }
        }
        for (int c = lo; c <= hi; ++c) {
            bool pa = has_bead(a, {x, c}), pb = has_bead(b, {x, c});
            if (pa != pb) {
                if (pb)
                    left[x] = c;
                break;
            }
        }
    }
    for (int k1 = 1; k1 <= r; ++k1)
        for (int k2 = 1; k2 <= r; ++k2)
            if (k1 != k2 && right[k1] && left[k2])
                return WitnessCoords{k1, *right[k1], k2, *left[k2]};
    return std::nullopt;
}

bool satisfies_incomparable(const AbacusPair& a, const AbacusPair& b, const WitnessCoords& w)
{
    check_comparable_pair(a, b);
    int r = a.rank();
    if (w.kappa1 == w.kappa2 || w.kappa1 < 1 || w.kappa1 > r || w.kappa2 < 1 || w.kappa2 > r)
        return false;
    if (!has_bead(a, {w.kappa1, w.iota1}) || has_bead(a, {w.kappa2, w.iota2}))
        return false;
    if (has_bead(b, {w.kappa1, w.iota1}) || !has_bead(b, {w.kappa2, w.iota2}))
        return false;
    auto [lo, hi] = joint_window(a, b);
    for (int c = w.iota1 + 1; c <= hi; ++c)
        if (has_bead(a, {w.kappa1, c}) != has_bead(b, {w.kappa1, c}))
            return false;
    for (int c = std::min(lo, w.iota2); c < w.iota2; ++c)
        if (has_bead(a, {w.kappa2, c}) != has_bead(b, {w.kappa2, c}))
            return false;
    return true;
}

Permutation permutation_for_incomparability(const AbacusPair& a, const AbacusPair& b, const WitnessCoords& w)
{
    if (!satisfies_incomparable(a, b, w))
        throw Error(ErrorCode::Precondition, "coordinates do not witness incomparability");
    int r = a.rank();
    Permutation sigma{w.kappa1};
    for (int x = 1; x <= r; ++x)
        if (x != w.kappa1 && x != w.kappa2)
            sigma.push_back(x);
    sigma.push_back(w.kappa2);
    if (dominance_compare(permute(a.multipartition(), sigma), permute(b.multipartition(), sigma)) !=
        DominanceRel::Incomparable)
        throw Error(ErrorCode::Internal, "permuted multipartitions are comparable; incomparability model is broken");
    return sigma;
}

std::optional<IncomparabilityWitness> construct_incomparable_pair(const AbacusPair& member)
{
    for (auto& [cand, name] : pattern_candidates(member))
        if (auto w = verify(member, cand.first, cand.second, name))
            return w;
    AbacusPair d = dual(member);
    for (auto& [cand, name] : pattern_candidates(d)) {
        std::optional<AbacusPair> mu, nu;
        if (cand.first)
            mu = dual(*cand.first);
        if (cand.second)
            nu = dual(*cand.second);
        if (auto w = verify(member, mu, nu, name + "-dual"))
            return w;
    }
    return std::nullopt;
}

std::optional<IncomparabilityWitness> find_incomparable_pair(const AbacusPair& member, const Budget& budget)
{
    if (auto w = construct_incomparable_pair(member))
        return w;
    return brute_force(member, budget);
}

std::optional<IncomparabilityWitness> find_incomparable_pair(const BlockId& b, const Budget& budget)
{
    auto members = enumerate_block_members(b, budget);
    if (members.empty())
        return std::nullopt;
    return find_incomparable_pair(AbacusPair(members.front(), b.multicharge, b.e), budget);
}

std::pair<MovingVector, AbacusPair> block_moving_vector(const AbacusPair& p)
{
    if (!p.charge().in_Abar(p.e()))
        throw Error(ErrorCode::Precondition,
                    "multicharge " + to_string(p.charge().values()) + " is not sorted with spread at most e; normalize it first");
    auto c = core(p);
    return {c.moving_vector, c.core};
}

ReprTypeReport repr_type(const AbacusPair& p, const Budget& budget, bool search_witness)
{
    ReprTypeReport rep;
    auto [charge, sigma] = normalize_multicharge(p.charge(), p.e());
    rep.normalized_charge = charge;
    rep.normalization = sigma;
    rep.normalized_multipartition = permute(p.multipartition(), sigma);
    AbacusPair q(rep.normalized_multipartition, charge, p.e());
    rep.block_moving_vector = block_moving_vector(q).first;
    const MovingVector& m = rep.block_moving_vector;
    int w = total(m);
    int r = p.rank();
    rep.weight = w;

    bool finite = false;
    if (w == 0) {
        finite = true;
        rep.detail = Detail::Simple;
    } else if (w == 1) {
        finite = true;
        rep.detail = Detail::BrauerLine;
        if (r >= 3) {
            int j = static_cast<int>(std::find(m.begin(), m.end(), 1) - m.begin()) + 1;
            int a = (j < r) ? charge[j + 1] - charge[j] : charge[1] + p.e().value() - charge[r];
            rep.edges = a + 1;
        } else {
            try {
                rep.edges = static_cast<int>(enumerate_block_members(block_id(q), budget).size()) - 1;
            } catch (const Error& err) {
                if (err.code() != ErrorCode::Budget)
                    throw;
            }
        }
    } else if (r >= 3 && m[r - 1] == 0) {
        int j = static_cast<int>(std::find_if(m.begin(), m.end(), [](int x) { return x != 0; }) - m.begin()) + 1;
        bool run = j + w - 1 <= r;
        for (int i = 1; i <= r && run; ++i) {
            bool inside = i >= j && i <= j + w - 1;
            if (m[i - 1] != (inside ? 1 : 0))
                run = false;
        }
        for (int i = j; run && i < j + w; ++i)
            if (charge[i] != charge[i + 1])
                run = false;
        if (run) {
            finite = true;
            rep.detail = Detail::TruncatedPoly;
            rep.degree = w + 1;
        }
    }
    rep.verdict = finite ? Verdict::Finite : Verdict::Infinite;
    if (!finite && search_witness) {
        try {
            rep.witness = find_incomparable_pair(q, budget);
        } catch (const Error& err) {
            if (err.code() != ErrorCode::Budget)
                throw;
            rep.witness_budget_exhausted = true;
        }
    }
    return rep;
}

Verdict schur_repr_type(const ReprTypeReport& rep)
{
    if (rep.weight > 2)
        return Verdict::Infinite;
    if (rep.weight < 2)
        return Verdict::Finite;
    return rep.verdict;
}

SubabacusMV member_subabacus_vector(const AbacusPair& p)
{
    TOrder order(p.rank(), p.e());
    SubabacusMV w;
    for (const auto& op : core(p).ops.ops)
        ++w[order.subabacus(op.source)];
    return w;
}

SubabacusMV subabacus_moving_vector(const BlockId& b, const Budget& budget)
{
    SubabacusMV total_w;
    if (b.e.is_finite())
        for (int c = 0; c < b.e.value(); ++c)
            total_w[c] = 0;
    for (const auto& m : enumerate_block_members(b, budget))
        for (const auto& [k, v] : member_subabacus_vector(AbacusPair(m, b.multicharge, b.e)))
            total_w[k] += v;
    return total_w;
}

int nonzero_components(const SubabacusMV& w)
{
    return static_cast<int>(std::count_if(w.begin(), w.end(), [](const auto& kv) { return kv.second != 0; }));
}

bool derived_equivalent_weight1(const BlockId& b1, const BlockId& b2, const Budget& budget)
{
    if (defect(b1) != 1 || defect(b2) != 1)
        throw Error(ErrorCode::Precondition, "both blocks must have weight one");
    return nonzero_components(subabacus_moving_vector(b1, budget)) ==
           nonzero_components(subabacus_moving_vector(b2, budget));
}

}  // namespace akb
