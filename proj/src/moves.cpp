#include "akb/moves.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "runners.hpp"

namespace akb {

int total(const MovingVector& m) { return std::accumulate(m.begin(), m.end(), 0); }

int TOrder::subabacus(Position p) const
{
    p = normalize(p, r_, e_);
    return e_.is_finite() ? floor_mod(p.col, e_.value()) : p.col;
}

int TOrder::t(Position p) const
{
    p = normalize(p, r_, e_);
    if (!e_.is_finite())
        return r_ - p.row;
    return floor_div(p.col, e_.value()) * r_ + (r_ - p.row);
}

Position TOrder::at(int subabacus, int t) const
{
    if (!e_.is_finite()) {
        if (t < 0 || t >= r_)
            throw Error(ErrorCode::InvalidArgument, "t outside a column for infinite e");
        return {r_ - t, subabacus};
    }
    int k = floor_div(t, r_);
    int x = r_ - (t - k * r_);
    return {x, k * e_.value() + subabacus};
}

namespace detail {

int runner_floor(const AbacusPair& a)
{
    int lo = a.low_col();
    return a.e().is_finite() ? a.e().value() * floor_div(lo, a.e().value()) : lo;
}

std::map<int, Runner> runners(const AbacusPair& a, int floor_col)
{
    TOrder order(a.rank(), a.e());
    std::map<int, Runner> out;
    int base_t = 0;
    if (a.e().is_finite()) {
        int e = a.e().value();
        base_t = (floor_col / e) * a.rank();
        for (int c = 0; c < e; ++c)
            out[c] = Runner{c, base_t, {}};
    } else {
        for (int c = floor_col; c < a.high_col(); ++c)
            out[c] = Runner{c, 0, {}};
    }
    for (int x = 1; x <= a.rank(); ++x)
        for (int y : a.row(x, floor_col).beads) {
            Position p{x, y};
            out[order.subabacus(p)].t.push_back(order.t(p));
        }
    for (auto& [key, run] : out) {
        std::sort(run.t.rbegin(), run.t.rend());
        run.key = key;
    }
    return out;
}

AbacusPair from_runners(const std::map<int, Runner>& runs, int floor_col, int r, const QuantumChar& e)
{
    TOrder order(r, e);
    std::vector<RowBeads> rows(r, RowBeads{floor_col, {}});
    for (const auto& [key, run] : runs)
        for (int t : run.t) {
            Position p = order.at(key, t);
            rows[p.row - 1].beads.push_back(p.col);
        }
    return pair_from_beads(rows, e);
}

}  // namespace detail

using detail::Runner;

ElementaryOp make_op(Position source, int r, const QuantumChar& e, int bead_index)
{
    source = normalize(source, r, e);
    if (source.row < 1 || source.row > r)
        throw Error(ErrorCode::InvalidArgument, "operation row outside 1..r");
    ElementaryOp op;
    op.source = source;
    op.bead_index = bead_index;
    op.kind = source.row < r ? OpKind::First : OpKind::Second;
    if (op.kind == OpKind::Second && !e.is_finite())
        throw Error(ErrorCode::InvalidArgument, "no operation leaves row r when e is infinite");
    return op;
}

Position op_target(const ElementaryOp& op, int r, const QuantumChar& e)
{
    if (op.source.row < r)
        return {op.source.row + 1, op.source.col};
    if (!e.is_finite())
        throw Error(ErrorCode::InvalidArgument, "no operation leaves row r when e is infinite");
    return {1, op.source.col - e.value()};
}

void sort_canonical(OperationSet& set, int r, const QuantumChar& e)
{
    TOrder order(r, e);
    std::sort(set.ops.begin(), set.ops.end(), [&](const ElementaryOp& a, const ElementaryOp& b) {
        auto ka = std::make_tuple(order.subabacus(a.source), a.bead_index, order.t(a.source));
        auto kb = std::make_tuple(order.subabacus(b.source), b.bead_index, order.t(b.source));
        return ka < kb;
    });
}

MovingVector tally(const OperationSet& set, int r)
{
    MovingVector m(r, 0);
    for (const auto& op : set.ops)
        ++m.at(op.source.row - 1);
    return m;
}

AbacusPair apply_op(const AbacusPair& a, const ElementaryOp& op)
{
    int r = a.rank();
    Position src = normalize(op.source, r, a.e());
    ElementaryOp checked = make_op(src, r, a.e(), op.bead_index);
    Position dst = op_target(checked, r, a.e());
    auto where = [](Position p) { return "(" + std::to_string(p.row) + "," + std::to_string(p.col) + ")"; };
    if (!has_bead(a, src))
        throw Error(ErrorCode::Precondition, "no bead at " + where(src));
    if (has_bead(a, dst))
        throw Error(ErrorCode::Precondition, "target " + where(dst) + " is occupied");
    if (op.bead_index > 0) {
        TOrder order(r, a.e());
        int floor = std::min(detail::runner_floor(a), dst.col);
        if (a.e().is_finite())
            floor = a.e().value() * floor_div(floor, a.e().value());
        auto runs = detail::runners(a, floor);
        const auto& t = runs.at(order.subabacus(src)).t;
        int idx = static_cast<int>(std::find(t.begin(), t.end(), order.t(src)) - t.begin()) + 1;
        if (idx != op.bead_index)
            throw Error(ErrorCode::Precondition, "bead at " + where(src) + " has index " + std::to_string(idx) +
                                                     ", not " + std::to_string(op.bead_index));
    }
    int floor = std::min(a.low_col(), dst.col) - 1;
    auto rows = a.rows(floor);
    auto& from = rows[src.row - 1].beads;
    from.erase(std::find(from.begin(), from.end(), src.col));
    rows[dst.row - 1].beads.push_back(dst.col);
    return pair_from_beads(rows, a.e());
}

namespace {

// ops moving bead `index` of runner `key` from t_from down to t_to
void add_path(OperationSet& set, const TOrder& order, int key, int index, int t_from, int t_to)
{
    for (int t = t_from; t > t_to; --t)
        set.ops.push_back(make_op(order.at(key, t), order.r(), order.e(), index));
}

}  // namespace

CoreResult core(const AbacusPair& a)
{
    int r = a.rank();
    TOrder order(r, a.e());
    int floor = detail::runner_floor(a);
    auto runs = detail::runners(a, floor);
    OperationSet set;
    for (auto& [key, run] : runs) {
        int n = static_cast<int>(run.t.size());
        for (int x = 1; x <= n; ++x) {
            int target = run.floor_t + n - x;
            add_path(set, order, key, x, run.t[x - 1], target);
            run.t[x - 1] = target;
        }
    }
    sort_canonical(set, r, a.e());
    AbacusPair c = detail::from_runners(runs, floor, r, a.e());
    MovingVector m = tally(set, r);
    return {c, set, m};
}

OperationSet operations_between(const AbacusPair& a, const AbacusPair& b)
{
    if (a.rank() != b.rank() || !(a.e() == b.e()))
        throw Error(ErrorCode::InvalidArgument, "abaci differ in r or e");
    int r = a.rank();
    TOrder order(r, a.e());
    int floor = std::min(detail::runner_floor(a), detail::runner_floor(b));
    auto ra = detail::runners(a, floor);
    auto rb = detail::runners(b, floor);
    std::set<int> keys;
    for (const auto& kv : ra)
        keys.insert(kv.first);
    for (const auto& kv : rb)
        keys.insert(kv.first);
    OperationSet set;
    for (int key : keys) {
        std::vector<int> ta = ra.count(key) ? ra[key].t : std::vector<int>{};
        std::vector<int> tb = rb.count(key) ? rb[key].t : std::vector<int>{};
        if (ta.size() != tb.size())
            throw Error(ErrorCode::Precondition, "target unreachable: subabacus " + std::to_string(key) + " holds " +
                                                     std::to_string(ta.size()) + " beads in the source and " +
                                                     std::to_string(tb.size()) + " in the target");
        for (std::size_t x = 0; x < ta.size(); ++x) {
            if (tb[x] > ta[x])
                throw Error(ErrorCode::Precondition, "target unreachable: bead " + std::to_string(x + 1) +
                                                         " of subabacus " + std::to_string(key) + " would move forward");
            add_path(set, order, key, static_cast<int>(x) + 1, ta[x], tb[x]);
        }
    }
    sort_canonical(set, r, a.e());
    return set;
}

MovingVector moving_vector_between(const AbacusPair& a, const AbacusPair& b)
{
    return tally(operations_between(a, b), a.rank());
}

AbacusPair remove_rim_hook(const AbacusPair& a, int row, int col)
{
    if (!a.e().is_finite())
        throw Error(ErrorCode::Unsupported, "rim hooks need a finite e");
    if (row < 1 || row > a.rank())
        throw Error(ErrorCode::InvalidArgument, "row outside 1..r");
    int e = a.e().value();
    if (!has_bead(a, {row, col + e}))
        throw Error(ErrorCode::Precondition, "no bead at (" + std::to_string(row) + "," + std::to_string(col + e) + ")");
    if (has_bead(a, {row, col}))
        throw Error(ErrorCode::Precondition, "position (" + std::to_string(row) + "," + std::to_string(col) + ") is occupied");
    int floor = std::min(a.low_col(), col) - 1;
    auto rows = a.rows(floor);
    auto& b = rows[row - 1].beads;
    *std::find(b.begin(), b.end(), col + e) = col;
    return pair_from_beads(rows, a.e());
}

AbacusPair rotate_rows(const AbacusPair& a, int i)
{
    if (!a.e().is_finite())
        throw Error(ErrorCode::Unsupported, "row rotation needs a finite e");
    int r = a.rank();
    if (i < 0 || i >= r)
        throw Error(ErrorCode::InvalidArgument, "rotation must lie in 0..r-1");
    int e = a.e().value();
    std::vector<Partition> comps;
    std::vector<int> charges;
    for (int j = 1; j <= r; ++j) {
        if (j <= r - i) {
            comps.push_back(a.multipartition()[i + j]);
            charges.push_back(a.charge()[i + j]);
        } else {
            comps.push_back(a.multipartition()[i + j - r]);
            charges.push_back(a.charge()[i + j - r] + e);
        }
    }
    return AbacusPair(Multipartition(comps), Multicharge(charges), a.e());
}

namespace {

bool sorted_within(const std::vector<int>& s, const QuantumChar& e)
{
    return Multicharge(s).in_Abar(e);
}

std::vector<int> tail(const std::vector<int>& v) { return std::vector<int>(v.begin() + 1, v.end()); }

// move the first `count` beads of `row` (0-based) of `rows` straight down to row 0
void drop_to_first_row(std::vector<RowBeads>& rows, int row, int count)
{
    auto& src = rows[row].beads;
    std::sort(src.rbegin(), src.rend());
    for (int k = 0; k < count; ++k) {
        rows[0].beads.push_back(src.front());
        src.erase(src.begin());
    }
}

std::vector<RowBeads> empty_rows(const std::vector<int>& charges)
{
    int floor = *std::min_element(charges.begin(), charges.end());
    std::vector<RowBeads> rows;
    for (int c : charges) {
        RowBeads rb{floor, {}};
        for (int y = floor; y < c; ++y)
            rb.beads.push_back(y);
        rows.push_back(rb);
    }
    return rows;
}

std::vector<Partition> special_construction(const std::vector<int>& s, const std::vector<int>& star,
                                            const std::vector<int>& m, const QuantumChar& e)
{
    int k = static_cast<int>(s.size());
    if (std::all_of(m.begin(), m.end(), [](int x) { return x == 0; })) {
        if (s != star)
            throw Error(ErrorCode::Internal, "construction reached a zero vector with unequal charges");
        return std::vector<Partition>(k);
    }
    if (k == 1)
        throw Error(ErrorCode::Internal, "construction reached one row with a nonzero vector");
    if (k == 2) {
        auto rows = empty_rows(star);
        drop_to_first_row(rows, 1, m[0]);
        auto out = pair_from_beads(rows, e);
        if (out.charge().values() != s)
            throw Error(ErrorCode::Internal, "two-row construction produced the wrong charge");
        return out.multipartition().components();
    }
    int j = 0;
    while (star[j] < s[0])
        ++j;
    if (j == 0) {
        auto nu = special_construction(tail(s), tail(star), tail(m), e);
        nu.insert(nu.begin(), Partition());
        return nu;
    }
    auto rows = empty_rows(star);
    for (int i = 1; i < j; ++i)
        drop_to_first_row(rows, i, star[i] - star[i - 1]);
    drop_to_first_row(rows, j, m[0] - star[j - 1] + star[0]);
    auto mid = pair_from_beads(rows, e);
    std::vector<int> u = mid.charge().values();
    std::vector<int> m2(m);
    for (int i = 0; i < j; ++i)
        m2[i] -= m[0] - (star[i] - star[0]);
    if (m2[0] != 0 || std::any_of(m2.begin(), m2.end(), [](int x) { return x < 0; }))
        throw Error(ErrorCode::Internal, "construction split produced an invalid remainder");
    auto nu = special_construction(tail(s), tail(u), tail(m2), e);
    nu.insert(nu.begin(), mid.multipartition()[1]);
    return nu;
}

}  // namespace

Multipartition construct_from_vector(const Multicharge& s, const Multicharge& s_star, const MovingVector& m,
                                     const QuantumChar& e)
{
    int r = s.rank();
    if (s_star.rank() != r || static_cast<int>(m.size()) != r)
        throw Error(ErrorCode::InvalidArgument, "charges and moving vector differ in length");
    if (!s.in_Abar(e) || !s_star.in_Abar(e))
        throw Error(ErrorCode::Precondition, "both charges must be sorted with spread at most e");
    for (int i = 1; i <= r; ++i) {
        if (m[i - 1] < 0)
            throw Error(ErrorCode::Precondition, "moving vector entries must be non-negative");
        int prev = m[(i + r - 2) % r];
        if (s_star[i] != s[i] - m[i - 1] + prev)
            throw Error(ErrorCode::Precondition, "s*_" + std::to_string(i) + " must equal s_i - m_i + m_(i-1)");
    }
    int i = static_cast<int>(std::min_element(m.begin(), m.end()) - m.begin()) + 1;
    if (!e.is_finite()) {
        if (m[r - 1] != 0)
            throw Error(ErrorCode::Precondition, "m_r must vanish when e is infinite");
        i = r;
    }
    int mi = m[i - 1];
    int shift = e.is_finite() ? e.value() : 0;
    std::vector<int> s1, star1, m1;
    for (int j = i + 1; j <= r; ++j) {
        s1.push_back(s[j] - shift);
        star1.push_back(s_star[j] - shift);
        m1.push_back(m[j - 1] - mi);
    }
    for (int j = 1; j <= i; ++j) {
        s1.push_back(s[j]);
        star1.push_back(s_star[j]);
        m1.push_back(j < i ? m[j - 1] - mi : 0);
    }
    if (!sorted_within(s1, e) || !sorted_within(star1, e))
        throw Error(ErrorCode::Internal, "rotated charges left the closed alcove");
    auto bar = special_construction(s1, star1, m1, e);
    if (mi > 0) {
        std::vector<int> parts = bar[0].parts();
        if (parts.empty())
            parts.push_back(0);
        parts[0] += mi * shift;
        bar[0] = Partition(parts);
    }
    std::vector<Partition> out;
    for (int j = r - i + 1; j <= r; ++j)
        out.push_back(bar[j - 1]);
    for (int j = 1; j <= r - i; ++j)
        out.push_back(bar[j - 1]);
    return Multipartition(out);
}

}  // namespace akb
