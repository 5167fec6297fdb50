#include "akb/abacus.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace akb {

namespace {

const char* kBead = "●";
const char* kHole = "○";
const char* kLine = "¦";

void check_row(const AbacusPair& a, int row)
{
    if (row < 1 || row > a.rank())
        throw Error(ErrorCode::InvalidArgument, "row " + std::to_string(row) + " outside 1.." + std::to_string(a.rank()));
}

}  // namespace

Position normalize(Position p, int r, const QuantumChar& e)
{
    if (!e.is_finite())
        return p;
    int shift = floor_div(p.row - 1, r);
    p.row -= shift * r;
    p.col -= shift * e.value();
    return p;
}

AbacusPair::AbacusPair(Multipartition lambda, Multicharge s, QuantumChar e)
    : lambda_(std::move(lambda)), s_(std::move(s)), e_(e)
{
    if (lambda_.rank() != s_.rank())
        throw Error(ErrorCode::InvalidArgument, "multipartition has " + std::to_string(lambda_.rank()) +
                                                    " components but multicharge has " + std::to_string(s_.rank()));
}

int AbacusPair::low_col() const
{
    int lo = 0;
    for (int i = 1; i <= rank(); ++i) {
        int v = s_[i] - lambda_[i].length() - 1;
        lo = (i == 1) ? v : std::min(lo, v);
    }
    return lo;
}

int AbacusPair::high_col() const
{
    int hi = 0;
    for (int i = 1; i <= rank(); ++i) {
        int v = s_[i] + lambda_[i].part(1);
        hi = (i == 1) ? v : std::max(hi, v);
    }
    return hi;
}

std::vector<int> AbacusPair::row_beads(int row) const
{
    const Partition& p = lambda_[row];
    std::vector<int> out;
    int lo = low_col();
    for (int j = 1;; ++j) {
        int b = p.part(j) - j + s_[row];
        if (b <= lo)
            break;
        out.push_back(b);
    }
    return out;
}

RowBeads AbacusPair::row(int row, int floor) const
{
    RowBeads rb;
    rb.floor = floor;
    const Partition& p = lambda_[row];
    for (int j = 1;; ++j) {
        int b = p.part(j) - j + s_[row];
        if (b < floor)
            break;
        rb.beads.push_back(b);
    }
    std::reverse(rb.beads.begin(), rb.beads.end());
    return rb;
}

std::vector<RowBeads> AbacusPair::rows(int floor) const
{
    std::vector<RowBeads> out;
    for (int i = 1; i <= rank(); ++i)
        out.push_back(row(i, floor));
    return out;
}

bool has_bead(const AbacusPair& a, Position p)
{
    p = normalize(p, a.rank(), a.e());
    check_row(a, p.row);
    const Partition& part = a.multipartition()[p.row];
    int s = a.charge()[p.row];
    if (p.col <= s - part.length() - 1)
        return true;
    for (int k = 1; k <= part.length(); ++k)
        if (part.part(k) - k + s == p.col)
            return true;
    return false;
}

std::pair<Partition, int> partition_from_beads(const RowBeads& in)
{
    std::set<int> beads;
    for (int b : in.beads)
        if (b >= in.floor)
            beads.insert(b);
    int floor = in.floor;
    if (floor > 0) {
        for (int c = 0; c < floor; ++c)
            beads.insert(c);
        floor = 0;
    }
    int charge = 0;
    for (int b : beads)
        if (b >= 0)
            ++charge;
    int below = 0;
    for (int b : beads)
        if (b < 0)
            ++below;
    charge -= (0 - floor) - below;

    std::vector<int> parts;
    int seen = 0;  // explicit beads strictly below the current one
    std::vector<int> asc(beads.begin(), beads.end());
    std::vector<int> holes_left(asc.size());
    for (std::size_t k = 0; k < asc.size(); ++k) {
        holes_left[k] = (asc[k] - floor) - seen;
        ++seen;
    }
    for (std::size_t k = asc.size(); k-- > 0;) {
        if (holes_left[k] == 0)
            break;
        parts.push_back(holes_left[k]);
    }
    return {Partition(parts), charge};
}

AbacusPair pair_from_beads(const std::vector<RowBeads>& rows, const QuantumChar& e)
{
    if (rows.empty())
        throw Error(ErrorCode::InvalidArgument, "no rows given");
    std::vector<Partition> comps;
    std::vector<int> charges;
    for (const auto& rb : rows) {
        auto [p, s] = partition_from_beads(rb);
        comps.push_back(p);
        charges.push_back(s);
    }
    return AbacusPair(Multipartition(comps), Multicharge(charges), e);
}

int n_right(const AbacusPair& a, int row, int col)
{
    check_row(a, row);
    int n = 0;
    const Partition& p = a.multipartition()[row];
    int s = a.charge()[row];
    for (int j = 1; p.part(j) - j + s > col; ++j)
        ++n;
    return n;
}

int column_count(const AbacusPair& a, int col)
{
    int c = 0;
    for (int i = 1; i <= a.rank(); ++i)
        c += has_bead(a, {i, col}) ? 1 : 0;
    return c;
}

int subabacus_diff(const AbacusPair& a, int j)
{
    if (!a.e().is_finite())
        return column_count(a, j - 1) - column_count(a, j);
    int e = a.e().value();
    int lo = a.low_col() - e;
    int hi = a.high_col() + e;
    int total = 0;
    for (int c = lo; c <= hi; ++c)
        if (floor_mod(c - (j - 1), e) == 0)
            total += column_count(a, c) - column_count(a, c + 1);
    return total;
}

bool is_complete(const AbacusPair& a)
{
    int r = a.rank();
    for (int x = 1; x < r; ++x)
        for (int b : a.row_beads(x))
            if (!has_bead(a, {x + 1, b}))
                return false;
    if (a.e().is_finite()) {
        int e = a.e().value();
        for (int b : a.row_beads(r))
            if (!has_bead(a, {1, b - e}))
                return false;
    }
    return true;
}

AbacusPair dual(const AbacusPair& a)
{
    int r = a.rank();
    int lo = a.low_col();
    int hi = a.high_col();
    std::vector<RowBeads> rows;
    for (int i = 1; i <= r; ++i) {
        RowBeads rb;
        rb.floor = -hi;
        for (int h = -hi; h <= -lo - 1; ++h)
            if (!has_bead(a, {r - i + 1, -h - 1}))
                rb.beads.push_back(h);
        rows.push_back(rb);
    }
    return pair_from_beads(rows, a.e());
}

UglovImage uglov(const AbacusPair& a)
{
    if (!a.e().is_finite())
        throw Error(ErrorCode::Unsupported, "the Uglov map needs a finite e");
    int e = a.e().value();
    int r = a.rank();
    int F = e * floor_div(a.low_col(), e);
    int kf = F / e;
    RowBeads out;
    out.floor = kf * e * r;
    for (int x = 1; x <= r; ++x)
        for (int y = F; y < a.high_col(); ++y)
            if (has_bead(a, {x, y})) {
                int k = floor_div(y, e);
                int c = y - k * e;
                out.beads.push_back((r - x) * e + k * e * r + c);
            }
    auto [p, s] = partition_from_beads(out);
    return {p, s};
}

std::string render(const AbacusPair& a, int lo, int hi)
{
    std::ostringstream os;
    for (int i = a.rank(); i >= 1; --i) {
        bool first = true;
        for (int c = lo; c <= hi; ++c) {
            if (c == 0 && lo < 0) {
                os << (first ? "" : " ") << kLine;
                first = false;
            }
            os << (first ? "" : " ") << (has_bead(a, {i, c}) ? kBead : kHole);
            first = false;
        }
        if (i > 1)
            os << '\n';
    }
    return os.str();
}

std::string render(const AbacusPair& a)
{
    return render(a, std::min(a.low_col(), -1), std::max(a.high_col(), 0));
}

AbacusPair parse_render(const std::string& text, int lo, const QuantumChar& e)
{
    std::vector<std::string> lines;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);)
        if (!line.empty())
            lines.push_back(line);
    if (lines.empty())
        throw Error(ErrorCode::InvalidArgument, "empty rendering");
    std::vector<RowBeads> rows;
    for (auto it = lines.rbegin(); it != lines.rend(); ++it) {
        std::istringstream ls(*it);
        RowBeads rb;
        rb.floor = lo;
        int c = lo;
        for (std::string tok; ls >> tok;) {
            if (tok == kLine)
                continue;
            if (tok == kBead)
                rb.beads.push_back(c);
            else if (tok != kHole)
                throw Error(ErrorCode::InvalidArgument, "unknown glyph '" + tok + "' in rendering");
            ++c;
        }
        rows.push_back(rb);
    }
    return pair_from_beads(rows, e);
}

}  // namespace akb
