#include "akb/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace akb {

using boost::multiprecision::cpp_int;

const char* Error::code_name() const noexcept
{
    switch (code_) {
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::Precondition: return "precondition";
    case ErrorCode::Unsupported: return "unsupported";
    case ErrorCode::Budget: return "budget_exceeded";
    case ErrorCode::Internal: return "internal";
    }
    return "unknown";
}

QuantumChar QuantumChar::finite(int e)
{
    if (e < 2)
        throw Error(ErrorCode::InvalidArgument, "quantum characteristic must be >= 2, got " + std::to_string(e));
    QuantumChar q;
    q.e_ = e;
    return q;
}

int QuantumChar::value() const
{
    if (!e_)
        throw Error(ErrorCode::Unsupported, "e is infinite");
    return *e_;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0)
        parts_.pop_back();
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] < 1)
            throw Error(ErrorCode::InvalidArgument, "partition parts must be positive");
        if (k > 0 && parts_[k] > parts_[k - 1])
            throw Error(ErrorCode::InvalidArgument, "partition parts must be weakly decreasing");
    }
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Multipartition::Multipartition(std::vector<Partition> components) : comps_(std::move(components))
{
    if (comps_.empty())
        throw Error(ErrorCode::InvalidArgument, "a multipartition needs at least one component");
}

int Multipartition::size() const noexcept
{
    int n = 0;
    for (const auto& p : comps_)
        n += p.size();
    return n;
}

int Multicharge::sum() const noexcept { return std::accumulate(s_.begin(), s_.end(), 0); }

bool Multicharge::in_A(const QuantumChar& e) const
{
    for (std::size_t i = 0; i + 1 < s_.size(); ++i)
        if (s_[i] > s_[i + 1])
            return false;
    if (!e.is_finite() || s_.empty())
        return true;
    return s_.back() - s_.front() < e.value();
}

bool Multicharge::in_Abar(const QuantumChar& e) const
{
    for (std::size_t i = 0; i + 1 < s_.size(); ++i)
        if (s_[i] > s_[i + 1])
            return false;
    if (!e.is_finite() || s_.empty())
        return true;
    return s_.back() - s_.front() <= e.value();
}

const char* to_string(DominanceRel rel)
{
    switch (rel) {
    case DominanceRel::Greater: return "Greater";
    case DominanceRel::Less: return "Less";
    case DominanceRel::Equal: return "Equal";
    case DominanceRel::Incomparable: return "Incomparable";
    }
    return "?";
}

Partition conjugate(const Partition& p)
{
    std::vector<int> out;
    if (p.empty())
        return {};
    for (int j = 1; j <= p.part(1); ++j) {
        int c = 0;
        while (c < p.length() && p.parts()[c] >= j)
            ++c;
        out.push_back(c);
    }
    return Partition(out);
}

Multipartition conjugate_multi(const Multipartition& m)
{
    std::vector<Partition> out;
    for (int i = m.rank(); i >= 1; --i)
        out.push_back(conjugate(m[i]));
    return Multipartition(out);
}

bool is_permutation(const Permutation& sigma, int r)
{
    if (static_cast<int>(sigma.size()) != r)
        return false;
    std::vector<bool> seen(r + 1, false);
    for (int x : sigma) {
        if (x < 1 || x > r || seen[x])
            return false;
        seen[x] = true;
    }
    return true;
}

Permutation identity_permutation(int r)
{
    Permutation p(r);
    std::iota(p.begin(), p.end(), 1);
    return p;
}

Permutation inverse(const Permutation& sigma)
{
    if (!is_permutation(sigma, static_cast<int>(sigma.size())))
        throw Error(ErrorCode::InvalidArgument, "not a permutation: " + to_string(sigma));
    Permutation inv(sigma.size());
    for (std::size_t i = 0; i < sigma.size(); ++i)
        inv[sigma[i] - 1] = static_cast<int>(i) + 1;
    return inv;
}

Multipartition permute(const Multipartition& m, const Permutation& sigma)
{
    if (!is_permutation(sigma, m.rank()))
        throw Error(ErrorCode::InvalidArgument, "invalid permutation " + to_string(sigma));
    std::vector<Partition> out;
    for (int x : sigma)
        out.push_back(m[x]);
    return Multipartition(out);
}

Multicharge permute_charge(const Multicharge& s, const Permutation& sigma)
{
    if (!is_permutation(sigma, s.rank()))
        throw Error(ErrorCode::InvalidArgument, "invalid permutation " + to_string(sigma));
    std::vector<int> out;
    for (int x : sigma)
        out.push_back(s[x]);
    return Multicharge(out);
}

namespace {

std::vector<int> cumulative_profile(const Multipartition& m, int width)
{
    std::vector<int> out;
    int base = 0;
    for (const auto& p : m.components()) {
        int acc = base;
        for (int j = 1; j <= width; ++j) {
            acc += p.part(j);
            out.push_back(acc);
        }
        base += p.size();
    }
    return out;
}

}  // namespace

DominanceRel dominance_compare(const Multipartition& a, const Multipartition& b)
{
    if (a.rank() != b.rank())
        throw Error(ErrorCode::InvalidArgument, "dominance: different number of components");
    if (a.size() != b.size())
        throw Error(ErrorCode::InvalidArgument, "dominance: different sizes");
    if (a == b)
        return DominanceRel::Equal;
    int width = 0;
    for (int i = 1; i <= a.rank(); ++i)
        width = std::max({width, a[i].length(), b[i].length()});
    auto pa = cumulative_profile(a, width);
    auto pb = cumulative_profile(b, width);
    bool ge = true, le = true;
    for (std::size_t k = 0; k < pa.size(); ++k) {
        if (pa[k] < pb[k])
            ge = false;
        if (pa[k] > pb[k])
            le = false;
    }
    if (ge)
        return DominanceRel::Greater;
    if (le)
        return DominanceRel::Less;
    return DominanceRel::Incomparable;
}

ResidueContent residue_content(const Multipartition& m, const Multicharge& s, const QuantumChar& e)
{
    if (m.rank() != s.rank())
        throw Error(ErrorCode::InvalidArgument, "multipartition and multicharge have different lengths");
    ResidueContent out;
    for (int k = 1; k <= m.rank(); ++k) {
        const auto& p = m[k];
        for (int i = 1; i <= p.length(); ++i)
            for (int j = 1; j <= p.part(i); ++j)
                ++out[e.residue(j - i + s[k])];
    }
    return out;
}

int content_total(const ResidueContent& c)
{
    int n = 0;
    for (const auto& [f, k] : c)
        n += k;
    return n;
}

cpp_int count_standard_tableaux(const Multipartition& m)
{
    auto factorial = [](int n) {
        cpp_int f = 1;
        for (int i = 2; i <= n; ++i)
            f *= i;
        return f;
    };
    cpp_int result = factorial(m.size());
    for (const auto& p : m.components()) {
        Partition c = conjugate(p);
        for (int i = 1; i <= p.length(); ++i)
            for (int j = 1; j <= p.part(i); ++j)
                result /= (p.part(i) - j) + (c.part(j) - i) + 1;
    }
    return result;
}

std::vector<Partition> partitions_of(int n)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int left, int maxpart) -> void {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(left, maxpart); k >= 1; --k) {
            cur.push_back(k);
            self(self, left - k, k);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Multipartition> multipartitions_of(int r, int n)
{
    std::vector<std::vector<Partition>> table;
    for (int k = 0; k <= n; ++k)
        table.push_back(partitions_of(k));
    std::vector<Multipartition> out;
    std::vector<Partition> cur;
    auto rec = [&](auto&& self, int slot, int left) -> void {
        if (slot == r) {
            if (left == 0)
                out.emplace_back(cur);
            return;
        }
        int lo = (slot == r - 1) ? left : 0;
        for (int k = lo; k <= left; ++k)
            for (const auto& p : table[k]) {
                cur.push_back(p);
                self(self, slot + 1, left - k);
                cur.pop_back();
            }
    };
    rec(rec, 0, n);
    std::sort(out.begin(), out.end());
    return out;
}

cpp_int count_multipartitions(int r, int n)
{
    std::vector<cpp_int> p(n + 1, 0);
    p[0] = 1;
    for (int k = 1; k <= n; ++k)
        for (int m = k; m <= n; ++m)
            p[m] += p[m - k];
    std::vector<cpp_int> acc(n + 1, 0);
    acc[0] = 1;
    for (int i = 0; i < r; ++i) {
        std::vector<cpp_int> next(n + 1, 0);
        for (int a = 0; a <= n; ++a)
            for (int b = 0; a + b <= n; ++b)
                next[a + b] += acc[a] * p[b];
        acc = std::move(next);
    }
    return acc[n];
}

std::string to_string(const std::vector<int>& v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? "," : "") << v[i];
    os << ')';
    return os.str();
}

std::string to_string(const Partition& p)
{
    return p.empty() ? std::string("()") : to_string(p.parts());
}

std::string to_string(const Multipartition& m)
{
    std::string out = "(";
    for (int i = 1; i <= m.rank(); ++i)
        out += (i > 1 ? "," : "") + to_string(m[i]);
    return out + ")";
}

}  // namespace akb
