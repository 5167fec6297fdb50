#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace akb {

enum class ErrorCode { InvalidArgument, Precondition, Unsupported, Budget, Internal };

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }
    const char* code_name() const noexcept;

private:
    ErrorCode code_;
};

inline int floor_div(int a, int b)
{
    int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

inline int floor_mod(int a, int b) { return a - b * floor_div(a, b); }

// e >= 2, or infinity (residues are then plain integers)
class QuantumChar {
public:
    static QuantumChar finite(int e);
    static QuantumChar infinity() { return QuantumChar(); }

    bool is_finite() const noexcept { return e_.has_value(); }
    int value() const;
    int residue(int x) const { return e_ ? floor_mod(x, *e_) : x; }
    std::string str() const { return e_ ? std::to_string(*e_) : std::string("inf"); }

    bool operator==(const QuantumChar&) const = default;

private:
    QuantumChar() = default;
    std::optional<int> e_;
};

class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int size() const noexcept;
    bool empty() const noexcept { return parts_.empty(); }
    // 1-based; zero beyond the stored parts
    int part(int j) const noexcept { return (j >= 1 && j <= length()) ? parts_[j - 1] : 0; }

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

class Multipartition {
public:
    Multipartition() = default;
    explicit Multipartition(std::vector<Partition> components);
    static Multipartition empty(int r) { return Multipartition(std::vector<Partition>(r)); }

    const std::vector<Partition>& components() const noexcept { return comps_; }
    const Partition& operator[](int i) const { return comps_.at(i - 1); }  // 1-based
    int rank() const noexcept { return static_cast<int>(comps_.size()); }
    int size() const noexcept;

    auto operator<=>(const Multipartition&) const = default;

private:
    std::vector<Partition> comps_;
};

class Multicharge {
public:
    Multicharge() = default;
    Multicharge(std::initializer_list<int> s) : s_(s) {}
    explicit Multicharge(std::vector<int> s) : s_(std::move(s)) {}

    const std::vector<int>& values() const noexcept { return s_; }
    int operator[](int i) const { return s_.at(i - 1); }  // 1-based
    int rank() const noexcept { return static_cast<int>(s_.size()); }
    int sum() const noexcept;

    bool in_A(const QuantumChar& e) const;
    bool in_Abar(const QuantumChar& e) const;

    auto operator<=>(const Multicharge&) const = default;

private:
    std::vector<int> s_;
};

// one-line image notation, 1-based: result[i] = input[sigma[i]]
using Permutation = std::vector<int>;

using ResidueContent = std::map<int, int>;

enum class DominanceRel { Greater, Less, Equal, Incomparable };

const char* to_string(DominanceRel rel);

Partition conjugate(const Partition& p);
Multipartition conjugate_multi(const Multipartition& m);

bool is_permutation(const Permutation& sigma, int r);
Permutation identity_permutation(int r);
Permutation inverse(const Permutation& sigma);
Multipartition permute(const Multipartition& m, const Permutation& sigma);
Multicharge permute_charge(const Multicharge& s, const Permutation& sigma);

DominanceRel dominance_compare(const Multipartition& a, const Multipartition& b);

ResidueContent residue_content(const Multipartition& m, const Multicharge& s, const QuantumChar& e);
int content_total(const ResidueContent& c);

boost::multiprecision::cpp_int count_standard_tableaux(const Multipartition& m);

std::vector<Partition> partitions_of(int n);
std::vector<Multipartition> multipartitions_of(int r, int n);
// number of r-multipartitions of n, without enumerating them
boost::multiprecision::cpp_int count_multipartitions(int r, int n);

std::string to_string(const Partition& p);
std::string to_string(const Multipartition& m);
std::string to_string(const std::vector<int>& v);

}  // namespace akb
