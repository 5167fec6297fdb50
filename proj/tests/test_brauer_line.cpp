#include <doctest.h>

#include "akb/brauer_line.hpp"
#include "akb/partitions.hpp"

using namespace akb;

namespace {

std::vector<std::string> labels(const CellChain& c)
{
    std::vector<std::string> out;
    for (const auto& d : c)
        out.push_back(to_string(d));
    return out;
}

std::map<int, int> factors(const CellDescriptor& d)
{
    std::map<int, int> f{{d.top, 1}};
    if (d.is_pair())
        ++f[d.bottom];
    return f;
}

std::vector<BrauerLine> lines()
{
    std::vector<BrauerLine> out;
    for (int n = 1; n <= 6; ++n) {
        out.push_back({n, 1, 1});
        for (int v = 1; v <= n + 1; ++v)
            for (int m = 2; m <= 4; ++m)
                out.push_back({n, v, m});
    }
    return out;
}

}  // namespace

TEST_CASE("validation")
{
    CHECK_THROWS_AS(validate({0, 1, 1}), Error);
    CHECK_THROWS_AS(validate({3, 5, 2}), Error);
    CHECK_THROWS_AS(validate({3, 1, 0}), Error);
    CHECK_NOTHROW(validate({3, 9, 1}));
    CHECK_THROWS_AS(projective_structure({4, 1, 1}, 5), Error);
    CHECK_THROWS_AS(projective_structure({4, 1, 1}, 0), Error);
}

TEST_CASE("projective modules")
{
    for (int k = 1; k <= 5; ++k) {
        auto p = projective_structure({1, 1, k}, 1);
        CHECK(composition_factors(p) == std::map<int, int>{{1, k + 1}});
    }
    auto p2 = projective_structure({4, 1, 1}, 2);
    CHECK(p2.lower_arm == std::vector<int>{1});
    CHECK(p2.upper_arm == std::vector<int>{3});
    CHECK(composition_factors(p2) == std::map<int, int>{{1, 1}, {2, 2}, {3, 1}});

    auto p3 = projective_structure({4, 3, 3}, 2);
    CHECK(p3.lower_arm == std::vector<int>{1});
    CHECK(p3.upper_arm == std::vector<int>{3, 2, 3, 2, 3});
}

TEST_CASE("cell chains of the worked example")
{
    auto [one, two] = cell_chains({4, 3, 3});
    CHECK(labels(one) == std::vector<std::string>{"L1", "2/1", "3/2", "3/2", "3/2", "4/3", "L4"});
    CHECK(labels(two) == std::vector<std::string>{"L4", "3/4", "2/3", "2/3", "2/3", "1/2", "L1"});
    CHECK(one.size() == 4 + 3);
}

TEST_CASE("degenerate chains")
{
    auto [one, two] = cell_chains({1, 1, 1});
    CHECK(labels(one) == std::vector<std::string>{"L1", "L1"});
    CHECK(labels(two) == std::vector<std::string>{"L1", "L1"});
    CHECK(multiplication_poset({2, 1, 1}).size() == 3);
    CHECK(labels(cell_chains({2, 1, 1}).first) == std::vector<std::string>{"L1", "2/1", "L2"});
}

TEST_CASE("multiplication poset of the worked example")
{
    auto p = multiplication_poset({4, 3, 3});
    std::vector<std::string> got;
    std::vector<std::string> zero;
    for (const auto& l : p) {
        got.push_back(to_string(l));
        if (l.in_lambda0)
            zero.push_back(to_string(l));
    }
    CHECK(got == std::vector<std::string>{"a1", "a2", "a3^1", "a3^2", "a3^3", "a4^1", "a4^2"});
    CHECK(zero == std::vector<std::string>{"a1", "a2", "a3^1", "a4^1"});
}

TEST_CASE("chain properties")
{
    for (const auto& line : lines()) {
        auto [one, two] = cell_chains(line);
        int n = line.edges;
        int m = line.multiplicity;
        REQUIRE(one.size() == static_cast<std::size_t>(n + m));
        REQUIRE(!one.front().is_pair());
        REQUIRE(!one.back().is_pair());

        // mirror image with pairs transposed
        REQUIRE(two.size() == one.size());
        for (std::size_t k = 0; k < one.size(); ++k) {
            const auto& a = one[k];
            const auto& b = two[one.size() - 1 - k];
            REQUIRE(factors(a) == factors(b));
            if (a.is_pair()) {
                REQUIRE(a.top == a.bottom + 1);
                REQUIRE(b.top == a.bottom);
                REQUIRE(b.bottom == a.top);
            }
        }

        auto poset = multiplication_poset(line);
        int zero = 0;
        for (const auto& l : poset)
            zero += l.in_lambda0 ? 1 : 0;
        REQUIRE(zero == n);

        // non-maximal cells outside the first occurrences all look alike
        std::set<std::map<int, int>> shapes;
        for (std::size_t k = 0; k + 1 < one.size(); ++k)
            if (!one[k].in_lambda0) {
                shapes.insert(factors(one[k]));
                bool interior = line.exceptional > 1 && line.exceptional <= n;
                if (interior && n > 1)
                    REQUIRE(one[k].is_pair());
            }
        REQUIRE(shapes.size() <= 1);
    }
}

TEST_CASE("cell chains reproduce the Cartan matrix")
{
    for (const auto& line : lines()) {
        int n = line.edges;
        auto chain = cell_chains(line).first;
        for (int i = 1; i <= n; ++i) {
            auto want = composition_factors(projective_structure(line, i));
            std::map<int, int> got;
            for (int j = 1; j <= n; ++j) {
                int c = 0;
                for (const auto& d : chain) {
                    auto f = factors(d);
                    c += (f.count(i) ? f[i] : 0) * (f.count(j) ? f[j] : 0);
                }
                if (c)
                    got[j] = c;
            }
            REQUIRE(got == want);
        }
    }
}
