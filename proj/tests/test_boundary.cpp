#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include "schurkit/boundary.hpp"
#include "schurkit/composition.hpp"

using namespace schurkit;

namespace {

// Independent oracle reading the ribbon definition off the diagram: k cells of
// lambda/mu on k consecutive diagonals, forming a connected stair. Height is
// the row span between the first and last diagonal.
std::optional<int> ribbon_by_diagram(const Partition& mu, const Partition& lambda, int k) {
    if (!contains(mu, lambda)) return std::nullopt;
    if (lambda.weight() - mu.weight() != k) return std::nullopt;
    std::vector<std::pair<int, int>> cells = SkewShape(lambda, mu).cells();
    std::vector<std::pair<int, std::pair<int, int>>> by_diagonal;  // (j - i, cell)
    for (auto [i, j] : cells) by_diagonal.push_back({j - i, {i, j}});
    std::sort(by_diagonal.begin(), by_diagonal.end());
    for (std::size_t t = 0; t + 1 < by_diagonal.size(); ++t) {
        if (by_diagonal[t + 1].first != by_diagonal[t].first + 1) return std::nullopt;
        auto [i1, j1] = by_diagonal[t].second;
        auto [i2, j2] = by_diagonal[t + 1].second;
        bool adjacent = (i2 == i1 && j2 == j1 + 1) || (i2 == i1 - 1 && j2 == j1);
        if (!adjacent) return std::nullopt;
    }
    return by_diagonal.front().second.first - by_diagonal.back().second.first;
}

std::vector<Partition> subpartitions(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, std::size_t row, int cap) -> void {
        if (row == lambda.length()) {
            out.push_back(Partition(current));
            return;
        }
        for (int part = std::min(cap, lambda[row]); part >= 0; --part) {
            current.push_back(part);
            self(self, row + 1, part);
            current.pop_back();
        }
    };
    rec(rec, 0, lambda.empty() ? 0 : lambda[0]);
    return out;
}

}  // namespace

TEST_CASE("beta_window") {
    CHECK(beta_window(Composition{7, 5, 2, 2, 1}, 7).window ==
          std::vector<long>{6, 3, -1, -2, -4, -6, -7});
    CHECK(beta_window(Composition{}, 3).window == std::vector<long>{-1, -2, -3});
    CHECK(beta_window(Composition{0, 4}, 3).window == std::vector<long>{-1, 2, -3});
    CHECK_THROWS_AS(beta_window(Composition{1, 1, 1}, 2), domain_error);

    SECTION("tail rule") {
        BetaSequence beta = beta_window(Composition{3}, 1);
        CHECK(beta.at(0) == 2);
        CHECK(beta.at(1) == -2);
        CHECK(beta.at(5) == -6);
    }

    SECTION("strictly decreasing for partitions") {
        for (int d = 0; d <= 9; ++d)
            for (const Partition& lambda : partitions_of(d)) {
                BetaSequence beta = beta_window(lambda.as_composition(), lambda.length() + 3);
                for (std::size_t i = 0; i + 1 < beta.window.size(); ++i)
                    CHECK(beta.window[i] > beta.window[i + 1]);
            }
    }
}

TEST_CASE("edge_sequence") {
    Partition lambda{7, 5, 2, 2, 1};
    CHECK(edge_sequence(lambda, std::pair<long, long>{-9, 9}).to_string() ==
          "@-9:1111010110001001000");
    CHECK(edge_sequence(Partition{}).to_string() == "@-1:100");
    CHECK(edge_sequence(Partition{}).bit(-17) == 1);
    CHECK(edge_sequence(Partition{}).bit(0) == 0);

    SECTION("text round trip") {
        EdgeSequence edges = EdgeSequence::parse("@-9:1111010110001001000");
        CHECK(edges == edge_sequence(lambda, std::pair<long, long>{-9, 9}));
        CHECK(edges.to_string() == "@-9:1111010110001001000");
        CHECK_THROWS_AS(EdgeSequence::parse("1,1"), parse_error);
        CHECK_THROWS_AS(EdgeSequence::parse("@x:101"), parse_error);
        CHECK_THROWS_AS(EdgeSequence::parse("@0:102"), parse_error);
    }

    SECTION("round trips with partition_from_edges") {
        CHECK(partition_from_edges(edge_sequence(Partition{9, 8, 5, 5, 3})) ==
              Partition{9, 8, 5, 5, 3});
        for (int d = 0; d <= 12; ++d)
            for (const Partition& lambda2 : partitions_of(d)) {
                CHECK(partition_from_edges(edge_sequence(lambda2)) == lambda2);
                // widened window describes the same boundary
                CHECK(partition_from_edges(edge_sequence(
                          lambda2, std::pair<long, long>{-15, 15})) == lambda2);
            }
    }

    SECTION("invalid words rejected") {
        CHECK_THROWS_AS(partition_from_edges(EdgeSequence::parse("@0:1")), domain_error);
        CHECK_THROWS_AS(partition_from_edges(EdgeSequence::parse("@-2:01")), domain_error);
        CHECK_THROWS_AS(partition_from_edges(EdgeSequence::parse("@-5:10000")), domain_error);
    }

    SECTION("0-coordinates are the complement staircase of the conjugate") {
        for (int d = 0; d <= 12; ++d)
            for (const Partition& lambda2 : partitions_of(d)) {
                EdgeSequence edges = edge_sequence(lambda2);
                Partition transpose = lambda2.conjugate();
                std::set<long> zero_coords;
                for (long c = edges.offset; c < edges.offset + static_cast<long>(edges.bits.size());
                     ++c)
                    if (edges.bit(c) == 0) zero_coords.insert(c);
                std::set<long> expected;
                for (std::size_t j = 0;; ++j) {
                    long v = -1 - (transpose[j] - 1 - static_cast<long>(j));
                    if (v >= edges.offset + static_cast<long>(edges.bits.size())) break;
                    if (v >= edges.offset) expected.insert(v);
                }
                CHECK(zero_coords == expected);
            }
    }
}

TEST_CASE("ribbon_check") {
    SECTION("the 10-ribbon of the boundary display") {
        auto height = ribbon_check(Partition{7, 5, 2, 2, 1}, Partition{7, 6, 6, 3, 3, 2}, 10);
        REQUIRE(height.has_value());
        CHECK(*height == 4);
    }
    SECTION("single row") {
        auto height = ribbon_check(Partition{}, Partition{3}, 3);
        REQUIRE(height.has_value());
        CHECK(*height == 0);
    }
    SECTION("hook of (2,2)/(1)") {
        auto height = ribbon_check(Partition{1}, Partition{2, 2}, 3);
        REQUIRE(height.has_value());
        CHECK(*height == 1);
    }
    SECTION("non-ribbons give no value") {
        CHECK_FALSE(ribbon_check(Partition{1}, Partition{2, 2}, 2).has_value());
        CHECK_FALSE(ribbon_check(Partition{1}, Partition{2, 1}, 2).has_value());  // disconnected diagonals
        CHECK_FALSE(ribbon_check(Partition{2}, Partition{2}, 1).has_value());
        CHECK_FALSE(ribbon_check(Partition{2, 2}, Partition{1}, 1).has_value());
    }

    SECTION("agrees with the diagram oracle, |lambda| <= 8") {
        for (int d = 0; d <= 8; ++d)
            for (const Partition& lambda : partitions_of(d))
                for (const Partition& mu : subpartitions(lambda))
                    for (int k = 1; k <= 8; ++k) {
                        auto fast = ribbon_check(mu, lambda, k);
                        auto slow = ribbon_by_diagram(mu, lambda, k);
                        CHECK(fast == slow);
                    }
    }
}
