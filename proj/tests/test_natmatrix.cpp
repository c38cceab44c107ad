#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "schurkit/natmatrix.hpp"

using namespace schurkit;

namespace {

// The integral and binary encodings of the running tableau example.
const NatMatrix kIntegral = NatMatrix::parse(
    "1,0,1,0,1,2,0;"
    "1,1,0,1,1,0,3;"
    "0,2,1,0,1,1,0;"
    "0,0,1,1,1,0,2;"
    "0,0,0,0,0,1,2");

const NatMatrix kBinary = NatMatrix::parse(
    "0,1,0,0,1,0,0,0,0;"
    "1,1,1,0,0,0,0,0,0;"
    "1,0,1,0,0,1,0,0,0;"
    "0,1,0,1,0,0,0,0,0;"
    "0,0,1,1,1,0,1,0,0;"
    "1,0,0,0,1,0,0,1,1;"
    "0,1,1,1,1,1,1,1,0",
    true);

}  // namespace

TEST_CASE("row and column sums") {
    CHECK(kIntegral.row_sums() == Composition{5, 7, 5, 5, 3});
    CHECK(kIntegral.col_sums() == Composition{2, 3, 3, 2, 4, 4, 7});
    CHECK(kBinary.row_sums() == Composition{2, 3, 3, 2, 4, 4, 7});
    CHECK(kBinary.col_sums() == Composition{3, 4, 4, 3, 4, 2, 2, 2, 1});
    CHECK(NatMatrix().row_sums() == Composition{});
    CHECK(NatMatrix().col_sums() == Composition{});
    CHECK(kIntegral.row_sums().weight() == kIntegral.col_sums().weight());
}

TEST_CASE("matrix basics") {
    CHECK(NatMatrix::parse("1,0,1;0,2,0").to_string() == "1,0,1;0,2,0");
    CHECK(NatMatrix::parse("1,0;0,0") == NatMatrix::parse("1"));
    CHECK(NatMatrix::parse("").is_zero());
    CHECK(kIntegral.at(1, 6) == 3);
    CHECK(kIntegral.at(11, 2) == 0);
    CHECK(kIntegral.transpose().at(6, 1) == 3);
    CHECK(kIntegral.transpose().transpose() == kIntegral);
    CHECK_THROWS_AS(NatMatrix({{2}}, true), domain_error);
    CHECK_THROWS_AS(NatMatrix(std::vector<std::vector<int>>{{-1}}), domain_error);
    CHECK_THROWS_AS(NatMatrix::parse("1,x"), parse_error);
}

TEST_CASE("enumerate_matrices") {
    SECTION("unit margins") {
        auto binary = enumerate_matrices(Composition{1, 1}, Composition{1, 1}, true);
        REQUIRE(binary.size() == 2);
        CHECK(binary[0] == NatMatrix::parse("0,1;1,0"));
        CHECK(binary[1] == NatMatrix::parse("1,0;0,1"));
        CHECK(count_matrices(Composition{1, 1}, Composition{1, 1}, false) == 2);
    }
    SECTION("single row") {
        auto integral = enumerate_matrices(Composition{2}, Composition{1, 1}, false);
        REQUIRE(integral.size() == 1);
        CHECK(integral[0] == NatMatrix::parse("1,1"));
    }
    SECTION("mismatched totals") {
        CHECK(count_matrices(Composition{1}, Composition{2}, true) == 0);
        CHECK(count_matrices(Composition{1}, Composition{2}, false) == 0);
    }
    SECTION("margins hold and matrices are distinct") {
        Composition alpha{3, 2, 1}, beta{2, 2, 1, 1};
        std::set<std::string> seen;
        long count = 0;
        for_each_matrix(alpha, beta, false, [&](const NatMatrix& m) {
            ++count;
            CHECK(m.row_sums() == alpha);
            CHECK(m.col_sums() == beta);
            CHECK(seen.insert(m.to_string()).second);
        });
        CHECK(count == count_matrices(alpha, beta, false));
        // brute-force oracle over all 3x4 grids with entries <= 3
        long brute = 0;
        for (int mask = 0; mask < 4 * 4 * 4 * 4 * 4 * 4 * 4 * 4 * 4 * 4 * 4 * 4; ++mask) {
            int digits[12], rest = mask;
            for (int t = 0; t < 12; ++t) {
                digits[t] = rest % 4;
                rest /= 4;
            }
            bool ok = true;
            for (int i = 0; i < 3 && ok; ++i) {
                int sum = digits[4 * i] + digits[4 * i + 1] + digits[4 * i + 2] + digits[4 * i + 3];
                ok = sum == alpha[static_cast<std::size_t>(i)];
            }
            for (int j = 0; j < 4 && ok; ++j) {
                int sum = digits[j] + digits[4 + j] + digits[8 + j];
                ok = sum == beta[static_cast<std::size_t>(j)];
            }
            if (ok) ++brute;
        }
        CHECK(count == brute);
    }
    SECTION("binary emission is lexicographic in the flattened entries") {
        std::vector<std::string> flat;
        for_each_matrix(Composition{2, 1}, Composition{1, 1, 1}, true, [&](const NatMatrix& m) {
            std::string s;
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 3; ++j) s += static_cast<char>('0' + m.at(i, j));
            flat.push_back(s);
        });
        CHECK(std::is_sorted(flat.begin(), flat.end()));
        CHECK(flat.size() == 3);
    }
}
