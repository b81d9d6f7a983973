#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "plethysm/characters.hpp"

#include <array>

using namespace plethysm;

namespace {

BigInt hook_dimension(const Partition& p) {
    BigInt num = 1;
    for (long i = 2; i <= p.size(); ++i) num *= i;
    const Partition t = p.transpose();
    BigInt den = 1;
    for (int i = 0; i < p.height(); ++i)
        for (int j = 0; j < p[static_cast<std::size_t>(i)]; ++j)
            den *= (p[static_cast<std::size_t>(i)] - j) + (t[static_cast<std::size_t>(j)] - i) - 1;
    return num / den;
}

}  // namespace

TEST_CASE("sn_character examples") {
    for (const auto& tau : partitions_of(5)) CHECK(sn_character(Partition{5}, tau) == 1);
    CHECK(sn_character(Partition{1, 1, 1}, Partition{2, 1}) == -1);
    CHECK(sn_character(Partition{2, 1}, Partition{1, 1, 1}) == 2);
    CHECK(sn_character(Partition{2, 1}, Partition{3}) == -1);
    CHECK(sn_character(Partition{2, 2}, Partition{2, 2}) == 2);
    CHECK_THROWS_AS(sn_character(Partition{2}, Partition{1}), std::invalid_argument);
}

TEST_CASE("character table orthogonality") {
    for (int n = 1; n <= 7; ++n) {
        const auto parts = partitions_of(n);
        BigInt n_fact = 1;
        for (int i = 2; i <= n; ++i) n_fact *= i;
        for (const auto& a : parts) {
            REQUIRE(sn_character(a, column(n)) == hook_dimension(a));
            for (const auto& b : parts) {
                BigInt inner = 0;
                for (const auto& tau : parts) inner += sn_character(a, tau) * sn_character(b, tau) * (n_fact / centralizer_order(tau));
                REQUIRE(inner == (a == b ? n_fact : BigInt(0)));
            }
        }
    }
}

TEST_CASE("kronecker examples") {
    CHECK(kronecker(Partition{1}, Partition{1}, Partition{1}).value == 1);
    CHECK(kronecker(Partition{2}, Partition{2}, Partition{1, 1}).value == 0);
    CHECK(kronecker(Partition{2, 1}, Partition{2, 1}, Partition{2, 1}).value == 1);
    CHECK(kronecker(Partition{2, 1}, Partition{2, 1}, Partition{2, 1}).method == Method::CharacterSum);
    CHECK_THROWS_AS(kronecker(Partition{2}, Partition{1}, Partition{1}), std::invalid_argument);
}

TEST_CASE("kronecker symmetries and identities") {
    for (int n = 1; n <= 5; ++n) {
        const auto parts = partitions_of(n);
        for (const auto& a : parts) {
            for (const auto& b : parts) {
                // k(a, b, (n)) = [a == b] and sum_c k(a,b,c) f^c = f^a f^b
                REQUIRE(kronecker(a, b, row(n)).value == (a == b ? 1 : 0));
                REQUIRE(kronecker(a, b, column(n)).value == (a.transpose() == b ? 1 : 0));
                BigInt dims = 0;
                for (const auto& c : parts) {
                    const BigInt k = kronecker(a, b, c).value;
                    REQUIRE(k >= 0);
                    dims += k * hook_dimension(c);
                    if (n <= 4) {
                        const std::array<BigInt, 5> perms = {
                            kronecker(a, c, b).value, kronecker(b, a, c).value, kronecker(b, c, a).value,
                            kronecker(c, a, b).value, kronecker(c, b, a).value};
                        for (const auto& v : perms) REQUIRE(v == k);
                    }
                }
                REQUIRE(dims == hook_dimension(a) * hook_dimension(b));
            }
        }
    }
}
