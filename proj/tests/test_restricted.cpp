#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "oracles.hpp"
#include "plethysm/reductions.hpp"
#include "plethysm/restricted.hpp"

#include <map>
#include <set>

using namespace plethysm;

namespace {

struct PsiCase {
    Partition mu;
    Partition lambda;
    std::size_t splits;
};

std::vector<PsiCase> psi_instances(PsiVariant variant, int max_size) {
    std::vector<PsiCase> out;
    for (int k = 1; k <= max_size; ++k)
        for (const auto& mu : partitions_of(k))
            for (const auto& lam : partitions_of(3 * k))
                if (psi_membership(mu, inner_of(variant), lam.composition()))
                    out.push_back({mu, lam, psi_splits(mu, lam.composition(), variant).size()});
    return out;
}

}  // namespace

TEST_CASE("complete pyramid sizes") {
    for (const auto kind : {ConeKind::open, ConeKind::closed})
        for (int r = -1; r <= 10; ++r)
            CHECK(complete_pyramid_size(r, kind) == (r < 0 ? 0 : static_cast<long>(complete_pyramid(r, kind).size())));
    CHECK(complete_pyramid_size(1, ConeKind::closed) == 2);
    CHECK(complete_pyramid_size(3, ConeKind::open) == 1);
    CHECK(complete_pyramid_size(4, ConeKind::open) == 2);
}

TEST_CASE("psi decomposition") {
    const auto one = psi_decompose(Partition{1}, PsiVariant::Sym);
    REQUIRE(one.columns.size() == 1);
    CHECK(one.columns[0] == PsiColumn{1, 1, 1, 0});
    // n = 2 = |P-bar_1| is not below it, so the threshold moves to r = 2
    CHECK(psi_decompose(column(2), PsiVariant::Sym).columns[0] == PsiColumn{2, 2, 2, 0});
    CHECK(psi_decompose(column(3), PsiVariant::Sym).columns[0] == PsiColumn{3, 2, 2, 1});
    CHECK(psi_decompose(Partition{1}, PsiVariant::Wedge).columns[0] == PsiColumn{1, 4, 1, 0});

    for (const auto variant : {PsiVariant::Sym, PsiVariant::Wedge}) {
        const ConeKind kind = cone_of(variant);
        for (int k = 1; k <= 12; ++k) {
            for (const auto& mu : partitions_of(k)) {
                const auto dec = psi_decompose(mu, variant);
                REQUIRE(dec.columns.size() == static_cast<std::size_t>(mu.width()));
                long total = 0;
                for (const auto& c : dec.columns) {
                    REQUIRE(c.n_hat >= 0);
                    REQUIRE(c.n < complete_pyramid_size(c.r, kind));
                    REQUIRE(c.n >= complete_pyramid_size(c.r - 1, kind));
                    REQUIRE(c.n_check == complete_pyramid_size(c.r - 1, kind));
                    total += c.n_check + c.n_hat;
                }
                REQUIRE(total == k);
            }
        }
    }
}

TEST_CASE("psi membership examples") {
    // single column n = 3: P-bar_1 plus one point of sum 2
    const Composition base = sum_marginal(complete_pyramid(1, ConeKind::closed));
    CHECK(psi_membership(column(3), row(3), base + Composition{2, 0, 1}));   // (2,0,0)
    CHECK(psi_membership(column(3), row(3), base + Composition{1, 2}));      // (1,1,0)
    CHECK_FALSE(psi_membership(column(3), row(3), base + Composition{2, 0, 0, 1}));  // sum 3
    CHECK_FALSE(psi_membership(column(3), row(3), Composition{3, 3, 3}));
    CHECK_THROWS_AS(psi_membership(column(3), Partition{2, 1}, Composition{9}), std::invalid_argument);

    // two columns of length 3: two copies of P-bar_1 plus one sum-2 point each
    const Composition two = base + base + Composition{2, 0, 1} + Composition{1, 2};
    CHECK(psi_membership(Partition{2, 2, 2}, row(3), two));
    CHECK(psi_splits(Partition{2, 2, 2}, two, PsiVariant::Sym).size() == 2);  // ordered tuples

    CHECK(psi_membership(Partition{1}, row(3), Composition{3}));
    CHECK_FALSE(psi_membership(Partition{1}, row(3), Composition{2, 0, 0, 1}));
}

TEST_CASE("psi instances up to |mu| = 4, frozen") {
    // from psi_membership; each pair also checked independently below
    const std::map<Partition, std::set<Partition>> want{
        {{1}, {{3}}},
        {{1, 1}, {{5, 1}}},
        {{2}, {{6}}},
        {{1, 1, 1}, {{7, 1, 1}, {6, 3}}},
        {{2, 1}, {{8, 1}}},
        {{3}, {{9}}},
        {{1, 1, 1, 1}, {{8, 3, 1}}},
        {{2, 1, 1}, {{10, 1, 1}, {9, 3}}},
        {{2, 2}, {{10, 2}}},
        {{3, 1}, {{11, 1}}},
        {{4}, {{12}}},
    };
    std::map<Partition, std::set<Partition>> got;
    for (const auto& c : psi_instances(PsiVariant::Sym, 4)) got[c.mu].insert(c.lambda);
    CHECK(got == want);
}

TEST_CASE("cone alphabet order") {
    const auto lex = cone_alphabet(3, ConeKind::closed, Tiebreak::lex);
    REQUIRE(lex.size() == 20);
    CHECK(lex[0] == Point3{0, 0, 0});
    CHECK(lex[1] == Point3{1, 0, 0});
    CHECK(lex[2] == Point3{1, 1, 0});
    CHECK(lex[3] == Point3{2, 0, 0});
    const auto rev = cone_alphabet(3, ConeKind::closed, Tiebreak::reverse_lex);
    CHECK(rev[2] == Point3{2, 0, 0});
    CHECK(rev[3] == Point3{1, 1, 0});
    CHECK(cone_alphabet(3, ConeKind::open, Tiebreak::lex).front() == Point3{2, 1, 0});
    for (std::size_t i = 1; i < lex.size(); ++i) CHECK(lex[i - 1].sum() <= lex[i].sum());
}

TEST_CASE("count_cone_ssyt examples and gate") {
    CHECK(count_cone_ssyt(Partition{1}, Composition{3}, PsiVariant::Sym).value == 1);
    CHECK(count_cone_ssyt(Partition{1}, Composition{3}, PsiVariant::Sym).method == Method::ConeTableaux);
    try {
        count_cone_ssyt(Partition{2, 1}, Composition{4, 4, 1}, PsiVariant::Sym);
        FAIL("expected a gate failure");
    } catch (const GateFailure& e) {
        CHECK(e.gate() == "psi");
    }
    CHECK(count_cone_tableaux(Partition{1}, Composition{2}, PsiVariant::Sym) == 0);
}

TEST_CASE("cone tableaux count the plethysm on unique-split Psi instances, |mu| <= 4") {
    long unique = 0;
    for (const auto variant : {PsiVariant::Sym, PsiVariant::Wedge}) {
        for (const auto& c : psi_instances(variant, 4)) {
            CAPTURE(format(c.mu));
            CAPTURE(format(c.lambda));
            CAPTURE(to_string(variant));
            const BigInt want = general_plethysm(c.lambda, c.mu, inner_of(variant)).value;
            if (c.mu.size() <= 3) REQUIRE(want == oracle::plethysm_coefficient(c.lambda, c.mu, inner_of(variant)));
            const BigInt lex = count_cone_ssyt(c.mu, c.lambda.composition(), variant, Tiebreak::lex).value;
            const BigInt rev = count_cone_ssyt(c.mu, c.lambda.composition(), variant, Tiebreak::reverse_lex).value;
            REQUIRE(lex == rev);
            if (c.splits != 1) continue;
            ++unique;
            REQUIRE(lex == want);
        }
    }
    CHECK(unique >= 12);
}

TEST_CASE("single columns reduce to pyramid counting") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& lam : partitions_of(3 * n)) {
            if (!psi_membership(column(n), row(3), lam.composition())) continue;
            CAPTURE(format(lam));
            REQUIRE(count_cone_ssyt(column(n), lam.composition(), PsiVariant::Sym).value ==
                    count_pyramids(lam.composition(), ConeKind::closed));
            REQUIRE(is_promise_instance(lam.composition(), ConeKind::closed));
        }
    }
}

TEST_CASE("every enumerated tableau passes the layer check") {
    for (const auto variant : {PsiVariant::Sym, PsiVariant::Wedge}) {
        for (const auto& c : psi_instances(variant, 5)) {
            const auto dec = psi_decompose(c.mu, variant);
            for (const auto tb : {Tiebreak::lex, Tiebreak::reverse_lex}) {
                const auto all = enumerate_cone_ssyt(c.mu, c.lambda.composition(), variant, tb);
                REQUIRE(BigInt(all.size()) == count_cone_tableaux(c.mu, c.lambda.composition(), variant, tb));
                for (const auto& t : all) {
                    CAPTURE(format(c.mu));
                    CAPTURE(format(c.lambda));
                    REQUIRE(tableau_layers_check(t, dec, tb));
                }
            }
        }
    }
}

TEST_CASE("layer check rejects broken fillings") {
    const auto dec = psi_decompose(column(3), PsiVariant::Sym);
    const Tableau<Point3> good{column(3), {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}}};
    CHECK(tableau_layers_check(good, dec));
    const Tableau<Point3> wrong_layer{column(3), {{0, 0, 0}, {1, 0, 0}, {2, 1, 0}}};
    CHECK_FALSE(tableau_layers_check(wrong_layer, dec));
    const Tableau<Point3> wrong_forced{column(3), {{0, 0, 0}, {1, 1, 0}, {2, 0, 0}}};
    CHECK_FALSE(tableau_layers_check(wrong_forced, dec));
    const Tableau<Point3> wrong_shape{Partition{2, 1}, {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}}};
    CHECK_FALSE(tableau_layers_check(wrong_shape, dec));
}
