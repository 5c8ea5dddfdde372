#include <sstream>
#include <stdexcept>

#include "dense_oracle.hpp"
#include "doctest.h"
#include "twinbent/clifford.hpp"
#include "twinbent/graphs.hpp"
#include "twinbent/hadamard.hpp"

using namespace twinbent;

namespace {

std::vector<SignedPerm> gammas(int m, const std::vector<std::uint32_t>& indices)
{
    std::vector<SignedPerm> out;
    for (auto i : indices) out.push_back(gamma(m, i));
    return out;
}

DenseSquare scalar(int v) { return DenseSquare::from_rows({{v}}); }

LambdaTable pair_table(int lambda)
{
    LambdaTable t(2);
    t.set(0, 1, lambda);
    return t;
}

/// Hand evaluation of the two branches of M.
int hand_M(int q)
{
    const int half = (q + 1) / 2;
    switch (q % 8) {
    case 2:
    case 3:
    case 4: return half + 1;
    default: return half;
    }
}

} // namespace

TEST_CASE("dense arithmetic matches the oracle")
{
    const auto a = DenseSquare::from_rows({{1, 2}, {3, 4}});
    const auto b = DenseSquare::from_rows({{0, -1}, {5, 2}});
    CHECK((a * b).rows() == oracle::mul(a.rows(), b.rows()));
    CHECK(transpose(a).rows() == oracle::transpose(a.rows()));
    CHECK(kronecker(a, b).rows() == oracle::kron(a.rows(), b.rows()));
    CHECK((a + b).rows() == oracle::add(a.rows(), b.rows()));
    CHECK((a - b).rows() == oracle::add(a.rows(), oracle::scale(-1, b.rows())));
    CHECK_THROWS_AS(DenseSquare::from_rows({{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(a * DenseSquare(3), std::invalid_argument);
}

TEST_CASE("canonical transversals")
{
    CHECK(canonical_transversal(1) == std::vector<std::uint32_t>{0, 1});
    CHECK(canonical_transversal(2) == std::vector<std::uint32_t>{0, 1, 4, 5});
    for (int m = 1; m <= 4; ++m) {
        const auto t = canonical_transversal(m);
        CHECK(t.size() == (std::size_t{1} << m));
        for (std::size_t a = 0; a < t.size(); ++a)
            for (std::size_t b = a + 1; b < t.size(); ++b)
                CHECK(disjoint_support(gamma(m, t[a]), gamma(m, t[b])));
    }
    const auto as = gammas(1, canonical_transversal(1));
    CHECK(oracle::add(as[0].dense(), as[1].dense()) == oracle::Matrix{{1, -1}, {1, 1}});
}

TEST_CASE("A conditions")
{
    const auto a1 = check_A_conditions(gammas(1, canonical_transversal(1)));
    REQUIRE(a1.ok);
    CHECK(a1.lambdas.at(0, 1) == 1);

    const auto as = gammas(2, canonical_transversal(2));
    const auto a2 = check_A_conditions(as);
    REQUIRE(a2.ok);
    REQUIRE(a2.lambdas.size() == 4);
    for (std::size_t j = 0; j < 4; ++j) {
        for (std::size_t k = 0; k < 4; ++k) {
            if (j == k) continue;
            // lambda = +1: A_j A_k^T = -A_k A_j^T; lambda = -1: A_j A_k^T = A_k A_j^T.
            const auto p = oracle::mul(as[j].dense(), oracle::transpose(as[k].dense()));
            const auto q = oracle::mul(as[k].dense(), oracle::transpose(as[j].dense()));
            CHECK(p == oracle::scale(-a2.lambdas.at(j, k), q));
        }
    }

    const std::vector<SignedPerm> same{identity(2), identity(2)};
    const auto bad = check_A_conditions(same);
    CHECK_FALSE(bad.ok);
    CHECK(bad.failure.find("entrywise") != std::string::npos);
}

TEST_CASE("B conditions")
{
    const std::vector<DenseSquare> one{scalar(1)};
    CHECK(check_B_conditions(one, LambdaTable(1)).ok);

    const std::vector<DenseSquare> plus{scalar(1), scalar(1)};
    CHECK(check_B_conditions(plus, pair_table(1)).ok);

    const std::vector<DenseSquare> mixed{scalar(1), scalar(-1)};
    CHECK_FALSE(check_B_conditions(mixed, pair_table(-1)).ok);
    CHECK_FALSE(check_B_conditions(plus, pair_table(-1)).ok);
}

TEST_CASE("assembly and the Hadamard test")
{
    const std::vector<SignedPerm> as{identity(2), e1()};
    const std::vector<DenseSquare> bs{scalar(1), scalar(1)};
    const auto r = assemble_H(as, bs);
    REQUIRE(r.h.has_value());
    CHECK(r.h->rows() == oracle::Matrix{{1, -1}, {1, 1}});
    CHECK(is_hadamard(*r.h));

    const std::vector<SignedPerm> just_i{identity(1)};
    const std::vector<DenseSquare> just_one{scalar(1)};
    CHECK(assemble_H(just_i, just_one).h->rows() == oracle::Matrix{{1}});

    CHECK_FALSE(is_hadamard(DenseSquare::from_rows({{1, 1}, {1, 1}})));
    CHECK(is_hadamard(DenseSquare::from_rows({{1, -1}, {1, 1}})));
    CHECK_THROWS_AS(is_hadamard(DenseSquare::from_rows({{1, 0}, {0, 1}})), std::invalid_argument);

    // Overlapping supports push an entry outside {-1, 1}.
    const std::vector<SignedPerm> overlap{identity(2), identity(2)};
    const auto bad = assemble_H(overlap, bs);
    CHECK_FALSE(bad.h.has_value());
    CHECK_FALSE(bad.failure.empty());
}

TEST_CASE("Sylvester matrices are Hadamard")
{
    auto h = DenseSquare::from_rows({{1, 1}, {1, -1}});
    auto power = h;
    for (int k = 0; k < 4; ++k) {
        CHECK(is_hadamard(power));
        power = kronecker(power, h);
    }
}

TEST_CASE("M function")
{
    CHECK(big_M(1) == 1);
    CHECK(big_M(3) == 3);
    CHECK(big_M(15) == 8);
    for (int q = 1; q <= 64; ++q) CHECK(big_M(q) == hand_M(q));
    CHECK_THROWS_AS(big_M(0), std::invalid_argument);
}

TEST_CASE("B search")
{
    auto r = search_B(2, 1, pair_table(1), kDefaultNodeBudget);
    REQUIRE(r.status == BSearchStatus::found);
    CHECK(check_B_conditions(r.bs, pair_table(1)).ok);

    r = search_B(2, 1, pair_table(-1), kDefaultNodeBudget);
    CHECK(r.status == BSearchStatus::absent_exhaustive);
    CHECK(r.exhaustive);

    r = search_B(1, 1, LambdaTable(1), kDefaultNodeBudget);
    REQUIRE(r.status == BSearchStatus::found);
    CHECK(r.bs.front().rows() == oracle::Matrix{{1}});

    // Order-2 blocks with B_1 B_2^T skew exist, e.g. [[1,1],[1,-1]] and [[1,-1],[-1,-1]].
    r = search_B(2, 2, pair_table(-1), kDefaultNodeBudget);
    REQUIRE(r.status == BSearchStatus::found);
    CHECK(check_B_conditions(r.bs, pair_table(-1)).ok);

    CHECK_THROWS_AS(search_B(0, 1, LambdaTable(0), 10), std::invalid_argument);
}

TEST_CASE("full pipeline at m = 1 and m = 2")
{
    const auto as1 = gammas(1, canonical_transversal(1));
    const auto a1 = check_A_conditions(as1);
    const auto b1 = search_B(2, 1, a1.lambdas, kDefaultNodeBudget);
    REQUIRE(b1.status == BSearchStatus::found);
    const auto h1 = assemble_H(as1, b1.bs);
    REQUIRE(h1.h.has_value());
    CHECK(h1.h->order() == 2);
    CHECK(is_hadamard(*h1.h));

    const auto as2 = gammas(2, canonical_transversal(2));
    const auto a2 = check_A_conditions(as2);
    const auto b2 = search_B(4, 1, a2.lambdas, kDefaultNodeBudget);
    CHECK(b2.exhaustive);
    if (b2.status == BSearchStatus::found) {
        const auto h2 = assemble_H(as2, b2.bs);
        REQUIRE(h2.h.has_value());
        CHECK(is_hadamard(*h2.h));
    } else {
        CHECK(b2.status == BSearchStatus::absent_exhaustive);
    }
}

TEST_CASE("matrix text output")
{
    std::ostringstream os;
    write_matrix_text(os, DenseSquare::from_rows({{1, -1}, {1, 1}}));
    CHECK(os.str() == "+1 -1\n+1 +1\n");
}
