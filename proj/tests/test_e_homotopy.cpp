#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ro2ss/e_homotopy.hpp"

using namespace ro2ss;

namespace {

struct Rng {
    std::uint64_t s = 0x3c6ef372fe94f82bull;
    std::uint64_t next() {
        s ^= s << 13; s ^= s >> 7; s ^= s << 17;
        return s;
    }
    std::int64_t small(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next() % (hi - lo + 1));
    }
};

} // namespace

TEST_CASE("block bases of the coefficient ring") {
    auto b = e_block_basis(1, 4, 2);
    REQUIRE(b.size() == 1);
    CHECK(b[0] == EMonomial{{}, 2}); // v1^2
    CHECK(e_label(b[0], 1) == "v1^2");

    auto b2 = e_block_basis(2, 0, -1);
    REQUIRE(b2.size() == 1);
    CHECK(b2[0] == EMonomial{{3}, -1}); // v1^3 v2^-1

    CHECK(e_block_basis(1, 3, 0).empty());  // odd degree
    CHECK(e_block_basis(1, 3, 1).empty());
}

TEST_CASE("sigma acts by parity of half the degree") {
    CHECK(sigma_scalar(0) == 1);
    CHECK(sigma_scalar(2) == -1); // sigma(v1) = -v1
    CHECK(sigma_scalar(4) == 1);  // sigma(v1^2) = v1^2
    CHECK(sigma_scalar(2, SigmaSign::Plus) == 1); // flipped hook
    CHECK(sigma_scalar(0, SigmaSign::Plus) == -1);
    // (1 - sigma)(v1) = 2 v1, sigma(v1^2) = v1^2, sigma(1) = 1
    auto [s1, m1] = sigma_action(1, EMonomial{{}, 1});
    CHECK(1 - s1 == 2);
    CHECK(m1 == EMonomial{{}, 1});
    CHECK(sigma_action(1, EMonomial{{}, 2}).first == 1);
    CHECK(sigma_action(1, EMonomial{{}, 0}).first == 1);
}

TEST_CASE("sigma is an involution and multiplicative") {
    Rng rng;
    for (int n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 100; ++trial) {
            EMonomial a{{}, 0}, b{{}, 0};
            for (int k = 1; k < n; ++k) {
                a.e.push_back(rng.small(0, 4));
                b.e.push_back(rng.small(0, 4));
            }
            a.en = rng.small(-4, 4);
            b.en = rng.small(-4, 4);
            std::int64_t da = e_monomial_degree(a, n), db = e_monomial_degree(b, n);
            // sigma^2 = id
            CHECK(sigma_scalar(da) * sigma_scalar(da) == 1);
            // sigma(ab) = sigma(a) sigma(b): degrees add under products
            CHECK(sigma_scalar(da + db) == sigma_scalar(da) * sigma_scalar(db));
        }
    }
}

TEST_CASE("one minus sigma is 2*Id or 0, and (1+sigma)(1-sigma) = 0") {
    CHECK(one_minus_sigma(1, 2, 1).at(0, 0) == Local2(2));
    CHECK(one_minus_sigma(1, 4, 2).at(0, 0) == Local2(0));
    CHECK(one_minus_sigma(1, 0, 0).at(0, 0) == Local2(0));
    Rng rng;
    for (int n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 60; ++trial) {
            std::int64_t en = rng.small(-3, 3);
            std::int64_t j = 2 * rng.small(-6, 6);
            Mat d = one_minus_sigma(n, j, en);
            std::size_t dim = e_block_basis(n, j, en).size();
            REQUIRE(d.rows() == dim);
            bool all2 = true, all0 = true;
            for (std::size_t k = 0; k < dim; ++k) {
                for (std::size_t l = 0; l < dim; ++l)
                    if (k != l) CHECK(d.at(k, l).is_zero());
                all2 = all2 && d.at(k, k) == Local2(2);
                all0 = all0 && d.at(k, k).is_zero();
            }
            CHECK((dim == 0 || all2 || all0));
            // 1 + sigma composed with 1 - sigma vanishes
            Mat sum(dim, dim);
            Local2 c(1 + sigma_scalar(j));
            for (std::size_t k = 0; k < dim; ++k) sum.at(k, k) = c;
            CHECK((sum * d).is_zero());
        }
    }
}
