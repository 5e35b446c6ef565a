#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ro2ss/local2.hpp"
#include "ro2ss/smith.hpp"

using namespace ro2ss;

namespace {

// deterministic small-value generator for property tests
struct Rng {
    std::uint64_t s = 0x9e3779b97f4a7c15ull;
    std::uint64_t next() {
        s ^= s << 13; s ^= s >> 7; s ^= s << 17;
        return s;
    }
    std::int64_t small(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next() % (hi - lo + 1));
    }
};

// independent determinant oracle: cofactor expansion
Local2 det(const Mat& m) {
    REQUIRE(m.rows() == m.cols());
    std::size_t n = m.rows();
    if (n == 0) return Local2(1);
    if (n == 1) return m.at(0, 0);
    Local2 acc;
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        Mat minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Local2 term = m.at(0, j) * det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

bool is_odd_unit(Local2 x) { return !x.is_zero() && x.valuation() == 0; }

void check_snf_contract(const Mat& m) {
    SmithResult s = smith(m);
    CHECK(s.u * m * s.v == s.d);
    if (m.rows() <= 5) CHECK(is_odd_unit(det(s.u)));
    if (m.cols() <= 5) CHECK(is_odd_unit(det(s.v)));
    std::int64_t prev = 0;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (j != i) CHECK(s.d.at(i, j).is_zero());
        Local2 di = s.d.at(i, i);
        if (di.is_zero()) continue;
        // entries are powers of 2 (odd parts absorbed into u, v) and divide
        // successively
        CHECK(di == pow2(di.valuation()));
        CHECK(di.valuation() >= prev);
        prev = di.valuation();
    }
}

FGGroup free_group(std::size_t rank) {
    FGGroup g;
    for (std::size_t i = 0; i < rank; ++i) g.add_free("g" + std::to_string(i));
    return g;
}

} // namespace

TEST_CASE("two-local scalars reduce to odd denominators") {
    Local2 x(6, 10); // = 3/5
    CHECK(x.num() == 3);
    CHECK(x.den() == 5);
    CHECK(x.valuation() == 0);
    CHECK(Local2(12).valuation() == 2);
    CHECK(Local2(0).valuation() == kValInfinity);
    CHECK(Local2(1, 3) + Local2(2, 3) == Local2(1));
    CHECK(Local2(4) / Local2(6) == Local2(2, 3));
    CHECK((Local2(7) * Local2(3, 7)) == Local2(3));
    CHECK(Local2(-8, 6) == Local2(-4, 3));
}

TEST_CASE("smith normal form: already diagonal") {
    SmithResult s = smith(Mat{{2, 0}, {0, 0}});
    CHECK(s.rank == 1);
    CHECK(s.d.at(0, 0) == Local2(2));
    CHECK(s.d.at(1, 1) == Local2(0));
    check_snf_contract(Mat{{2, 0}, {0, 0}});
}

TEST_CASE("smith normal form: rank-one square") {
    SmithResult s = smith(Mat{{1, 1}, {1, 1}});
    CHECK(s.rank == 1);
    CHECK(s.d.at(0, 0) == Local2(1));
    CHECK(s.d.at(1, 1) == Local2(0));
    check_snf_contract(Mat{{1, 1}, {1, 1}});
}

TEST_CASE("smith normal form: odd entries are units") {
    SmithResult s = smith(Mat{{3, 0}, {0, 4}});
    CHECK(s.rank == 2);
    CHECK(s.d.at(0, 0) == Local2(1));
    CHECK(s.d.at(1, 1) == Local2(4));
    check_snf_contract(Mat{{3, 0}, {0, 4}});
}

TEST_CASE("smith normal form on random matrices") {
    Rng rng;
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = 1 + trial % 5, c = 1 + (trial / 5) % 5;
        Mat m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Local2(rng.small(-12, 12));
        check_snf_contract(m);
    }
}

TEST_CASE("smith normal form on matrices with odd denominators") {
    Rng rng;
    const std::int64_t odd[4] = {1, 3, 5, 7};
    for (int trial = 0; trial < 120; ++trial) {
        std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 4;
        Mat m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                m.at(i, j) = Local2(rng.small(-10, 10), odd[rng.next() % 4]);
        check_snf_contract(m);
    }
}

namespace {

// independent rank oracle: plain Gaussian elimination over the rationals
std::size_t rational_rank(Mat m) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t piv = rank;
        while (piv < m.rows() && m.at(piv, c).is_zero()) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(rank, piv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == rank || m.at(i, c).is_zero()) continue;
            // scale the pivot row instead of dividing, to stay in Z_(2)
            Local2 a = m.at(i, c), b = m.at(rank, c);
            std::int64_t shift = a.valuation() - b.valuation();
            Local2 f = shift >= 0 ? a / b : Local2(0);
            if (shift >= 0) {
                m.row_axpy(i, rank, f);
            } else {
                // swap so the smaller valuation leads
                m.swap_rows(i, rank);
                m.row_axpy(i, rank, m.at(i, c) / m.at(rank, c));
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace

TEST_CASE("kernel and cokernel ranks agree with a rational rank oracle") {
    Rng rng;
    for (int trial = 0; trial < 150; ++trial) {
        std::size_t g = 1 + trial % 4, h = 1 + (trial / 4) % 4;
        Mat m(h, g);
        for (std::size_t i = 0; i < h; ++i)
            for (std::size_t j = 0; j < g; ++j) m.at(i, j) = Local2(rng.small(-6, 6));
        Hom f{m, free_group(g), free_group(h)};
        std::size_t rk = rational_rank(m);
        CHECK(kernel_group(f).rank() == static_cast<std::int64_t>(g - rk));
        CHECK(cokernel_group(f).rank() == static_cast<std::int64_t>(h - rk));
        // the kernel subgroup's generators rationally span g - rk dimensions
        CHECK(rational_rank(kernel_gens(f)) == g - rk);
    }
}

TEST_CASE("subquotient: homology of zero maps is the group itself") {
    FGGroup z = free_group(1);
    FGGroup trivial;
    FGGroup h = subquotient(zero_hom(trivial, z), zero_hom(z, trivial));
    CHECK(h.rank() == 1);
    CHECK(h.torsion().empty());
}

TEST_CASE("subquotient: cokernel of doubling") {
    FGGroup z = free_group(1);
    FGGroup trivial;
    FGGroup h = subquotient(Hom{Mat{{2}}, z, z}, zero_hom(z, trivial));
    CHECK(h.rank() == 0);
    CHECK(h.torsion() == std::vector<std::int64_t>{1});
}

TEST_CASE("subquotient: kernel of an injection") {
    FGGroup z = free_group(1);
    FGGroup trivial;
    FGGroup h = subquotient(zero_hom(trivial, z), Hom{Mat{{2}}, z, z});
    CHECK(h.is_trivial());
}

TEST_CASE("subquotient throws when the composite does not vanish") {
    FGGroup z = free_group(1);
    Hom into{Mat{{1}}, z, z};
    Hom outof{Mat{{1}}, z, z};
    CHECK_THROWS_AS(subquotient(into, outof), CompositionNotZero);
}

TEST_CASE("subquotient respects torsion in the out-map's target") {
    // Z --q odd--> Z/2 has kernel 2Z; modulo im(2) the quotient is trivial
    FGGroup z = free_group(1);
    FGGroup z2;
    z2.add_torsion("t", 1);
    Hom outof{Mat{{3}}, z, z2};
    Hom into{Mat{{2}}, z, z};
    FGGroup h = subquotient(into, outof);
    CHECK(h.is_trivial());
}

TEST_CASE("subquotient is invariant under unimodular change of basis") {
    Rng rng;
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t g = 2 + trial % 3;
        FGGroup target = free_group(g);
        Mat a(g, 2), b(2, g);
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                a.at(i, j) = Local2(2 * rng.small(-3, 3)); // im(a) inside ker(b) = 2Z^g scale
                b.at(j, i) = Local2(0);
            }
        FGGroup trivial2 = free_group(2);
        Hom into{a, trivial2, target};
        Hom outof{b, target, trivial2};
        FGGroup h = subquotient(into, outof);

        // conjugate by a random unimodular (odd determinant) change of basis
        Mat p = Mat::identity(g);
        for (int ops = 0; ops < 6; ++ops) {
            std::size_t i = rng.next() % g, j = rng.next() % g;
            if (i == j) continue;
            p.row_axpy(i, j, Local2(rng.small(-2, 2)));
        }
        Hom into2{p * a, trivial2, target};
        Hom outof2{b * /* p^{-1} not needed: b = 0 */ Mat::identity(g), target, trivial2};
        FGGroup h2 = subquotient(into2, outof2);
        CHECK(iso(h, h2));
    }
}

TEST_CASE("subquotient is invariant under order-preserving permutations of a torsion target") {
    // target Z + Z/2 + Z/2 with the two torsion generators swapped
    FGGroup t1, t2;
    t1.add_free("f"); t1.add_torsion("u", 1); t1.add_torsion("v", 1);
    t2 = t1;
    FGGroup src = free_group(1);
    FGGroup trivial;
    Mat a(3, 1), ap(3, 1);
    a.at(0, 0) = Local2(2); a.at(1, 0) = Local2(1); a.at(2, 0) = Local2(0);
    ap.at(0, 0) = Local2(2); ap.at(1, 0) = Local2(0); ap.at(2, 0) = Local2(1);
    FGGroup h1 = subquotient(Hom{a, src, t1}, zero_hom(t1, trivial));
    FGGroup h2 = subquotient(Hom{ap, src, t2}, zero_hom(t2, trivial));
    CHECK(iso(h1, h2));
}

TEST_CASE("subgroup_equal on elementary subgroups") {
    FGGroup z = free_group(1);
    CHECK(subgroup_equal(Mat{{2}}, Mat{{-2}}, z));
    CHECK_FALSE(subgroup_equal(Mat{{2}}, Mat{{1}}, z));
    FGGroup z2 = free_group(2);
    CHECK(subgroup_equal(Mat{{1}, {1}}, Mat{{1, 2}, {1, 2}}, z2));
}

TEST_CASE("subgroup_equal is reflexive, symmetric, and order-insensitive") {
    Rng rng;
    FGGroup amb = free_group(3);
    for (int trial = 0; trial < 50; ++trial) {
        Mat s1(3, 2), s2(3, 2);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
                s1.at(i, j) = Local2(rng.small(-4, 4));
                s2.at(i, j) = Local2(rng.small(-4, 4));
            }
        CHECK(subgroup_equal(s1, s1, amb));
        CHECK(subgroup_equal(s2, s2, amb));
        CHECK(subgroup_equal(s1, s2, amb) == subgroup_equal(s2, s1, amb));
        // permuting generators changes nothing
        Mat s1p(3, 2);
        s1p.set_col(0, s1.col(1));
        s1p.set_col(1, s1.col(0));
        CHECK(subgroup_equal(s1, s1p, amb));
    }
}

TEST_CASE("membership works modulo torsion relations") {
    FGGroup g;
    g.add_free("f");
    g.add_torsion("t", 2); // Z + Z/4
    // (0, 4) is zero in the group, so it is in every subgroup
    Mat gens(2, 1);
    gens.at(0, 0) = Local2(1);
    CHECK(member(gens, g, {Local2(1), Local2(4)}));
    CHECK_FALSE(member(gens, g, {Local2(1), Local2(2)}));
}

TEST_CASE("kernel generators of a map to torsion") {
    FGGroup z = free_group(1);
    FGGroup z2;
    z2.add_torsion("t", 1);
    Hom h{Mat{{1}}, z, z2};
    Mat k = kernel_gens(h);
    // kernel of Z -> Z/2 is 2Z
    CHECK(subgroup_equal(k, Mat{{2}}, z));
}

TEST_CASE("hom validity respects generator orders") {
    FGGroup z2;
    z2.add_torsion("t", 1);
    FGGroup z = free_group(1);
    Hom bad{Mat{{1}}, z2, z}; // Z/2 -> Z sending t to 1 is not a homomorphism
    CHECK_FALSE(bad.valid());
    Hom good{Mat{{0}}, z2, z};
    CHECK(good.valid());
}
