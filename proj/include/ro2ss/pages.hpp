#pragma once
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ro2ss/degree.hpp"

namespace ro2ss {

/// A monomial a^i v1^{e1} ... v_{n-1}^{e_{n-1}} v_n^{en} (s2)^t on a spectral
/// sequence page, s2 the invertible class of degree 2(alpha-1).  The a-exponent
/// i is the filtration; the coefficient group is Z_(2) for i = 0 and Z/2 for
/// i > 0 (relation 2a = 0).
struct PageMonomial {
    std::int64_t i = 0;            // a-exponent, >= 0
    std::vector<std::int64_t> e;   // exponents of v_1 .. v_{n-1}, >= 0
    std::int64_t en = 0;           // v_n-exponent, any integer
    std::int64_t t = 0;            // (s2)-exponent, any integer

    friend bool operator==(const PageMonomial& a, const PageMonomial& b) {
        return a.i == b.i && a.e == b.e && a.en == b.en && a.t == b.t;
    }
    friend bool operator<(const PageMonomial& a, const PageMonomial& b) {
        if (a.i != b.i) return a.i < b.i;
        if (a.e != b.e) return a.e < b.e;
        if (a.en != b.en) return a.en < b.en;
        return a.t < b.t;
    }
};

/// v-weight: sum e_k (2^k - 1) + en (2^n - 1).
std::int64_t monomial_weight(const PageMonomial& m, int n);

/// RO(Z/2) degree per |a| = -alpha, |v_k| = (2^k-1)(1+alpha), |s2| = 2(alpha-1).
Degree monomial_degree(const PageMonomial& m, int n);

/// "a^2 v1^3 s2^-1", unit monomial "1".  Stars as separators keep labels
/// single-token for TSV columns.
std::string monomial_label(const PageMonomial& m, int n);

/// One finite piece of a graded object: RO-degree, v_n-exponent, filtration.
struct BlockKey {
    std::int64_t m = 0, p = 0, en = 0, i = 0;

    friend bool operator==(const BlockKey& a, const BlockKey& b) {
        return a.m == b.m && a.p == b.p && a.en == b.en && a.i == b.i;
    }
    friend bool operator<(const BlockKey& a, const BlockKey& b) {
        if (a.m != b.m) return a.m < b.m;
        if (a.p != b.p) return a.p < b.p;
        if (a.en != b.en) return a.en < b.en;
        return a.i < b.i;
    }
    Degree degree() const { return {m, p}; }
    std::string str() const {
        return "(" + std::to_string(m) + "," + std::to_string(p) + ",en=" +
               std::to_string(en) + ",i=" + std::to_string(i) + ")";
    }
};

/// All e-vectors (e_1..e_{n-1}) >= 0 with sum e_k (2^k - 1) = w, ascending lex.
std::vector<std::vector<std::int64_t>> weight_compositions(std::int64_t w, int n);

/// The complete finite basis of the E_2 page in one block, ordered lex in e.
/// Within a block the s2-exponent is pinned by the degree equations.
std::vector<PageMonomial> e2_block_basis(int n, const BlockKey& b);

} // namespace ro2ss

template <>
struct std::hash<ro2ss::BlockKey> {
    size_t operator()(const ro2ss::BlockKey& b) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::int64_t x : {b.m, b.p, b.en, b.i}) {
            h ^= static_cast<std::uint64_t>(x);
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};
