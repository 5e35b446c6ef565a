#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ro2ss/degree.hpp"
#include "ro2ss/local2.hpp"
#include "ro2ss/pages.hpp"

namespace ro2ss {

/// A normal-form additive generator of the converged homotopy ring: the class
/// 2^w * monomial.  Membership rules, with kappa = min({k >= 1 : e_k > 0} u {n}):
///   torsion (i > 0): w = 0, t divisible by 2^kappa, and i <= 2^{kappa+1} - 2;
///   free (i = 0):    w = 0 when t is divisible by 2^kappa, else w = 1
/// (one scalar factor of 2 unlocks the remaining even s2-powers).
struct ERBasisElement {
    PageMonomial mono;
    int w = 0;

    friend bool operator==(const ERBasisElement& a, const ERBasisElement& b) {
        return a.mono == b.mono && a.w == b.w;
    }
    friend bool operator<(const ERBasisElement& a, const ERBasisElement& b) {
        if (!(a.mono == b.mono)) return a.mono < b.mono;
        return a.w < b.w;
    }
};

/// min({k : 1 <= k <= n-1, e_k > 0} u {n})
int kappa(const PageMonomial& m, int n);

std::int64_t lambda_shift(int n);     // 2^{2n+1} - 2^{n+2} + 1
std::int64_t period_degree(int n);    // 2^{n+2} (2^n - 1)

/// Scaled element of the ring: scalar * generator, or zero (nullopt).
using ERElement = std::pair<Local2, ERBasisElement>;

/// Rewrite scalar * (raw monomial) into normal form; nullopt when the class is
/// zero (a-truncation, or an even scalar against a-torsion).
std::optional<ERElement> er_normalize(int n, Local2 scalar, const PageMonomial& raw);

bool er_is_basis_element(int n, const ERBasisElement& x);

/// Product in the converged ring: add exponents, multiply scalars, renormalize.
std::optional<ERElement> er_product(int n, const ERElement& x, const ERElement& y);

/// Complete ordered basis of the block in the given RO-degree and v_n-exponent;
/// filtrations are enumerated internally up to the global bound 2^{n+1} - 2.
std::vector<ERBasisElement> er_block_basis(int n, Degree degree, std::int64_t en);

/// "2*v1^2*s2^-1" (leading 2 for w = 1), "a*v1", "1".
std::string er_label(const ERBasisElement& x, int n);

enum class DistinguishedName { Y, X, Period };

struct DistinguishedElement {
    DistinguishedName name;
    ERBasisElement element;
    Degree degree;
};

/// Constructs y(n), x(n) = a*y(n) or the periodicity generator, verifies
/// normal-form membership and that the symbolic degree matches the closed
/// forms (throws DegreeMismatch otherwise).
DistinguishedElement distinguished(int n, DistinguishedName name);

} // namespace ro2ss
