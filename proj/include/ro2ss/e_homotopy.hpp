#pragma once
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ro2ss/matrix.hpp"

namespace ro2ss {

/// A monomial v1^{e1} ... v_{n-1}^{e_{n-1}} v_n^{en} in the nonequivariant
/// coefficient ring; its degree is even and the odd homotopy vanishes.
struct EMonomial {
    std::vector<std::int64_t> e;
    std::int64_t en = 0;

    friend bool operator==(const EMonomial& a, const EMonomial& b) {
        return a.e == b.e && a.en == b.en;
    }
    friend bool operator<(const EMonomial& a, const EMonomial& b) {
        if (a.e != b.e) return a.e < b.e;
        return a.en < b.en;
    }
};

std::int64_t e_monomial_degree(const EMonomial& m, int n);
std::string e_label(const EMonomial& m, int n);

/// All monomials of nonequivariant degree j with the given v_n-exponent,
/// ascending lex in e; empty when j is odd or the equations are unsolvable.
std::vector<EMonomial> e_block_basis(int n, std::int64_t j, std::int64_t en);

/// Global sign convention for the involution.  Minus is the real one
/// (sigma(v_k) = -v_k, so sigma = (-1)^{j/2} on degree j); Plus flips the
/// global sign and exists only as a negative-control test hook.
enum class SigmaSign { Minus, Plus };

/// Scalar by which the involution acts on a degree-j monomial.
std::int64_t sigma_scalar(std::int64_t j, SigmaSign sign = SigmaSign::Minus);

/// The involution on a monomial: sigma(v_k) = -v_k extended multiplicatively,
/// i.e. the sign (-1)^{j/2} on the fixed monomial.
std::pair<std::int64_t, EMonomial> sigma_action(int n, const EMonomial& m,
                                                SigmaSign sign = SigmaSign::Minus);

/// Diagonal matrix of 1 - sigma on e_block_basis(n, j, en): zero in degrees
/// 0 mod 4, multiplication by 2 in degrees 2 mod 4 (under the Minus convention).
Mat one_minus_sigma(int n, std::int64_t j, std::int64_t en,
                    SigmaSign sign = SigmaSign::Minus);

} // namespace ro2ss
