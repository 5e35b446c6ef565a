#include "ro2ss/erring.hpp"

#include <cassert>
#include <stdexcept>

#include "ro2ss/errors.hpp"

namespace ro2ss {

int kappa(const PageMonomial& m, int n) {
    for (int k = 1; k < n; ++k)
        if (m.e[k - 1] > 0) return k;
    return n;
}

std::int64_t lambda_shift(int n) {
    return (std::int64_t(1) << (2 * n + 1)) - (std::int64_t(1) << (n + 2)) + 1;
}

std::int64_t period_degree(int n) {
    return (std::int64_t(1) << (n + 2)) * ((std::int64_t(1) << n) - 1);
}

namespace {

std::int64_t mod_pow2(std::int64_t t, int k) {
    std::int64_t m = std::int64_t(1) << k;
    return ((t % m) + m) % m;
}

} // namespace

std::optional<ERElement> er_normalize(int n, Local2 scalar, const PageMonomial& raw) {
    if (scalar.is_zero()) return std::nullopt;
    int kap = kappa(raw, n);
    if (raw.i > 0) {
        // a-torsion: one factor of 2 kills the class, and the a-power is
        // truncated at 2^{kappa+1} - 2
        if (scalar.valuation() >= 1) return std::nullopt;
        if (raw.i > (std::int64_t(1) << (kap + 1)) - 2) return std::nullopt;
        if (mod_pow2(raw.t, kap) != 0)
            throw std::logic_error("torsion monomial outside the s2-lattice");
        return ERElement{Local2(1), ERBasisElement{raw, 0}};
    }
    int w = mod_pow2(raw.t, kap) == 0 ? 0 : 1;
    if (w == 1) {
        if (scalar.valuation() < 1)
            throw std::logic_error("free class off the s2-lattice without a factor of 2");
        scalar = scalar / Local2(2);
    }
    return ERElement{scalar, ERBasisElement{raw, w}};
}

bool er_is_basis_element(int n, const ERBasisElement& x) {
    if (x.mono.i < 0 || static_cast<int>(x.mono.e.size()) != n - 1) return false;
    for (auto e : x.mono.e)
        if (e < 0) return false;
    int kap = kappa(x.mono, n);
    if (x.mono.i > 0) {
        return x.w == 0 && mod_pow2(x.mono.t, kap) == 0 &&
               x.mono.i <= (std::int64_t(1) << (kap + 1)) - 2;
    }
    int expected_w = mod_pow2(x.mono.t, kap) == 0 ? 0 : 1;
    return x.w == expected_w;
}

std::optional<ERElement> er_product(int n, const ERElement& x, const ERElement& y) {
    assert(er_is_basis_element(n, x.second) && er_is_basis_element(n, y.second));
    const PageMonomial& a = x.second.mono;
    const PageMonomial& b = y.second.mono;
    PageMonomial raw;
    raw.i = a.i + b.i;
    raw.e.resize(n - 1);
    for (int k = 0; k < n - 1; ++k) raw.e[k] = a.e[k] + b.e[k];
    raw.en = a.en + b.en;
    raw.t = a.t + b.t;
    Local2 s = x.first * y.first * pow2(x.second.w + y.second.w);
    return er_normalize(n, s, raw);
}

std::vector<ERBasisElement> er_block_basis(int n, Degree degree, std::int64_t en) {
    std::vector<ERBasisElement> out;
    std::int64_t imax = (std::int64_t(1) << (n + 1)) - 2;
    for (std::int64_t i = 0; i <= imax; ++i) {
        for (auto& m : e2_block_basis(n, BlockKey{degree.m, degree.p, en, i})) {
            int kap = kappa(m, n);
            if (i > 0) {
                if (mod_pow2(m.t, kap) != 0) continue;
                if (i > (std::int64_t(1) << (kap + 1)) - 2) continue;
                out.push_back(ERBasisElement{m, 0});
            } else {
                out.push_back(ERBasisElement{m, mod_pow2(m.t, kap) == 0 ? 0 : 1});
            }
        }
    }
    return out;
}

std::string er_label(const ERBasisElement& x, int n) {
    std::string base = monomial_label(x.mono, n);
    if (x.w == 0) return base;
    return base == "1" ? "2" : "2*" + base;
}

DistinguishedElement distinguished(int n, DistinguishedName name) {
    assert(n >= 1);
    PageMonomial m;
    m.e.assign(n - 1, 0);
    Degree expected;
    switch (name) {
        case DistinguishedName::Y:
            // v_n^{2^n - 1} (s2)^{-2^n (2^{n-1} - 1)}
            m.en = (std::int64_t(1) << n) - 1;
            m.t = -(std::int64_t(1) << n) * ((std::int64_t(1) << (n - 1)) - 1);
            expected = Degree{lambda_shift(n), 1};
            break;
        case DistinguishedName::X:
            // a * y(n)
            m.i = 1;
            m.en = (std::int64_t(1) << n) - 1;
            m.t = -(std::int64_t(1) << n) * ((std::int64_t(1) << (n - 1)) - 1);
            expected = Degree{lambda_shift(n), 0};
            break;
        case DistinguishedName::Period:
            // v_n^{2^{n+1}} (s2)^{-2^n (2^n - 1)}
            m.en = std::int64_t(1) << (n + 1);
            m.t = -(std::int64_t(1) << n) * ((std::int64_t(1) << n) - 1);
            expected = Degree{period_degree(n), 0};
            break;
    }
    ERBasisElement elem{m, 0};
    if (!er_is_basis_element(n, elem))
        throw DegreeMismatch("distinguished element fails normal-form membership");
    Degree got = monomial_degree(m, n);
    if (got != expected)
        throw DegreeMismatch("distinguished element degree " + to_string(got) +
                             " != closed form " + to_string(expected));
    return DistinguishedElement{name, elem, got};
}

} // namespace ro2ss
