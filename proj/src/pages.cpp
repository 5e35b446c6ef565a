#include "ro2ss/pages.hpp"

#include <cassert>

namespace ro2ss {

std::int64_t monomial_weight(const PageMonomial& m, int n) {
    assert(static_cast<int>(m.e.size()) == n - 1);
    std::int64_t w = 0;
    for (int k = 1; k < n; ++k) w += m.e[k - 1] * ((std::int64_t(1) << k) - 1);
    w += m.en * ((std::int64_t(1) << n) - 1);
    return w;
}

Degree monomial_degree(const PageMonomial& m, int n) {
    std::int64_t w = monomial_weight(m, n);
    return Degree{w - 2 * m.t, w + 2 * m.t - m.i};
}

std::string monomial_label(const PageMonomial& m, int n) {
    std::string s;
    auto push = [&s](const std::string& base, std::int64_t exp) {
        if (exp == 0) return;
        if (!s.empty()) s += "*";
        s += base;
        if (exp != 1) s += "^" + std::to_string(exp);
    };
    push("a", m.i);
    for (int k = 1; k < n; ++k) push("v" + std::to_string(k), m.e[k - 1]);
    push("v" + std::to_string(n), m.en);
    push("s2", m.t);
    if (s.empty()) s = "1";
    return s;
}

namespace {

void compose_rec(std::int64_t w, int k, int n, std::vector<std::int64_t>& cur,
                 std::vector<std::vector<std::int64_t>>& out) {
    if (k == n) {
        if (w == 0) out.push_back(cur);
        return;
    }
    std::int64_t wk = (std::int64_t(1) << k) - 1;
    if (k == n - 1) {
        // last slot: exact division or nothing
        if (w >= 0 && w % wk == 0) {
            cur.push_back(w / wk);
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    for (std::int64_t ek = 0; ek * wk <= w; ++ek) {
        cur.push_back(ek);
        compose_rec(w - ek * wk, k + 1, n, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<std::vector<std::int64_t>> weight_compositions(std::int64_t w, int n) {
    std::vector<std::vector<std::int64_t>> out;
    if (w < 0) return out;
    std::vector<std::int64_t> cur;
    compose_rec(w, 1, n, cur, out);
    return out;
}

std::vector<PageMonomial> e2_block_basis(int n, const BlockKey& b) {
    std::vector<PageMonomial> out;
    if (b.i < 0) return out;
    // m = W - 2t, p = W + 2t - i  =>  W = (m + p + i)/2, t = (W - m)/2
    std::int64_t s = b.m + b.p + b.i;
    if (s % 2 != 0) return out;
    std::int64_t w = s / 2;
    std::int64_t tt = w - b.m;
    if (tt % 2 != 0) return out;
    std::int64_t t = tt / 2;
    std::int64_t we = w - b.en * ((std::int64_t(1) << n) - 1);
    for (auto& e : weight_compositions(we, n))
        out.push_back(PageMonomial{b.i, e, b.en, t});
    return out;
}

} // namespace ro2ss
