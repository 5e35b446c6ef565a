#include "ro2ss/sseq.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "ro2ss/erring.hpp"
#include "ro2ss/errors.hpp"
#include "ro2ss/parallel.hpp"
#include "ro2ss/smith.hpp"

namespace ro2ss {

std::optional<Differential> differential_at(int n, std::int64_t r) {
    for (int k = 1; k <= n; ++k)
        if ((std::int64_t(1) << (k + 1)) - 1 == r) return Differential{r, k};
    return std::nullopt;
}

BlockShift differential_shift(int n, const Differential& d) {
    return BlockShift{-1, 0, d.k == n ? 1 : 0, d.r};
}

std::vector<std::pair<Local2, PageMonomial>> apply_differential(int n, std::int64_t r,
                                                                const PageMonomial& m) {
    auto d = differential_at(n, r);
    if (!d) return {};
    std::int64_t half = std::int64_t(1) << (d->k - 1); // s2-exponent of sigma^{2^k}
    if (((m.t % half) + half) % half != 0)
        throw NotOnPage("s2-exponent " + std::to_string(m.t) +
                        " is not divisible by 2^" + std::to_string(d->k - 1) +
                        ", class cannot live on page " + std::to_string(r));
    std::int64_t q = m.t / half; // number of sigma^{2^k} factors
    if (q % 2 == 0) return {};   // even multiple of the a-torsion target
    PageMonomial tgt = m;
    tgt.i += r;
    if (d->k < n)
        tgt.e[d->k - 1] += 1;
    else
        tgt.en += 1;
    tgt.t += half;
    return {{Local2(1), tgt}};
}

const std::vector<PageClass>& PageBasis::empty_block() {
    static const std::vector<PageClass> empty;
    return empty;
}

const std::vector<PageClass>& PageBasis::block(const BlockKey& b) const {
    assert(window.contains(b));
    auto it = blocks.find(b);
    return it == blocks.end() ? empty_block() : it->second;
}

FGGroup page_block_group(const std::vector<PageClass>& entries, int n) {
    FGGroup g;
    for (const auto& x : entries) {
        std::string label = monomial_label(x.mono, n);
        if (x.w == 1) label = label == "1" ? "2" : "2*" + label;
        if (x.mono.i == 0)
            g.add_free(label);
        else
            g.add_torsion(label, 1);
    }
    return g;
}

PageBasis page_e2(int n, const Box& window) {
    PageBasis pb;
    pb.n = n;
    pb.r = 2;
    pb.window = window;
    for (std::int64_t m = window.m0; m <= window.m1; ++m)
        for (std::int64_t p = window.p0; p <= window.p1; ++p)
            for (std::int64_t en = window.en0; en <= window.en1; ++en)
                for (std::int64_t i = std::max<std::int64_t>(0, window.i0); i <= window.i1; ++i) {
                    BlockKey key{m, p, en, i};
                    auto basis = e2_block_basis(n, key);
                    if (basis.empty()) continue;
                    std::vector<PageClass> entries;
                    entries.reserve(basis.size());
                    for (auto& mono : basis) entries.push_back(PageClass{std::move(mono), 0});
                    pb.blocks.emplace(key, std::move(entries));
                }
    return pb;
}

namespace {

std::vector<PageClass> turn_block(int n, const Differential& d, const BlockShift& sh,
                                  const PageBasis& cur, const BlockKey& b) {
    const auto& entries = cur.block(b);
    BlockKey out_key{b.m + sh.dm, b.p + sh.dp, b.en + sh.den, b.i + sh.di};
    BlockKey in_key{b.m - sh.dm, b.p - sh.dp, b.en - sh.den, b.i - sh.di};
    const auto& out_entries = cur.block(out_key);
    const auto& in_entries =
        in_key.i < 0 ? PageBasis::empty_block() : cur.block(in_key);

    // index of the differential's target among the surviving classes of the
    // shifted block; absent target means the class already died, so the
    // induced differential vanishes here.  A class whose s2-exponent is off
    // this page's lattice only survived because its own target died at an
    // earlier page; it is a permanent cycle and can never be a target (targets
    // always sit on the lattice), so the differential ignores it entirely.
    std::int64_t half = std::int64_t(1) << (d.k - 1);
    auto target_index = [&](const PageClass& x,
                            const std::vector<PageClass>& tgt) -> std::optional<std::size_t> {
        if (x.w != 0) return std::nullopt;
        if (((x.mono.t % half) + half) % half != 0) return std::nullopt;
        auto terms = apply_differential(n, d.r, x.mono);
        if (terms.empty()) return std::nullopt;
        for (std::size_t j = 0; j < tgt.size(); ++j)
            if (tgt[j].mono == terms[0].second) return j;
        return std::nullopt;
    };

    std::vector<char> is_boundary(entries.size(), 0);
    for (const auto& y : in_entries) {
        auto j = target_index(y, entries);
        if (j) is_boundary[*j] = 1;
    }

    std::vector<PageClass> result;
    std::vector<std::optional<std::size_t>> out_target(entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto& x = entries[i];
        out_target[i] = target_index(x, out_entries);
        if (is_boundary[i]) {
            assert(x.mono.i > 0 && x.w == 0);
            if (out_target[i])
                throw CompositionNotZero("boundary supports a differential at " + b.str());
            continue;
        }
        if (!out_target[i]) {
            result.push_back(x);
        } else if (x.mono.i == 0) {
            result.push_back(PageClass{x.mono, 1}); // odd multiples die, 2x survives
        } // torsion class with surviving target: not a cycle, dies
    }

    // independent route: the same homology as an exact kernel/image subquotient
    FGGroup gb = page_block_group(entries, n);
    FGGroup gin = page_block_group(in_entries, n);
    FGGroup gout = page_block_group(out_entries, n);
    Hom into{Mat(gb.size(), gin.size()), gin, gb};
    for (std::size_t j = 0; j < in_entries.size(); ++j) {
        auto ti = target_index(in_entries[j], entries);
        if (ti) into.mat.at(*ti, j) = Local2(1);
    }
    Hom outof{Mat(gout.size(), gb.size()), gb, gout};
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (out_target[i]) outof.mat.at(*out_target[i], i) = Local2(1);
    FGGroup homology = subquotient(into, outof);
    FGGroup claimed = page_block_group(result, n);
    if (!iso(homology, claimed))
        throw std::logic_error("page-turn mismatch at " + b.str() + ": labels give " +
                               claimed.str() + ", subquotient gives " + homology.str());
    return result;
}

} // namespace

PageBasis turn_page(int n, std::int64_t r, const PageBasis& cur, const Box& out_window,
                    int threads) {
    assert(n == cur.n && r >= cur.r);
    PageBasis out;
    out.n = n;
    out.r = r + 1;
    out.window = out_window;
    auto d = differential_at(n, r);
    if (!d) {
        if (!cur.window.contains_box(out_window))
            throw WindowNotClosed("output window exceeds the current page window");
        for (const auto& [key, v] : cur.blocks)
            if (out_window.contains(key)) out.blocks.emplace(key, v);
        return out;
    }
    BlockShift sh = differential_shift(n, *d);
    if (!cur.window.contains_box(out_window.expanded(sh)))
        throw WindowNotClosed("window not closed under the d_" + std::to_string(r) +
                              " block shift");
    std::vector<BlockKey> keys;
    for (const auto& [key, v] : cur.blocks)
        if (out_window.contains(key)) keys.push_back(key);
    std::sort(keys.begin(), keys.end());
    std::vector<std::vector<PageClass>> results(keys.size());
    parallel_for(keys.size(), threads,
                 [&](std::size_t idx) { results[idx] = turn_block(n, *d, sh, cur, keys[idx]); });
    for (std::size_t idx = 0; idx < keys.size(); ++idx)
        if (!results[idx].empty()) out.blocks.emplace(keys[idx], std::move(results[idx]));
    return out;
}

PageBasis turn_page(int n, std::int64_t r, const PageBasis& cur, int threads) {
    Box out = cur.window;
    if (auto d = differential_at(n, r)) {
        BlockShift sh = differential_shift(n, *d);
        out.m0 += 1; out.m1 -= 1;
        out.en0 += std::abs(sh.den); out.en1 -= std::abs(sh.den);
        // filtration below 0 is empty, so a window starting at 0 stays closed
        out.i0 = cur.window.i0 == 0 ? 0 : cur.window.i0 + sh.di;
        out.i1 -= sh.di;
    }
    return turn_page(n, r, cur, out, threads);
}

PageBasis page_at(int n, std::int64_t r, const Box& window, int threads) {
    assert(r >= 2);
    std::vector<Differential> diffs;
    for (int k = 1; k <= n; ++k) {
        std::int64_t dr = (std::int64_t(1) << (k + 1)) - 1;
        if (dr < r) diffs.push_back(Differential{dr, k});
    }
    std::vector<Box> windows(diffs.size() + 1);
    windows.back() = window;
    for (std::size_t idx = diffs.size(); idx-- > 0;)
        windows[idx] = windows[idx + 1].expanded(differential_shift(n, diffs[idx]));
    PageBasis basis = page_e2(n, windows.front());
    for (std::size_t idx = 0; idx < diffs.size(); ++idx)
        basis = turn_page(n, diffs[idx].r, basis, windows[idx + 1], threads);
    basis.r = r;
    return basis;
}

PageBasis e_infinity(int n, const Box& window, int threads) {
    return page_at(n, std::int64_t(1) << (n + 1), window, threads);
}

} // namespace ro2ss
