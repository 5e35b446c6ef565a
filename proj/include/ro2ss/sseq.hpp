#pragma once
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ro2ss/fg_group.hpp"
#include "ro2ss/local2.hpp"
#include "ro2ss/pages.hpp"

namespace ro2ss {

/// d_r with r = 2^{k+1} - 1, 1 <= k <= n; raises filtration by r, lowers the
/// RO-degree by (1, 0), and shifts en by +1 exactly when k = n.
struct Differential {
    std::int64_t r = 0;
    int k = 0;
};

/// The differential acting on page r for height n, if any.
std::optional<Differential> differential_at(int n, std::int64_t r);

/// Block shift of d_r: (dm, dp, den, di) = (-1, 0, [k = n], r).
struct BlockShift {
    std::int64_t dm = 0, dp = 0, den = 0, di = 0;
};
BlockShift differential_shift(int n, const Differential& d);

/// d_r on a single monomial, extended from d_r(s2^{-2^{k-1}}) = v_k a^r by the
/// Leibniz rule; at most one term, with the scalar already reduced in the
/// target's coefficient group (even multiples of the a-torsion target vanish).
/// Leibniz signs are dropped: every target is 2-torsion, so only the parity of
/// the s2-multiplicity matters; an odd-primary port would have to revisit this.
/// Throws NotOnPage when the s2-exponent contradicts survival to page r.
std::vector<std::pair<Local2, PageMonomial>> apply_differential(int n, std::int64_t r,
                                                                const PageMonomial& m);

/// A surviving class 2^w * monomial.  w = 1 marks a free class whose odd
/// multiples died supporting a differential; such classes are permanent cycles.
struct PageClass {
    PageMonomial mono;
    int w = 0;

    friend bool operator==(const PageClass& a, const PageClass& b) {
        return a.mono == b.mono && a.w == b.w;
    }
};

/// Inclusive block ranges; the unit of window bookkeeping.
struct Box {
    std::int64_t m0 = 0, m1 = -1;
    std::int64_t p0 = 0, p1 = -1;
    std::int64_t en0 = 0, en1 = -1;
    std::int64_t i0 = 0, i1 = -1;

    bool contains(const BlockKey& b) const {
        return b.m >= m0 && b.m <= m1 && b.p >= p0 && b.p <= p1 && b.en >= en0 &&
               b.en <= en1 && b.i >= i0 && b.i <= i1;
    }
    bool contains_box(const Box& o) const {
        return o.m0 >= m0 && o.m1 <= m1 && o.p0 >= p0 && o.p1 <= p1 && o.en0 >= en0 &&
               o.en1 <= en1 && o.i0 >= i0 && o.i1 <= i1;
    }
    /// Bounding box of this u (this + shift) u (this - shift), filtration
    /// clamped at 0.
    Box expanded(const BlockShift& s) const {
        Box b = *this;
        b.m0 -= std::abs(s.dm); b.m1 += std::abs(s.dm);
        b.p0 -= std::abs(s.dp); b.p1 += std::abs(s.dp);
        b.en0 -= std::abs(s.den); b.en1 += std::abs(s.den);
        b.i0 = std::max<std::int64_t>(0, b.i0 - s.di);
        b.i1 += s.di;
        return b;
    }
};

/// Additive basis of one page over a block window; only nonempty blocks are
/// stored.  All values are immutable once built.
struct PageBasis {
    int n = 1;
    std::int64_t r = 2;
    Box window;
    std::unordered_map<BlockKey, std::vector<PageClass>> blocks;

    static const std::vector<PageClass>& empty_block();
    /// Basis of one block; the key must lie inside the window.
    const std::vector<PageClass>& block(const BlockKey& b) const;
};

/// Isomorphism class of one block: Z_(2) per filtration-0 class, Z/2 above.
FGGroup page_block_group(const std::vector<PageClass>& entries, int n);

PageBasis page_e2(int n, const Box& window);

/// Homology at d_r per block, labels carried along; blocks of the requested
/// output window must have both shifted neighbours inside the current window
/// (throws WindowNotClosed otherwise).  Pages without a differential pass
/// through unchanged.  Every block's group is recomputed independently through
/// the subquotient machinery and must agree with the carried labels.
PageBasis turn_page(int n, std::int64_t r, const PageBasis& cur, const Box& out_window,
                    int threads = 1);
/// Same, with the output window shrunk as far as the current one allows.
PageBasis turn_page(int n, std::int64_t r, const PageBasis& cur, int threads = 1);

/// The stable page: iterates through r = 2^{n+1} - 1, widening internally so
/// that every requested block is exact.
PageBasis e_infinity(int n, const Box& window, int threads = 1);

/// Basis of page r over the window (r >= 2); equals e_infinity once r exceeds
/// the last differential.
PageBasis page_at(int n, std::int64_t r, const Box& window, int threads = 1);

} // namespace ro2ss
