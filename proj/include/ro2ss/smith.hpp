#pragma once
#include <optional>
#include <vector>

#include "ro2ss/errors.hpp"
#include "ro2ss/fg_group.hpp"
#include "ro2ss/matrix.hpp"

namespace ro2ss {

/// d = u * m * v with u, v invertible over Z_(2) (odd determinant) and d
/// diagonal with entries 0 or powers of 2 dividing successively.
struct SmithResult {
    Mat u, d, v;
    std::size_t rank = 0;
};

SmithResult smith(const Mat& m);

/// Columns 2^k * e_i for each torsion generator of g (free generators skipped).
Mat relation_columns(const FGGroup& g);

/// A homomorphism of FGGroups given by a matrix on the named bases.
/// Column j is the image of source generator j; entries into a Z/2^k row are
/// read mod 2^k.
struct Hom {
    Mat mat;
    FGGroup src, dst;

    /// (order of source generator) * (its image) = 0 in the target.
    bool valid() const;
};

Hom zero_hom(const FGGroup& src, const FGGroup& dst);
Hom compose(const Hom& f, const Hom& g); // f after g

/// Solve span z = x exactly over Z_(2); nullopt when x is not in the span.
std::optional<std::vector<Local2>> solve_in_span(const Mat& span, const std::vector<Local2>& x);

/// Membership of x in the subgroup of ambient generated by the columns of gens.
bool member(const Mat& gens, const FGGroup& ambient, const std::vector<Local2>& x);

/// Mutual membership modulo the ambient's torsion relations.
bool subgroup_equal(const Mat& gens1, const Mat& gens2, const FGGroup& ambient);

/// Every column of sub lies in the subgroup generated by sup.
bool subgroup_contains(const Mat& sub, const Mat& sup, const FGGroup& ambient);

/// Generators (columns, in source coordinates) of ker(h) as a subgroup of h.src.
Mat kernel_gens(const Hom& h);

/// Isomorphism class of ker(outof)/im(into).  Throws CompositionNotZero when
/// outof * into does not vanish in outof.dst.
FGGroup subquotient(const Hom& into, const Hom& outof);

FGGroup kernel_group(const Hom& h);
FGGroup cokernel_group(const Hom& h);
bool is_iso(const Hom& h);

} // namespace ro2ss
