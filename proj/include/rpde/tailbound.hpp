#pragma once

#include "rpde/symbol.hpp"

namespace rpde {

/// Index-subspace restriction of a problem: which multi-indices carry
/// unknowns.  `odd_x` drops every index with k = 0 (and implies the paired
/// reduction handled by the operator layer); `zero_mean` drops only the
/// all-zero index.
struct Subspace {
    bool odd_x = false;
    bool zero_mean = false;

    bool active(const MIdx& m, const Box& box) const {
        if (odd_x && m[0] == 0) return false;
        if (zero_mean) {
            bool all0 = true;
            for (int d = 0; d < box.dims; ++d) all0 = all0 && (m[d] == 0);
            if (all0) return false;
        }
        return true;
    }
};

/// Certified suprema of diagonal symbol ratios over the modes outside a
/// truncation box.  These bounds are what makes the block-plus-tail operator
/// norms finite computations: the finite block is handled column by column,
/// and everything beyond the box is controlled here by monotone-tail
/// arguments on polynomial ratios.
///
/// Supported numerators: zero, a polynomial symbol in the x index (this
/// includes constants and i*k), or the pure i*j theta symbol.  Denominators
/// are the full family (the three preconditioner denominators and their
/// differences).  Throws SpaceError when the requested ratio is unbounded in
/// the declared weights and ResonantTailError when the denominator cannot be
/// certified away from zero outside the box.
class TailBound {
  public:
    /// sup over active n outside `box` of |num(n)/den(n)| * W_dst(n)/W_src(n).
    static Interval sup_outside(const DiagSymbol& num, const DiagSymbol& den, const Box& box,
                                const Subspace& sub, const WeightVec& src, const WeightVec& dst);

    /// Equal-weight convenience overload.
    static Interval sup_outside(const DiagSymbol& num, const DiagSymbol& den, const Box& box,
                                const Subspace& sub);

    /// sup over ALL active modes (one-dimensional boxes only); used for
    /// norms of purely diagonal operators between different weights.
    static Interval sup_all_1d(const DiagSymbol& num, const DiagSymbol& den, const Box& box,
                               const Subspace& sub, const WeightVec& src, const WeightVec& dst);

    /// Lower bound for |den(n)| over active modes outside the box; throws
    /// ResonantTailError if positivity cannot be certified.
    static Interval min_abs_outside(const DiagSymbol& den, const Box& box, const Subspace& sub);

    /// sup over integer k with |k| > K (all k if K < 0) of
    /// sqrt(N2(k)/D2(k)) * (1+|k|)^dmu1 * exp(dmu2 |k|); N2 >= 0 and D2 > 0
    /// are required and certified on the range.  Exposed for tests.
    static Interval sup_sqrt_ratio_1d(const IPoly& N2, const IPoly& D2, long K,
                                      bool exclude_zero, double dmu1, double dmu2);
};

}  // namespace rpde
