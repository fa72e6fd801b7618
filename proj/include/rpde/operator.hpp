#pragma once

#include <optional>

#include "rpde/tailbound.hpp"

namespace rpde {

/// Ordered coordinate system for finite operator blocks: one slot per active
/// representative multi-index plus trailing scalar slots (phase rows,
/// normalizations, frequency/eigenvalue unknowns).
///
/// In the odd-x subspace an index pair (k,...) / (-k,...) carries a single
/// slot for the combination e_k - e_{-k}; the slot weight doubles
/// accordingly, which keeps the weighted-l1 column-sum formula exact on the
/// reduced coordinates.
class ModeMap {
  public:
    ModeMap() = default;
    ModeMap(const Box& box, const Subspace& sub, int n_scalars);

    std::size_t n_modes() const { return modes_.size(); }
    std::size_t n_scalars() const { return n_scalars_; }
    std::size_t size() const { return modes_.size() + n_scalars_; }
    const MIdx& mode(std::size_t slot) const { return modes_[slot]; }
    const Box& box() const { return box_; }
    const Subspace& sub() const { return sub_; }
    bool reduced() const { return sub_.odd_x; }

    struct Hit {
        std::size_t slot;
        double factor;
    };
    /// Slot carrying the coefficient of an arbitrary in-box active index,
    /// with the parity factor of the reduction (or nullopt if inactive or
    /// outside the box).
    std::optional<Hit> find(const MIdx& m) const;

    /// Weight of a slot in the reduced coordinates.
    Interval slot_weight(std::size_t slot, const WeightVec& w) const;

  private:
    Box box_;
    Subspace sub_;
    std::vector<MIdx> modes_;
    std::vector<int> slot_of_flat_;
    std::size_t n_scalars_ = 0;
};

/// Finite interval block on the modes inside a box plus a diagonal symbol
/// ratio num/den on every mode outside it.  Cross coupling between block
/// and tail is zero by construction.
struct BlockTailOperator {
    ModeMap map;
    CIMatrix block;
    WeightVec src_weight{};
    WeightVec dst_weight{};
    bool has_tail = false;
    DiagSymbol tail_num = DiagSymbol::one();
    DiagSymbol tail_den = DiagSymbol::one();

    static BlockTailOperator identity(const ModeMap& m, const WeightVec& w);

    CInterval tail_at(const MIdx& n) const {
        return tail_num.eval(n) / tail_den.eval(n);
    }
};

/// Sequence-plus-scalars element of a bordered product space, with the
/// l1-sum norm ||u|| + sum |scalar_i|.
struct Bordered {
    FourierSeq seq;
    std::vector<Interval> scalars;
};

Interval bordered_norm(const Bordered& x);

/// Operator norm via the weighted column-sup formula: exact (up to rounding)
/// on the finite block, certified symbol supremum on the tail.
Interval op_norm(const BlockTailOperator& T);

/// Two-spaces bound ||A B|| <= ||A|| ||B|| through the shared via-weight.
Interval compose_bound(const BlockTailOperator& A, const BlockTailOperator& B);

/// Neumann-series bound: with alpha = ||I - B A|| < 1 certifies that B A is
/// invertible (hence A injective) and returns 1/(1-alpha).
Interval neumann_bound(const BlockTailOperator& B, const BlockTailOperator& A);

/// Action of a block+tail operator on a bordered element whose sequence box
/// may be larger than the operator block's box; out-of-block coefficients
/// are processed by the diagonal tail symbol.
Bordered apply(const BlockTailOperator& B, const Bordered& x);

}  // namespace rpde
