#include "rpde/operator.hpp"

namespace rpde {

ModeMap::ModeMap(const Box& box, const Subspace& sub, int n_scalars)
    : box_(box), sub_(sub), n_scalars_(static_cast<std::size_t>(n_scalars)) {
    slot_of_flat_.assign(box.size(), -1);
    for (std::size_t f = 0; f < box.size(); ++f) {
        MIdx m = box.unflat(f);
        if (!sub.active(m, box)) continue;
        if (sub.odd_x && m[0] < 0) continue;  // representative has k >= 1
        slot_of_flat_[f] = static_cast<int>(modes_.size());
        modes_.push_back(m);
    }
}

std::optional<ModeMap::Hit> ModeMap::find(const MIdx& m) const {
    if (!box_.inside(m) || !sub_.active(m, box_)) return std::nullopt;
    MIdx rep = m;
    double factor = 1.0;
    if (sub_.odd_x && m[0] < 0) {
        rep[0] = -m[0];
        factor = -1.0;
    }
    int s = slot_of_flat_[box_.flat(rep)];
    if (s < 0) return std::nullopt;
    return Hit{static_cast<std::size_t>(s), factor};
}

Interval ModeMap::slot_weight(std::size_t slot, const WeightVec& w) const {
    if (slot >= modes_.size()) return Interval(1.0);  // scalar slot
    Interval base = weight_at(w, box_, modes_[slot]);
    if (sub_.odd_x && modes_[slot][0] != 0) return Interval(2.0) * base;
    return base;
}

BlockTailOperator BlockTailOperator::identity(const ModeMap& m, const WeightVec& w) {
    BlockTailOperator t;
    t.map = m;
    t.block = CIMatrix::identity(m.size());
    t.src_weight = w;
    t.dst_weight = w;
    t.has_tail = true;
    t.tail_num = DiagSymbol::one();
    t.tail_den = DiagSymbol::one();
    return t;
}

Interval bordered_norm(const Bordered& x) {
    Interval s = norm_l1w(x.seq);
    for (const auto& v : x.scalars) s += abs(v);
    return s;
}

Interval op_norm(const BlockTailOperator& T) {
    const ModeMap& mm = T.map;
    if (T.block.rows() != mm.size() || T.block.cols() != mm.size())
        throw SpaceError("op_norm: block shape does not match mode map");
    Interval best(0.0);
    for (std::size_t m = 0; m < mm.size(); ++m) {
        Interval colsum(0.0);
        for (std::size_t n = 0; n < mm.size(); ++n) {
            const CInterval& e = T.block(n, m);
            if (is_zero(e)) continue;
            colsum += cabs(e) * mm.slot_weight(n, T.dst_weight);
        }
        Interval q = colsum / mm.slot_weight(m, T.src_weight);
        best = Interval(std::max(best.lo, q.lo), std::max(best.hi, q.hi));
    }
    if (T.has_tail) {
        Interval t = TailBound::sup_outside(T.tail_num, T.tail_den, mm.box(), mm.sub(),
                                            T.src_weight, T.dst_weight);
        best = Interval(std::max(best.lo, t.lo), std::max(best.hi, t.hi));
    }
    return best;
}

Interval compose_bound(const BlockTailOperator& A, const BlockTailOperator& B) {
    for (int d = 0; d < 3; ++d)
        if (!(A.src_weight[d] == B.dst_weight[d]))
            throw SpaceError("compose_bound: via-weight mismatch");
    return op_norm(A) * op_norm(B);
}

Interval neumann_bound(const BlockTailOperator& B, const BlockTailOperator& A) {
    if (B.map.size() != A.map.size() || !(B.map.box() == A.map.box()))
        throw SpaceError("neumann_bound: operator domains differ");
    BlockTailOperator E;
    E.map = B.map;
    E.src_weight = A.src_weight;
    E.dst_weight = B.dst_weight;
    const std::size_t n = B.map.size();
    E.block = CIMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            CInterval s = (i == j) ? CInterval(Interval(1.0)) : CInterval();
            for (std::size_t k = 0; k < n; ++k) {
                if (is_zero(B.block(i, k)) || is_zero(A.block(k, j))) continue;
                s -= B.block(i, k) * A.block(k, j);
            }
            E.block(i, j) = s;
        }
    if (B.has_tail || A.has_tail) {
        // tail of I - B A is (den_B - num_B num_A/den_A)/den_B; our uses have
        // den_A = 1 and num_B = 1, giving (den_B - num_A)/den_B
        if (!A.has_tail || !B.has_tail)
            throw SpaceError("neumann_bound: mixed finite/tail operators unsupported");
        E.has_tail = true;
        E.tail_num = B.tail_den - A.tail_num;
        E.tail_den = B.tail_den;
    }
    Interval alpha = op_norm(E);
    if (!(alpha.hi < 1.0))
        throw NotContractingError("neumann_bound: alpha >= 1 (alpha up to " +
                                  std::to_string(alpha.hi) + ")");
    return Interval(1.0) / (Interval(1.0) - Interval(alpha.hi));
}

Bordered apply(const BlockTailOperator& B, const Bordered& x) {
    const ModeMap& mm = B.map;
    if (x.scalars.size() != mm.n_scalars())
        throw SpaceError("apply: scalar count mismatch");
    if (!x.seq.box.same_shape(mm.box())) throw SpaceError("apply: box shape mismatch");

    // gather block coordinates
    std::vector<CInterval> in(mm.size());
    for (std::size_t s = 0; s < mm.n_modes(); ++s) in[s] = x.seq.at_or_zero(mm.mode(s));
    for (std::size_t s = 0; s < mm.n_scalars(); ++s)
        in[mm.n_modes() + s] = CInterval(x.scalars[s]);

    std::vector<CInterval> out = B.block * in;

    Bordered y;
    y.seq = FourierSeq(x.seq.box, x.seq.weight, x.seq.sym);
    // scatter block result to representatives (+ mirrored partners)
    for (std::size_t s = 0; s < mm.n_modes(); ++s) {
        const MIdx& m = mm.mode(s);
        y.seq.at(m) += out[s];
        if (mm.reduced() && m[0] != 0) {
            MIdx mneg = m;
            mneg[0] = -m[0];
            if (y.seq.box.inside(mneg)) y.seq.at(mneg) -= out[s];
        }
    }
    // diagonal tail action on coefficients outside the operator block's box
    for (std::size_t f = 0; f < x.seq.c.size(); ++f) {
        const CInterval& z = x.seq.c[f];
        if (is_zero(z)) continue;
        MIdx m = x.seq.box.unflat(f);
        if (mm.box().inside(m)) continue;
        if (!B.has_tail)
            throw SpaceError("apply: coefficient outside block box but operator has no tail");
        y.seq.at(m) += B.tail_at(m) * z;
    }
    // incoming tail mass is processed by the tail symbol outside x's box
    if (x.seq.tail.hi > 0.0) {
        if (!B.has_tail) throw SpaceError("apply: sequence tail but operator has no tail");
        Interval sup = TailBound::sup_outside(B.tail_num, B.tail_den, x.seq.box, mm.sub(),
                                              B.src_weight, B.dst_weight);
        y.seq.tail = Interval(0.0, (x.seq.tail * Interval(0.0, sup.hi)).hi);
    }
    y.scalars.assign(mm.n_scalars(), Interval(0.0));
    for (std::size_t s = 0; s < mm.n_scalars(); ++s) {
        const CInterval& v = out[mm.n_modes() + s];
        // scalar rows of our bordered systems are real
        y.scalars[s] = v.re;
    }
    return y;
}

}  // namespace rpde
