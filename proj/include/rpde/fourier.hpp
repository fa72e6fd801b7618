#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rpde/linalg.hpp"

namespace rpde {

enum class DimKind : uint8_t { fourier, taylor };

/// Symmetry class of the represented function (in the x variable for the
/// parity flags; `real` means u(-x) pattern unknown but u real-valued).
enum class Symmetry : uint8_t { none, real, even_real, odd_real };

/// Per-dimension weight W(n) = (1+|n|)^mu1 * exp(mu2*|n|).  Submultiplicative
/// and >= 1 for mu1, mu2 >= 0, which is what the Banach-algebra property
/// needs.
struct Weight {
    double mu1 = 0.0;
    double mu2 = 0.0;
    bool operator==(const Weight&) const = default;
};

using WeightVec = std::array<Weight, 3>;

/// Rigorous enclosure of W(n) for one dimension.
Interval weight_of(const Weight& w, long n);

struct MIdx {
    std::array<int, 3> v{0, 0, 0};
    int& operator[](int d) { return v[d]; }
    int operator[](int d) const { return v[d]; }
    bool operator==(const MIdx&) const = default;
};

inline MIdx operator+(const MIdx& a, const MIdx& b) {
    return MIdx{{a.v[0] + b.v[0], a.v[1] + b.v[1], a.v[2] + b.v[2]}};
}
inline MIdx operator-(const MIdx& a) { return MIdx{{-a.v[0], -a.v[1], -a.v[2]}}; }

/// Truncation box: Fourier dimensions range over [-N, N], Taylor dimensions
/// over [0, N].
struct Box {
    int dims = 1;
    std::array<DimKind, 3> kind{DimKind::fourier, DimKind::fourier, DimKind::fourier};
    std::array<int, 3> n{0, 0, 0};

    static Box fourier1(int nx);
    static Box fourier2(int nx, int ntheta);
    static Box fourier_taylor(int nx, int ns);
    static Box fourier2_taylor(int nx, int ntheta, int ns);

    int lo(int d) const { return kind[d] == DimKind::fourier ? -n[d] : 0; }
    int hi(int d) const { return n[d]; }
    long extent(int d) const { return hi(d) - lo(d) + 1; }
    bool inside(const MIdx& m) const {
        for (int d = 0; d < dims; ++d)
            if (m[d] < lo(d) || m[d] > hi(d)) return false;
        return true;
    }
    std::size_t size() const {
        std::size_t s = 1;
        for (int d = 0; d < dims; ++d) s *= static_cast<std::size_t>(extent(d));
        return s;
    }
    std::size_t flat(const MIdx& m) const {
        std::size_t f = 0;
        for (int d = 0; d < dims; ++d)
            f = f * static_cast<std::size_t>(extent(d)) +
                static_cast<std::size_t>(m[d] - lo(d));
        return f;
    }
    MIdx unflat(std::size_t f) const {
        MIdx m;
        for (int d = dims - 1; d >= 0; --d) {
            auto e = static_cast<std::size_t>(extent(d));
            m[d] = static_cast<int>(f % e) + lo(d);
            f /= e;
        }
        return m;
    }
    /// Componentwise max of two compatible boxes.
    static Box join(const Box& a, const Box& b);
    /// Same kinds, padded by the given extra size per dimension.
    Box padded(const std::array<int, 3>& extra) const;
    bool same_shape(const Box& b) const { return dims == b.dims && kind == b.kind; }
    bool operator==(const Box&) const = default;
};

/// Finitely many interval coefficients on a Fourier(xTaylor) index box plus
/// a scalar bound on the weighted-l1 mass of everything outside the box.
///
/// The represented class is { u = sum a_n phi_n : listed coefficients inside
/// their intervals, unlisted coefficients with total weighted mass <= tail }.
struct FourierSeq {
    Box box;
    WeightVec weight{};
    Symmetry sym = Symmetry::none;
    std::vector<CInterval> c;
    Interval tail{0.0};

    FourierSeq() = default;
    FourierSeq(const Box& b, const WeightVec& w, Symmetry s = Symmetry::none)
        : box(b), weight(w), sym(s), c(b.size()) {}

    const CInterval& at(const MIdx& m) const { return c[box.flat(m)]; }
    CInterval& at(const MIdx& m) { return c[box.flat(m)]; }
    /// Coefficient at an arbitrary index: zero outside the box.
    CInterval at_or_zero(const MIdx& m) const {
        return box.inside(m) ? c[box.flat(m)] : CInterval();
    }
    void set(const MIdx& m, const CInterval& z) { c[box.flat(m)] = z; }

    /// Unit basis sequence e_m.
    static FourierSeq basis(const Box& b, const WeightVec& w, const MIdx& m,
                            Symmetry s = Symmetry::none);

    bool has_finite_support() const { return tail.hi == 0.0; }
};

/// Rigorous weight of a multi-index (product over dimensions).
Interval weight_at(const WeightVec& w, const Box& box, const MIdx& m);

/// Enclosure of the weighted l1 norm; the upper endpoint bounds the norm of
/// every member of the represented class.
Interval norm_l1w(const FourierSeq& u);
/// Norm of the in-box part only (no tail term).
Interval norm_box(const FourierSeq& u);

/// Discrete convolution with certified tail bookkeeping.  The result box
/// defaults to the componentwise join of the operand boxes; products landing
/// outside it spill into the tail, so that norm(conv(u,v)) <= norm(u)norm(v)
/// stays certified.
FourierSeq conv(const FourierSeq& u, const FourierSeq& v,
                const std::optional<Box>& result_box = std::nullopt);

/// L2 pairing sum a_n conj(b_n) (orthonormal basis normalization).
Interval inner_l2(const FourierSeq& u, const FourierSeq& v);

/// sup_n |v_n| / W_n for finitely supported v: the dual norm of the
/// functional u -> <u, v>.
Interval dual_norm(const FourierSeq& v, const WeightVec& w);

FourierSeq operator+(const FourierSeq& u, const FourierSeq& v);
FourierSeq operator-(const FourierSeq& u, const FourierSeq& v);
FourierSeq operator*(const Interval& s, const FourierSeq& u);
FourierSeq operator*(const CInterval& s, const FourierSeq& u);

/// How a diagonal symbol acts on the x-parity of the stored symmetry flag.
enum class SymbolParity : uint8_t { even, odd, mixed };

/// a_n -> sym(n) a_n for a caller-supplied diagonal symbol.  Requires finite
/// support (tail == 0) unless `tail_sup` supplies a certified bound for
/// sup_{n outside box} |sym(n)| W'_n / W_n; throws SpaceError otherwise.
FourierSeq apply_diag(const FourierSeq& u, const std::function<CInterval(const MIdx&)>& sym,
                      SymbolParity parity,
                      const std::optional<Interval>& tail_sup = std::nullopt,
                      const std::optional<WeightVec>& target_weight = std::nullopt);

/// Resulting symmetry flag of a convolution of two flagged sequences.
Symmetry conv_symmetry(Symmetry a, Symmetry b);

/// Midpoint projection onto the exact symmetry class (frontend use).
void project_symmetry(FourierSeq& u);

/// Verifies the coefficient pattern of the stored symmetry flag holds
/// enclosure-wise; throws SymmetryError if some pair is incompatible.
void check_symmetry(const FourierSeq& u);

// -- sequence files ---------------------------------------------------------

/// Structured text with header (dims, box, weights, symmetry), coefficients
/// as dual decimal/hex interval strings, and the tail interval.  Bit-exact
/// round trip through the hex forms.
std::string seq_to_text(const FourierSeq& u);
FourierSeq seq_from_text(const std::string& text);

}  // namespace rpde
