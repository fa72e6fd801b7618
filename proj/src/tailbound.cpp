#include "rpde/tailbound.hpp"

#include <algorithm>
#include <cmath>

namespace rpde {

namespace {

bool iv_is_zero(const Interval& v) { return v.lo == 0.0 && v.hi == 0.0; }

// running max of an interval-valued quantity: the enclosure of the sup
void max_into(Interval& acc, const Interval& g) {
    acc = Interval(std::max(acc.lo, g.lo), std::max(acc.hi, g.hi));
}

// (1+|k|)^dmu1 * exp(dmu2*|k|) as an interval, |k| exact
Interval wratio_at(long absk, double dmu1, double dmu2) {
    Interval r(1.0);
    if (dmu1 != 0.0) {
        Interval base(static_cast<double>(1 + absk));
        double ip = 0.0;
        if (std::modf(dmu1, &ip) == 0.0 && std::fabs(dmu1) <= 60.0) {
            int e = static_cast<int>(dmu1);
            r = (e >= 0) ? pow_int(base, e) : Interval(1.0) / pow_int(base, -e);
        } else {
            r = pow_real(base, Interval(dmu1));
        }
    }
    if (dmu2 != 0.0) r *= exp(Interval(dmu2) * Interval(static_cast<double>(absk)));
    return r;
}

// certifies P(k) >= B * k^deg > 0 for all real k >= M; returns the lower
// bound factor B (interval), or throws.
Interval poly_positive_beyond(const IPoly& P, long M, const char* what) {
    if (P.is_zero()) throw ResonantTailError(std::string(what) + ": zero polynomial");
    int d = P.deg();
    Interval lead = P.c[static_cast<std::size_t>(d)];
    Interval b = lead;
    Interval mI(static_cast<double>(M));
    for (int i = 0; i < d; ++i) {
        // |c_i| k^i <= |c_i| M^(i-d) k^d for k >= M
        Interval m = Interval(mag(P.c[static_cast<std::size_t>(i)]));
        b -= m / pow_int(mI, d - i);
    }
    if (!(b.lo > 0.0))
        throw ResonantTailError(std::string(what) + ": cannot certify positivity beyond horizon");
    return b;
}

}  // namespace

Interval TailBound::sup_sqrt_ratio_1d(const IPoly& N2, const IPoly& D2, long K, bool exclude_zero,
                                      double dmu1, double dmu2) {
    if (N2.is_zero()) return Interval(0.0);
    if (dmu2 > 0.0) throw SpaceError("tail sup: exponentially growing weight ratio");

    int dn = N2.deg(), dd = D2.deg();
    double cexp = 0.5 * (dn - dd) + dmu1;  // growth exponent of the envelope
    if (dmu2 == 0.0 && cexp > 0.0)
        throw SpaceError("tail sup: ratio unbounded in the declared weights");

    // pick a horizon where the envelope bounds become usable
    long M = std::max({K + 1, 64L, 4L * (dd + 1)});
    Interval envB(0.0), envBr(0.0);
    for (int tries = 0;; ++tries) {
        try {
            envB = poly_positive_beyond(D2, M, "tail sup denominator");
            envBr = poly_positive_beyond(D2.reflected(), M, "tail sup denominator (k<0)");
            break;
        } catch (const ResonantTailError&) {
            if (tries >= 14) throw;
            M *= 2;
        }
    }

    Interval best(0.0);
    auto scan_side = [&](const IPoly& n2, const IPoly& d2) {
        long k0 = std::max(K + 1, 0L);
        if (k0 == 0 && exclude_zero) k0 = 1;
        for (long k = k0; k <= M; ++k) {
            Interval den = d2.eval(k);
            if (!(den.lo > 0.0))
                throw ResonantTailError("tail sup: denominator not certified positive at k=" +
                                        std::to_string(k));
            Interval num = n2.eval(k);
            Interval g = sqrt(Interval(std::max(num.lo, 0.0), std::max(num.hi, 0.0)) / den);
            if (dmu1 != 0.0 || dmu2 != 0.0) g *= wratio_at(k, dmu1, dmu2);
            max_into(best, g);
        }
    };
    scan_side(N2, D2);
    scan_side(N2.reflected(), D2.reflected());

    // envelope for |k| > M: N2(k) <= A2 k^dn and D2(k) >= B2 k^dd there,
    // with A2 from coefficient magnitudes (|k|-symmetric, so one A2 serves
    // both signs) and B2 the smaller of the two one-sided certificates
    Interval A2(0.0);
    Interval mI(static_cast<double>(M));
    for (int i = 0; i <= dn; ++i)
        A2 += Interval(mag(N2.c[static_cast<std::size_t>(i)])) / pow_int(mI, dn - i);
    double B2lo = std::min(envB.lo, envBr.lo);
    Interval C = sqrt(Interval(0.0, A2.hi) / Interval(B2lo));
    if (dmu1 > 0.0) C *= pow_real(Interval(2.0), Interval(dmu1));  // (1+k)^a <= (2k)^a

    Interval env;
    if (dmu2 == 0.0) {
        // k^cexp nonincreasing (cexp <= 0): sup at k = M+1
        env = C * pow_real(Interval(static_cast<double>(M + 1)), Interval(cexp));
    } else {
        // sup over k >= M+1 of k^cexp exp(dmu2 k)
        Interval b(dmu2);
        Interval c(cexp);
        Interval at_m = exp(c * log(Interval(static_cast<double>(M + 1))) +
                            b * Interval(static_cast<double>(M + 1)));
        Interval v = at_m;
        if (cexp > 0.0) {
            Interval kstar = -c / b;
            if (kstar.hi > static_cast<double>(M + 1)) {
                Interval at_star = exp(c * log(kstar) + b * kstar);
                v = Interval(0.0, std::max(at_m.hi, at_star.hi));
            }
        }
        env = C * v;
    }
    max_into(best, Interval(0.0, env.hi));
    return Interval(best.lo, best.hi);
}

namespace {

// squared modulus polynomials of an x-only symbol: |s(k)|^2 = R(k)^2 + I(k)^2
IPoly x_sq_modulus(const DiagSymbol& s) {
    IPoly re = s.re_poly() + IPoly::constant(s.c0.re);
    IPoly im = s.im_poly() + IPoly::constant(s.c0.im);
    return re * re + im * im;
}

bool is_x_only(const DiagSymbol& s) { return !s.has_theta() && !s.has_taylor(); }
bool is_pure_theta(const DiagSymbol& s) {
    return s.has_theta() && s.lx.is_zero() && !s.has_taylor() &&
           iv_is_zero(s.c0.re) && iv_is_zero(s.c0.im);
}

struct WRatio {
    double dmu1[3] = {0, 0, 0};
    double dmu2[3] = {0, 0, 0};
    bool trivial = true;
};

WRatio wratio_of(const WeightVec& src, const WeightVec& dst, int dims) {
    WRatio r;
    for (int d = 0; d < dims; ++d) {
        r.dmu1[d] = dst[d].mu1 - src[d].mu1;
        r.dmu2[d] = dst[d].mu2 - src[d].mu2;
        if (r.dmu1[d] != 0.0 || r.dmu2[d] != 0.0) r.trivial = false;
    }
    return r;
}

// ---- 2-D orbit layout: den = DR(k) + i (a j + E(k)) ------------------------

struct OrbitParts {
    IPoly DR, E;   // real and imaginary x-parts including constants
    Interval a;    // theta coefficient, nonzero
};

OrbitParts orbit_parts(const DiagSymbol& den) {
    OrbitParts p;
    p.DR = den.re_poly() + IPoly::constant(den.c0.re);
    p.E = den.im_poly() + IPoly::constant(den.c0.im);
    p.a = den.a_theta;
    if (p.a.contains_zero())
        throw ResonantTailError("orbit tail: theta coefficient contains zero");
    return p;
}

// sup over j in Z of j^2 / (D^2 + (a j + E)^2) for fixed interval data:
// closed form (D^2 + E^2) / (a^2 D^2), requires D away from zero.
Interval theta_sup_closed(const Interval& D2, const Interval& E2, const Interval& a2) {
    return (D2 + E2) / (a2 * D2);
}

}  // namespace

Interval TailBound::sup_all_1d(const DiagSymbol& num, const DiagSymbol& den, const Box& box,
                               const Subspace& sub, const WeightVec& src, const WeightVec& dst) {
    if (box.dims != 1) throw SpaceError("sup_all_1d: one-dimensional boxes only");
    if (!is_x_only(num) || !is_x_only(den))
        throw SpaceError("sup_all_1d: x-only symbols required");
    WRatio wr = wratio_of(src, dst, 1);
    return sup_sqrt_ratio_1d(x_sq_modulus(num), x_sq_modulus(den), -1,
                             sub.odd_x || sub.zero_mean, wr.dmu1[0], wr.dmu2[0]);
}

Interval TailBound::sup_outside(const DiagSymbol& num, const DiagSymbol& den, const Box& box,
                                const Subspace& sub) {
    WeightVec flat{};
    return sup_outside(num, den, box, sub, flat, flat);
}

Interval TailBound::sup_outside(const DiagSymbol& num, const DiagSymbol& den, const Box& box,
                                const Subspace& sub, const WeightVec& src, const WeightVec& dst) {
    WRatio wr = wratio_of(src, dst, box.dims);
    bool excl0 = sub.odd_x || (sub.zero_mean && box.dims == 1);

    // ---- 1-D -----------------------------------------------------------
    if (box.dims == 1) {
        if (!is_x_only(num) || !is_x_only(den)) throw SpaceError("1-D tail: x-only symbols");
        return sup_sqrt_ratio_1d(x_sq_modulus(num), x_sq_modulus(den), box.n[0], excl0,
                                 wr.dmu1[0], wr.dmu2[0]);
    }

    if (!wr.trivial)
        throw SpaceError("tail sup: cross-weight ratios are supported in 1-D only");
    if (!is_x_only(num) && !is_pure_theta(num))
        throw SpaceError("tail sup: unsupported numerator symbol");

    const bool den_th = den.has_theta();
    const bool den_ta = den.has_taylor();
    Interval best(0.0);
    long Nx = box.n[0];
    long M = std::max({4 * Nx + 8, 256L});

    // ---- 2-D Fourier x Fourier (periodic orbit) -------------------------
    if (box.dims == 2 && den_th && !den_ta) {
        OrbitParts p = orbit_parts(den);
        long Nth = box.n[den.thdim];
        Interval a2 = p.a * p.a;
        IPoly DR2 = p.DR * p.DR;
        IPoly E2p = p.E * p.E;

        // region |k| > Nx, j free: |den|^2 >= DR(k)^2
        if (is_x_only(num)) {
            max_into(best, sup_sqrt_ratio_1d(x_sq_modulus(num), DR2, Nx, false, 0, 0));
        } else {
            // num = i j: sup_j j^2/|den|^2 = (DR^2 + E^2)/(a^2 DR^2)
            max_into(best, sup_sqrt_ratio_1d(DR2 + E2p, DR2 * a2, Nx, false, 0, 0));
        }

        // region |j| > Nth, k in Z: |a j + E| >= a(Nth+1) - |E(k)| =: G(k)
        Interval aNth = abs(p.a) * Interval(static_cast<double>(Nth + 1));
        auto G_at = [&](long k) {
            Interval g = aNth - abs(p.E.eval(k));
            return Interval(std::max(g.lo, 0.0), std::max(g.hi, 0.0));
        };
        for (long k = -M; k <= M; ++k) {
            if (excl0 && k == 0) continue;
            Interval DRk = p.DR.eval(k);
            Interval D2 = DRk * DRk;
            Interval G = G_at(k);
            Interval den2 = D2 + G * G;
            if (!(den2.lo > 0.0))
                throw ResonantTailError("orbit tail: |den| not certified positive in theta region");
            if (is_x_only(num)) {
                Interval n2 = x_sq_modulus(num).eval(k);
                max_into(best, sqrt(Interval(std::max(n2.lo, 0.0), std::max(n2.hi, 0.0)) / den2));
            } else {
                Interval bound(0.0);
                bool have = false;
                if (!D2.contains_zero()) {
                    Interval E2 = p.E.eval(k) * p.E.eval(k);
                    bound = sqrt(theta_sup_closed(D2, E2, a2));
                    have = true;
                }
                if (G.lo > 0.0) {
                    Interval alt = Interval(static_cast<double>(Nth + 1)) / G;
                    bound = have ? Interval(std::min(bound.lo, alt.lo), std::min(bound.hi, alt.hi))
                                 : alt;
                    have = true;
                }
                if (!have)
                    throw ResonantTailError("orbit tail: theta-region bound unavailable at k=" +
                                            std::to_string(k));
                max_into(best, bound);
            }
        }
        // |k| > M bound in the theta region (G may vanish there): fall back
        // to |den| >= |DR(k)|
        if (is_x_only(num))
            max_into(best, sup_sqrt_ratio_1d(x_sq_modulus(num), DR2, M, false, 0, 0));
        else
            max_into(best, sup_sqrt_ratio_1d(DR2 + E2p, DR2 * a2, M, false, 0, 0));
        return Interval(0.0, best.hi);
    }

    // ---- layouts with a Taylor dimension --------------------------------
    if (den_ta) {
        if (is_pure_theta(num) && !den_th)
            throw SpaceError("tail sup: theta numerator without theta denominator");
        int sd = den.sdim;
        long Ns = box.n[sd];
        if (!(den.lam.lo > 0.0))
            throw ResonantTailError("manifold tail: lam not certified positive");
        IPoly rho = den.re_poly() + IPoly::constant(den.c0.re);  // + lam*m
        IPoly E = den.im_poly() + IPoly::constant(den.c0.im);    // + a*j
        long Nth = den_th ? box.n[den.thdim] : 0;
        Interval aNth = den_th ? abs(den.a_theta) * Interval(static_cast<double>(Nth + 1))
                               : Interval(0.0);

        // real part lower bound over admissible m >= m0: rho(k) + lam*m0 if
        // that is >= 0, else 0 (the taylor index can cross the sign change)
        auto rmin_at = [&](long k, long m0) {
            Interval r = rho.eval(k) + den.lam * Interval(static_cast<double>(m0));
            return Interval(std::max(r.lo, 0.0), std::max(r.hi, 0.0));
        };

        struct RegionSpec {
            long kmin;   // scan |k| >= kmin (0: all k)
            long m0;     // taylor index floor
            bool theta_out;  // imag part gets the a(Nth+1) - |E| floor
        };
        std::vector<RegionSpec> regions;
        regions.push_back({Nx + 1, 0, false});                       // x out
        regions.push_back({0, Ns + 1, false});                       // taylor out
        if (den_th) regions.push_back({0, 0, true});                 // theta out

        for (const auto& reg : regions) {
            for (long ak = reg.kmin; ak <= M; ++ak) {
                for (int side = 0; side < (ak == 0 ? 1 : 2); ++side) {
                    long k = side == 0 ? ak : -ak;
                    if (excl0 && k == 0) continue;
                    Interval R = rmin_at(k, reg.m0);
                    Interval I(0.0);
                    if (reg.theta_out) {
                        Interval g = aNth - abs(E.eval(k));
                        I = Interval(std::max(g.lo, 0.0), std::max(g.hi, 0.0));
                    }
                    Interval den2 = R * R + I * I;
                    if (!(den2.lo > 0.0))
                        throw ResonantTailError(
                            "manifold tail: |den| not certified positive at k=" +
                            std::to_string(k) + " m0=" + std::to_string(reg.m0));
                    Interval n2 = is_x_only(num)
                                      ? x_sq_modulus(num).eval(k)
                                      : Interval(0.0);
                    if (is_x_only(num)) {
                        max_into(best,
                                 sqrt(Interval(std::max(n2.lo, 0.0), std::max(n2.hi, 0.0)) / den2));
                    } else {
                        // num = i j with theta present
                        if (!(R * R).contains_zero()) {
                            Interval E2 = E.eval(k) * E.eval(k);
                            max_into(best, sqrt(theta_sup_closed(R * R, E2,
                                                                 den.a_theta * den.a_theta)));
                        } else if (I.lo > 0.0) {
                            max_into(best, Interval(static_cast<double>(Nth + 1)) / I);
                        } else {
                            throw ResonantTailError("manifold tail: theta bound unavailable");
                        }
                    }
                }
            }
            // |k| > M: real part dominated by rho + lam*m0, positive beyond M
            IPoly shifted = rho + IPoly::constant(den.lam * Interval(static_cast<double>(reg.m0)));
            poly_positive_beyond(shifted, M, "manifold tail rho");
            poly_positive_beyond(shifted.reflected(), M, "manifold tail rho (k<0)");
            if (is_x_only(num)) {
                max_into(best,
                         sup_sqrt_ratio_1d(x_sq_modulus(num), shifted * shifted, M, false, 0, 0));
            } else {
                max_into(best, sup_sqrt_ratio_1d(shifted * shifted + E * E,
                                                 (shifted * shifted) * (den.a_theta * den.a_theta),
                                                 M, false, 0, 0));
            }
        }
        return Interval(0.0, best.hi);
    }

    throw SpaceError("tail sup: unsupported box/denominator layout");
}

Interval TailBound::min_abs_outside(const DiagSymbol& den, const Box& box, const Subspace& sub) {
    Interval s = sup_outside(DiagSymbol::one(), den, box, sub);
    if (!(s.hi > 0.0)) throw ResonantTailError("min_abs_outside: degenerate symbol");
    return Interval(1.0) / Interval(s.hi);
}

}  // namespace rpde
