#pragma once

#include <vector>

#include "rpde/fourier.hpp"

namespace rpde {

/// Real-interval-coefficient polynomial in one integer variable.
struct IPoly {
    std::vector<Interval> c;  // c[j] * x^j

    IPoly() = default;
    explicit IPoly(std::vector<Interval> coeffs) : c(std::move(coeffs)) { trim(); }
    static IPoly constant(const Interval& v) { return IPoly({v}); }

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }

    void trim() {
        while (!c.empty() && c.back().lo == 0.0 && c.back().hi == 0.0) c.pop_back();
    }

    /// Horner evaluation at an exact integer argument.
    Interval eval(long k) const {
        Interval x(static_cast<double>(k));
        Interval r(0.0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
        return r;
    }

    Interval eval(const Interval& x) const {
        Interval r(0.0);
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
        return r;
    }

    IPoly operator+(const IPoly& o) const {
        IPoly r;
        r.c.resize(std::max(c.size(), o.c.size()), Interval(0.0));
        for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
        for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] += o.c[i];
        r.trim();
        return r;
    }
    IPoly operator-(const IPoly& o) const {
        IPoly r;
        r.c.resize(std::max(c.size(), o.c.size()), Interval(0.0));
        for (std::size_t i = 0; i < c.size(); ++i) r.c[i] += c[i];
        for (std::size_t i = 0; i < o.c.size(); ++i) r.c[i] -= o.c[i];
        r.trim();
        return r;
    }
    IPoly operator*(const IPoly& o) const {
        if (is_zero() || o.is_zero()) return IPoly();
        IPoly r;
        r.c.assign(c.size() + o.c.size() - 1, Interval(0.0));
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
        r.trim();
        return r;
    }
    IPoly operator*(const Interval& s) const {
        IPoly r = *this;
        for (auto& x : r.c) x *= s;
        r.trim();
        return r;
    }
    /// p(-x)
    IPoly reflected() const {
        IPoly r = *this;
        for (std::size_t i = 1; i < r.c.size(); i += 2) r.c[i] = -r.c[i];
        return r;
    }
};

/// Diagonal symbol of the closed family used by every preconditioner tail:
///
///     d(n) = lx(i k) + i * a_theta * j + lam * m + c0
///
/// where k, j, m are the Fourier-x, Fourier-theta and Taylor indices of the
/// multi-index, lx is a real-coefficient polynomial evaluated at (ik), and
/// a_theta, lam are real.  The family is closed under subtraction, which is
/// what I - B*A tail bookkeeping needs.
struct DiagSymbol {
    IPoly lx;              // in powers of (ik)
    Interval a_theta{0.0};
    Interval lam{0.0};
    CInterval c0{};
    // dimension roles inside the multi-index (-1: absent)
    int xdim = 0;
    int thdim = -1;
    int sdim = -1;

    static DiagSymbol zero() { return DiagSymbol{}; }
    static DiagSymbol one() {
        DiagSymbol d;
        d.c0 = CInterval(Interval(1.0));
        return d;
    }
    /// d(n) = p(ik) on the x dimension.
    static DiagSymbol x_poly(IPoly p, int xdim = 0) {
        DiagSymbol d;
        d.lx = std::move(p);
        d.xdim = xdim;
        return d;
    }
    /// d(n) = i k (the d/dx symbol).
    static DiagSymbol ddx(int xdim = 0) {
        return x_poly(IPoly({Interval(0.0), Interval(1.0)}), xdim);
    }
    /// d(n) = i a j (the a d/dtheta symbol).
    static DiagSymbol ddtheta(const Interval& a, int thdim) {
        DiagSymbol d;
        d.a_theta = a;
        d.thdim = thdim;
        return d;
    }
    /// d(n) = lam * m (the lam s d/ds scaling symbol).
    static DiagSymbol sscale(const Interval& lam, int sdim) {
        DiagSymbol d;
        d.lam = lam;
        d.sdim = sdim;
        return d;
    }

    /// Even/odd split of lx at real k: lx(ik) = re_poly(k) + i im_poly(k).
    IPoly re_poly() const {
        IPoly r;
        r.c.assign(lx.c.size(), Interval(0.0));
        for (std::size_t t = 0; t < lx.c.size(); t += 2) {
            double sign = (t % 4 == 0) ? 1.0 : -1.0;  // i^t for even t
            r.c[t] = Interval(sign) * lx.c[t];
        }
        r.trim();
        return r;
    }
    IPoly im_poly() const {
        IPoly r;
        r.c.assign(lx.c.size(), Interval(0.0));
        for (std::size_t t = 1; t < lx.c.size(); t += 2) {
            double sign = (t % 4 == 1) ? 1.0 : -1.0;  // i^t = i*sign for odd t
            r.c[t] = Interval(sign) * lx.c[t];
        }
        r.trim();
        return r;
    }

    bool has_theta() const { return thdim >= 0 && !(a_theta.lo == 0.0 && a_theta.hi == 0.0); }
    bool has_taylor() const { return sdim >= 0 && !(lam.lo == 0.0 && lam.hi == 0.0); }

    /// x-parity of the symbol as a multiplier (even keeps parity flags).
    SymbolParity parity() const {
        bool has_ev = false, has_od = false;
        for (std::size_t t = 0; t < lx.c.size(); ++t) {
            if (lx.c[t].lo == 0.0 && lx.c[t].hi == 0.0) continue;
            (t % 2 == 0 ? has_ev : has_od) = true;
        }
        if (!(c0.re.lo == 0.0 && c0.re.hi == 0.0 && c0.im.lo == 0.0 && c0.im.hi == 0.0) ||
            has_theta() || has_taylor())
            has_ev = true;
        if (has_ev && has_od) return SymbolParity::mixed;
        return has_od ? SymbolParity::odd : SymbolParity::even;
    }

    CInterval eval(const MIdx& n) const {
        long k = n[xdim];
        CInterval r = c0;
        if (!lx.is_zero()) {
            r.re += re_poly().eval(k);
            r.im += im_poly().eval(k);
        }
        if (thdim >= 0) r.im += a_theta * Interval(static_cast<double>(n[thdim]));
        if (sdim >= 0) {
            Interval lm = lam * Interval(static_cast<double>(n[sdim]));
            r.re += lm;  // lam is real by construction
        }
        return r;
    }

    DiagSymbol operator-(const DiagSymbol& o) const;
    DiagSymbol operator+(const DiagSymbol& o) const;
};

inline DiagSymbol DiagSymbol::operator-(const DiagSymbol& o) const {
    DiagSymbol r = *this;
    r.lx = lx - o.lx;
    r.a_theta = a_theta - o.a_theta;
    r.lam = lam - o.lam;
    r.c0 = c0 - o.c0;
    if (thdim < 0) r.thdim = o.thdim;
    if (sdim < 0) r.sdim = o.sdim;
    return r;
}

inline DiagSymbol DiagSymbol::operator+(const DiagSymbol& o) const {
    DiagSymbol r = *this;
    r.lx = lx + o.lx;
    r.a_theta = a_theta + o.a_theta;
    r.lam = lam + o.lam;
    r.c0 = c0 + o.c0;
    if (thdim < 0) r.thdim = o.thdim;
    if (sdim < 0) r.sdim = o.sdim;
    return r;
}

}  // namespace rpde
