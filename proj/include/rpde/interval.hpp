#pragma once

#include <cmath>
#include <limits>
#include <string>

#include "rpde/errors.hpp"

namespace rpde {

/// Closed real interval [lo, hi] with finite double endpoints.
///
/// Every arithmetic operation returns an interval that contains the exact
/// real result for any choice of points in the operands.  Directed rounding
/// is emulated by a next-representable-float adjustment after each native
/// operation; the adjustment is skipped when the native result is provably
/// exact (TwoSum / FMA residual tests), so integer-valued arithmetic stays
/// exact.  No global rounding state is touched, all values are immutable,
/// and results are bitwise deterministic.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;

    explicit Interval(double x) : lo(x), hi(x) {
        if (!std::isfinite(x)) throw DomainError("interval endpoint not finite");
        normalize_zero();
    }

    Interval(double l, double h) : lo(l), hi(h) {
        if (!std::isfinite(l) || !std::isfinite(h))
            throw DomainError("interval endpoint not finite");
        if (l > h) throw DomainError("interval lo > hi");
        normalize_zero();
    }

    /// Smallest interval containing both points, in either order.
    static Interval ordered(double a, double b) {
        return (a <= b) ? Interval(a, b) : Interval(b, a);
    }

    /// [x - ulp, x + ulp]; encloses any real that rounds to x.
    static Interval widened(double x);

    bool contains(double x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool contains_zero() const { return lo <= 0.0 && 0.0 <= hi; }
    bool is_point() const { return lo == hi; }

    double mid() const { return 0.5 * (lo + hi); }
    double width() const { return hi - lo; }

  private:
    void normalize_zero() {
        // canonical +0.0 keeps serialization bit-stable
        if (lo == 0.0) lo = 0.0;
        if (hi == 0.0) hi = 0.0;
    }
};

// -- directed point operations -------------------------------------------

double next_up(double x);
double next_down(double x);

double add_down(double a, double b);
double add_up(double a, double b);
double sub_down(double a, double b);
double sub_up(double a, double b);
double mul_down(double a, double b);
double mul_up(double a, double b);
double div_down(double a, double b);  // b != 0
double div_up(double a, double b);
double sqrt_down(double x);  // x >= 0
double sqrt_up(double x);

// -- interval arithmetic ---------------------------------------------------

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);  // 0 not in b
Interval operator-(const Interval& a);

inline Interval& operator+=(Interval& a, const Interval& b) { return a = a + b; }
inline Interval& operator-=(Interval& a, const Interval& b) { return a = a - b; }
inline Interval& operator*=(Interval& a, const Interval& b) { return a = a * b; }

inline Interval operator+(const Interval& a, double b) { return a + Interval(b); }
inline Interval operator-(const Interval& a, double b) { return a - Interval(b); }
inline Interval operator*(const Interval& a, double b) { return a * Interval(b); }
inline Interval operator/(const Interval& a, double b) { return a / Interval(b); }
inline Interval operator+(double a, const Interval& b) { return Interval(a) + b; }
inline Interval operator-(double a, const Interval& b) { return Interval(a) - b; }
inline Interval operator*(double a, const Interval& b) { return Interval(a) * b; }
inline Interval operator/(double a, const Interval& b) { return Interval(a) / b; }

// -- elementary enclosures -------------------------------------------------

/// max(|lo|, |hi|): an upper bound for |x| over the interval (exact).
double mag(const Interval& a);
/// min |x| over the interval: 0 if it straddles zero.
double mig(const Interval& a);
/// Smallest interval containing both operands.
Interval hull(const Interval& a, const Interval& b);
/// Intersection; throws DomainError if empty.
Interval intersect(const Interval& a, const Interval& b);

Interval abs(const Interval& a);
Interval sqrt(const Interval& a);   // a.lo >= 0 required
Interval pow_int(const Interval& a, int n);  // n >= 0
Interval exp(const Interval& a);
Interval log(const Interval& a);    // a.lo > 0 required
/// exp(y * log(b)) for b.lo > 0; real-exponent power.
Interval pow_real(const Interval& b, const Interval& y);

/// Tight enclosure of ln 2 (computed once from the atanh series).
const Interval& ln2();

// -- serialization ----------------------------------------------------------

/// Exact hexadecimal-float form, e.g. "[0x1p+0,0x1.8p+1]"; round-trips
/// bit-exactly through from_hex.
std::string to_hex(const Interval& a);
Interval from_hex(const std::string& s);

/// Shortest decimal form that round-trips each endpoint.
std::string to_dec(const Interval& a);

/// Parse a decimal interval "[a,b]" or single number, rounding outward
/// unless the decimal is exactly representable.
Interval from_dec(const std::string& s);

/// Enclosure of a single decimal scalar token with outward rounding.
Interval enclose_decimal(const std::string& token);

}  // namespace rpde
