#include "rpde/interval.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace rpde {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Below this magnitude the FMA/TwoSum residual tests may be inexact
// (subnormal territory), so we widen unconditionally.
constexpr double kTiny = 0x1p-960;

void check_finite(double x) {
    if (!std::isfinite(x)) throw DomainError("endpoint overflow in interval operation");
}

}  // namespace

double next_up(double x) { return std::nextafter(x, kInf); }
double next_down(double x) { return std::nextafter(x, -kInf); }

double add_up(double a, double b) {
    double s = a + b;
    check_finite(s);
    double bp = s - a;
    if (!std::isfinite(bp)) return next_up(s);
    double err = (a - (s - bp)) + (b - bp);  // exact rounding error (TwoSum)
    return err > 0.0 ? next_up(s) : s;
}

double add_down(double a, double b) {
    double s = a + b;
    check_finite(s);
    double bp = s - a;
    if (!std::isfinite(bp)) return next_down(s);
    double err = (a - (s - bp)) + (b - bp);
    return err < 0.0 ? next_down(s) : s;
}

double sub_up(double a, double b) { return add_up(a, -b); }
double sub_down(double a, double b) { return add_down(a, -b); }

double mul_up(double a, double b) {
    double p = a * b;
    check_finite(p);
    if (a == 0.0 || b == 0.0) return 0.0;
    if (std::fabs(p) < kTiny) return next_up(p);
    double err = std::fma(a, b, -p);  // exact residual a*b - p
    return err > 0.0 ? next_up(p) : p;
}

double mul_down(double a, double b) {
    double p = a * b;
    check_finite(p);
    if (a == 0.0 || b == 0.0) return 0.0;
    if (std::fabs(p) < kTiny) return next_down(p);
    double err = std::fma(a, b, -p);
    return err < 0.0 ? next_down(p) : p;
}

double div_up(double a, double b) {
    double q = a / b;
    check_finite(q);
    if (a == 0.0) return 0.0;
    if (std::fabs(q) < kTiny) return next_up(q);
    double r = std::fma(q, b, -a);  // q*b - a, exact
    if (!std::isfinite(r)) return next_up(q);
    if (r == 0.0) return q;
    // true quotient - q = -r/b
    bool true_above = (r > 0.0) != (b > 0.0);
    return true_above ? next_up(q) : q;
}

double div_down(double a, double b) {
    double q = a / b;
    check_finite(q);
    if (a == 0.0) return 0.0;
    if (std::fabs(q) < kTiny) return next_down(q);
    double r = std::fma(q, b, -a);
    if (!std::isfinite(r)) return next_down(q);
    if (r == 0.0) return q;
    bool true_below = (r > 0.0) == (b > 0.0);
    return true_below ? next_down(q) : q;
}

double sqrt_up(double x) {
    if (x < 0.0) throw DomainError("sqrt of negative value");
    if (x == 0.0) return 0.0;
    double s = std::sqrt(x);
    if (x < kTiny) return next_up(s);
    double r = std::fma(s, s, -x);  // s*s - x, exact
    return (r < 0.0) ? next_up(s) : s;
}

double sqrt_down(double x) {
    if (x < 0.0) throw DomainError("sqrt of negative value");
    if (x == 0.0) return 0.0;
    double s = std::sqrt(x);
    if (x < kTiny) return next_down(s);
    double r = std::fma(s, s, -x);
    return (r > 0.0) ? next_down(s) : s;
}

Interval Interval::widened(double x) {
    if (!std::isfinite(x)) throw DomainError("widened: not finite");
    return Interval(next_down(x), next_up(x));
}

Interval operator+(const Interval& a, const Interval& b) {
    return Interval(add_down(a.lo, b.lo), add_up(a.hi, b.hi));
}

Interval operator-(const Interval& a, const Interval& b) {
    return Interval(sub_down(a.lo, b.hi), sub_up(a.hi, b.lo));
}

Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }

Interval operator*(const Interval& a, const Interval& b) {
    double l = std::min(std::min(mul_down(a.lo, b.lo), mul_down(a.lo, b.hi)),
                        std::min(mul_down(a.hi, b.lo), mul_down(a.hi, b.hi)));
    double h = std::max(std::max(mul_up(a.lo, b.lo), mul_up(a.lo, b.hi)),
                        std::max(mul_up(a.hi, b.lo), mul_up(a.hi, b.hi)));
    return Interval(l, h);
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw DomainError("division by interval containing zero");
    double l = std::min(std::min(div_down(a.lo, b.lo), div_down(a.lo, b.hi)),
                        std::min(div_down(a.hi, b.lo), div_down(a.hi, b.hi)));
    double h = std::max(std::max(div_up(a.lo, b.lo), div_up(a.lo, b.hi)),
                        std::max(div_up(a.hi, b.lo), div_up(a.hi, b.hi)));
    return Interval(l, h);
}

double mag(const Interval& a) { return std::max(std::fabs(a.lo), std::fabs(a.hi)); }

double mig(const Interval& a) {
    if (a.contains_zero()) return 0.0;
    return std::min(std::fabs(a.lo), std::fabs(a.hi));
}

Interval hull(const Interval& a, const Interval& b) {
    return Interval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

Interval intersect(const Interval& a, const Interval& b) {
    double l = std::max(a.lo, b.lo);
    double h = std::min(a.hi, b.hi);
    if (l > h) throw DomainError("empty intersection");
    return Interval(l, h);
}

Interval abs(const Interval& a) {
    if (a.lo >= 0.0) return a;
    if (a.hi <= 0.0) return Interval(-a.hi, -a.lo);
    return Interval(0.0, mag(a));
}

Interval sqrt(const Interval& a) {
    if (a.lo < 0.0) throw DomainError("sqrt of interval with negative lower endpoint");
    return Interval(sqrt_down(a.lo), sqrt_up(a.hi));
}

namespace {

// x^n for a point x >= 0 with directed rounding, n >= 1.
double pow_point_up(double x, int n) {
    double r = x;
    for (int i = 1; i < n; ++i) r = mul_up(r, x);
    return r;
}
double pow_point_down(double x, int n) {
    double r = x;
    for (int i = 1; i < n; ++i) r = mul_down(r, x);
    return r;
}

}  // namespace

Interval pow_int(const Interval& a, int n) {
    if (n < 0) throw DomainError("pow_int: negative exponent");
    if (n == 0) return Interval(1.0);
    if (n == 1) return a;
    if (n % 2 == 0) {
        // even power: hull through the minimum of |x|
        if (a.lo >= 0.0) return Interval(pow_point_down(a.lo, n), pow_point_up(a.hi, n));
        if (a.hi <= 0.0) return Interval(pow_point_down(-a.hi, n), pow_point_up(-a.lo, n));
        return Interval(0.0, pow_point_up(mag(a), n));
    }
    // odd power: monotone
    auto point_lo = [n](double x) {
        return x >= 0.0 ? pow_point_down(x, n) : -pow_point_up(-x, n);
    };
    auto point_hi = [n](double x) {
        return x >= 0.0 ? pow_point_up(x, n) : -pow_point_down(-x, n);
    };
    return Interval(point_lo(a.lo), point_hi(a.hi));
}

namespace {

// atanh(t) = sum t^(2i+1)/(2i+1) for |t| <= 1/3, with certified remainder
// |R| <= |t|^(2M+3) / ((2M+3)(1 - t^2)).
Interval atanh_series(const Interval& t) {
    constexpr int M = 21;
    Interval t2 = t * t;
    Interval sum = t;
    Interval power = t;
    for (int i = 1; i <= M; ++i) {
        power = power * t2;
        sum += power / Interval(2.0 * i + 1.0);
    }
    Interval tail_pow = abs(power) * t2;  // |t|^(2M+3)
    Interval rem = tail_pow / ((2.0 * M + 3.0) * (Interval(1.0) - t2));
    double r = rem.hi;
    return sum + Interval(-r, r);
}

Interval compute_ln2() {
    // ln 2 = 2 atanh(1/3)
    Interval third = Interval(1.0) / Interval(3.0);
    return Interval(2.0) * atanh_series(third);
}

// exp on a point, both bounds, via range reduction x = k ln2 + r.
Interval exp_point(double x) {
    if (x == 0.0) return Interval(1.0);
    double kd = std::nearbyint(x / 0.6931471805599453);
    if (std::fabs(kd) > 2000.0) {
        if (x > 0.0) throw DomainError("exp overflow");
        // deep underflow: [0, tiny]
        return Interval(0.0, 0x1p-1000);
    }
    int k = static_cast<int>(kd);
    Interval r = Interval(x) - Interval(static_cast<double>(k)) * ln2();
    // |r| <= 0.35 + slack; Taylor sum_{i<=N} r^i/i! with remainder
    constexpr int N = 17;
    Interval sum(1.0);
    Interval term(1.0);
    for (int i = 1; i <= N; ++i) {
        term = term * r / Interval(static_cast<double>(i));
        sum += term;
    }
    // |R| <= |r|^(N+1)/(N+1)! * 1/(1 - |r|/(N+2))
    Interval absr = abs(r);
    Interval tail = abs(term) * absr / Interval(static_cast<double>(N + 1));
    tail = tail / (Interval(1.0) - absr / Interval(static_cast<double>(N + 2)));
    double rr = tail.hi;
    Interval e = sum + Interval(-rr, rr);
    // scale by 2^k exactly
    double lo = std::ldexp(e.lo, k);
    double hi = std::ldexp(e.hi, k);
    if (!std::isfinite(hi)) throw DomainError("exp overflow");
    // ldexp is exact unless the result is subnormal; widen if so
    if (lo != 0.0 && std::fabs(lo) < 0x1p-1021) lo = next_down(lo);
    if (hi != 0.0 && std::fabs(hi) < 0x1p-1021) hi = next_up(hi);
    return Interval(std::max(lo, 0.0), hi);
}

// log on a point x > 0 via x = m 2^k, m in [sqrt(1/2), sqrt(2)).
Interval log_point(double x) {
    if (x <= 0.0) throw DomainError("log of non-positive value");
    if (x == 1.0) return Interval(0.0);
    int k = 0;
    double m = std::frexp(x, &k);  // m in [0.5, 1)
    if (m < 0.70710678118654752) {
        m *= 2.0;  // exact
        k -= 1;
    }
    // t = (m-1)/(m+1), |t| <= (sqrt2-1)/(sqrt2+1) ~ 0.1716
    Interval mi(m);
    Interval t = (mi - Interval(1.0)) / (mi + Interval(1.0));
    Interval lm = Interval(2.0) * atanh_series(t);
    return lm + Interval(static_cast<double>(k)) * ln2();
}

}  // namespace

const Interval& ln2() {
    static const Interval v = compute_ln2();
    return v;
}

Interval exp(const Interval& a) {
    Interval lo = exp_point(a.lo);
    Interval hi = exp_point(a.hi);
    return Interval(lo.lo, hi.hi);
}

Interval log(const Interval& a) {
    if (a.lo <= 0.0) throw DomainError("log requires positive interval");
    Interval lo = log_point(a.lo);
    Interval hi = log_point(a.hi);
    return Interval(lo.lo, hi.hi);
}

Interval pow_real(const Interval& b, const Interval& y) {
    if (y.is_point() && y.lo == 0.0) return Interval(1.0);
    if (b.is_point() && b.lo == 1.0) return Interval(1.0);
    if (b.lo < 0.0) throw DomainError("pow_real requires nonnegative base");
    if (b.lo == 0.0) {
        if (y.lo <= 0.0) throw DomainError("pow_real: 0 base with nonpositive exponent");
        Interval up = exp(y * log(Interval(b.hi == 0.0 ? 0.0 : b.hi)));
        return Interval(0.0, b.hi == 0.0 ? 0.0 : up.hi);
    }
    return exp(y * log(b));
}

// -- serialization ----------------------------------------------------------

namespace {

std::string hex_of(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%a", x);
    return std::string(buf);
}

double parse_double(const std::string& s) {
    const char* c = s.c_str();
    char* end = nullptr;
    double v = std::strtod(c, &end);
    if (end == c) throw ConfigError("cannot parse number: '" + s + "'");
    while (*end == ' ') ++end;
    if (*end != '\0') throw ConfigError("trailing junk in number: '" + s + "'");
    if (!std::isfinite(v)) throw ConfigError("number out of range: '" + s + "'");
    return v;
}

std::string shortest_dec(double x) {
    char buf[48];
    auto r = std::to_chars(buf, buf + sizeof buf, x);
    return std::string(buf, r.ptr);
}

// True when the decimal token is an integer (optionally with .000 / e+k
// forms are NOT treated specially) exactly representable as a double.
bool decimal_is_exact_integer(const std::string& tok, double parsed) {
    if (parsed != std::nearbyint(parsed) || std::fabs(parsed) >= 0x1p53) return false;
    // strip sign, check remaining chars are digits possibly followed by
    // '.' and zeros
    size_t i = 0;
    if (i < tok.size() && (tok[i] == '+' || tok[i] == '-')) ++i;
    bool seen_dot = false;
    if (i >= tok.size()) return false;
    for (; i < tok.size(); ++i) {
        char c = tok[i];
        if (c == '.') {
            if (seen_dot) return false;
            seen_dot = true;
            continue;
        }
        if (c < '0' || c > '9') return false;
        if (seen_dot && c != '0') return false;
    }
    return true;
}

std::pair<std::string, std::string> split_pair(const std::string& s) {
    std::string t = s;
    auto strip = [](std::string& v) {
        while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.erase(v.begin());
        while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.pop_back();
    };
    strip(t);
    if (!t.empty() && t.front() == '[' && t.back() == ']') t = t.substr(1, t.size() - 2);
    auto comma = t.find(',');
    if (comma == std::string::npos) {
        strip(t);
        return {t, t};
    }
    std::string a = t.substr(0, comma), b = t.substr(comma + 1);
    strip(a);
    strip(b);
    return {a, b};
}

}  // namespace

std::string to_hex(const Interval& a) {
    return "[" + hex_of(a.lo) + "," + hex_of(a.hi) + "]";
}

Interval from_hex(const std::string& s) {
    auto [a, b] = split_pair(s);
    return Interval(parse_double(a), parse_double(b));
}

std::string to_dec(const Interval& a) {
    return "[" + shortest_dec(a.lo) + "," + shortest_dec(a.hi) + "]";
}

Interval enclose_decimal(const std::string& token) {
    double v = parse_double(token);
    if (decimal_is_exact_integer(token, v)) return Interval(v);
    return Interval::widened(v);
}

Interval from_dec(const std::string& s) {
    auto [a, b] = split_pair(s);
    Interval ia = enclose_decimal(a);
    Interval ib = enclose_decimal(b);
    return Interval(ia.lo, ib.hi);
}

}  // namespace rpde
