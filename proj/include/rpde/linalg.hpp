#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "rpde/interval.hpp"

namespace rpde {

/// Rectangular complex interval: independent enclosures of real and
/// imaginary part.
struct CInterval {
    Interval re;
    Interval im;

    CInterval() = default;
    CInterval(Interval r, Interval i) : re(r), im(i) {}
    explicit CInterval(double r, double i = 0.0) : re(r), im(i) {}
    explicit CInterval(const Interval& r) : re(r), im(0.0) {}

    static CInterval from(std::complex<double> z) {
        return CInterval(Interval(z.real()), Interval(z.imag()));
    }

    bool contains(std::complex<double> z) const {
        return re.contains(z.real()) && im.contains(z.imag());
    }
    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }

    std::complex<double> mid() const { return {re.mid(), im.mid()}; }
};

inline CInterval operator+(const CInterval& a, const CInterval& b) {
    return {a.re + b.re, a.im + b.im};
}
inline CInterval operator-(const CInterval& a, const CInterval& b) {
    return {a.re - b.re, a.im - b.im};
}
inline CInterval operator-(const CInterval& a) { return {-a.re, -a.im}; }
inline CInterval operator*(const CInterval& a, const CInterval& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline CInterval operator*(const Interval& a, const CInterval& b) {
    return {a * b.re, a * b.im};
}
inline CInterval operator*(const CInterval& a, const Interval& b) { return b * a; }
inline CInterval& operator+=(CInterval& a, const CInterval& b) { return a = a + b; }
inline CInterval& operator-=(CInterval& a, const CInterval& b) { return a = a - b; }

/// Division by a complex interval not containing 0.
inline CInterval operator/(const CInterval& a, const CInterval& b) {
    Interval d = b.re * b.re + b.im * b.im;
    if (d.contains_zero()) throw DomainError("complex division by interval containing zero");
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

inline CInterval conj(const CInterval& a) { return {a.re, -a.im}; }

/// Upper bound for |z| over the box.
inline double cmag(const CInterval& a) {
    Interval m = sqrt(pow_int(a.re, 2) + pow_int(a.im, 2));
    return m.hi;
}
/// Enclosure of |z| over the box.
inline Interval cabs(const CInterval& a) {
    Interval up = sqrt(pow_int(a.re, 2) + pow_int(a.im, 2));
    double lo2 = mig(a.re) * mig(a.re) + mig(a.im) * mig(a.im);
    return Interval(sqrt_down(lo2), up.hi);
}

inline bool is_zero(const CInterval& a) {
    return a.re.is_point() && a.re.lo == 0.0 && a.im.is_point() && a.im.lo == 0.0;
}

/// Dense interval vector with fixed dimension.
class IVector {
  public:
    IVector() = default;
    explicit IVector(std::size_t n) : v_(n) {}
    std::size_t size() const { return v_.size(); }
    Interval& operator[](std::size_t i) { return v_[i]; }
    const Interval& operator[](std::size_t i) const { return v_[i]; }

  private:
    std::vector<Interval> v_;
};

/// Dense interval matrix, row-major.
class IMatrix {
  public:
    IMatrix() = default;
    IMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), m_(rows * cols) {}
    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    Interval& operator()(std::size_t i, std::size_t j) { return m_[i * c_ + j]; }
    const Interval& operator()(std::size_t i, std::size_t j) const { return m_[i * c_ + j]; }

    static IMatrix identity(std::size_t n) {
        IMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Interval(1.0);
        return m;
    }

  private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<Interval> m_;
};

/// Dense complex-interval matrix, row-major.
class CIMatrix {
  public:
    CIMatrix() = default;
    CIMatrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), m_(rows * cols) {}
    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    CInterval& operator()(std::size_t i, std::size_t j) { return m_[i * c_ + j]; }
    const CInterval& operator()(std::size_t i, std::size_t j) const { return m_[i * c_ + j]; }

    static CIMatrix identity(std::size_t n) {
        CIMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = CInterval(Interval(1.0));
        return m;
    }

  private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<CInterval> m_;
};

IVector operator*(const IMatrix& m, const IVector& x);
IMatrix operator*(const IMatrix& a, const IMatrix& b);
std::vector<CInterval> operator*(const CIMatrix& m, const std::vector<CInterval>& x);

}  // namespace rpde
