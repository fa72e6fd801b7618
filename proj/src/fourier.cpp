#include "rpde/fourier.hpp"

#include <cmath>
#include <map>
#include <sstream>

namespace rpde {

namespace {

// Weight values are pure functions of (mu1, mu2, |n|); memoize per weight.
struct WeightCache {
    std::map<std::pair<double, double>, std::vector<Interval>> table;

    const Interval& get(const Weight& w, long n) {
        long a = std::labs(n);
        auto& col = table[{w.mu1, w.mu2}];
        while (static_cast<long>(col.size()) <= a) {
            long k = static_cast<long>(col.size());
            col.push_back(compute(w, k));
        }
        return col[static_cast<std::size_t>(a)];
    }

    static Interval compute(const Weight& w, long k) {
        Interval poly(1.0);
        if (w.mu1 != 0.0) {
            Interval base(static_cast<double>(1 + k));
            double ip = 0.0;
            if (std::modf(w.mu1, &ip) == 0.0 && w.mu1 >= 0.0 && w.mu1 <= 60.0)
                poly = pow_int(base, static_cast<int>(w.mu1));
            else
                poly = pow_real(base, Interval(w.mu1));
        }
        Interval ex(1.0);
        if (w.mu2 != 0.0) ex = exp(Interval(w.mu2) * Interval(static_cast<double>(k)));
        return poly * ex;
    }
};

WeightCache& cache() {
    thread_local WeightCache c;
    return c;
}

}  // namespace

Interval weight_of(const Weight& w, long n) { return cache().get(w, n); }

Interval weight_at(const WeightVec& w, const Box& box, const MIdx& m) {
    Interval r(1.0);
    for (int d = 0; d < box.dims; ++d) r *= weight_of(w[d], m[d]);
    return r;
}

Box Box::fourier1(int nx) {
    Box b;
    b.dims = 1;
    b.kind[0] = DimKind::fourier;
    b.n[0] = nx;
    return b;
}
Box Box::fourier2(int nx, int ntheta) {
    Box b;
    b.dims = 2;
    b.kind = {DimKind::fourier, DimKind::fourier, DimKind::fourier};
    b.n = {nx, ntheta, 0};
    return b;
}
Box Box::fourier_taylor(int nx, int ns) {
    Box b;
    b.dims = 2;
    b.kind = {DimKind::fourier, DimKind::taylor, DimKind::fourier};
    b.n = {nx, ns, 0};
    return b;
}
Box Box::fourier2_taylor(int nx, int ntheta, int ns) {
    Box b;
    b.dims = 3;
    b.kind = {DimKind::fourier, DimKind::fourier, DimKind::taylor};
    b.n = {nx, ntheta, ns};
    return b;
}

Box Box::join(const Box& a, const Box& b) {
    if (!a.same_shape(b)) throw SpaceError("box join: incompatible shapes");
    Box r = a;
    for (int d = 0; d < a.dims; ++d) r.n[d] = std::max(a.n[d], b.n[d]);
    return r;
}

Box Box::padded(const std::array<int, 3>& extra) const {
    Box r = *this;
    for (int d = 0; d < dims; ++d) r.n[d] += extra[d];
    return r;
}

FourierSeq FourierSeq::basis(const Box& b, const WeightVec& w, const MIdx& m, Symmetry s) {
    FourierSeq u(b, w, s);
    u.set(m, CInterval(Interval(1.0)));
    return u;
}

Interval norm_box(const FourierSeq& u) {
    Interval s(0.0);
    for (std::size_t f = 0; f < u.c.size(); ++f) {
        const CInterval& z = u.c[f];
        if (is_zero(z)) continue;
        s += cabs(z) * weight_at(u.weight, u.box, u.box.unflat(f));
    }
    return s;
}

Interval norm_l1w(const FourierSeq& u) {
    Interval s = norm_box(u);
    return Interval(add_down(s.lo, u.tail.lo), add_up(s.hi, u.tail.hi));
}

namespace {

void require_same_space(const FourierSeq& u, const FourierSeq& v) {
    if (!u.box.same_shape(v.box)) throw SpaceError("sequence dims/kinds mismatch");
    for (int d = 0; d < u.box.dims; ++d)
        if (!(u.weight[d] == v.weight[d])) throw SpaceError("sequence weights mismatch");
}

}  // namespace

Symmetry conv_symmetry(Symmetry a, Symmetry b) {
    if (a == Symmetry::none || b == Symmetry::none) return Symmetry::none;
    auto parity = [](Symmetry s) { return s == Symmetry::odd_real ? 1 : s == Symmetry::even_real ? 0 : -1; };
    int pa = parity(a), pb = parity(b);
    if (pa < 0 || pb < 0) return Symmetry::real;
    return ((pa + pb) % 2 == 0) ? Symmetry::even_real : Symmetry::odd_real;
}

FourierSeq conv(const FourierSeq& u, const FourierSeq& v, const std::optional<Box>& result_box) {
    require_same_space(u, v);
    Box rbox = result_box ? *result_box : Box::join(u.box, v.box);
    if (!rbox.same_shape(u.box)) throw SpaceError("conv: result box shape mismatch");

    FourierSeq w(rbox, u.weight, conv_symmetry(u.sym, v.sym));
    Interval spill(0.0);
    for (std::size_t fu = 0; fu < u.c.size(); ++fu) {
        const CInterval& a = u.c[fu];
        if (is_zero(a)) continue;
        MIdx mu = u.box.unflat(fu);
        for (std::size_t fv = 0; fv < v.c.size(); ++fv) {
            const CInterval& b = v.c[fv];
            if (is_zero(b)) continue;
            MIdx ms = mu + v.box.unflat(fv);
            CInterval p = a * b;
            if (rbox.inside(ms))
                w.at(ms) += p;
            else
                spill += cabs(p) * weight_at(u.weight, rbox, ms);
        }
    }
    Interval nu = norm_box(u), nv = norm_box(v);
    Interval t = nu * v.tail + nv * u.tail + u.tail * v.tail + spill;
    w.tail = Interval(0.0, t.hi);
    return w;
}

Interval inner_l2(const FourierSeq& u, const FourierSeq& v) {
    require_same_space(u, v);
    CInterval s;
    // sum over the smaller support
    const FourierSeq& a = (u.c.size() <= v.c.size()) ? u : v;
    const FourierSeq& b = (u.c.size() <= v.c.size()) ? v : u;
    bool swapped = (&a != &u);
    for (std::size_t f = 0; f < a.c.size(); ++f) {
        const CInterval& za = a.c[f];
        if (is_zero(za)) continue;
        MIdx m = a.box.unflat(f);
        CInterval zb = b.at_or_zero(m);
        if (is_zero(zb)) continue;
        s += swapped ? zb * conj(za) : za * conj(zb);
    }
    // cross-tail: |sum over unlisted| <= tail_u sup|b_n|/W_n + tail_v sup|a_n|/W_n
    //             + tail_u tail_v  (weights >= 1)
    Interval cross(0.0);
    if (u.tail.hi > 0.0) cross += u.tail * dual_norm(v, v.weight);
    if (v.tail.hi > 0.0) cross += v.tail * dual_norm(u, u.weight);
    cross += u.tail * v.tail;
    double cb = cross.hi;
    s.re += Interval(-cb, cb);
    // real-symmetric arguments make the pairing real; scalar constraint rows
    // consume the real part
    return s.re;
}

Interval dual_norm(const FourierSeq& v, const WeightVec& w) {
    Interval best(0.0);
    for (std::size_t f = 0; f < v.c.size(); ++f) {
        const CInterval& z = v.c[f];
        if (is_zero(z)) continue;
        Interval q = cabs(z) / weight_at(w, v.box, v.box.unflat(f));
        best = Interval(std::max(best.lo, q.lo), std::max(best.hi, q.hi));
    }
    return best;
}

namespace {

FourierSeq combine(const FourierSeq& u, const FourierSeq& v, bool add) {
    require_same_space(u, v);
    Box rbox = Box::join(u.box, v.box);
    Symmetry s = (u.sym == v.sym) ? u.sym : Symmetry::none;
    if (u.sym != v.sym && u.sym != Symmetry::none && v.sym != Symmetry::none &&
        u.sym != Symmetry::odd_real && v.sym != Symmetry::odd_real)
        s = Symmetry::real;
    FourierSeq w(rbox, u.weight, s);
    for (std::size_t f = 0; f < u.c.size(); ++f)
        if (!is_zero(u.c[f])) w.at(u.box.unflat(f)) += u.c[f];
    for (std::size_t f = 0; f < v.c.size(); ++f) {
        const CInterval& z = v.c[f];
        if (is_zero(z)) continue;
        MIdx m = v.box.unflat(f);
        if (add)
            w.at(m) += z;
        else
            w.at(m) -= z;
    }
    w.tail = Interval(0.0, add_up(u.tail.hi, v.tail.hi));
    return w;
}

}  // namespace

FourierSeq operator+(const FourierSeq& u, const FourierSeq& v) { return combine(u, v, true); }
FourierSeq operator-(const FourierSeq& u, const FourierSeq& v) { return combine(u, v, false); }

FourierSeq operator*(const Interval& s, const FourierSeq& u) {
    FourierSeq w = u;
    for (auto& z : w.c) z = s * z;
    w.tail = Interval(0.0, mul_up(mag(s), u.tail.hi));
    return w;
}

FourierSeq operator*(const CInterval& s, const FourierSeq& u) {
    FourierSeq w = u;
    if (!(s.im.is_point() && s.im.lo == 0.0)) w.sym = Symmetry::none;
    for (auto& z : w.c) z = s * z;
    w.tail = Interval(0.0, mul_up(cmag(s), u.tail.hi));
    return w;
}

FourierSeq apply_diag(const FourierSeq& u, const std::function<CInterval(const MIdx&)>& sym,
                      SymbolParity parity, const std::optional<Interval>& tail_sup,
                      const std::optional<WeightVec>& target_weight) {
    FourierSeq w(u.box, target_weight ? *target_weight : u.weight, u.sym);
    switch (parity) {
        case SymbolParity::even:
            break;
        case SymbolParity::odd:
            if (u.sym == Symmetry::odd_real)
                w.sym = Symmetry::even_real;
            else if (u.sym == Symmetry::even_real)
                w.sym = Symmetry::odd_real;
            break;
        case SymbolParity::mixed:
            if (u.sym == Symmetry::odd_real || u.sym == Symmetry::even_real)
                w.sym = Symmetry::real;
            break;
    }
    for (std::size_t f = 0; f < u.c.size(); ++f) {
        if (is_zero(u.c[f])) continue;
        w.c[f] = sym(u.box.unflat(f)) * u.c[f];
    }
    if (u.tail.hi > 0.0) {
        if (!tail_sup)
            throw SpaceError("apply_diag: unbounded symbol on sequence with tail "
                             "requires a certified tail sup (two-spaces downgrade)");
        w.tail = Interval(0.0, (u.tail * Interval(0.0, tail_sup->hi)).hi);
    }
    return w;
}

void project_symmetry(FourierSeq& u) {
    if (u.sym == Symmetry::none) return;
    for (std::size_t f = 0; f < u.c.size(); ++f) {
        MIdx m = u.box.unflat(f);
        MIdx mm = m;
        for (int d = 0; d < u.box.dims; ++d)
            if (u.box.kind[d] == DimKind::fourier) mm[d] = -m[d];
        if (!u.box.inside(mm)) continue;
        std::complex<double> a = u.at(m).mid();
        std::complex<double> b = u.at(mm).mid();
        std::complex<double> avg = 0.5 * (a + std::conj(b));
        u.at(m) = CInterval::from(avg);
        u.at(mm) = CInterval::from(std::conj(avg));
    }
    if (u.sym == Symmetry::odd_real || u.sym == Symmetry::even_real) {
        double sgn = (u.sym == Symmetry::odd_real) ? -1.0 : 1.0;
        for (std::size_t f = 0; f < u.c.size(); ++f) {
            MIdx m = u.box.unflat(f);
            MIdx mx = m;
            mx[0] = -m[0];
            if (!u.box.inside(mx)) continue;
            std::complex<double> a = u.at(m).mid();
            std::complex<double> b = u.at(mx).mid();
            std::complex<double> avg = 0.5 * (a + sgn * b);
            u.at(m) = CInterval::from(avg);
            u.at(mx) = CInterval::from(sgn * avg);
        }
        if (u.sym == Symmetry::odd_real)
            for (std::size_t f = 0; f < u.c.size(); ++f) {
                MIdx m = u.box.unflat(f);
                if (m[0] == 0) u.c[f] = CInterval();
            }
    }
}

void check_symmetry(const FourierSeq& u) {
    if (u.sym == Symmetry::none) return;
    auto overlaps = [](const Interval& a, const Interval& b) {
        return a.lo <= b.hi && b.lo <= a.hi;
    };
    for (std::size_t f = 0; f < u.c.size(); ++f) {
        MIdx m = u.box.unflat(f);
        MIdx mm = m;
        for (int d = 0; d < u.box.dims; ++d)
            if (u.box.kind[d] == DimKind::fourier) mm[d] = -m[d];
        if (u.box.inside(mm)) {
            CInterval a = u.at(m), b = conj(u.at(mm));
            if (!overlaps(a.re, b.re) || !overlaps(a.im, b.im))
                throw SymmetryError("reality pattern violated");
        }
        if (u.sym == Symmetry::odd_real || u.sym == Symmetry::even_real) {
            MIdx mx = m;
            mx[0] = -m[0];
            if (u.box.inside(mx)) {
                double sgn = (u.sym == Symmetry::odd_real) ? -1.0 : 1.0;
                CInterval a = u.at(m);
                CInterval b = Interval(sgn) * u.at(mx);
                if (!overlaps(a.re, b.re) || !overlaps(a.im, b.im))
                    throw SymmetryError("x-parity pattern violated");
            }
        }
    }
}

// -- sequence files ---------------------------------------------------------

namespace {

const char* kind_name(DimKind k) { return k == DimKind::fourier ? "fourier" : "taylor"; }
const char* sym_name(Symmetry s) {
    switch (s) {
        case Symmetry::none: return "none";
        case Symmetry::real: return "real";
        case Symmetry::even_real: return "even_real";
        case Symmetry::odd_real: return "odd_real";
    }
    return "none";
}
Symmetry sym_from(const std::string& s) {
    if (s == "none") return Symmetry::none;
    if (s == "real") return Symmetry::real;
    if (s == "even_real") return Symmetry::even_real;
    if (s == "odd_real") return Symmetry::odd_real;
    throw ConfigError("unknown symmetry: " + s);
}

}  // namespace

std::string seq_to_text(const FourierSeq& u) {
    std::ostringstream os;
    os << "seqfile 1\n";
    os << "dims " << u.box.dims << "\n";
    os << "kinds";
    for (int d = 0; d < u.box.dims; ++d) os << " " << kind_name(u.box.kind[d]);
    os << "\nbox";
    for (int d = 0; d < u.box.dims; ++d) os << " " << u.box.n[d];
    os << "\nweights";
    for (int d = 0; d < u.box.dims; ++d) os << " " << u.weight[d].mu1 << " " << u.weight[d].mu2;
    os << "\nsymmetry " << sym_name(u.sym) << "\n";
    os << "tail " << to_dec(u.tail) << " " << to_hex(u.tail) << "\n";
    for (std::size_t f = 0; f < u.c.size(); ++f) {
        const CInterval& z = u.c[f];
        if (is_zero(z)) continue;
        MIdx m = u.box.unflat(f);
        os << "coeff";
        for (int d = 0; d < u.box.dims; ++d) os << " " << m[d];
        os << " re " << to_dec(z.re) << " " << to_hex(z.re) << " im " << to_dec(z.im) << " "
           << to_hex(z.im) << "\n";
    }
    os << "end\n";
    return os.str();
}

FourierSeq seq_from_text(const std::string& text) {
    std::istringstream is(text);
    std::string tok;
    int version = 0;
    is >> tok >> version;
    if (tok != "seqfile" || version != 1) throw ConfigError("bad sequence file header");
    Box box;
    WeightVec wv{};
    Symmetry sym = Symmetry::none;
    Interval tail(0.0);
    is >> tok;
    if (tok != "dims") throw ConfigError("expected dims");
    is >> box.dims;
    if (box.dims < 1 || box.dims > 3) throw ConfigError("dims out of range");
    is >> tok;
    if (tok != "kinds") throw ConfigError("expected kinds");
    for (int d = 0; d < box.dims; ++d) {
        is >> tok;
        box.kind[d] = (tok == "fourier") ? DimKind::fourier
                     : (tok == "taylor") ? DimKind::taylor
                                         : throw ConfigError("bad dim kind");
    }
    is >> tok;
    if (tok != "box") throw ConfigError("expected box");
    for (int d = 0; d < box.dims; ++d) is >> box.n[d];
    is >> tok;
    if (tok != "weights") throw ConfigError("expected weights");
    for (int d = 0; d < box.dims; ++d) is >> wv[d].mu1 >> wv[d].mu2;
    is >> tok;
    if (tok != "symmetry") throw ConfigError("expected symmetry");
    is >> tok;
    sym = sym_from(tok);
    is >> tok;
    if (tok != "tail") throw ConfigError("expected tail");
    std::string dec, hex;
    is >> dec >> hex;
    tail = from_hex(hex);
    {
        Interval check = from_dec(dec);
        if (!(check.lo <= tail.lo && tail.hi <= check.hi) &&
            !(tail.lo <= check.lo && check.hi <= tail.hi))
            throw ConfigError("tail decimal/hex mismatch");
    }
    FourierSeq u(box, wv, sym);
    u.tail = tail;
    while (is >> tok) {
        if (tok == "end") return u;
        if (tok != "coeff") throw ConfigError("expected coeff");
        MIdx m;
        for (int d = 0; d < box.dims; ++d) is >> m.v[d];
        std::string key, dre, hre, dim_, him;
        is >> key >> dre >> hre;
        if (key != "re") throw ConfigError("expected re");
        is >> key >> dim_ >> him;
        if (key != "im") throw ConfigError("expected im");
        CInterval z(from_hex(hre), from_hex(him));
        Interval cre = from_dec(dre), cim = from_dec(dim_);
        if (!cre.contains(z.re) || !cim.contains(z.im))
            throw ConfigError("coefficient decimal/hex mismatch");
        if (!box.inside(m)) throw ConfigError("coefficient outside box");
        u.set(m, z);
    }
    throw ConfigError("sequence file missing end marker");
}

}  // namespace rpde
