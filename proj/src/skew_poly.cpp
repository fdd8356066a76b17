#include "orecode/skew_poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace orecode {

SkewPoly::SkewPoly(FieldAutomorphism ctx, std::vector<Elem> c) : ctx_(std::move(ctx)), c_(std::move(c)) {
    for (Elem a : c_) ctx_.field->check(a);
    trim();
}

void SkewPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

SkewPoly SkewPoly::constant(const FieldAutomorphism& ctx, Elem a) { return SkewPoly(ctx, {a}); }

SkewPoly SkewPoly::monomial(const FieldAutomorphism& ctx, Elem a, std::size_t i) {
    std::vector<Elem> c(i + 1, 0);
    c[i] = a;
    return SkewPoly(ctx, c);
}

SkewPoly SkewPoly::linear(const FieldAutomorphism& ctx, Elem a) {
    return SkewPoly(ctx, {ctx.field->neg(a), 1});
}

static void same_ctx(const SkewPoly& f, const SkewPoly& g) {
    if (!f.ctx().same(g.ctx())) throw Error(ErrorKind::ContextMismatch, "polynomials over different rings");
}

SkewPoly operator+(const SkewPoly& f, const SkewPoly& g) {
    same_ctx(f, g);
    const auto& F = f.field();
    std::vector<Elem> c(std::max(f.coeffs().size(), g.coeffs().size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = F.add(f[i], g[i]);
    return SkewPoly(f.ctx(), c);
}

SkewPoly operator-(const SkewPoly& f, const SkewPoly& g) {
    same_ctx(f, g);
    const auto& F = f.field();
    std::vector<Elem> c(std::max(f.coeffs().size(), g.coeffs().size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = F.sub(f[i], g[i]);
    return SkewPoly(f.ctx(), c);
}

SkewPoly operator*(const SkewPoly& f, const SkewPoly& g) {
    same_ctx(f, g);
    if (f.is_zero() || g.is_zero()) return SkewPoly(f.ctx());
    const auto& F = f.field();
    const auto& A = f.ctx();
    const auto& fc = f.coeffs();
    const auto& gc = g.coeffs();
    std::vector<Elem> c(fc.size() + gc.size() - 1, 0);
    for (size_t i = 0; i < fc.size(); ++i) {
        if (!fc[i]) continue;
        for (size_t j = 0; j < gc.size(); ++j)
            if (gc[j]) c[i + j] = F.add(c[i + j], F.mul(fc[i], A.apply(gc[j], std::int64_t(i))));
    }
    return SkewPoly(A, c);
}

SkewPoly scale_left(Elem a, const SkewPoly& f) {
    std::vector<Elem> c = f.coeffs();
    for (auto& x : c) x = f.field().mul(a, x);
    return SkewPoly(f.ctx(), c);
}

SkewPoly monic(const SkewPoly& f) {
    if (f.is_zero()) return f;
    return scale_left(f.field().inv(f.lead()), f);
}

DivResult right_divmod(const SkewPoly& f, const SkewPoly& g) {
    same_ctx(f, g);
    if (g.is_zero()) throw Error(ErrorKind::DivisionByZero, "right division by zero polynomial");
    const auto& F = f.field();
    const auto& A = f.ctx();
    std::vector<Elem> r = f.coeffs();
    const auto& gc = g.coeffs();
    int m = g.deg();
    std::vector<Elem> q(r.size() >= gc.size() ? r.size() - gc.size() + 1 : 0, 0);
    // sigma^k(g) cached per shift
    for (int top = int(r.size()) - 1; top >= m; --top) {
        if (!r[top]) continue;
        int k = top - m;
        Elem c = F.div(r[top], A.apply(gc[m], k));
        q[k] = c;
        for (int j = 0; j <= m; ++j)
            if (gc[j]) r[k + j] = F.sub(r[k + j], F.mul(c, A.apply(gc[j], k)));
    }
    r.resize(std::min<size_t>(r.size(), size_t(m)));
    return {SkewPoly(A, q), SkewPoly(A, r)};
}

DivResult left_divmod(const SkewPoly& f, const SkewPoly& g) {
    same_ctx(f, g);
    if (g.is_zero()) throw Error(ErrorKind::DivisionByZero, "left division by zero polynomial");
    const auto& F = f.field();
    const auto& A = f.ctx();
    std::vector<Elem> r = f.coeffs();
    const auto& gc = g.coeffs();
    int m = g.deg();
    std::vector<Elem> q(r.size() >= gc.size() ? r.size() - gc.size() + 1 : 0, 0);
    for (int top = int(r.size()) - 1; top >= m; --top) {
        if (!r[top]) continue;
        int k = top - m;
        // g_m sigma^m(c) = r_top
        Elem c = A.apply(F.div(r[top], gc[m]), -m);
        q[k] = c;
        // g * c x^k: coefficient j+k gets g_j sigma^j(c)
        for (int j = 0; j <= m; ++j)
            if (gc[j]) r[k + j] = F.sub(r[k + j], F.mul(gc[j], A.apply(c, j)));
    }
    r.resize(std::min<size_t>(r.size(), size_t(m)));
    return {SkewPoly(A, q), SkewPoly(A, r)};
}

SkewPoly right_mod(const SkewPoly& f, const SkewPoly& g) { return right_divmod(f, g).remainder; }

bool right_divides(const SkewPoly& g, const SkewPoly& f) { return right_mod(f, g).is_zero(); }

namespace {
struct Euclid {
    GcrdResult g;
    SkewPoly u_next, v_next;  // u_next*f + v_next*g = 0
};

Euclid euclid(const SkewPoly& f, const SkewPoly& g) {
    same_ctx(f, g);
    const auto& A = f.ctx();
    SkewPoly r0 = f, r1 = g;
    SkewPoly u0 = SkewPoly::constant(A, 1), u1(A), v0(A), v1 = SkewPoly::constant(A, 1);
    while (!r1.is_zero()) {
        auto qr = right_divmod(r0, r1);
        SkewPoly u2 = u0 - qr.quotient * u1;
        SkewPoly v2 = v0 - qr.quotient * v1;
        r0 = std::move(r1);
        r1 = std::move(qr.remainder);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    Elem li = r0.field().inv(r0.lead());
    return {{scale_left(li, r0), scale_left(li, u0), scale_left(li, v0)}, u1, v1};
}
}  // namespace

GcrdResult gcrd_extended(const SkewPoly& f, const SkewPoly& g) {
    same_ctx(f, g);
    if (f.is_zero() && g.is_zero()) throw Error(ErrorKind::Undefined, "gcrd of two zero polynomials");
    return euclid(f, g).g;
}

SkewPoly gcrd(const SkewPoly& f, const SkewPoly& g) { return gcrd_extended(f, g).d; }

SkewPoly lclm(const SkewPoly& f, const SkewPoly& g) {
    same_ctx(f, g);
    if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::Undefined, "lclm with zero polynomial");
    auto e = euclid(f, g);
    return monic(e.u_next * f);
}

Elem evaluate_right(const SkewPoly& f, Elem a) {
    const auto& F = f.field();
    F.check(a);
    Elem acc = 0;
    Elem N = 1;  // N_i(a)
    for (size_t i = 0; i < f.coeffs().size(); ++i) {
        if (f.coeffs()[i]) acc = F.add(acc, F.mul(f.coeffs()[i], N));
        N = F.mul(f.ctx().apply(N, 1), a);  // N_{i+1} = sigma(N_i) a
    }
    return acc;
}

std::uint64_t default_exponent_cap(const SkewPoly& f) {
    long double c = std::pow((long double)f.field().q(), (long double)std::max(f.deg(), 0)) * f.ctx().order();
    if (c > 1e18L) return std::uint64_t(1e18);
    return std::uint64_t(c);
}

std::uint64_t right_exponent(const SkewPoly& f0, std::uint64_t cap) {
    if (f0.is_zero()) throw Error(ErrorKind::InvalidArgument, "exponent of zero polynomial");
    const auto& A = f0.ctx();
    // strip a right factor x^h: f = x^h g with g_j = sigma^{-h}(f_{j+h})
    size_t h = 0;
    while (f0.coeffs()[h] == 0) ++h;
    std::vector<Elem> gc;
    for (size_t j = h; j < f0.coeffs().size(); ++j) gc.push_back(A.apply(f0.coeffs()[j], -std::int64_t(h)));
    SkewPoly f(A, gc);
    if (cap == 0) cap = default_exponent_cap(f);
    if (f.deg() == 0) return 1;
    f = monic(f);
    const auto& F = f.field();
    int n = f.deg();
    // r = x^e mod_r f held as a dense vector of length n
    std::vector<Elem> r(n, 0), nx(n, 0);
    r[0] = 1;
    const auto& fc = f.coeffs();
    for (std::uint64_t e = 1; e <= cap; ++e) {
        // x*r: shift and twist, then reduce the x^n term: x^n = f - (f - x^n) => x^n = -sum f_i x^i (mod_r f)
        Elem top = A.apply(r[n - 1], 1);
        for (int i = n - 1; i >= 1; --i) nx[i] = A.apply(r[i - 1], 1);
        nx[0] = 0;
        if (top)
            for (int i = 0; i < n; ++i) nx[i] = F.sub(nx[i], F.mul(top, fc[i]));
        std::swap(r, nx);
        if (r[0] == 1 && std::all_of(r.begin() + 1, r.end(), [](Elem v) { return v == 0; })) return e;
    }
    throw Error(ErrorKind::CapExceeded, "right exponent exceeds cap " + std::to_string(cap));
}

bool is_central(const SkewPoly& f) {
    unsigned mu = f.ctx().order();
    for (size_t i = 0; i < f.coeffs().size(); ++i) {
        Elem a = f.coeffs()[i];
        if (!a) continue;
        if (i % mu) return false;
        if (f.ctx().apply(a, 1) != a) return false;
    }
    return true;
}

bool is_invariant(const SkewPoly& f) {
    if (f.is_zero()) return true;
    const auto& A = f.ctx();
    SkewPoly x = SkewPoly::monomial(A, 1, 1);
    SkewPoly xi = SkewPoly::constant(A, A.field->primitive());
    return right_divides(f, f * x) && right_divides(f, f * xi);
}

SkewPoly minimal_polynomial_of_set(const FieldAutomorphism& ctx, const std::vector<Elem>& A) {
    SkewPoly m = SkewPoly::constant(ctx, 1);
    for (Elem a : A) m = lclm(m, SkewPoly::linear(ctx, a));
    return m;
}

std::vector<Elem> vanishing_set(const SkewPoly& g) {
    std::vector<Elem> out;
    for (Elem a = 0; a < g.field().q(); ++a)
        if (evaluate_right(g, a) == 0) out.push_back(a);
    return out;
}

bool is_w_polynomial(const SkewPoly& g) {
    if (!g.is_monic()) throw Error(ErrorKind::InvalidArgument, "W-polynomial test needs a monic polynomial");
    return minimal_polynomial_of_set(g.ctx(), vanishing_set(g)) == g;
}

SkewPoly scale_map(const SkewPoly& f, Elem alpha) {
    if (alpha == 0) throw Error(ErrorKind::InvalidScale, "scale by zero");
    const auto& F = f.field();
    std::vector<Elem> c = f.coeffs();
    Elem N = 1;
    for (size_t i = 0; i < c.size(); ++i) {
        c[i] = F.mul(c[i], N);
        N = F.mul(f.ctx().apply(N, 1), alpha);
    }
    return SkewPoly(f.ctx(), c);
}

// ---- grammar ----

namespace {
struct Lexer {
    const std::string& s;
    size_t i = 0;
    void ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool peek(char c) {
        ws();
        return i < s.size() && s[i] == c;
    }
    std::uint64_t uint() {
        ws();
        size_t st = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (st == i) throw Error(ErrorKind::ParseError, "expected integer at position " + std::to_string(st) + " in '" + s + "'");
        return std::stoull(s.substr(st, i - st));
    }
};
}  // namespace

SkewPoly parse_poly(const FieldAutomorphism& ctx, const std::string& text) {
    const auto& F = *ctx.field;
    Lexer lx{text};
    std::vector<Elem> c;
    auto addterm = [&](Elem a, std::size_t d, bool negate) {
        if (d > (1u << 24)) throw Error(ErrorKind::ParseError, "degree too large");
        if (c.size() <= d) c.resize(d + 1, 0);
        c[d] = negate ? F.sub(c[d], a) : F.add(c[d], a);
    };
    bool negate = false;
    if (lx.eat('-')) negate = true;
    for (;;) {
        Elem coeff = 1;
        bool have_coeff = false;
        if (lx.peek('g')) {
            lx.i++;
            if (lx.eat('^')) coeff = F.exp(std::int64_t(lx.uint() % (F.q() - 1)));
            else coeff = F.primitive();
            have_coeff = true;
        } else if (lx.peek('0') || lx.peek('1')) {
            std::uint64_t v = lx.uint();
            if (v > 1) throw Error(ErrorKind::ParseError, "coefficient must be 0, 1, g or g^k in '" + text + "'");
            coeff = Elem(v);
            have_coeff = true;
        }
        std::size_t d = 0;
        if (have_coeff) lx.eat('*');
        if (lx.eat('x')) {
            d = 1;
            if (lx.eat('^')) d = std::size_t(lx.uint());
        } else if (!have_coeff) {
            throw Error(ErrorKind::ParseError, "expected term at position " + std::to_string(lx.i) + " in '" + text + "'");
        }
        addterm(coeff, d, negate);
        if (lx.eat('+')) negate = false;
        else if (lx.eat('-')) negate = true;
        else break;
    }
    lx.ws();
    if (lx.i != text.size()) throw Error(ErrorKind::ParseError, "trailing input in '" + text + "'");
    return SkewPoly(ctx, c);
}

std::string format_poly(const SkewPoly& f) {
    if (f.is_zero()) return "0";
    const auto& F = f.field();
    std::string out;
    for (int i = f.deg(); i >= 0; --i) {
        Elem a = f.coeffs()[i];
        if (!a) continue;
        if (!out.empty()) out += " + ";
        std::string co = F.format(a);
        if (i == 0) {
            out += co;
            continue;
        }
        if (a != 1) out += co + "*";
        out += "x";
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace orecode
