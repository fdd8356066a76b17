#include "orecode/equiv.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace orecode {

const char* status_name(EquivOutcome::Status s) {
    switch (s) {
        case EquivOutcome::Status::Equivalent: return "equivalent";
        case EquivOutcome::Status::NoWitness: return "no_witness";
        case EquivOutcome::Status::SupportMismatch: return "support_mismatch";
    }
    return "?";
}

PolyShape to_general(const TrinomialShape& t) { return PolyShape{t.n, {0, t.l}, {t.a0, t.al}}; }

SkewPoly shape_poly(const FieldAutomorphism& aut, const PolyShape& s) {
    const auto& F = *aut.field;
    std::vector<Elem> c(size_t(s.n) + 1, 0);
    c[size_t(s.n)] = 1;
    for (size_t j = 0; j < s.support.size(); ++j) c[size_t(s.support[j])] = F.neg(s.values[j]);
    return SkewPoly(aut, c);
}

SkewPoly shape_poly(const FieldAutomorphism& aut, const TrinomialShape& t) { return shape_poly(aut, to_general(t)); }

PolyShape shape_from_poly(const SkewPoly& f) {
    if (!f.is_monic() || f.deg() < 1) throw Error(ErrorKind::ShapeMismatch, "modulus must be monic of degree >= 1");
    PolyShape s;
    s.n = f.deg();
    for (int i = 0; i < s.n; ++i)
        if (f[size_t(i)]) {
            s.support.push_back(i);
            s.values.push_back(f.field().neg(f[size_t(i)]));
        }
    return s;
}

TrinomialShape trinomial_from_poly(const SkewPoly& f) {
    PolyShape s = shape_from_poly(f);
    if (s.support.size() != 2 || s.support[0] != 0)
        throw Error(ErrorKind::ShapeMismatch, "not a trinomial x^n - a_l x^l - a_0 with a_0, a_l nonzero");
    return TrinomialShape{s.n, s.support[1], s.values[0], s.values[1]};
}

void validate_shape(const FiniteField& F, const TrinomialShape& t) {
    if (!(0 < t.l && t.l < t.n)) throw Error(ErrorKind::ShapeMismatch, "need 0 < l < n");
    F.check(t.a0);
    F.check(t.al);
    if (!t.a0 || !t.al) throw Error(ErrorKind::ShapeMismatch, "trinomial coefficients must be nonzero");
}

bool witness_equations_hold(const FieldAutomorphism& aut, const PolyShape& src, const PolyShape& dst, Elem alpha) {
    const auto& F = *aut.field;
    if (alpha == 0 || src.support != dst.support || src.n != dst.n) return false;
    for (size_t j = 0; j < src.support.size(); ++j) {
        int i = src.support[j];
        Elem lhs = F.mul(src.values[j], sigma_norm(aut, aut.apply(alpha, i), src.n - i));
        if (lhs != dst.values[j]) return false;
    }
    return true;
}

EquivOutcome general_witness(const FieldAutomorphism& aut, const PolyShape& src, const PolyShape& dst,
                             const EquivMetric& metric) {
    if (src.n != dst.n) throw Error(ErrorKind::ShapeMismatch, "moduli have different degrees");
    EquivOutcome out;
    if (src.support != dst.support) {
        out.status = EquivOutcome::Status::SupportMismatch;
        return out;
    }
    const auto& F = *aut.field;
    std::uint32_t ord = metric.order(F), step = metric.step(F);
    for (std::uint32_t t = 0; t < ord; ++t) {
        Elem a = F.exp(std::int64_t(t) * step);
        if (witness_equations_hold(aut, src, dst, a)) {
            out.status = EquivOutcome::Status::Equivalent;
            out.alpha = a;
            return out;
        }
    }
    return out;
}

bool multiplicative_on(const FieldAutomorphism& aut, Elem alpha, const SkewPoly& src, const SkewPoly& dst,
                       const SkewPoly& f, const SkewPoly& g) {
    (void)aut;
    SkewPoly lhs = scale_map(right_mod(f * g, dst), alpha);
    SkewPoly rhs = right_mod(scale_map(f, alpha) * scale_map(g, alpha), src);
    return lhs == rhs;
}

namespace {
void spot_verify(const FieldAutomorphism& aut, Elem alpha, const SkewPoly& src, const SkewPoly& dst) {
    if (!right_mod(scale_map(dst, alpha), src).is_zero())
        throw Error(ErrorKind::InternalError, "witness does not map the modulus");
    std::mt19937 rng(12345);
    const auto& F = *aut.field;
    int n = src.deg();
    std::uniform_int_distribution<std::uint32_t> pick(0, F.q() - 1);
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<Elem> a(static_cast<size_t>(n)), b(static_cast<size_t>(n));
        for (auto& x : a) x = pick(rng);
        for (auto& x : b) x = pick(rng);
        if (!multiplicative_on(aut, alpha, src, dst, SkewPoly(aut, a), SkewPoly(aut, b)))
            throw Error(ErrorKind::InternalError, "witness fails multiplicativity");
    }
}
}  // namespace

std::optional<Elem> trinomial_hamming_witness(const FieldAutomorphism& aut, const TrinomialShape& src,
                                              const TrinomialShape& dst) {
    validate_shape(*aut.field, src);
    validate_shape(*aut.field, dst);
    if (src.n != dst.n || src.l != dst.l) throw Error(ErrorKind::ShapeMismatch, "trinomials differ in n or l");
    auto o = general_witness(aut, to_general(src), to_general(dst));
    if (o.alpha) spot_verify(aut, *o.alpha, shape_poly(aut, src), shape_poly(aut, dst));
    return o.alpha;
}

std::optional<Elem> trinomial_rank_witness(const FieldAutomorphism& aut, const TrinomialShape& src,
                                           const TrinomialShape& dst, const SubfieldEmbedding& emb) {
    validate_shape(*aut.field, src);
    validate_shape(*aut.field, dst);
    if (src.n != dst.n || src.l != dst.l) throw Error(ErrorKind::ShapeMismatch, "trinomials differ in n or l");
    auto o = general_witness(aut, to_general(src), to_general(dst), EquivMetric::rank(emb));
    if (o.alpha) spot_verify(aut, *o.alpha, shape_poly(aut, src), shape_poly(aut, dst));
    return o.alpha;
}

std::vector<std::uint64_t> subgroup_generator_logs(const FieldAutomorphism& aut, int n, const std::vector<int>& support,
                                                   const EquivMetric& metric) {
    const auto& F = *aut.field;
    Elem xi = F.exp(metric.step(F));
    std::vector<std::uint64_t> u;
    for (int i : support) u.push_back(F.log(sigma_norm(aut, aut.apply(xi, i), n - i)));
    return u;
}

namespace {
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
    if (b == 0) {
        x = 1;
        y = 0;
        return a;
    }
    std::int64_t x1, y1;
    std::int64_t g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

// solve u t = x (mod Q) for all components; returns false if inconsistent
bool solve_congruences(const std::vector<std::uint64_t>& u, const std::vector<std::uint64_t>& x, std::uint64_t Q,
                       std::int64_t* t_out) {
    std::int64_t T = 0, M = 1;
    for (size_t j = 0; j < u.size(); ++j) {
        std::int64_t uj = std::int64_t(u[j] % Q), xj = std::int64_t(x[j] % Q), q = std::int64_t(Q);
        std::int64_t g = std::gcd(uj, q);
        if (xj % g) return false;
        std::int64_t Mj = q / g;
        std::int64_t inv, dummy;
        ext_gcd((uj / g) % Mj, Mj, inv, dummy);
        std::int64_t tj = Mj == 1 ? 0 : mod_floor((__int128)(xj / g) * mod_floor(inv, Mj) % Mj, Mj);
        // combine t = T (mod M) with t = tj (mod Mj)
        std::int64_t p, r;
        std::int64_t gg = ext_gcd(M, Mj, p, r);
        if ((tj - T) % gg) return false;
        std::int64_t L = M / gg * Mj;
        std::int64_t k = mod_floor((__int128)((tj - T) / gg) * mod_floor(p, Mj / gg) % (Mj / gg), Mj / gg);
        T = mod_floor(T + (__int128)M * k % L, L);
        M = L;
    }
    if (t_out) *t_out = T;
    return true;
}

std::uint64_t lcm_u(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }
}  // namespace

bool subgroup_membership(const FieldAutomorphism& aut, int n, const std::vector<int>& support,
                         const std::vector<Elem>& ratios, const EquivMetric& metric) {
    const auto& F = *aut.field;
    if (ratios.size() != support.size()) throw Error(ErrorKind::ShapeMismatch, "ratio count differs from support");
    std::vector<std::uint64_t> x;
    for (Elem r : ratios) {
        if (!r) throw Error(ErrorKind::InvalidArgument, "ratio components must be nonzero");
        x.push_back(F.log(r));
    }
    auto u = subgroup_generator_logs(aut, n, support, metric);
    return solve_congruences(u, x, F.q() - 1, nullptr);
}

std::uint64_t count_general_classes(const FieldAutomorphism& aut, int n, const std::vector<int>& support,
                                    const EquivMetric& metric) {
    const auto& F = *aut.field;
    std::uint64_t Q = F.q() - 1, Qp = metric.order(F);
    std::uint64_t L = 1;
    for (int i : support) {
        std::uint64_t br = bracket_mod(F.p(), aut.r, std::uint64_t(n - i), Qp);
        L = lcm_u(L, Qp / std::gcd(br, Qp));
    }
    long double total = std::pow((long double)Q, (long double)support.size());
    if (total > 1.8e19L) throw Error(ErrorKind::CapExceeded, "class count overflows");
    std::uint64_t T = 1;
    for (size_t j = 0; j < support.size(); ++j) T *= Q;
    return T / L;
}

std::uint64_t count_hamming_classes(const FieldAutomorphism& aut, int n, int l, bool two_sided, bool shifted_form) {
    const auto& F = *aut.field;
    if (!(0 < l && l < n)) throw Error(ErrorKind::ShapeMismatch, "need 0 < l < n");
    std::uint64_t Q = two_sided ? aut.q0() - 1 : F.q() - 1;
    std::uint64_t bn = bracket_mod(F.p(), aut.r, std::uint64_t(n), Q);
    std::uint64_t bl = bracket_mod(F.p(), aut.r, std::uint64_t(n - l), Q);
    if (shifted_form) {
        std::uint64_t pw = 1 % Q;
        for (std::uint64_t t = 0; t < std::uint64_t(aut.r) * std::uint64_t(l); ++t) pw = pw * F.p() % Q;
        bl = bl * pw % Q;
    }
    std::uint64_t L = lcm_u(Q / std::gcd(bn, Q), Q / std::gcd(bl, Q));
    return Q * Q / L;
}

std::uint64_t count_rank_classes(const FieldAutomorphism& aut, int n, int l, const SubfieldEmbedding& emb) {
    if (!(0 < l && l < n)) throw Error(ErrorKind::ShapeMismatch, "need 0 < l < n");
    return count_general_classes(aut, n, {0, l}, EquivMetric::rank(emb));
}

std::uint64_t count_fixed_subfield_rank_classes(const FieldAutomorphism& aut, int n, int l) {
    std::uint64_t Q = aut.field->q() - 1, Q0 = aut.q0() - 1;
    std::uint64_t L = lcm_u(Q0 / std::gcd(std::uint64_t(n) % Q0, Q0), Q0 / std::gcd(std::uint64_t(n - l) % Q0, Q0));
    return Q * Q / L;
}

std::vector<TrinomialShape> hamming_representatives(const FieldAutomorphism& aut, int n, int l) {
    const auto& F = *aut.field;
    if (!(0 < l && l < n)) throw Error(ErrorKind::ShapeMismatch, "need 0 < l < n");
    std::uint64_t Q = F.q() - 1;
    std::uint64_t bn = bracket_mod(F.p(), aut.r, std::uint64_t(n), Q);
    std::uint64_t bl = bracket_mod(F.p(), aut.r, std::uint64_t(n - l), Q);
    std::uint64_t d0 = std::gcd(bn, Q), dl = std::gcd(bl, Q);
    std::uint64_t d = std::gcd(Q / d0, Q / dl);
    std::vector<TrinomialShape> out;
    for (std::uint64_t h = 0; h < d; ++h)
        for (std::uint64_t i = 0; i < d0; ++i)
            for (std::uint64_t j = 0; j < dl; ++j)
                out.push_back({n, l, F.exp(std::int64_t(i + h * bn)), F.exp(std::int64_t(j))});
    return out;
}

std::vector<TrinomialShape> rank_representatives(const FieldAutomorphism& aut, int n, int l, const SubfieldEmbedding& emb) {
    const auto& F = *aut.field;
    if (!(0 < l && l < n)) throw Error(ErrorKind::ShapeMismatch, "need 0 < l < n");
    std::uint64_t Q = F.q() - 1;
    auto u = subgroup_generator_logs(aut, n, {0, l}, EquivMetric::rank(emb));
    // cosets of <(A, B)> in Z_Q^2: y below gcd(B, Q), then x below gcd(ord(B) A, Q)
    std::uint64_t A = u[0] % Q, B = u[1] % Q;
    std::uint64_t gB = std::gcd(B, Q);
    std::uint64_t ordB = Q / gB;
    std::uint64_t gx = std::gcd((ordB % Q) * A % Q, Q);
    std::vector<TrinomialShape> out;
    for (std::uint64_t x = 0; x < gx; ++x)
        for (std::uint64_t y = 0; y < gB; ++y) out.push_back({n, l, F.exp(std::int64_t(x)), F.exp(std::int64_t(y))});
    return out;
}

std::optional<Elem> standard_trinomial_witness(const FieldAutomorphism& aut, const TrinomialShape& shape,
                                               const EquivMetric& metric) {
    const auto& F = *aut.field;
    validate_shape(F, shape);
    std::uint32_t ord = metric.order(F), step = metric.step(F);
    for (std::uint32_t t = 0; t < ord; ++t) {
        Elem a = F.exp(std::int64_t(t) * step);
        if (sigma_norm(aut, a, shape.n) == shape.a0 && shape.a0 == F.mul(sigma_norm(aut, a, shape.l), shape.al)) return a;
    }
    return std::nullopt;
}

std::optional<Elem> fixed_subfield_gcrd_witness(const FieldAutomorphism& aut, const TrinomialShape& src,
                                                const TrinomialShape& dst) {
    const auto& F = *aut.field;
    validate_shape(F, src);
    validate_shape(F, dst);
    if (src.n != dst.n || src.l != dst.l) throw Error(ErrorKind::ShapeMismatch, "trinomials differ in n or l");
    SkewPoly f1 = SkewPoly::monomial(aut, src.a0, size_t(src.n)) - SkewPoly::constant(aut, dst.a0);
    SkewPoly f2 = SkewPoly::monomial(aut, src.al, size_t(src.n - src.l)) - SkewPoly::constant(aut, dst.al);
    SkewPoly G = gcrd(f1, f2);
    if (G.deg() < 1) return std::nullopt;
    SubfieldEmbedding fix = fixed_subfield(aut);
    for (std::uint32_t t = 0; t + 1 < fix.sub_size(); ++t) {
        Elem a = F.exp(std::int64_t(t) * fix.cofactor());
        if (evaluate_right(G, a) == 0) return a;
    }
    return std::nullopt;
}

std::vector<ConstacyclicPart> constacyclic_reduction(const FieldAutomorphism& aut, Elem alpha, const TrinomialShape& src,
                                                     const TrinomialShape& dst, const EquivMetric& metric) {
    const auto& F = *aut.field;
    std::uint64_t Qp = metric.order(F);
    std::vector<ConstacyclicPart> out;
    for (int which = 0; which < 2; ++which) {
        ConstacyclicPart part;
        part.index = which ? src.l : 0;
        Elem a = which ? src.al : src.a0;
        Elem b = which ? dst.al : dst.a0;
        int i = part.index;
        part.alpha_i = aut.apply(alpha, i);
        part.equation = F.mul(a, sigma_norm(aut, part.alpha_i, src.n - i)) == b;
        Elem ratio = F.div(b, a);
        part.in_subgroup = subgroup_membership(aut, src.n, {i}, {ratio}, metric);
        std::uint64_t br = bracket_mod(F.p(), aut.r, std::uint64_t(src.n - i), Qp);
        part.d_i = Qp / std::gcd(br, Qp);
        part.power_identity = F.pow(ratio, std::int64_t(part.d_i)) == 1;
        out.push_back(part);
    }
    return out;
}

Classification classify(const FieldAutomorphism& aut, const PolyShape& shape, const EquivMetric& metric) {
    const auto& F = *aut.field;
    std::uint64_t Q = F.q() - 1;
    auto u = subgroup_generator_logs(aut, shape.n, shape.support, metric);
    std::vector<std::uint64_t> x;
    for (Elem v : shape.values) {
        if (!v) throw Error(ErrorKind::ShapeMismatch, "shape values must be nonzero");
        x.push_back(F.log(v));
    }
    std::uint64_t ord = 1;
    for (auto uj : u) ord = lcm_u(ord, Q / std::gcd(uj % Q, Q));
    std::vector<std::uint64_t> best = x, cur(x.size());
    std::uint64_t best_t = 0;
    for (std::uint64_t t = 1; t < ord; ++t) {
        for (size_t j = 0; j < x.size(); ++j) cur[j] = (x[j] + t * u[j]) % Q;
        if (cur < best) {
            best = cur;
            best_t = t;
        }
    }
    Classification c;
    c.representative = shape;
    for (size_t j = 0; j < x.size(); ++j) c.representative.values[j] = F.exp(std::int64_t(best[j]));
    c.alpha = F.exp(std::int64_t(best_t * metric.step(F)));
    c.class_count = count_general_classes(aut, shape.n, shape.support, metric);
    return c;
}

SkewCode transport_code(const SkewCode& code, Elem alpha, const SkewPoly& src_modulus) {
    if (!right_mod(scale_map(code.f, alpha), src_modulus).is_zero())
        throw Error(ErrorKind::ShapeMismatch, "scale map does not carry the code's modulus onto the source modulus");
    return build_code(src_modulus, monic(scale_map(code.g, alpha)));
}

Vec schur(const FiniteField& F, const Vec& x, const Vec& y) {
    if (x.size() != y.size()) throw Error(ErrorKind::LengthMismatch, "schur product of different lengths");
    Vec z(x.size());
    for (size_t i = 0; i < x.size(); ++i) z[i] = F.mul(x[i], y[i]);
    return z;
}

namespace {
Vec padded(const SkewPoly& f, int n) {
    Vec v(size_t(n), 0);
    for (size_t i = 0; i < f.coeffs().size(); ++i) v[i] = f.coeffs()[i];
    return v;
}

// For fixed g both sides are left-linear in f, so each product is the sum of
// f_i times a precomputed column; f runs over an odometer with cached partial sums.
bool check_all_f(const FiniteField& F, int n, const std::vector<Vec>& Lc, const std::vector<Vec>& Rc) {
    const std::uint32_t q = F.q();
    std::vector<Vec> SL(size_t(n) + 1, Vec(size_t(n), 0)), SR(size_t(n) + 1, Vec(size_t(n), 0));
    std::vector<Elem> d(size_t(n), 0);
    auto addc = [&](Vec& dst, const Vec& src, const Vec& col, Elem c) {
        for (int t = 0; t < n; ++t) dst[size_t(t)] = F.add(src[size_t(t)], F.mul(c, col[size_t(t)]));
    };
    for (;;) {
        if (SL[size_t(n)] != SR[size_t(n)]) return false;
        int j = n - 1;
        while (j >= 0 && d[size_t(j)] == q - 1) d[size_t(j--)] = 0;
        if (j < 0) break;
        ++d[size_t(j)];
        addc(SL[size_t(j) + 1], SL[size_t(j)], Lc[size_t(j)], d[size_t(j)]);
        addc(SR[size_t(j) + 1], SR[size_t(j)], Rc[size_t(j)], d[size_t(j)]);
        for (int t = j + 1; t < n; ++t) {
            SL[size_t(t) + 1] = SL[size_t(j) + 1];
            SR[size_t(t) + 1] = SR[size_t(j) + 1];
        }
    }
    return true;
}
}  // namespace

bool multiplicative_exhaustive(const FieldAutomorphism& aut, Elem alpha, const SkewPoly& src, const SkewPoly& dst) {
    const auto& F = *aut.field;
    int n = dst.deg();
    if (src.deg() != n) throw Error(ErrorKind::ShapeMismatch, "moduli have different degrees");
    double pairs = std::pow(double(F.q()), 2.0 * n);
    if (pairs > 4.3e9) throw Error(ErrorKind::CapExceeded, "exhaustive pair check too large");
    std::uint64_t count = 1;
    for (int i = 0; i < n; ++i) count *= F.q();
    std::vector<Elem> Nalpha(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) Nalpha[size_t(i)] = sigma_norm(aut, alpha, i);
    bool ok = true;
#pragma omp parallel for schedule(dynamic, 16) reduction(&& : ok)
    for (long long gi = 0; gi < (long long)count; ++gi) {
        std::vector<Elem> gc(static_cast<size_t>(n));
        std::uint64_t v = std::uint64_t(gi);
        for (int i = 0; i < n; ++i) {
            gc[size_t(i)] = Elem(v % F.q());
            v /= F.q();
        }
        SkewPoly g(aut, gc);
        SkewPoly pg = scale_map(g, alpha);
        std::vector<Vec> Lc, Rc;
        SkewPoly xg = g, xpg = pg;
        SkewPoly x = SkewPoly::monomial(aut, 1, 1);
        for (int i = 0; i < n; ++i) {
            // column i: phi(x^i g mod dst) and N_i(alpha) (x^i phi(g) mod src)
            Lc.push_back(padded(scale_map(right_mod(xg, dst), alpha), n));
            Rc.push_back(padded(scale_left(Nalpha[size_t(i)], right_mod(xpg, src)), n));
            xg = x * xg;
            xpg = x * xpg;
        }
        if (!check_all_f(F, n, Lc, Rc)) ok = false;
    }
    return ok;
}

}  // namespace orecode
