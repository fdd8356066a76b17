#include "orecode/frame.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace orecode {

namespace {
void check_mu(unsigned mu, unsigned e) {
    if (mu == 0 || e == 0 || e % mu) throw Error(ErrorKind::InvalidArgument, "mu must divide e");
}
}  // namespace

IndexSet normalize_set(const std::vector<int>& T, int e) {
    std::set<int> s;
    for (int i : T) s.insert(int(mod_floor(i, e)));
    return IndexSet(s.begin(), s.end());
}

IndexSet mu_closure(const IndexSet& T, unsigned mu, unsigned e) {
    check_mu(mu, e);
    std::set<int> s;
    for (int i : T)
        for (unsigned j = 0; j < e / mu; ++j) s.insert(int((unsigned(i) + j * mu) % e));
    return IndexSet(s.begin(), s.end());
}

bool is_mu_closed(const IndexSet& T, unsigned mu, unsigned e) { return mu_closure(T, mu, e) == normalize_set(T, int(e)); }

IndexSet representative_set(const IndexSet& T, unsigned mu, unsigned e) {
    check_mu(mu, e);
    std::set<int> in(T.begin(), T.end());
    IndexSet out;
    for (unsigned i = 0; i < mu; ++i) {
        bool full = true;
        for (unsigned j = 0; j < e / mu && full; ++j) full = in.count(int(i + j * mu)) > 0;
        if (full) out.push_back(int(i));
    }
    return out;
}

bool is_normal_element(const FieldAutomorphism& theta, unsigned q0_degree, Elem a) {
    if (a == 0) return false;
    SubfieldEmbedding sub(theta.field, q0_degree);
    unsigned e = sub.degree();
    std::vector<Elem> orbit(e);
    for (unsigned i = 0; i < e; ++i) orbit[i] = theta.apply(a, i);
    return sub.rank(orbit) == int(e);
}

Elem find_normal_element(const FieldAutomorphism& theta, unsigned q0_degree) {
    const auto& B = *theta.field;
    SubfieldEmbedding sub(theta.field, q0_degree);
    unsigned e = sub.degree();
    std::vector<Elem> orbit(e);
    std::uint32_t count = std::max<std::uint32_t>(B.q() - 1, 1);
    for (std::uint32_t k = 0; k < count; ++k) {
        Elem a = B.exp(k);
        for (unsigned i = 0; i < e; ++i) orbit[i] = theta.apply(a, i);
        if (sub.rank(orbit) == int(e)) return a;
    }
    throw Error(ErrorKind::InternalError, "no normal element found");
}

ExtensionFrame ExtensionFrame::build(const FieldAutomorphism& sigma, const FrameOptions& opt) {
    ExtensionFrame fr;
    fr.sigma_ = sigma;
    const auto& F = *sigma.field;
    unsigned mu = sigma.order();
    unsigned g = sigma.gcd_rs();
    std::uint64_t e = opt.e;
    if (e == 0) {
        if (!opt.poly) throw Error(ErrorKind::InvalidArgument, "frame needs e or a polynomial");
        e = right_exponent(*opt.poly);
    }
    e = std::lcm<std::uint64_t>(e, mu);
    if (e > 64) throw Error(ErrorKind::CapExceeded, "frame exponent " + std::to_string(e) + " too large");
    fr.e_ = unsigned(e);
    fr.mu_ = mu;
    unsigned big_deg = g * fr.e_;
    FieldPtr big = FiniteField::make(F.p(), big_deg, opt.big_modulus);

    // theta = p^R-Frobenius with R = r mod s and fixed field F_{q0}
    unsigned R = 0;
    bool found = false;
    for (unsigned cand = 0; cand < big_deg; ++cand) {
        if (cand % F.s() != sigma.r % F.s()) continue;
        if (std::gcd(cand, big_deg) == g) {
            R = cand;
            found = true;
            break;
        }
    }
    if (!found) throw Error(ErrorKind::InternalError, "no extension of sigma found");
    fr.theta_ = FieldAutomorphism(big, R);

    // roots of F_q's modulus inside the big field, sorted by discrete log
    const auto& mod = F.modulus();
    std::uint32_t step = (big->q() - 1) / (F.q() - 1);
    for (std::uint32_t k = 0; k < F.q() - 1; ++k) {
        Elem a = big->exp(std::int64_t(k) * step);
        Elem acc = 0;
        for (size_t i = mod.size(); i-- > 0;) acc = big->add(big->mul(acc, a), Elem(mod[i]));
        if (acc == 0) fr.embed_roots_.push_back(a);
    }
    std::sort(fr.embed_roots_.begin(), fr.embed_roots_.end(), [&](Elem x, Elem y) { return big->log(x) < big->log(y); });
    if (fr.embed_roots_.size() != F.s()) throw Error(ErrorKind::InternalError, "modulus does not split in the big field");
    fr.embed_index_ = opt.embed_index.value_or(0);
    if (fr.embed_index_ >= fr.embed_roots_.size()) throw Error(ErrorKind::InvalidArgument, "embedding index out of range");
    Elem rho = fr.embed_roots_[fr.embed_index_];

    fr.emb_.assign(F.q(), 0);
    fr.unemb_.assign(big->q(), -1);
    std::vector<Elem> rp(F.s());
    rp[0] = 1;
    for (unsigned i = 1; i < F.s(); ++i) rp[i] = big->mul(rp[i - 1], rho);
    for (Elem a = 0; a < F.q(); ++a) {
        auto d = F.digits(a);
        Elem v = 0;
        for (unsigned i = 0; i < F.s(); ++i)
            for (int t = 0; t < d[i]; ++t) v = big->add(v, rp[i]);
        fr.emb_[a] = v;
        fr.unemb_[v] = std::int32_t(a);
    }
    // theta restricted to F_q is sigma
    for (Elem a = 0; a < F.q(); ++a)
        if (fr.theta_.apply(fr.emb_[a], 1) != fr.emb_[sigma.apply(a, 1)])
            throw Error(ErrorKind::InternalError, "theta does not extend sigma");

    if (opt.alpha_log) {
        fr.alpha_ = big->exp(*opt.alpha_log);
        if (!is_normal_element(fr.theta_, g, fr.alpha_))
            throw Error(ErrorKind::InvalidArgument, "requested alpha is not a normal element");
    } else {
        fr.alpha_ = find_normal_element(fr.theta_, g);
    }
    fr.beta_ = big->div(fr.theta_.apply(fr.alpha_, 1), fr.alpha_);
    fr.roots_.resize(fr.e_);
    for (unsigned i = 0; i < fr.e_; ++i) fr.roots_[i] = fr.theta_.apply(fr.beta_, i);

    // x^e - 1 = lclm of the linear factors
    SkewPoly acc = SkewPoly::constant(fr.theta_, 1);
    for (Elem b : fr.roots_) acc = lclm(acc, SkewPoly::linear(fr.theta_, b));
    SkewPoly unity = SkewPoly::monomial(fr.theta_, 1, fr.e_) - SkewPoly::constant(fr.theta_, 1);
    if (acc != unity) throw Error(ErrorKind::InternalError, "linear factors do not recover x^e - 1");
    return fr;
}

Elem ExtensionFrame::root(int i) const { return roots_[size_t(mod_floor(i, e_))]; }

Elem ExtensionFrame::unembed(Elem b) const {
    if (unemb_[b] < 0) throw Error(ErrorKind::InternalError, "element not in embedded base field");
    return Elem(unemb_[b]);
}

SkewPoly ExtensionFrame::embed(const SkewPoly& f) const {
    if (!f.ctx().same(sigma_)) throw Error(ErrorKind::ContextMismatch, "polynomial not over the frame's base ring");
    std::vector<Elem> c;
    for (Elem a : f.coeffs()) c.push_back(emb_[a]);
    return SkewPoly(theta_, c);
}

SkewPoly ExtensionFrame::unembed(const SkewPoly& f) const {
    std::vector<Elem> c;
    for (Elem b : f.coeffs()) c.push_back(unembed(b));
    return SkewPoly(sigma_, c);
}

std::vector<SkewPoly> ExtensionFrame::factor_unity() const {
    std::vector<SkewPoly> out;
    for (Elem b : roots_) out.push_back(SkewPoly::linear(theta_, b));
    return out;
}

std::vector<Elem> ExtensionFrame::constacyclic_roots(Elem gamma, unsigned n) const {
    if (gamma == 0) throw Error(ErrorKind::InvalidArgument, "gamma must be nonzero");
    std::vector<Elem> out;
    for (unsigned i = 0; i < n; ++i) out.push_back(big()->mul(emb_[gamma], root(int(i))));
    return out;
}

IndexSet ExtensionFrame::defining_set(const SkewPoly& g) const {
    if (g.is_zero()) throw Error(ErrorKind::InvalidArgument, "defining set of zero");
    SkewPoly G = embed(g);
    IndexSet T;
    for (unsigned i = 0; i < e_; ++i)
        if (evaluate_right(G, roots_[i]) == 0) T.push_back(int(i));
    return T;
}

SkewPoly ExtensionFrame::orbit_min_poly(unsigned i) const {
    if (i >= mu_) throw Error(ErrorKind::InvalidArgument, "orbit index must be < mu");
    SkewPoly acc = SkewPoly::constant(theta_, 1);
    for (unsigned j = 0; j < m(); ++j) acc = lclm(acc, SkewPoly::linear(theta_, root(int(i + j * mu_))));
    for (Elem b : acc.coeffs())
        if (!in_base(b)) throw Error(ErrorKind::InternalError, "orbit polynomial leaves the base field");
    return unembed(acc);
}

SkewPoly ExtensionFrame::generator_from_defining_set(const IndexSet& T0) const {
    IndexSet T = normalize_set(T0, int(e_));
    if (!is_mu_closed(T, mu_, e_)) throw Error(ErrorKind::NotClosed, "defining set is not mu-closed");
    SkewPoly acc = SkewPoly::constant(theta_, 1);
    for (int i : T) acc = lclm(acc, SkewPoly::linear(theta_, roots_[i]));
    for (Elem b : acc.coeffs())
        if (!in_base(b)) throw Error(ErrorKind::InternalError, "generator leaves the base field");
    return unembed(acc);
}

}  // namespace orecode
