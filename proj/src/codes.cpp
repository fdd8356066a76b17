#include "orecode/codes.hpp"

#include <cmath>

namespace orecode {

SkewCode build_code(const SkewPoly& f, const SkewPoly& g) {
    if (!f.ctx().same(g.ctx())) throw Error(ErrorKind::ContextMismatch, "modulus and generator over different rings");
    if (!f.is_monic() || f.deg() < 1) throw Error(ErrorKind::InvalidArgument, "modulus must be monic of degree >= 1");
    if (!g.is_monic()) throw Error(ErrorKind::InvalidArgument, "generator must be monic");
    if (!right_divides(g, f)) throw Error(ErrorKind::NotRightDivisor, "generator does not right-divide the modulus");
    SkewCode c;
    c.ctx = f.ctx();
    c.f = f;
    c.g = g;
    c.n = f.deg();
    c.k = f.deg() - g.deg();
    c.abar.assign(c.n, 0);
    for (int i = 0; i < c.n; ++i) c.abar[i] = f.field().neg(f[i]);
    return c;
}

Matrix generator_matrix(const SkewCode& code) {
    if (code.k == 0) throw Error(ErrorKind::EmptyCode, "zero code has no generator matrix");
    Matrix G;
    for (int i = 0; i < code.k; ++i) {
        SkewPoly row = SkewPoly::monomial(code.ctx, 1, i) * code.g;
        Vec v(code.n, 0);
        for (size_t j = 0; j < row.coeffs().size(); ++j) v[j] = row.coeffs()[j];
        G.push_back(v);
    }
    return G;
}

Vec encode(const SkewCode& code, const SkewPoly& message) {
    if (message.deg() >= code.k) throw Error(ErrorKind::DegreeTooLarge, "message degree must be < k");
    SkewPoly c = message * code.g;
    Vec v(code.n, 0);
    for (size_t j = 0; j < c.coeffs().size(); ++j) v[j] = c.coeffs()[j];
    return v;
}

Vec polycyclic_shift(const SkewCode& code, const Vec& v) {
    if (int(v.size()) != code.n) throw Error(ErrorKind::LengthMismatch, "vector length differs from n");
    const auto& F = *code.ctx.field;
    Vec out(code.n, 0);
    for (int i = 1; i < code.n; ++i) out[i] = code.ctx.apply(v[i - 1], 1);
    Elem top = code.ctx.apply(v[code.n - 1], 1);
    if (top)
        for (int i = 0; i < code.n; ++i) out[i] = F.add(out[i], F.mul(top, code.abar[i]));
    return out;
}

bool in_code(const SkewCode& code, const Vec& v) {
    if (int(v.size()) != code.n) throw Error(ErrorKind::LengthMismatch, "vector length differs from n");
    if (code.k == 0) return hamming_weight(v) == 0;
    Matrix G = generator_matrix(code);
    int r = rank_over(*code.ctx.field, G);
    G.push_back(v);
    return rank_over(*code.ctx.field, G) == r;
}

int hamming_weight(const Vec& v) {
    int w = 0;
    for (Elem a : v) w += a != 0;
    return w;
}

int rank_weight(const Vec& v, const SubfieldEmbedding& emb) { return emb.rank(v); }

std::string Metric::name() const {
    if (kind == Kind::Hamming) return "hamming";
    return "rank:" + std::to_string(sub->sub_size());
}

SingletonReport singleton_check(const SkewCode& code, int d_h, int d_r, const SubfieldEmbedding& emb) {
    SingletonReport r;
    r.is_mds = d_h == code.n - code.k + 1;
    long long m = emb.degree();
    long long n = code.n;
    long long dim = (long long)code.k * m;
    r.is_mrd = dim == std::max(n, m) * (std::min(n, m) - d_r + 1);
    return r;
}

namespace {
template <class Fn>
void for_each_codeword(const FiniteField& F, const Matrix& G, int n, Fn fn) {
    int k = int(G.size());
    double total = std::pow(double(F.q()), k);
    if (total > double(global_cap()) * 64) throw Error(ErrorKind::CapExceeded, "codeword enumeration too large");
    std::vector<Elem> m(k, 0);
    Vec c(n, 0);
    for (;;) {
        std::fill(c.begin(), c.end(), 0);
        for (int j = 0; j < k; ++j)
            if (m[j])
                for (int i = 0; i < n; ++i) c[i] = F.add(c[i], F.mul(m[j], G[j][i]));
        fn(c);
        int j = k - 1;
        while (j >= 0 && m[j] == F.q() - 1) m[j--] = 0;
        if (j < 0) break;
        ++m[j];
    }
}
}  // namespace

std::vector<std::uint64_t> weight_enumerator(const FiniteField& F, const Matrix& G, int n) {
    std::vector<std::uint64_t> A(n + 1, 0);
    if (G.empty()) {
        A[0] = 1;
        return A;
    }
    for_each_codeword(F, G, n, [&](const Vec& c) { ++A[hamming_weight(c)]; });
    return A;
}

std::vector<std::uint64_t> rank_distribution(const FiniteField& F, const Matrix& G, int n, const SubfieldEmbedding& emb) {
    std::vector<std::uint64_t> A(n + 1, 0);
    if (G.empty()) {
        A[0] = 1;
        return A;
    }
    for_each_codeword(F, G, n, [&](const Vec& c) { ++A[emb.rank(c)]; });
    return A;
}

std::vector<SkewPoly> right_divisors(const SkewPoly& f) {
    const auto& F = f.field();
    std::vector<SkewPoly> out;
    for (int d = 0; d <= f.deg(); ++d) {
        if (std::pow(double(F.q()), d) > double(global_cap()))
            throw Error(ErrorKind::CapExceeded, "divisor enumeration exceeds cap");
        std::vector<Elem> c(d + 1, 0);
        c[d] = 1;
        for (;;) {
            SkewPoly g(f.ctx(), c);
            if (right_divides(g, f)) out.push_back(g);
            int j = 0;
            while (j < d && c[j] == F.q() - 1) c[j++] = 0;
            if (j >= d) break;
            ++c[j];
        }
    }
    return out;
}

}  // namespace orecode
