#include "orecode/field.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace orecode {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::InvalidModulus: return "InvalidModulus";
        case ErrorKind::InvalidCharacteristic: return "InvalidCharacteristic";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::ContextMismatch: return "ContextMismatch";
        case ErrorKind::Undefined: return "Undefined";
        case ErrorKind::InvalidScale: return "InvalidScale";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::NotClosed: return "NotClosed";
        case ErrorKind::NotRightDivisor: return "NotRightDivisor";
        case ErrorKind::EmptyCode: return "EmptyCode";
        case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::InternalError: return "InternalError";
    }
    return "Error";
}

namespace {
std::atomic<std::uint64_t> g_cap{0};
}

std::uint64_t global_cap() {
    std::uint64_t c = g_cap.load();
    if (c) return c;
    c = std::uint64_t(1) << 20;
    if (const char* env = std::getenv("ORECODE_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) c = v;
    }
    g_cap.store(c);
    return c;
}

void set_global_cap(std::uint64_t cap) { g_cap.store(cap); }

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

std::uint64_t bracket_mod(std::uint64_t p, unsigned r, std::uint64_t n, std::uint64_t M) {
    if (M == 1) return 0;
    std::uint64_t P = 1;
    for (unsigned i = 0; i < r; ++i) P = (P * p) % M;
    // S(n) = sum_{k<n} P^k, Pn = P^n, by binary expansion of n from the top
    std::uint64_t S = 0, Pn = 1;
    for (int bit = 63; bit >= 0; --bit) {
        // double: S(2m) = S(m)(1 + P^m)
        S = (S * ((1 + Pn) % M)) % M;
        Pn = (Pn * Pn) % M;
        if ((n >> bit) & 1) {
            S = (1 + P * S) % M;
            Pn = (Pn * P) % M;
        }
    }
    return S;
}

// ---- polynomials over Z_p (ascending) ----
namespace {

using ZPoly = std::vector<int>;

void trim(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int inv_mod(int a, int p) {
    int r = 1, b = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1) r = int((long long)r * b % p);
        b = int((long long)b * b % p);
        e >>= 1;
    }
    return r;
}

ZPoly zmod(ZPoly a, const ZPoly& m, int p) {
    trim(a);
    int dm = int(m.size()) - 1;
    int il = inv_mod(m.back(), p);
    while (int(a.size()) - 1 >= dm && !a.empty()) {
        int shift = int(a.size()) - 1 - dm;
        int c = int((long long)a.back() * il % p);
        for (int i = 0; i <= dm; ++i) a[shift + i] = ((a[shift + i] - c * m[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

ZPoly zmulmod(const ZPoly& a, const ZPoly& b, const ZPoly& m, int p) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = int((r[i + j] + (long long)a[i] * b[j]) % p);
    return zmod(r, m, p);
}

ZPoly zgcd(ZPoly a, ZPoly b, int p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        ZPoly r = zmod(a, b, p);
        a = b;
        b = r;
    }
    return a;
}

ZPoly zpowmod(ZPoly base, std::uint64_t e, const ZPoly& m, int p) {
    ZPoly r{1};
    base = zmod(base, m, p);
    while (e) {
        if (e & 1) r = zmulmod(r, base, m, p);
        base = zmulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<int>& f0, unsigned p) {
    ZPoly f = f0;
    for (auto& c : f) c = ((c % int(p)) + int(p)) % int(p);
    trim(f);
    int n = int(f.size()) - 1;
    if (n < 1) return false;
    if (n == 1) return true;
    ZPoly xp{0, 1};
    ZPoly cur = xp;
    for (int i = 1; i <= n / 2; ++i) {
        cur = zpowmod(cur, p, f, int(p));
        ZPoly d = cur;
        d.resize(std::max<size_t>(d.size(), 2), 0);
        d[1] = ((d[1] - 1) % int(p) + int(p)) % int(p);
        trim(d);
        ZPoly g = zgcd(f, d, int(p));
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<int> smallest_irreducible(unsigned p, unsigned s) {
    // lexicographic over (c0, c1, ..., c_{s-1}), c0 most significant
    std::vector<int> c(s, 0);
    for (;;) {
        std::vector<int> f = c;
        f.push_back(1);
        if (is_irreducible_mod_p(f, p)) return f;
        int i = int(s) - 1;
        while (i >= 0 && c[i] == int(p) - 1) c[i--] = 0;
        if (i < 0) break;
        ++c[i];
    }
    throw Error(ErrorKind::InternalError, "no irreducible polynomial found");
}

// ---- FiniteField ----

FieldPtr FiniteField::make(unsigned p, unsigned s, std::optional<std::vector<int>> modulus) {
    if (!is_prime(p)) throw Error(ErrorKind::InvalidCharacteristic, "p=" + std::to_string(p) + " is not prime");
    if (s < 1) throw Error(ErrorKind::InvalidModulus, "degree must be >= 1");
    long double qq = 1;
    for (unsigned i = 0; i < s; ++i) qq *= p;
    if (qq > (long double)global_cap())
        throw Error(ErrorKind::CapExceeded, "field size " + std::to_string(p) + "^" + std::to_string(s) + " exceeds cap");
    std::vector<int> mod;
    if (modulus) {
        mod = *modulus;
        if (mod.size() != s + 1 || mod.back() != 1)
            throw Error(ErrorKind::InvalidModulus, "modulus must be monic of degree " + std::to_string(s));
        for (int c : mod)
            if (c < 0 || c >= int(p)) throw Error(ErrorKind::InvalidModulus, "modulus coefficient out of range");
        if (!is_irreducible_mod_p(mod, p)) throw Error(ErrorKind::InvalidModulus, "modulus is reducible");
    } else {
        mod = smallest_irreducible(p, s);
    }

    std::shared_ptr<FiniteField> F(new FiniteField());
    F->p_ = p;
    F->s_ = s;
    F->q_ = std::uint32_t(ipow(p, s));
    F->modulus_ = mod;
    const std::uint32_t q = F->q_;
    const std::uint32_t N = q - 1;

    auto slow_mul = [&](Elem a, Elem b) {
        ZPoly da = F->digits(a), db = F->digits(b);
        ZPoly r = zmulmod(da, db, mod, int(p));
        r.resize(s, 0);
        return F->from_digits(r);
    };
    auto slow_pow = [&](Elem a, std::uint64_t e) {
        Elem r = 1;
        while (e) {
            if (e & 1) r = slow_mul(r, a);
            a = slow_mul(a, a);
            e >>= 1;
        }
        return r;
    };

    // primitive element: ascending packed value
    auto pf = prime_factors(N);
    Elem prim = 1;
    if (N > 1) {
        prim = 0;
        for (Elem v = 2; v < q; ++v) {
            bool ok = true;
            for (auto f : pf)
                if (slow_pow(v, N / f) == 1) {
                    ok = false;
                    break;
                }
            if (ok) {
                prim = v;
                break;
            }
        }
        if (!prim) throw Error(ErrorKind::InternalError, "no primitive element");
    }
    F->primitive_ = prim;

    F->exp_.assign(2 * std::size_t(N), 0);
    F->log_.assign(q, 0);
    Elem x = 1;
    for (std::uint32_t i = 0; i < N; ++i) {
        F->exp_[i] = x;
        F->exp_[i + N] = x;
        F->log_[x] = i;
        x = slow_mul(x, prim);
    }
    F->half_ = (p == 2) ? 0 : N / 2;
    F->ppow_.resize(s);
    std::uint64_t pw = 1 % (N ? N : 1);
    for (unsigned j = 0; j < s; ++j) {
        F->ppow_[j] = pw;
        pw = (pw * p) % (N ? N : 1);
    }
    if (N == 1) F->ppow_.assign(s, 0);
    if (p != 2) {
        // zech[k] = log(1 + xi^k) or -1
        F->zech_.assign(N, -1);
        for (std::uint32_t k = 0; k < N; ++k) {
            auto d = F->digits(F->exp_[k]);
            d[0] = (d[0] + 1) % int(p);
            Elem v = F->from_digits(d);
            F->zech_[k] = v ? std::int32_t(F->log_[v]) : -1;
        }
    }
    return F;
}

void FiniteField::check(Elem a) const {
    if (a >= q_) throw Error(ErrorKind::FieldMismatch, "element " + std::to_string(a) + " not in GF(" + std::to_string(q_) + ")");
}

Elem FiniteField::inv(Elem a) const {
    if (a == 0) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem FiniteField::pow(Elem a, std::int64_t k) const {
    if (a == 0) {
        if (k < 0) throw Error(ErrorKind::DivisionByZero, "negative power of zero");
        return k == 0 ? 1 : 0;
    }
    std::int64_t N = q_ - 1;
    std::int64_t kk = mod_floor(k, N);
    return exp_[std::uint32_t((std::int64_t(log_[a]) * kk) % N)];
}

std::vector<int> FiniteField::digits(Elem a) const {
    std::vector<int> d(s_, 0);
    for (unsigned i = 0; i < s_; ++i) {
        d[i] = int(a % p_);
        a /= p_;
    }
    return d;
}

Elem FiniteField::from_digits(const std::vector<int>& d) const {
    Elem v = 0;
    for (size_t i = d.size(); i-- > 0;) v = v * p_ + Elem(((d[i] % int(p_)) + int(p_)) % int(p_));
    return v;
}

std::string FiniteField::format(Elem a) const {
    check(a);
    if (a == 0) return "0";
    std::uint32_t k = log_[a];
    if (k == 0) return "1";
    return "g^" + std::to_string(k);
}

Elem FiniteField::parse(const std::string& text) const {
    std::string t;
    for (char c : text)
        if (!isspace(static_cast<unsigned char>(c))) t += c;
    if (t == "0") return 0;
    if (t == "1") return 1;
    if (t == "g") return primitive_;
    if (t.size() > 2 && t[0] == 'g' && t[1] == '^') {
        std::string num = t.substr(2);
        if (num.empty() || !std::all_of(num.begin(), num.end(), ::isdigit))
            throw Error(ErrorKind::ParseError, "bad element literal '" + text + "'");
        std::uint64_t k = std::stoull(num) % (q_ - 1);
        return exp_[k];
    }
    throw Error(ErrorKind::ParseError, "bad element literal '" + text + "'");
}

std::string FiniteField::describe() const {
    std::ostringstream os;
    os << "GF(" << p_ << "^" << s_ << ")";
    return os.str();
}

// ---- automorphisms and norms ----

FieldAutomorphism::FieldAutomorphism(FieldPtr f, unsigned r_) : field(std::move(f)), r(r_) {
    if (r >= field->s()) throw Error(ErrorKind::InvalidArgument, "Frobenius power must satisfy r < s");
}

unsigned FieldAutomorphism::gcd_rs() const { return std::gcd(r, field->s()); }
unsigned FieldAutomorphism::order() const { return field->s() / gcd_rs(); }
std::uint32_t FieldAutomorphism::q0() const { return std::uint32_t(ipow(field->p(), gcd_rs())); }

std::uint64_t norm_exponent(const FieldAutomorphism& aut, std::int64_t i) {
    std::uint64_t N = aut.field->q() - 1;
    if (i >= 0) return bracket_mod(aut.field->p(), aut.r, std::uint64_t(i), N);
    // N_{-j} = sigma^{-j}(N_j^{-1}): exponent -[j] p^{-rj}
    std::uint64_t j = std::uint64_t(-i);
    std::uint64_t b = bracket_mod(aut.field->p(), aut.r, j, N);
    unsigned s = aut.field->s();
    std::uint64_t sh = (s - (aut.r * (j % s)) % s) % s;
    std::uint64_t pw = 1 % N;
    for (std::uint64_t t = 0; t < sh; ++t) pw = (pw * aut.field->p()) % N;
    return N == 1 ? 0 : ((N - b) % N) * pw % N;
}

Elem sigma_norm(const FieldAutomorphism& aut, Elem a, std::int64_t i) {
    aut.field->check(a);
    if (i == 0) return 1;
    if (a == 0) {
        if (i < 0) throw Error(ErrorKind::DivisionByZero, "negative norm index of zero");
        return 0;
    }
    return aut.field->pow(a, std::int64_t(norm_exponent(aut, i)));
}

Elem sigma_norm_product(const FieldAutomorphism& aut, Elem a, std::int64_t i) {
    const auto& F = *aut.field;
    F.check(a);
    if (i < 0) {
        if (a == 0) throw Error(ErrorKind::DivisionByZero, "negative norm index of zero");
        Elem nj = sigma_norm_product(aut, a, -i);
        return aut.apply(F.inv(nj), i);
    }
    Elem r = 1;
    for (std::int64_t k = 0; k < i; ++k) r = F.mul(r, aut.apply(a, k));
    return r;
}

// ---- linear algebra ----

int rank_mod_p(std::vector<std::vector<int>> rows, unsigned p) {
    if (rows.empty()) return 0;
    size_t cols = rows[0].size();
    int rank = 0;
    for (size_t c = 0; c < cols && rank < int(rows.size()); ++c) {
        int piv = -1;
        for (size_t r = rank; r < rows.size(); ++r)
            if (rows[r][c] % int(p)) {
                piv = int(r);
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        int il = inv_mod(((rows[rank][c] % int(p)) + int(p)) % int(p), int(p));
        for (size_t r = 0; r < rows.size(); ++r) {
            if (int(r) == rank) continue;
            int f = int((long long)(((rows[r][c] % int(p)) + int(p)) % int(p)) * il % p);
            if (!f) continue;
            for (size_t k = 0; k < cols; ++k) rows[r][k] = int(((rows[r][k] - (long long)f * rows[rank][k]) % int(p) + int(p)) % int(p));
        }
        ++rank;
    }
    return rank;
}

int rank_over(const FiniteField& F, std::vector<std::vector<Elem>> rows) {
    if (rows.empty()) return 0;
    size_t cols = rows[0].size();
    int rank = 0;
    for (size_t c = 0; c < cols && rank < int(rows.size()); ++c) {
        int piv = -1;
        for (size_t r = rank; r < rows.size(); ++r)
            if (rows[r][c]) {
                piv = int(r);
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        Elem il = F.inv(rows[rank][c]);
        for (size_t r = rank + 1; r < rows.size(); ++r) {
            if (!rows[r][c]) continue;
            Elem f = F.mul(rows[r][c], il);
            for (size_t k = c; k < cols; ++k) rows[r][k] = F.sub(rows[r][k], F.mul(f, rows[rank][k]));
        }
        ++rank;
    }
    return rank;
}

// ---- subfields ----

namespace {
// inverse of an s x s matrix over Z_p (columns given); throws if singular
std::vector<std::vector<int>> invert_mod_p(std::vector<std::vector<int>> A, unsigned p) {
    size_t n = A.size();
    std::vector<std::vector<int>> I(n, std::vector<int>(n, 0));
    for (size_t i = 0; i < n; ++i) I[i][i] = 1;
    for (size_t c = 0; c < n; ++c) {
        size_t piv = n;
        for (size_t r = c; r < n; ++r)
            if (A[r][c]) {
                piv = r;
                break;
            }
        if (piv == n) throw Error(ErrorKind::InternalError, "singular basis matrix");
        std::swap(A[c], A[piv]);
        std::swap(I[c], I[piv]);
        int il = inv_mod(A[c][c], int(p));
        for (size_t k = 0; k < n; ++k) {
            A[c][k] = int((long long)A[c][k] * il % p);
            I[c][k] = int((long long)I[c][k] * il % p);
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == c || !A[r][c]) continue;
            int f = A[r][c];
            for (size_t k = 0; k < n; ++k) {
                A[r][k] = int(((A[r][k] - (long long)f * A[c][k]) % int(p) + int(p)) % int(p));
                I[r][k] = int(((I[r][k] - (long long)f * I[c][k]) % int(p) + int(p)) % int(p));
            }
        }
    }
    return I;
}
}  // namespace

SubfieldEmbedding::SubfieldEmbedding(FieldPtr super, unsigned t) : F_(std::move(super)), t_(t) {
    unsigned s = F_->s();
    if (t == 0 || s % t) throw Error(ErrorKind::InvalidArgument, "subfield degree must divide s");
    m_ = s / t;
    qs_ = std::uint32_t(ipow(F_->p(), t));
    nprime_ = (F_->q() - 1) / (qs_ - 1);
    Elem xi = F_->primitive();
    Elem z = zeta();
    // basis of super over sub: 1, xi, ..., xi^{m-1}; F_p basis of sub: 1, zeta, ..., zeta^{t-1}
    basis_.resize(m_);
    for (unsigned j = 0; j < m_; ++j) basis_[j] = F_->pow(xi, j);
    kappa_.resize(t);
    for (unsigned i = 0; i < t; ++i) kappa_[i] = F_->pow(z, i);
    // column (j*t + i) = digits(kappa_i * b_j)
    std::vector<std::vector<int>> A(s, std::vector<int>(s, 0));
    for (unsigned j = 0; j < m_; ++j)
        for (unsigned i = 0; i < t; ++i) {
            auto d = F_->digits(F_->mul(kappa_[i], basis_[j]));
            for (unsigned row = 0; row < s; ++row) A[row][j * t + i] = d[row];
        }
    inv_ = invert_mod_p(A, F_->p());
}

bool SubfieldEmbedding::contains(Elem a) const {
    if (a == 0) return true;
    return F_->log(a) % nprime_ == 0;
}

std::vector<Elem> SubfieldEmbedding::elements() const {
    std::vector<Elem> out{0};
    for (std::uint32_t k = 0; k < qs_ - 1; ++k) out.push_back(F_->exp(std::int64_t(k) * nprime_));
    return out;
}

std::vector<Elem> SubfieldEmbedding::decompose(Elem a) const {
    F_->check(a);
    unsigned s = F_->s();
    auto d = F_->digits(a);
    std::vector<int> e(s, 0);
    for (unsigned r = 0; r < s; ++r) {
        long long acc = 0;
        for (unsigned c = 0; c < s; ++c) acc += (long long)inv_[r][c] * d[c];
        e[r] = int(acc % F_->p());
    }
    std::vector<Elem> out(m_, 0);
    for (unsigned j = 0; j < m_; ++j) {
        Elem c = 0;
        for (unsigned i = 0; i < t_; ++i)
            for (int k = 0; k < e[j * t_ + i]; ++k) c = F_->add(c, kappa_[i]);
        out[j] = c;
    }
    return out;
}

Elem SubfieldEmbedding::recompose(const std::vector<Elem>& c) const {
    if (c.size() != m_) throw Error(ErrorKind::LengthMismatch, "coordinate count");
    Elem a = 0;
    for (unsigned j = 0; j < m_; ++j) a = F_->add(a, F_->mul(c[j], basis_[j]));
    return a;
}

int SubfieldEmbedding::rank(const std::vector<Elem>& v) const {
    if (t_ == 1) {
        if (F_->p() == 2) {
            // xor basis over packed bits
            std::uint32_t basis[32] = {0};
            int r = 0;
            for (Elem x : v) {
                for (int b = int(F_->s()) - 1; b >= 0 && x; --b) {
                    if (!((x >> b) & 1)) continue;
                    if (!basis[b]) {
                        basis[b] = x;
                        ++r;
                        x = 0;
                        break;
                    }
                    x ^= basis[b];
                }
            }
            return r;
        }
        std::vector<std::vector<int>> rows;
        for (Elem x : v)
            if (x) rows.push_back(F_->digits(x));
        return rank_mod_p(rows, F_->p());
    }
    std::vector<std::vector<Elem>> rows;
    for (Elem x : v)
        if (x) rows.push_back(decompose(x));
    return rank_over(*F_, rows);
}

SubfieldEmbedding fixed_subfield(const FieldAutomorphism& aut) { return SubfieldEmbedding(aut.field, aut.gcd_rs()); }

// ---- spec strings ----

FieldPtr parse_field_spec(const std::string& spec) {
    std::istringstream is(spec);
    std::string head, tok;
    is >> head;
    auto caret = head.find('^');
    unsigned p = 0, s = 1;
    try {
        if (caret == std::string::npos) {
            p = unsigned(std::stoul(head));
        } else {
            p = unsigned(std::stoul(head.substr(0, caret)));
            s = unsigned(std::stoul(head.substr(caret + 1)));
        }
    } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "bad field spec '" + spec + "'");
    }
    std::optional<std::vector<int>> mod;
    while (is >> tok) {
        if (tok.rfind("mod=", 0) != 0) throw Error(ErrorKind::ParseError, "unknown field option '" + tok + "'");
        std::vector<int> c;
        std::stringstream cs(tok.substr(4));
        std::string item;
        while (std::getline(cs, item, ',')) {
            try {
                c.push_back(std::stoi(item));
            } catch (const std::exception&) {
                throw Error(ErrorKind::ParseError, "bad modulus coefficient '" + item + "'");
            }
        }
        mod = c;
    }
    return FiniteField::make(p, s, mod);
}

std::string format_field_spec(const FiniteField& F) {
    std::ostringstream os;
    os << F.p() << "^" << F.s() << " mod=";
    for (size_t i = 0; i < F.modulus().size(); ++i) os << (i ? "," : "") << F.modulus()[i];
    return os.str();
}

}  // namespace orecode
