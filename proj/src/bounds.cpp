#include "orecode/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace orecode {

const char* bound_kind_name(BoundKind k) {
    switch (k) {
        case BoundKind::BCH: return "bch";
        case BoundKind::HT: return "ht";
        case BoundKind::Roos: return "roos";
    }
    return "?";
}

const char* bound_mode_name(BoundMode m) { return m == BoundMode::Strict ? "strict" : "lenient"; }

std::vector<int> BoundCertificate::indices() const {
    std::vector<int> out;
    for (int i = 0; i <= delta - 2; ++i) {
        if (kind == BoundKind::BCH) {
            out.push_back(int(mod_floor(a + std::int64_t(i) * b, e)));
        } else if (kind == BoundKind::HT) {
            for (int j = 0; j <= r; ++j) out.push_back(int(mod_floor(a + std::int64_t(i) * b + std::int64_t(j) * c, e)));
        } else {
            for (int k : K) out.push_back(int(mod_floor(a + std::int64_t(i) * b + k, e)));
        }
    }
    return normalize_set(out, e);
}

namespace {
// a Roos offset set is admissible in lenient mode when each translate carries at least two roots
bool roos_span_ok(const BoundCertificate& c) {
    int span = c.K.back() - c.K.front();
    if (span <= c.delta + c.r - 2) return true;
    return c.mode == BoundMode::Lenient && c.delta >= 3;
}
}  // namespace

bool verify_certificate(const BoundCertificate& c, const IndexSet& T) {
    if (c.e < 1 || c.delta < 1 || c.r < 0) return false;
    if (c.kind == BoundKind::BCH && c.r != 0) return false;
    if (c.delta < 2) return c.r == 0;  // d >= 1 needs no roots
    if (std::gcd(c.b, c.e) != 1) return false;
    if (c.kind == BoundKind::HT && std::gcd(c.c, c.e) >= c.delta) return false;
    if (c.kind == BoundKind::Roos) {
        if (int(c.K.size()) != c.r + 1) return false;
        for (size_t i = 1; i < c.K.size(); ++i)
            if (c.K[i] <= c.K[i - 1]) return false;
        if (c.K.front() < 0 || c.K.back() >= c.e) return false;
        if (!roos_span_ok(c)) return false;
    }
    IndexSet TT = normalize_set(T, c.e);
    for (int i : c.indices())
        if (!std::binary_search(TT.begin(), TT.end(), i)) return false;
    return true;
}

namespace {

// longest run a, a+b, ... inside T, capped at e
int run_length(const std::vector<char>& in, int e, int start, int b) {
    int L = 0;
    while (L < e && in[size_t(mod_floor(start + std::int64_t(L) * b, e))]) ++L;
    return L;
}

std::vector<char> membership(const IndexSet& T, int e) {
    std::vector<char> in(size_t(e), 0);
    for (int i : normalize_set(T, e)) in[size_t(i)] = 1;
    return in;
}

// better: larger value, then smaller (a, b, c, K)
bool better(const BoundCertificate& x, const BoundCertificate& y) {
    if (x.value() != y.value()) return x.value() > y.value();
    return std::tie(x.a, x.b, x.c, x.K) < std::tie(y.a, y.b, y.c, y.K);
}

BoundCertificate empty_cert(BoundKind kind, int e, BoundMode mode) {
    BoundCertificate c;
    c.kind = kind;
    c.mode = mode;
    c.e = e;
    c.delta = 1;
    return c;
}

}  // namespace

BoundCertificate bch_search(const IndexSet& T, int e) {
    auto in = membership(T, e);
    BoundCertificate best = empty_cert(BoundKind::BCH, e, BoundMode::Strict);
    for (int a = 0; a < e; ++a)
        for (int b = 1; b <= std::max(e - 1, 1); ++b) {
            if (std::gcd(b, e) != 1) continue;
            int L = run_length(in, e, a, b);
            if (L == 0) continue;
            BoundCertificate c = best;
            c.a = a;
            c.b = b;
            c.delta = L + 1;
            if (better(c, best)) best = c;
        }
    return best;
}

BoundCertificate ht_search(const IndexSet& T, int e, int r_max) {
    auto in = membership(T, e);
    if (r_max < 0) r_max = e;
    BoundCertificate best = bch_search(T, e);
    best.kind = BoundKind::HT;
    best.c = 1;
    if (best.delta < 2) return best;
    for (int a = 0; a < e; ++a)
        for (int b = 1; b <= std::max(e - 1, 1); ++b) {
            if (std::gcd(b, e) != 1) continue;
            int L0 = run_length(in, e, a, b);
            for (int c = 1; c <= std::max(e - 1, 1); ++c) {
                for (int delta = L0 + 1; delta >= 2; --delta) {
                    if (std::gcd(c, e) >= delta) break;
                    // translates repeat after e/gcd(c,e) steps
                    int r_lim = std::min(r_max, e / std::gcd(c, e) - 1);
                    int r = 0;
                    while (r < r_lim && run_length(in, e, int(a + std::int64_t(r + 1) * c), b) >= delta - 1) ++r;
                    BoundCertificate cand = best;
                    cand.a = a;
                    cand.b = b;
                    cand.c = c;
                    cand.delta = delta;
                    cand.r = r;
                    if (better(cand, best)) best = cand;
                }
            }
        }
    return best;
}

BoundCertificate roos_search(const IndexSet& T, int e, int r_max, BoundMode mode) {
    auto in = membership(T, e);
    BoundCertificate best = empty_cert(BoundKind::Roos, e, mode);
    for (int a = 0; a < e; ++a)
        for (int b = 1; b <= std::max(e - 1, 1); ++b) {
            if (std::gcd(b, e) != 1) continue;
            std::vector<int> run(static_cast<size_t>(e));
            for (int k = 0; k < e; ++k) run[size_t(k)] = run_length(in, e, a + k, b);
            for (int delta = run[0] + 1; delta >= 2; --delta) {
                std::vector<int> ok;  // offsets k >= 1 whose translate holds delta-1 roots
                for (int k = 1; k < e; ++k)
                    if (run[size_t(k)] >= delta - 1) ok.push_back(k);
                int rmax = std::min<int>(r_max, int(ok.size()));
                for (int r = rmax; r >= 0; --r) {
                    BoundCertificate cand = best;
                    cand.a = a;
                    cand.b = b;
                    cand.delta = delta;
                    cand.r = r;
                    cand.K.assign(1, 0);
                    bool lenient_free = mode == BoundMode::Lenient && delta >= 3;
                    int limit = lenient_free ? e - 1 : delta + r - 2;
                    for (int k : ok) {
                        if (int(cand.K.size()) == r + 1 || k > limit) break;
                        cand.K.push_back(k);
                    }
                    if (int(cand.K.size()) != r + 1) continue;
                    if (better(cand, best)) best = cand;
                    break;  // smaller r cannot beat this delta
                }
            }
        }
    return best;
}

bool rank_applicability(const BoundCertificate&) { return true; }

bool mrd_designed_check(const IndexSet& T, const BoundCertificate& cert, unsigned mu, unsigned e) {
    if (!is_mu_closed(T, mu, e)) throw Error(ErrorKind::NotClosed, "defining set is not mu-closed");
    if (T.empty()) return false;
    if (!verify_certificate(cert, T)) return false;
    return int(representative_set(T, mu, e).size()) == cert.value() - 1;
}

}  // namespace orecode
