// One PASS/FAIL line per acceptance criterion. Exit status is 0 when the set of
// failing criteria equals the set given with --expect-fail (default: none).
#include <chrono>
#include <cstring>
#include <cmath>
#include <functional>
#include <iomanip>
#include <numeric>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "orecode/bounds.hpp"
#include "orecode/codes.hpp"
#include "orecode/equiv.hpp"

using namespace orecode;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (notes.size() < 12) notes.push_back("failed: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

const char* kF = "x^10 + g^40*x^9 + g^39*x^8 + g^12*x^6 + g^46*x^5 + g^42*x^4 + g^60*x^2 + g^7*x + g^54";
const char* kG = "x^4 + g^52*x^3 + g^46*x^2 + g^23*x + g^33";
const std::vector<std::string> kM{"x^2 + g^38*x + g^58", "x^2 + g^13*x + g^53", "x^2 + g^26*x + g^43",
                                  "x^2 + g^52*x + g^23", "x^2 + g^41*x + g^46", "x^2 + g^19*x + g^29"};

bool g_deep = false;

FieldAutomorphism example_sigma() {
    return FieldAutomorphism(FiniteField::make(2, 6, std::vector<int>{1, 1, 0, 1, 1, 0, 1}), 1);
}

std::vector<FieldAutomorphism> small_sigmas() {
    std::vector<FieldAutomorphism> out;
    for (auto [p, s] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {3, 2}}) {
        auto F = FiniteField::make(p, s);
        for (unsigned r = 0; r < s; ++r) out.emplace_back(F, r);
    }
    return out;
}

std::string tag(const FieldAutomorphism& a) {
    return "GF(" + std::to_string(a.field->q()) + "),r=" + std::to_string(a.r);
}

SkewPoly random_poly(const FieldAutomorphism& a, std::mt19937& rng, int maxdeg) {
    int d = int(rng() % unsigned(maxdeg + 1));
    std::vector<Elem> c(size_t(d) + 1);
    for (auto& x : c) x = Elem(rng() % a.field->q());
    if (!c.back()) c.back() = 1;
    return SkewPoly(a, c);
}

// ---------------------------------------------------------------- 1
Outcome c1() {
    Outcome o;
    std::mt19937 rng(101);
    for (auto& a : small_sigmas()) {
        oracle::NaiveField N(*a.field);
        for (int t = 0; t < 10000; ++t) {
            auto f = random_poly(a, rng, 7), g = random_poly(a, rng, 5);
            auto fg = f * g;
            o.require(fg.coeffs() == oracle::trim(oracle::skew_mul(N, a.r, f.coeffs(), g.coeffs())), tag(a) + " product vs schoolbook");
            o.require(fg.deg() == f.deg() + g.deg(), tag(a) + " deg(fg)");
            auto rd = right_divmod(f, g);
            o.require(rd.quotient * g + rd.remainder == f && rd.remainder.deg() < g.deg(), tag(a) + " right division");
            o.require(rd.remainder.coeffs() == oracle::right_rem(N, a.r, f.coeffs(), g.coeffs()), tag(a) + " remainder vs oracle");
            auto ld = left_divmod(f, g);
            o.require(g * ld.quotient + ld.remainder == f && ld.remainder.deg() < g.deg(), tag(a) + " left division");
            auto ex = gcrd_extended(f, g);
            o.require(ex.u * f + ex.v * g == ex.d, tag(a) + " Bezout");
            o.require(right_divides(ex.d, f) && right_divides(ex.d, g), tag(a) + " gcrd divides");
            auto L = lclm(f, g);
            o.require(ex.d.deg() + L.deg() == f.deg() + g.deg(), tag(a) + " gcrd/lclm degrees");
            o.require(right_divides(f, L) && right_divides(g, L), tag(a) + " lclm multiple");
        }
    }
    return o;
}

// ---------------------------------------------------------------- 2
Outcome c2() {
    Outcome o;
    std::mt19937 rng(202);
    for (auto& a : small_sigmas()) {
        oracle::NaiveField N(*a.field);
        for (int t = 0; t < 1000; ++t) {
            auto f = random_poly(a, rng, 9);
            Elem al = Elem(rng() % a.field->q());
            Elem v = evaluate_right(f, al);
            auto rem = right_mod(f, SkewPoly::linear(a, al));
            o.require(v == (rem.is_zero() ? 0 : rem[0]), tag(a) + " eval vs remainder");
            Elem s = 0;
            for (size_t i = 0; i < f.coeffs().size(); ++i) s = N.add(s, N.mul(f[i], oracle::norm(N, a.r, al, unsigned(i))));
            o.require(v == s, tag(a) + " eval vs norm sum");
        }
    }
    return o;
}

// ---------------------------------------------------------------- 3
Outcome c3() {
    Outcome o;
    auto s = example_sigma();
    auto f = parse_poly(s, kF);
    auto e = right_exponent(f);
    o.note("e = " + std::to_string(e));
    o.require(e == 12, "exponent 12");
    // independent: f right-divides x^12 - 1 under schoolbook arithmetic, and no smaller e works
    oracle::NaiveField N(*s.field);
    for (unsigned k = 1; k <= 12; ++k) {
        oracle::Poly u(k + 1, 0);
        u[0] = 1;
        u[k] = 1;
        bool div = oracle::right_rem(N, 1, u, f.coeffs()).empty();
        o.require(div == (k == 12), "oracle division of x^" + std::to_string(k) + " - 1");
    }
    return o;
}

// ---------------------------------------------------------------- 4
Outcome c4() {
    Outcome o;
    auto s = example_sigma();
    FrameOptions opt;
    opt.poly = parse_poly(s, kF);
    opt.big_modulus = std::vector<int>{1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1};
    opt.alpha_log = 5;
    auto fr = ExtensionFrame::build(s, opt);
    auto fac = fr.factor_unity();
    o.require(fac.size() == 12, "12 linear factors");
    SkewPoly fold = fac[0];
    for (size_t i = 1; i < fac.size(); ++i) fold = lclm(fold, fac[i]);
    SkewPoly unity = SkewPoly::monomial(fr.theta(), 1, 12) - SkewPoly::constant(fr.theta(), 1);
    o.require(fold == unity, "lclm fold is x^12 - 1");
    for (auto& L : fac) o.require(right_divides(L, unity), "factor divides x^12 - 1");
    std::vector<int> matches;
    for (unsigned k = 0; k < fr.embedding_count(); ++k) {
        FrameOptions ok = opt;
        ok.embed_index = k;
        auto frk = ExtensionFrame::build(s, ok);
        bool all = true;
        for (unsigned i = 0; i < 6; ++i) {
            auto M = frk.orbit_min_poly(i);  // throws if a coefficient leaves GF(64)
            o.require(M.deg() == 2, "orbit polynomial of degree 2");
            auto Mb = frk.embed(M);
            for (unsigned j = 0; j < frk.m(); ++j)
                o.require(evaluate_right(Mb, frk.root(int(i + j * frk.mu()))) == 0, "orbit polynomial vanishes on its roots");
            all = all && format_poly(M) == kM[i];
        }
        if (all) matches.push_back(int(k));
    }
    std::string m;
    for (int k : matches) m += " " + std::to_string(k);
    o.note("verbatim match at embedding(s):" + (m.empty() ? std::string(" none") : m));
    o.require(!matches.empty(), "verbatim match under some embedding");
    return o;
}

// ---------------------------------------------------------------- 5
Outcome c5() {
    Outcome o;
    auto s = example_sigma();
    const auto& F = *s.field;
    FrameOptions opt;
    opt.poly = parse_poly(s, kF);
    opt.big_modulus = std::vector<int>{1, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 0, 1};
    opt.alpha_log = 5;
    auto fr = ExtensionFrame::build(s, opt);
    auto g = parse_poly(s, kG);
    auto T = fr.defining_set(g);
    o.require(T == IndexSet{2, 3, 8, 9}, "T = {2,3,8,9}");
    o.require(is_mu_closed(T, fr.mu(), fr.e()), "mu-closed");
    o.require(representative_set(T, fr.mu(), fr.e()) == IndexSet{2, 3}, "S_T = {2,3}");
    auto len = roos_search(T, 12, 3, BoundMode::Lenient);
    o.require(len.value() == 4, "lenient Roos value 4");
    o.require(bch_search(T, 12).value() == 3, "strict BCH value 3");

    auto C = build_code(parse_poly(s, kF), g);
    SubfieldEmbedding E(s.field, 1);
    oracle::NaiveField N(F);
    Vec c{0, 0, 1, 0, 0, 0, F.exp(37), F.exp(57), 0, F.exp(7)};
    o.require(oracle::rank_weight(N, 1, c) == 4, "c has rank weight 4");
    bool member = oracle::right_rem(N, 1, c, g.coeffs()).empty();
    o.note(std::string("published c in C (oracle): ") + (member ? "yes" : "no"));
    o.require(member, "published codeword c is in C");

    DistanceOptions d;
    d.deep = g_deep;
    if (!g_deep) d.budget = std::uint64_t(1) << 22;
    auto t0 = std::chrono::steady_clock::now();
    auto h = min_distance(C, Metric::hamming(), d);
    auto r = min_distance(C, Metric::rank(E), d);
    double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    // every reported witness is rechecked with the schoolbook oracle
    o.require(oracle::right_rem(N, 1, r.witness, g.coeffs()).empty() && oracle::rank_weight(N, 1, r.witness) == r.minimum,
              "rank witness verified");
    o.require(oracle::right_rem(N, 1, h.witness, g.coeffs()).empty() && oracle::hamming_weight(h.witness) == h.minimum,
              "Hamming witness verified");
    bool mds = oracle::mds_by_minors(N, generator_matrix(C));
    o.note("d_H " + std::string(h.exhaustive ? "= " : "<= ") + std::to_string(h.minimum) + ", d_R " +
           (r.exhaustive ? "= " : "<= ") + std::to_string(r.minimum) + (g_deep ? " (deep, " : " (shallow, ") +
           std::to_string(int(sec)) + " s); all maximal minors nonzero: " + (mds ? "yes" : "no"));
    o.require(!(mds || (h.exhaustive && h.minimum != 4)), "d_H = 4");
    o.require(!(r.minimum < 4 || (r.exhaustive && r.minimum != 4)), "d_R = 4");
    if (!g_deep) o.note("deep confirmation skipped; run with --deep");
    return o;
}

// ---------------------------------------------------------------- 6

struct SmallFrame {
    FieldAutomorphism aut;
    ExtensionFrame fr;
};

std::vector<SmallFrame> frames_up_to(unsigned emax, int& skipped) {
    std::vector<SmallFrame> out;
    skipped = 0;
    for (auto& a : small_sigmas())
        for (unsigned e = 1; e <= emax; ++e) {
            if (e % a.order()) continue;
            FrameOptions o;
            o.e = e;
            try {
                out.push_back({a, ExtensionFrame::build(a, o)});
            } catch (const Error& err) {
                if (err.kind() != ErrorKind::CapExceeded) throw;
                ++skipped;
            }
        }
    return out;
}

std::vector<IndexSet> closed_sets(const ExtensionFrame& fr) {
    std::vector<IndexSet> out;
    for (unsigned mask = 0; mask < (1u << fr.mu()); ++mask) {
        IndexSet T;
        for (unsigned i = 0; i < fr.e(); ++i)
            if (mask >> (i % fr.mu()) & 1) T.push_back(int(i));
        out.push_back(T);
    }
    return out;
}

struct Brute {
    int dh, dr;
};

// schoolbook enumeration when small, the validated kernel otherwise
Brute brute(const SkewCode& code, const SubfieldEmbedding& fix) {
    auto G = generator_matrix(code);
    oracle::NaiveField N(*code.ctx.field);
    double words = std::pow(double(code.ctx.field->q()), code.k);
    if (words <= 65536) return {oracle::min_hamming(N, G), oracle::min_rank(N, fix.t(), G)};
    DistanceOptions d;
    d.deep = true;
    auto h = min_distance(code, Metric::hamming(), d), r = min_distance(code, Metric::rank(fix), d);
    if (!h.exhaustive || !r.exhaustive) throw Error(ErrorKind::CapExceeded, "scan not exhaustive");
    return {h.minimum, r.minimum};
}

Outcome c6() {
    Outcome o;
    int skipped = 0, codes = 0;
    for (auto& [a, fr] : frames_up_to(8, skipped)) {
        auto fix = fixed_subfield(a);
        SkewPoly unity = SkewPoly::monomial(a, 1, fr.e()) - SkewPoly::constant(a, 1);
        for (auto& T : closed_sets(fr)) {
            auto g = fr.generator_from_defining_set(T);
            auto code = build_code(unity, g);
            if (code.k == 0) continue;
            ++codes;
            auto b = brute(code, fix);
            std::string where = tag(a) + " e=" + std::to_string(fr.e()) + " |T|=" + std::to_string(T.size());
            for (auto& cert : {bch_search(T, int(fr.e())), ht_search(T, int(fr.e())), roos_search(T, int(fr.e()), 3)}) {
                o.require(verify_certificate(cert, T), where + " certificate verifies");
                o.require(cert.value() <= b.dh, where + " " + bound_kind_name(cert.kind) + " <= d_H");
                o.require(cert.value() <= b.dr, where + " " + bound_kind_name(cert.kind) + " <= d_R");
            }
            o.require(b.dr <= b.dh && b.dh <= code.n - code.k + 1, where + " d_R <= d_H <= n-k+1");
        }
    }
    o.note(std::to_string(codes) + " codes checked, " + std::to_string(skipped) + " frames above the field cap skipped");
    return o;
}

// ---------------------------------------------------------------- 7
Outcome c7() {
    Outcome o;
    FieldAutomorphism t4(FiniteField::make(2, 2), 1), t8(FiniteField::make(2, 3), 1), t9(FiniteField::make(3, 2), 1);
    for (int n = 2; n <= 16; ++n)
        for (int l = 1; l < n; ++l) {
            auto N4 = count_hamming_classes(t4, n, l);
            std::string at = " n=" + std::to_string(n) + " l=" + std::to_string(l);
            if (n % 2 && l % 2) o.require(N4 == 3, "GF(4) n,l odd -> 3" + at);
            if (n % 2 == 0 && l % 2 == 0) o.require(N4 == 9, "GF(4) n,l even -> 9" + at);
            if ((n + l) % 2) o.require(N4 == 3, "GF(4) mixed parity -> 3" + at);
            if (std::gcd(n, 3) == 1 && std::gcd(n - l, 3) == 1) o.require(count_hamming_classes(t8, n, l) == 7, "GF(8) -> 7" + at);
            if (n % 2 && l % 2) o.require(count_hamming_classes(t9, n, l) == 8, "GF(9) n,l odd -> 8" + at);
        }
    for (unsigned s = 2; s <= 8; ++s) {
        auto F = FiniteField::make(2, s);
        std::uint64_t Q = (std::uint64_t(1) << s) - 1;
        for (unsigned r = 1; r < s; ++r) {
            if (std::gcd(r, s) != 1) continue;
            FieldAutomorphism a(F, r);
            for (int n = 2; n <= 8; ++n)
                for (int l = 1; l < n; ++l)
                    o.require(count_rank_classes(a, n, l, fixed_subfield(a)) == Q * Q,
                              "rank count (2^s-1)^2, s=" + std::to_string(s));
        }
    }
    return o;
}

// ---------------------------------------------------------------- 8, 9

struct WitnessCase {
    FieldAutomorphism aut;
    TrinomialShape src, dst;
    Elem alpha;
};
std::vector<WitnessCase> g_gf4_witnesses;

std::vector<Elem> nonzero(const std::vector<Elem>& v) {
    std::vector<Elem> out;
    for (Elem x : v)
        if (x) out.push_back(x);
    return out;
}

Outcome c8() {
    Outcome o;
    for (auto& a : small_sigmas()) {
        oracle::NaiveField N(*a.field);
        std::vector<Elem> U;
        for (Elem x = 1; x < a.field->q(); ++x) U.push_back(x);
        for (int n = 2; n <= 6; ++n)
            for (int l = 1; l < n; ++l) {
                auto formula = count_hamming_classes(a, n, l);
                o.require(formula == oracle::orbit_count(N, a.r, n, {0, l}, U), tag(a) + " Hamming count n=" + std::to_string(n));
                if (a.field->q() != 4) continue;
                for (Elem a0 = 1; a0 < 4; ++a0)
                    for (Elem al = 1; al < 4; ++al)
                        for (Elem b0 = 1; b0 < 4; ++b0)
                            for (Elem bl = 1; bl < 4; ++bl) {
                                TrinomialShape s{n, l, a0, al}, d{n, l, b0, bl};
                                if (auto w = trinomial_hamming_witness(a, s, d)) g_gf4_witnesses.push_back({a, s, d, *w});
                            }
            }
    }
    auto F16 = FiniteField::make(2, 4);
    oracle::NaiveField N16(*F16);
    SubfieldEmbedding E4(F16, 2);
    auto U4 = nonzero(oracle::subfield(N16, 2));
    for (unsigned r = 0; r < 4; ++r) {
        FieldAutomorphism a(F16, r);
        for (int n = 2; n <= 6; ++n)
            for (int l = 1; l < n; ++l)
                o.require(count_rank_classes(a, n, l, E4) == oracle::orbit_count(N16, r, n, {0, l}, U4),
                          "GF(16)/GF(4) rank count r=" + std::to_string(r) + " n=" + std::to_string(n));
    }
    o.note(std::to_string(g_gf4_witnesses.size()) + " GF(4) witnesses collected");
    return o;
}

Outcome c9() {
    Outcome o;
    if (g_gf4_witnesses.empty()) c8();
    int transported = 0;
    for (auto& w : g_gf4_witnesses) {
        auto src = shape_poly(w.aut, w.src), dst = shape_poly(w.aut, w.dst);
        std::string at = tag(w.aut) + " n=" + std::to_string(w.src.n);
        o.require(multiplicative_exhaustive(w.aut, w.alpha, src, dst), at + " multiplicativity");
        if (w.src.n > 4) continue;
        for (auto& g : right_divisors(dst)) {
            auto code = build_code(dst, g);
            auto moved = transport_code(code, w.alpha, src);
            if (code.k == 0) continue;
            ++transported;
            o.require(weight_enumerator(*w.aut.field, generator_matrix(code), code.n) ==
                          weight_enumerator(*w.aut.field, generator_matrix(moved), moved.n),
                      at + " weight enumerator");
        }
    }
    o.note(std::to_string(g_gf4_witnesses.size()) + " witnesses, " + std::to_string(transported) + " transported codes");
    return o;
}

// ---------------------------------------------------------------- 10
Outcome c10() {
    Outcome o;
    auto F4 = FiniteField::make(2, 2);
    int pairs = 0;
    for (unsigned r = 0; r < 2; ++r) {
        FieldAutomorphism a(F4, r);
        auto fix = fixed_subfield(a);
        for (int n = 2; n <= 5; ++n)
            for (int l = 1; l < n; ++l)
                for (Elem a0 = 1; a0 < 4; ++a0)
                    for (Elem al = 1; al < 4; ++al)
                        for (Elem b0 = 1; b0 < 4; ++b0)
                            for (Elem bl = 1; bl < 4; ++bl) {
                                TrinomialShape s{n, l, a0, al}, d{n, l, b0, bl};
                                auto g = fixed_subfield_gcrd_witness(a, s, d);
                                auto w = trinomial_rank_witness(a, s, d, fix);
                                ++pairs;
                                o.require(g.has_value() == w.has_value(), "gcrd root vs witness search");
                            }
    }
    o.note(std::to_string(pairs) + " pairs");
    return o;
}

// ---------------------------------------------------------------- 11
Outcome c11() {
    Outcome o;
    int skipped = 0, declared = 0, confirmed = 0;
    std::string first;
    for (auto& [a, fr] : frames_up_to(8, skipped)) {
        auto fix = fixed_subfield(a);
        SkewPoly unity = SkewPoly::monomial(a, 1, fr.e()) - SkewPoly::constant(a, 1);
        for (auto& T : closed_sets(fr)) {
            auto cert = roos_search(T, int(fr.e()), 3);
            if (!mrd_designed_check(T, cert, fr.mu(), fr.e())) continue;
            auto code = build_code(unity, fr.generator_from_defining_set(T));
            if (code.k == 0) continue;
            ++declared;
            auto b = brute(code, fix);
            bool sandwich = cert.value() <= b.dr && b.dr <= code.n - code.k + 1;
            bool mrd = singleton_check(code, b.dh, b.dr, fix).is_mrd;
            o.require(sandwich && mrd, tag(a) + " e=" + std::to_string(fr.e()) + " declared MRD");
            if (sandwich && mrd) {
                ++confirmed;
                if (first.empty())
                    first = tag(a) + " e=" + std::to_string(fr.e()) + " [" + std::to_string(code.n) + "," +
                            std::to_string(code.k) + "," + std::to_string(b.dr) + "]";
            }
        }
    }
    o.require(confirmed > 0, "at least one designed MRD instance");
    o.note(std::to_string(declared) + " declared, " + std::to_string(confirmed) + " confirmed; first: " + first);
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> expect_fail;
    std::set<int> only;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--deep")) g_deep = true;
        else if (!std::strcmp(argv[i], "--expect-fail") && i + 1 < argc) {
            std::stringstream ss(argv[++i]);
            std::string t;
            while (std::getline(ss, t, ',')) expect_fail.insert(std::stoi(t));
        } else if (!std::strcmp(argv[i], "--only") && i + 1 < argc) {
            only.insert(std::stoi(argv[++i]));
        }
    }
    std::vector<std::pair<const char*, std::function<Outcome()>>> crit{
        {"Ore ring suite", c1},
        {"evaluation consistency", c2},
        {"right exponent 12", c3},
        {"splitting frame and orbit polynomials", c4},
        {"worked [10,6] code", c5},
        {"bound soundness", c6},
        {"class counts", c7},
        {"formula vs orbit enumeration", c8},
        {"isometry verification", c9},
        {"gcrd characterization", c10},
        {"designed MRD instance", c11},
    };
    std::set<int> failed;
    for (size_t i = 0; i < crit.size(); ++i) {
        int id = int(i) + 1;
        if (!only.empty() && !only.count(id)) continue;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = crit[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.note(std::string("exception: ") + e.what());
        }
        double sec = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (!o.pass) failed.insert(id);
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << id << " " << crit[i].first << " (" << std::fixed
                  << std::setprecision(1) << sec << " s)\n";
        for (auto& n : o.notes) std::cout << "    " << n << "\n";
        std::cout.flush();
    }
    if (!only.empty()) {
        std::set<int> e2;
        for (int x : expect_fail)
            if (only.count(x)) e2.insert(x);
        expect_fail = e2;
    }
    if (failed != expect_fail) {
        std::cout << "failing criteria differ from the expected set\n";
        return 1;
    }
    return 0;
}
