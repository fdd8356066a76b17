#pragma once
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "orecode/field.hpp"

namespace orecode {

// Element of F_q[x; sigma], ascending coefficients, zero = empty.
class SkewPoly {
public:
    SkewPoly() = default;
    explicit SkewPoly(FieldAutomorphism ctx, std::vector<Elem> c = {});

    static SkewPoly constant(const FieldAutomorphism& ctx, Elem a);
    static SkewPoly monomial(const FieldAutomorphism& ctx, Elem a, std::size_t i);
    // x - a
    static SkewPoly linear(const FieldAutomorphism& ctx, Elem a);

    const FieldAutomorphism& ctx() const { return ctx_; }
    const FiniteField& field() const { return *ctx_.field; }
    const std::vector<Elem>& coeffs() const { return c_; }
    Elem operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    int deg() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Elem lead() const { return c_.empty() ? 0 : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    bool operator==(const SkewPoly& o) const { return ctx_.same(o.ctx_) && c_ == o.c_; }
    bool operator!=(const SkewPoly& o) const { return !(*this == o); }

private:
    void trim();
    FieldAutomorphism ctx_;
    std::vector<Elem> c_;
};

SkewPoly operator+(const SkewPoly& f, const SkewPoly& g);
SkewPoly operator-(const SkewPoly& f, const SkewPoly& g);
SkewPoly operator*(const SkewPoly& f, const SkewPoly& g);
// left scalar a*f
SkewPoly scale_left(Elem a, const SkewPoly& f);
SkewPoly monic(const SkewPoly& f);

struct DivResult {
    SkewPoly quotient;
    SkewPoly remainder;
};
// f = q*g + r
DivResult right_divmod(const SkewPoly& f, const SkewPoly& g);
// f = g*q + r
DivResult left_divmod(const SkewPoly& f, const SkewPoly& g);
SkewPoly right_mod(const SkewPoly& f, const SkewPoly& g);
bool right_divides(const SkewPoly& g, const SkewPoly& f);

struct GcrdResult {
    SkewPoly d, u, v;  // d = u*f + v*g
};
GcrdResult gcrd_extended(const SkewPoly& f, const SkewPoly& g);
SkewPoly gcrd(const SkewPoly& f, const SkewPoly& g);
SkewPoly lclm(const SkewPoly& f, const SkewPoly& g);

// sum f_i N_i(a)
Elem evaluate_right(const SkewPoly& f, Elem a);

std::uint64_t default_exponent_cap(const SkewPoly& f);
std::uint64_t right_exponent(const SkewPoly& f, std::uint64_t cap = 0);

bool is_central(const SkewPoly& f);
bool is_invariant(const SkewPoly& f);

SkewPoly minimal_polynomial_of_set(const FieldAutomorphism& ctx, const std::vector<Elem>& A);
std::vector<Elem> vanishing_set(const SkewPoly& g);
bool is_w_polynomial(const SkewPoly& g);

// coefficient i -> f_i N_i(alpha)
SkewPoly scale_map(const SkewPoly& f, Elem alpha);

SkewPoly parse_poly(const FieldAutomorphism& ctx, const std::string& text);
std::string format_poly(const SkewPoly& f);

}  // namespace orecode
