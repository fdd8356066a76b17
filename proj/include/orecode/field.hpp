#pragma once
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orecode/errors.hpp"

namespace orecode {

// Elements are packed polynomial-basis vectors: sum c_i p^i, 0 is zero, 1 is one.
using Elem = std::uint32_t;

// Size cap for fields and enumerations. Defaults to 2^20, ORECODE_CAP overrides.
std::uint64_t global_cap();
void set_global_cap(std::uint64_t cap);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> prime_factors(std::uint64_t n);
std::uint64_t ipow(std::uint64_t b, unsigned e);
std::int64_t mod_floor(std::int64_t a, std::int64_t m);

// sum_{k<n} p^{r k} mod M (the bracket integer [n]_r reduced mod M).
std::uint64_t bracket_mod(std::uint64_t p, unsigned r, std::uint64_t n, std::uint64_t M);

class FiniteField {
public:
    static std::shared_ptr<const FiniteField> make(unsigned p, unsigned s,
                                                   std::optional<std::vector<int>> modulus = {});

    unsigned p() const { return p_; }
    unsigned s() const { return s_; }
    std::uint32_t q() const { return q_; }
    const std::vector<int>& modulus() const { return modulus_; }
    Elem primitive() const { return primitive_; }

    bool contains(Elem a) const { return a < q_; }
    void check(Elem a) const;

    Elem add(Elem a, Elem b) const {
        if (p_ == 2) return a ^ b;
        if (a == 0) return b;
        if (b == 0) return a;
        std::uint32_t k = log_[b] + (q_ - 1) - log_[a];
        if (k >= q_ - 1) k -= q_ - 1;
        std::int32_t z = zech_[k];
        if (z < 0) return 0;
        return exp_[log_[a] + static_cast<std::uint32_t>(z)];
    }
    Elem neg(Elem a) const {
        if (p_ == 2 || a == 0) return a;
        return exp_[log_[a] + half_];
    }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::int64_t k) const;
    // discrete log base the primitive element; a must be nonzero
    std::uint32_t log(Elem a) const { return log_[a]; }
    Elem exp(std::int64_t k) const { return exp_[static_cast<std::uint32_t>(mod_floor(k, q_ - 1))]; }

    std::vector<int> digits(Elem a) const;
    Elem from_digits(const std::vector<int>& d) const;

    // a^{p^j}, j taken mod s
    Elem frobenius(Elem a, std::int64_t j) const {
        if (a == 0) return 0;
        std::uint64_t jj = static_cast<std::uint64_t>(mod_floor(j, s_));
        return exp_[static_cast<std::uint32_t>((std::uint64_t(log_[a]) * ppow_[jj]) % (q_ - 1))];
    }

    std::string format(Elem a) const;
    Elem parse(const std::string& text) const;
    std::string describe() const;

private:
    FiniteField() = default;
    unsigned p_ = 2, s_ = 1;
    std::uint32_t q_ = 2;
    std::vector<int> modulus_;
    Elem primitive_ = 1;
    std::uint32_t half_ = 0;
    std::vector<std::uint32_t> log_;
    std::vector<Elem> exp_;
    std::vector<std::int32_t> zech_;
    std::vector<std::uint64_t> ppow_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

// modulus helpers over Z_p, ascending coefficients
bool is_irreducible_mod_p(const std::vector<int>& f, unsigned p);
std::vector<int> smallest_irreducible(unsigned p, unsigned s);

class SubfieldEmbedding;

struct FieldAutomorphism {
    FieldPtr field;
    unsigned r = 0;

    FieldAutomorphism() = default;
    FieldAutomorphism(FieldPtr f, unsigned r_);

    unsigned gcd_rs() const;
    unsigned order() const;  // mu
    std::uint32_t q0() const;
    Elem apply(Elem a, std::int64_t power = 1) const {
        return field->frobenius(a, static_cast<std::int64_t>(r) * mod_floor(power, order()));
    }
    bool same(const FieldAutomorphism& o) const { return field == o.field && r == o.r; }
};

std::uint64_t norm_exponent(const FieldAutomorphism& aut, std::int64_t i);
Elem sigma_norm(const FieldAutomorphism& aut, Elem a, std::int64_t i);
Elem sigma_norm_product(const FieldAutomorphism& aut, Elem a, std::int64_t i);

class SubfieldEmbedding {
public:
    SubfieldEmbedding(FieldPtr super, unsigned t);

    const FieldPtr& super() const { return F_; }
    unsigned t() const { return t_; }
    std::uint32_t sub_size() const { return qs_; }
    std::uint32_t cofactor() const { return nprime_; }  // (q-1)/(q'-1)
    unsigned degree() const { return m_; }              // s/t
    const std::vector<Elem>& basis() const { return basis_; }
    Elem zeta() const { return F_->exp(nprime_); }
    bool contains(Elem a) const;
    std::vector<Elem> elements() const;

    std::vector<Elem> decompose(Elem a) const;
    Elem recompose(const std::vector<Elem>& c) const;

    // rank over the subfield of the columns decompose(v_j)
    int rank(const std::vector<Elem>& v) const;

private:
    FieldPtr F_;
    unsigned t_, m_;
    std::uint32_t qs_, nprime_;
    std::vector<Elem> basis_;
    std::vector<Elem> kappa_;
    std::vector<std::vector<int>> inv_;  // s x s over Z_p
};

SubfieldEmbedding fixed_subfield(const FieldAutomorphism& aut);

// Gaussian elimination helpers
int rank_mod_p(std::vector<std::vector<int>> rows, unsigned p);
int rank_over(const FiniteField& F, std::vector<std::vector<Elem>> rows);

// Field spec "p^s" with optional "mod=c0,c1,..."
FieldPtr parse_field_spec(const std::string& spec);
std::string format_field_spec(const FiniteField& F);

}  // namespace orecode
