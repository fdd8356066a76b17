#pragma once
#include <optional>
#include <string>
#include <vector>

#include "orecode/codes.hpp"

namespace orecode {

// modulus x^n - al x^l - a0
struct TrinomialShape {
    int n = 0, l = 0;
    Elem a0 = 1, al = 1;
};

// modulus x^n - sum_j values[j] x^{support[j]}
struct PolyShape {
    int n = 0;
    std::vector<int> support;
    std::vector<Elem> values;
};

PolyShape to_general(const TrinomialShape& t);
SkewPoly shape_poly(const FieldAutomorphism& aut, const PolyShape& s);
SkewPoly shape_poly(const FieldAutomorphism& aut, const TrinomialShape& t);
PolyShape shape_from_poly(const SkewPoly& f);
TrinomialShape trinomial_from_poly(const SkewPoly& f);
void validate_shape(const FiniteField& F, const TrinomialShape& t);

// Allowed scale factors: F_q^* (Hamming) or F_{q'}^* (rank over F_{q'}).
struct EquivMetric {
    std::optional<SubfieldEmbedding> sub;

    static EquivMetric hamming() { return {}; }
    static EquivMetric rank(const SubfieldEmbedding& e) { return {e}; }
    bool is_rank() const { return sub.has_value(); }
    std::uint32_t order(const FiniteField& F) const { return sub ? sub->sub_size() - 1 : F.q() - 1; }
    std::uint32_t step(const FiniteField&) const { return sub ? sub->cofactor() : 1; }
    std::string name() const { return sub ? "rank:" + std::to_string(sub->sub_size()) : "hamming"; }
};

struct EquivOutcome {
    enum class Status { Equivalent, NoWitness, SupportMismatch } status = Status::NoWitness;
    std::optional<Elem> alpha;
    bool equivalent() const { return status == Status::Equivalent; }
};
const char* status_name(EquivOutcome::Status s);

// a_i N_{n-i}(sigma^i(alpha)) = b_i for every support index
bool witness_equations_hold(const FieldAutomorphism& aut, const PolyShape& src, const PolyShape& dst, Elem alpha);

EquivOutcome general_witness(const FieldAutomorphism& aut, const PolyShape& src, const PolyShape& dst,
                             const EquivMetric& metric = EquivMetric::hamming());
std::optional<Elem> trinomial_hamming_witness(const FieldAutomorphism& aut, const TrinomialShape& src,
                                              const TrinomialShape& dst);
std::optional<Elem> trinomial_rank_witness(const FieldAutomorphism& aut, const TrinomialShape& src,
                                           const TrinomialShape& dst, const SubfieldEmbedding& emb);

// Logs of the generator of H: N_{n-i}(sigma^i(xi')) with xi' generating the allowed scale group.
std::vector<std::uint64_t> subgroup_generator_logs(const FieldAutomorphism& aut, int n, const std::vector<int>& support,
                                                   const EquivMetric& metric);
// ratios b_j / a_j in H ?
bool subgroup_membership(const FieldAutomorphism& aut, int n, const std::vector<int>& support,
                         const std::vector<Elem>& ratios, const EquivMetric& metric = EquivMetric::hamming());

std::uint64_t count_general_classes(const FieldAutomorphism& aut, int n, const std::vector<int>& support,
                                    const EquivMetric& metric = EquivMetric::hamming());
// shifted_form uses gcd(p^{rl}[n-l]_r, q-1) in place of gcd([n-l]_r, q-1)
std::uint64_t count_hamming_classes(const FieldAutomorphism& aut, int n, int l, bool two_sided = false,
                                    bool shifted_form = false);
std::uint64_t count_rank_classes(const FieldAutomorphism& aut, int n, int l, const SubfieldEmbedding& emb);
// plain-integer form valid over the fixed subfield
std::uint64_t count_fixed_subfield_rank_classes(const FieldAutomorphism& aut, int n, int l);

std::vector<TrinomialShape> hamming_representatives(const FieldAutomorphism& aut, int n, int l);
std::vector<TrinomialShape> rank_representatives(const FieldAutomorphism& aut, int n, int l, const SubfieldEmbedding& emb);

// alpha with N_n(alpha) = a0 and a0 = N_l(alpha) al
std::optional<Elem> standard_trinomial_witness(const FieldAutomorphism& aut, const TrinomialShape& shape,
                                               const EquivMetric& metric = EquivMetric::hamming());

std::optional<Elem> fixed_subfield_gcrd_witness(const FieldAutomorphism& aut, const TrinomialShape& src,
                                                const TrinomialShape& dst);

struct ConstacyclicPart {
    int index = 0;
    Elem alpha_i = 1;
    bool equation = false;    // a_i N_{n-i}(alpha_i) = b_i
    bool in_subgroup = false; // a_i^{-1} b_i in <N_{n-i}(sigma^i xi')>
    bool power_identity = false;
    std::uint64_t d_i = 1;
};
std::vector<ConstacyclicPart> constacyclic_reduction(const FieldAutomorphism& aut, Elem alpha, const TrinomialShape& src,
                                                     const TrinomialShape& dst,
                                                     const EquivMetric& metric = EquivMetric::hamming());

// canonical class representative: lexicographically smallest log tuple in the orbit
struct Classification {
    PolyShape representative;
    Elem alpha = 1;  // witness from the input (src) to the representative (dst)
    std::uint64_t class_count = 0;
};
Classification classify(const FieldAutomorphism& aut, const PolyShape& shape, const EquivMetric& metric = EquivMetric::hamming());

SkewCode transport_code(const SkewCode& code, Elem alpha, const SkewPoly& src_modulus);
Vec schur(const FiniteField& F, const Vec& x, const Vec& y);

// phi(f g mod dst) == phi(f) phi(g) mod src
bool multiplicative_on(const FieldAutomorphism& aut, Elem alpha, const SkewPoly& src, const SkewPoly& dst,
                       const SkewPoly& f, const SkewPoly& g);
// every pair f, g of degree < n; OpenMP over g
bool multiplicative_exhaustive(const FieldAutomorphism& aut, Elem alpha, const SkewPoly& src, const SkewPoly& dst);

}  // namespace orecode
