#pragma once
#include <optional>
#include <string>
#include <vector>

#include "orecode/skew_poly.hpp"

namespace orecode {

using Vec = std::vector<Elem>;
using Matrix = std::vector<Vec>;

struct SkewCode {
    FieldAutomorphism ctx;
    SkewPoly f, g;
    int n = 0, k = 0;
    Vec abar;  // coefficients of x^n - f
};

SkewCode build_code(const SkewPoly& f, const SkewPoly& g);
Matrix generator_matrix(const SkewCode& code);
Vec encode(const SkewCode& code, const SkewPoly& message);
Vec polycyclic_shift(const SkewCode& code, const Vec& v);
bool in_code(const SkewCode& code, const Vec& v);

int hamming_weight(const Vec& v);
int rank_weight(const Vec& v, const SubfieldEmbedding& emb);

struct Metric {
    enum class Kind { Hamming, Rank } kind = Kind::Hamming;
    std::optional<SubfieldEmbedding> sub;  // rank only

    static Metric hamming() { return {}; }
    static Metric rank(const SubfieldEmbedding& e) { return {Kind::Rank, e}; }
    int weight(const Vec& v) const { return kind == Kind::Hamming ? hamming_weight(v) : rank_weight(v, *sub); }
    std::string name() const;
};

struct WeightReport {
    std::string metric;
    int minimum = 0;
    Vec witness;
    Vec message;
    bool exhaustive = true;
    std::uint64_t evaluated = 0;
    std::uint64_t total = 0;
};

struct DistanceOptions {
    std::uint64_t budget = std::uint64_t(1) << 31;
    bool deep = false;
    int jobs = 0;  // 0: OpenMP default
};

// Scans beyond this need `deep`.
constexpr std::uint64_t kShallowLimit = std::uint64_t(1) << 26;

std::uint64_t normalized_message_count(std::uint32_t q, int k);

// OpenMP kernel and the serial reference it is tested against.
WeightReport min_distance(const SkewCode& code, const Metric& metric, const DistanceOptions& opt = {});
WeightReport min_distance_serial(const SkewCode& code, const Metric& metric, const DistanceOptions& opt = {});
// Generic kernel over an explicit generator matrix.
WeightReport min_distance_matrix(const FiniteField& F, const Matrix& G, const Metric& metric, const DistanceOptions& opt,
                                 bool parallel);

struct SingletonReport {
    bool is_mds = false;
    bool is_mrd = false;
};
SingletonReport singleton_check(const SkewCode& code, int d_h, int d_r, const SubfieldEmbedding& emb);

// Hamming weight enumerator A_0..A_n, full scan
std::vector<std::uint64_t> weight_enumerator(const FiniteField& F, const Matrix& G, int n);
std::vector<std::uint64_t> rank_distribution(const FiniteField& F, const Matrix& G, int n, const SubfieldEmbedding& emb);

// Monic right divisors of f by brute force, capped at q^deg <= cap.
std::vector<SkewPoly> right_divisors(const SkewPoly& f);

}  // namespace orecode
