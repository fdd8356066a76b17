#pragma once
#include <optional>
#include <vector>

#include "orecode/skew_poly.hpp"

namespace orecode {

using IndexSet = std::vector<int>;  // sorted, canonical in [0, e)

struct FrameOptions {
    std::uint64_t e = 0;                          // 0: take from `poly`
    std::optional<SkewPoly> poly;                 // right exponent supplies e
    std::optional<std::vector<int>> big_modulus;  // ascending coefficients over Z_p
    std::optional<unsigned> embed_index;          // index into roots sorted by discrete log
    std::optional<std::uint32_t> alpha_log;       // explicit normal element alpha = gamma^k
};

class ExtensionFrame {
public:
    static ExtensionFrame build(const FieldAutomorphism& sigma, const FrameOptions& opt);

    const FieldAutomorphism& sigma() const { return sigma_; }
    const FieldAutomorphism& theta() const { return theta_; }
    const FieldPtr& big() const { return theta_.field; }
    unsigned e() const { return e_; }
    unsigned mu() const { return mu_; }
    unsigned m() const { return e_ / mu_; }
    unsigned theta_power() const { return theta_.r; }
    unsigned embed_index() const { return embed_index_; }
    unsigned embedding_count() const { return unsigned(embed_roots_.size()); }
    Elem embed_root() const { return embed_roots_[embed_index_]; }
    Elem alpha() const { return alpha_; }
    Elem beta() const { return beta_; }
    Elem root(int i) const;  // theta^i(beta)
    const std::vector<Elem>& roots() const { return roots_; }

    Elem embed(Elem a) const { return emb_[a]; }
    bool in_base(Elem b) const { return unemb_[b] >= 0; }
    Elem unembed(Elem b) const;
    SkewPoly embed(const SkewPoly& f) const;
    SkewPoly unembed(const SkewPoly& f) const;

    std::vector<SkewPoly> factor_unity() const;
    std::vector<Elem> constacyclic_roots(Elem gamma, unsigned n) const;
    IndexSet defining_set(const SkewPoly& g) const;
    SkewPoly orbit_min_poly(unsigned i) const;
    SkewPoly generator_from_defining_set(const IndexSet& T) const;

private:
    FieldAutomorphism sigma_, theta_;
    unsigned e_ = 1, mu_ = 1, embed_index_ = 0;
    std::vector<Elem> embed_roots_;
    std::vector<Elem> emb_;
    std::vector<std::int32_t> unemb_;
    Elem alpha_ = 1, beta_ = 1;
    std::vector<Elem> roots_;
};

bool is_normal_element(const FieldAutomorphism& theta, unsigned q0_degree, Elem a);
Elem find_normal_element(const FieldAutomorphism& theta, unsigned q0_degree);

IndexSet normalize_set(const std::vector<int>& T, int e);
IndexSet mu_closure(const IndexSet& T, unsigned mu, unsigned e);
bool is_mu_closed(const IndexSet& T, unsigned mu, unsigned e);
IndexSet representative_set(const IndexSet& T, unsigned mu, unsigned e);

}  // namespace orecode
