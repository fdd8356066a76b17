#pragma once
#include <string>
#include <vector>

#include "orecode/frame.hpp"

namespace orecode {

enum class BoundKind { BCH, HT, Roos };
enum class BoundMode { Strict, Lenient };

const char* bound_kind_name(BoundKind k);
const char* bound_mode_name(BoundMode m);

struct BoundCertificate {
    BoundKind kind = BoundKind::BCH;
    BoundMode mode = BoundMode::Strict;
    int e = 1;
    int a = 0, b = 1, c = 0;
    int delta = 1;
    int r = 0;
    std::vector<int> K{0};
    bool exhaustive = true;

    int value() const { return delta + r; }
    std::vector<int> indices() const;  // required members of T, canonical mod e
};

bool verify_certificate(const BoundCertificate& cert, const IndexSet& T);

BoundCertificate bch_search(const IndexSet& T, int e);
BoundCertificate ht_search(const IndexSet& T, int e, int r_max = -1);
BoundCertificate roos_search(const IndexSet& T, int e, int r_max = 3, BoundMode mode = BoundMode::Strict);

// Same certificate bounds d_R as well as d_H.
bool rank_applicability(const BoundCertificate& cert);

bool mrd_designed_check(const IndexSet& T, const BoundCertificate& cert, unsigned mu, unsigned e);

}  // namespace orecode
