#include <algorithm>
#include <limits>

#include "orecode/codes.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace orecode {

std::uint64_t normalized_message_count(std::uint32_t q, int k) {
    // (q^k - 1)/(q - 1), saturating
    std::uint64_t total = 0, pw = 1;
    const std::uint64_t lim = std::numeric_limits<std::uint64_t>::max() / 4;
    for (int i = 0; i < k; ++i) {
        total = std::min(lim, total + pw);
        pw = (pw > lim / q) ? lim : pw * q;
    }
    return total;
}

namespace {

struct Chunk {
    int lead;           // position of the leading 1
    std::uint64_t hi;   // value of the high tail digits
    int hi_digits;
    int lo_digits;
    std::uint64_t size;
};

struct Best {
    int w = std::numeric_limits<int>::max();
    Vec msg, word;
    void offer(int weight, const Vec& m, const Vec& c) {
        if (weight < w || (weight == w && m < msg)) {
            w = weight;
            msg = m;
            word = c;
        }
    }
    void merge(const Best& o) {
        if (o.w != std::numeric_limits<int>::max()) offer(o.w, o.msg, o.word);
    }
};

class Kernel {
public:
    Kernel(const FiniteField& F, const Matrix& G, const Metric& metric)
        : F_(F), G_(G), metric_(metric), k_(int(G.size())), n_(int(G[0].size())), q_(F.q()) {
        xor_add_ = F.p() == 2;
        fast_rank_ = metric.kind == Metric::Kind::Rank && metric.sub->t() == 1 && F.p() == 2;
        if (std::uint64_t(q_) * k_ * n_ <= (std::uint64_t(1) << 22)) {
            scaled_.assign(std::size_t(k_) * q_ * n_, 0);
            for (int j = 0; j < k_; ++j)
                for (std::uint32_t c = 0; c < q_; ++c)
                    for (int i = 0; i < n_; ++i) scaled_[(std::size_t(j) * q_ + c) * n_ + i] = F.mul(c, G[j][i]);
        }
    }

    // dst = src + c * row_j
    void axpy(Elem* dst, const Elem* src, int j, Elem c) const {
        if (!scaled_.empty()) {
            const Elem* r = &scaled_[(std::size_t(j) * q_ + c) * n_];
            if (xor_add_)
                for (int i = 0; i < n_; ++i) dst[i] = src[i] ^ r[i];
            else
                for (int i = 0; i < n_; ++i) dst[i] = F_.add(src[i], r[i]);
            return;
        }
        for (int i = 0; i < n_; ++i) dst[i] = F_.add(src[i], F_.mul(c, G_[j][i]));
    }

    int weight(const Elem* c) const {
        if (metric_.kind == Metric::Kind::Hamming) {
            int w = 0;
            for (int i = 0; i < n_; ++i) w += c[i] != 0;
            return w;
        }
        if (fast_rank_) {
            std::uint32_t basis[32] = {0};
            int r = 0;
            for (int i = 0; i < n_; ++i) {
                std::uint32_t x = c[i];
                while (x) {
                    int b = 31 - __builtin_clz(x);
                    if (!basis[b]) {
                        basis[b] = x;
                        ++r;
                        break;
                    }
                    x ^= basis[b];
                }
            }
            return r;
        }
        return metric_.sub->rank(Vec(c, c + n_));
    }

    void run(const Chunk& ch, Best& best) const {
        const int lo_start = ch.lead + 1 + ch.hi_digits;
        const int L = ch.lo_digits;
        Vec msg(k_, 0);
        msg[ch.lead] = 1;
        std::uint64_t h = ch.hi;
        for (int t = ch.hi_digits - 1; t >= 0; --t) {
            msg[ch.lead + 1 + t] = Elem(h % q_);
            h /= q_;
        }
        // level -1 holds the base word, levels 0..L-1 the partial sums
        std::vector<Elem> S(std::size_t(L + 1) * n_, 0);
        Elem* base = S.data();
        axpy(base, base, ch.lead, 1);
        for (int t = 0; t < ch.hi_digits; ++t) {
            Elem c = msg[ch.lead + 1 + t];
            if (c) axpy(base, base, ch.lead + 1 + t, c);
        }
        for (int j = 0; j < L; ++j) std::copy(base, base + n_, S.data() + std::size_t(j + 1) * n_);
        std::vector<Elem> d(L, 0);
        const Elem* top = S.data() + std::size_t(L) * n_;
        int bw = best.w;
        for (;;) {
            int w = weight(top);
            if (w <= bw) {
                for (int j = 0; j < L; ++j) msg[lo_start + j] = d[j];
                best.offer(w, msg, Vec(top, top + n_));
                bw = best.w;
            }
            int j = L - 1;
            while (j >= 0 && d[j] == q_ - 1) d[j--] = 0;
            if (j < 0) break;
            ++d[j];
            Elem* lvl = S.data() + std::size_t(j + 1) * n_;
            axpy(lvl, lvl - n_, lo_start + j, d[j]);
            for (int t = j + 1; t < L; ++t) std::copy(lvl, lvl + n_, S.data() + std::size_t(t + 1) * n_);
        }
    }

private:
    const FiniteField& F_;
    const Matrix& G_;
    const Metric& metric_;
    int k_, n_;
    std::uint32_t q_;
    bool xor_add_, fast_rank_;
    std::vector<Elem> scaled_;
};

}  // namespace

WeightReport min_distance_matrix(const FiniteField& F, const Matrix& G, const Metric& metric, const DistanceOptions& opt,
                                 bool parallel) {
    if (G.empty()) throw Error(ErrorKind::EmptyCode, "minimum distance of the zero code");
    const int k = int(G.size());
    const std::uint32_t q = F.q();
    WeightReport rep;
    rep.metric = metric.name();
    rep.total = normalized_message_count(q, k);
    std::uint64_t budget = opt.budget;
    if (!opt.deep) budget = std::min(budget, kShallowLimit);

    // chunks of about 2^14 words; the low digits vary inside a chunk
    std::vector<Chunk> chunks;
    std::uint64_t planned = 0;
    bool complete = true;
    for (int lead = 0; lead < k && complete; ++lead) {
        int tail = k - 1 - lead;
        int lo = 0;
        std::uint64_t lsz = 1;
        while (lo < tail && lsz * q <= (std::uint64_t(1) << 14)) {
            lsz *= q;
            ++lo;
        }
        int hi_digits = tail - lo;
        std::uint64_t nhi = 1;
        for (int t = 0; t < hi_digits; ++t) nhi = (nhi > (std::uint64_t(1) << 40) / q) ? (std::uint64_t(1) << 40) : nhi * q;
        for (std::uint64_t h = 0; h < nhi; ++h) {
            if (planned + lsz > budget && !chunks.empty()) {
                complete = false;
                break;
            }
            chunks.push_back({lead, h, hi_digits, lo, lsz});
            planned += lsz;
        }
    }
    rep.exhaustive = complete && planned == rep.total;
    rep.evaluated = planned;

    Kernel K(F, G, metric);
    Best best;
    const long nchunks = long(chunks.size());
    if (parallel) {
#ifdef _OPENMP
        int threads = opt.jobs > 0 ? opt.jobs : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
        {
            Best local;
#pragma omp for schedule(dynamic, 1)
            for (long c = 0; c < nchunks; ++c) K.run(chunks[std::size_t(c)], local);
#pragma omp critical
            best.merge(local);
        }
#else
        for (long c = 0; c < nchunks; ++c) K.run(chunks[std::size_t(c)], best);
#endif
    } else {
        for (long c = 0; c < nchunks; ++c) K.run(chunks[std::size_t(c)], best);
    }
    rep.minimum = best.w;
    rep.message = best.msg;
    rep.witness = best.word;
    return rep;
}

WeightReport min_distance(const SkewCode& code, const Metric& metric, const DistanceOptions& opt) {
    return min_distance_matrix(*code.ctx.field, generator_matrix(code), metric, opt, true);
}

WeightReport min_distance_serial(const SkewCode& code, const Metric& metric, const DistanceOptions& opt) {
    return min_distance_matrix(*code.ctx.field, generator_matrix(code), metric, opt, false);
}

}  // namespace orecode
