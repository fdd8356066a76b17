#pragma once
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "orecode/bounds.hpp"
#include "orecode/codes.hpp"
#include "orecode/equiv.hpp"

namespace orecode::cli {

using Json = nlohmann::ordered_json;

struct Globals {
    std::vector<std::string> field{"2^2"};
    unsigned sigma = 1;
    bool json = false;
    bool deep = false;
    int jobs = 0;
    unsigned seed = 1;
};

// Command output: text lines for humans plus the JSON payload.
struct Report {
    Json j = Json::object();
    std::vector<std::string> lines;
    int exit_code = 0;
    void line(const std::string& s) { lines.push_back(s); }
};

struct Session {
    Globals g;
    FieldPtr F;
    FieldAutomorphism aut;
    void open();
    SkewPoly poly(const std::string& text) const;
    Elem elem(const std::string& text) const;
    Vec vec(const std::string& text) const;
    std::string fmt(Elem a) const { return F->format(a); }
    Json vec_json(const Vec& v) const;
    Metric metric(const std::string& spec) const;
    EquivMetric equiv_metric(const std::string& spec) const;
};

IndexSet parse_set(const std::string& text);
std::vector<int> parse_ints(const std::string& text);
Json set_json(const IndexSet& T);
Json cert_json(const BoundCertificate& c);

// payloads for each subcommand; options not used by a verb stay empty
struct PolyArgs {
    std::string a, b, poly, at;
    bool left = false;
    std::uint64_t cap = 0;
};
struct FrameArgs {
    std::string poly, g, big_modulus;
    std::uint64_t e = 0;
    std::optional<unsigned> embed_index;
    std::optional<std::uint32_t> alpha_log;
};
struct CodeArgs {
    std::string f, g, v, metric = "hamming";
    std::uint64_t budget = std::uint64_t(1) << 31;
};
struct BoundArgs {
    FrameArgs frame;  // e, mu and T from a frame when frame.poly is set
    std::string T, g, mode = "strict";
    int e = 0, rmax = 3;
    unsigned mu = 0;
};
struct EquivArgs {
    std::string kind = "trinomial", metric = "hamming", src, dst, g;
    int n = 0, l = 0;
    bool two_sided = false;
};

void cmd_field(Session& s, Report& r);
void cmd_poly(Session& s, const std::string& verb, const PolyArgs& a, Report& r);
void cmd_frame(Session& s, const std::string& verb, const FrameArgs& a, Report& r);
void cmd_code(Session& s, const std::string& verb, const CodeArgs& a, Report& r);
void cmd_bound(Session& s, const std::string& verb, const BoundArgs& a, Report& r);
void cmd_equiv(Session& s, const std::string& verb, const EquivArgs& a, Report& r);
void cmd_reproduce(Session& s, Report& r);

}  // namespace orecode::cli
