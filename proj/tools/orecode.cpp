#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

using namespace orecode;
using namespace orecode::cli;

namespace {

int exit_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::CapExceeded: return 3;
        case ErrorKind::InternalError: return 1;
        default: return 2;
    }
}

void print(const Report& r, bool json, const std::string& command) {
    if (json) {
        Json out;
        out["schema"] = 1;
        out["command"] = command;
        for (auto& [k, v] : r.j.items()) out[k] = v;
        std::cout << out.dump(2) << "\n";
    } else {
        for (auto& l : r.lines) std::cout << l << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Skew polycyclic codes over finite fields"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    std::vector<std::string> field_tokens;
    app.add_option("--field", field_tokens, "field spec: p^s [mod=c0,c1,...]")->expected(1, 2);
    app.add_option("--sigma", g.sigma, "sigma = p^r-Frobenius, the power r");
    app.add_flag("--json", g.json, "machine-readable output");
    app.add_flag("--deep", g.deep, "lift the shallow enumeration limit");
    app.add_option("--jobs", g.jobs, "OpenMP threads (0: default)");
    app.add_option("--seed", g.seed, "seed for randomized checks");

    std::string command;
    auto verb_group = [&](const char* name, const char* help, std::vector<const char*> verbs) {
        auto* sub = app.add_subcommand(name, help);
        sub->require_subcommand(1);
        sub->fallthrough();
        std::vector<CLI::App*> out;
        for (auto* v : verbs) out.push_back(sub->add_subcommand(v));
        return out;
    };

    auto* field = app.add_subcommand("field", "describe the field and sigma");

    PolyArgs pa;
    for (auto* v : verb_group("poly", "skew polynomial arithmetic", {"mul", "div", "gcrd", "lclm", "eval", "exponent", "central"})) {
        v->add_option("--a", pa.a);
        v->add_option("--b", pa.b);
        v->add_option("--poly", pa.poly);
        v->add_option("--at", pa.at);
        v->add_flag("--left", pa.left, "left division");
        v->add_option("--cap", pa.cap, "exponent search cap");
    }
    FrameArgs fa;
    for (auto* v : verb_group("frame", "splitting frame of x^e - 1", {"build", "roots", "orbits"})) {
        v->add_option("--poly", fa.poly, "exponent source");
        v->add_option("--e", fa.e);
        v->add_option("--g", fa.g, "generator for the defining set");
        v->add_option("--big-modulus", fa.big_modulus, "ascending coefficients over Z_p");
        v->add_option("--embed-index", fa.embed_index);
        v->add_option("--alpha-log", fa.alpha_log);
    }
    CodeArgs ca;
    for (auto* v : verb_group("code", "skew polycyclic codes", {"build", "gm", "dmin", "shift"})) {
        v->add_option("--f", ca.f)->required();
        v->add_option("--g", ca.g)->required();
        v->add_option("--v", ca.v, "vector, comma separated");
        v->add_option("--metric", ca.metric, "hamming | rank | rank:q'");
        v->add_option("--budget", ca.budget);
    }
    BoundArgs ba;
    for (auto* v : verb_group("bound", "distance bounds from defining sets", {"bch", "ht", "roos", "search", "mrd"})) {
        v->add_option("--T", ba.T, "defining set, comma separated");
        v->add_option("--e", ba.e);
        v->add_option("--mu", ba.mu);
        v->add_option("--poly", ba.frame.poly, "take e and mu from this polynomial's frame");
        v->add_option("--big-modulus", ba.frame.big_modulus);
        v->add_option("--embed-index", ba.frame.embed_index);
        v->add_option("--alpha-log", ba.frame.alpha_log);
        v->add_option("--g", ba.g, "take T from this generator");
        v->add_option("--mode", ba.mode, "strict | lenient");
        v->add_option("--rmax", ba.rmax);
    }
    EquivArgs ea;
    for (auto* v : verb_group("equiv", "equivalence of ambient spaces", {"test", "count", "reps", "classify", "transport"})) {
        v->add_option("--kind", ea.kind, "trinomial | general");
        v->add_option("--metric", ea.metric, "hamming | rank | rank:q'");
        v->add_option("--src", ea.src);
        v->add_option("--dst", ea.dst);
        v->add_option("--g", ea.g, "generator over --dst");
        v->add_option("--n", ea.n);
        v->add_option("--l", ea.l);
        v->add_flag("--two-sided", ea.two_sided, "central-modulus count");
    }
    auto* repro = app.add_subcommand("reproduce-paper", "worked example and class-count tables");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    Session s;
    s.g = g;
    if (!field_tokens.empty()) s.g.field = field_tokens;
    Report r;
    try {
        s.open();
        CLI::App* top = app.get_subcommands().front();
        command = top->get_name();
        if (top == field) {
            cmd_field(s, r);
        } else if (top == repro) {
            cmd_reproduce(s, r);
        } else {
            std::string verb = top->get_subcommands().front()->get_name();
            command += " " + verb;
            if (top->get_name() == "poly") cmd_poly(s, verb, pa, r);
            if (top->get_name() == "frame") cmd_frame(s, verb, fa, r);
            if (top->get_name() == "code") cmd_code(s, verb, ca, r);
            if (top->get_name() == "bound") cmd_bound(s, verb, ba, r);
            if (top->get_name() == "equiv") cmd_equiv(s, verb, ea, r);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_for(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    print(r, s.g.json, command);
    return r.exit_code;
}
