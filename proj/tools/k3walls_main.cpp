#include "k3walls/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

namespace {

const char* const kValueFlags[] = {"g",   "k",   "r",      "d",     "ell",   "eps",   "v",       "type",
                                   "out", "budget", "max-g", "max-k", "suite", "viewport"};
const char* const kSwitches[] = {"refined", "square-filter", "check"};

const std::map<std::string, std::string> kHelp = {
    {"rho", "Brill-Noether number rho(g,r,d)"},
    {"rho-k", "gonality-twisted rho_k and its maximizing ell"},
    {"decompose", "balanced type and h0 conditions for (r, ell)"},
    {"types", "enumerate stability types for rank r"},
    {"walls", "walls on the b = 0 ray for a type"},
    {"tableaux", "maximal omitted labels in a valid tableau"},
    {"chain", "build and verify a chain of ramification data"},
    {"verify", "run the property suites"},
    {"plot-walls", "SVG of walls in the (b, w) half-plane"},
};

int fail(const std::string& code, const std::string& msg)
{
    k3walls::Json doc{{"schema_version", k3walls::kSchemaVersion}, {"error", {{"code", code}, {"message", msg}}}};
    std::cout << k3walls::render(doc);
    std::cerr << "error [" << code << "]: " << msg << "\n";
    return 1;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact wall-crossing and Brill-Noether numerics for elliptic K3 surfaces"};
    app.require_subcommand(1);

    struct Sub {
        CLI::App* app;
        std::map<std::string, std::string> values;
        std::map<std::string, bool> switches;
    };
    std::vector<std::unique_ptr<Sub>> subs;
    for (const auto& name : k3walls::subcommands()) {
        auto sub = std::make_unique<Sub>();
        sub->app = app.add_subcommand(name, kHelp.at(name));
        for (const char* f : kValueFlags)
            sub->app->add_option(std::string("--") + f, sub->values[f])->allow_extra_args(false);
        for (const char* s : kSwitches) sub->app->add_flag(std::string("--") + s, sub->switches[s]);
        subs.push_back(std::move(sub));
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("flag_parse", e.what());
    }

    k3walls::CommandRequest req;
    for (const auto& sub : subs) {
        if (!sub->app->parsed()) continue;
        req.subcommand = sub->app->get_name();
        for (const char* f : kValueFlags)
            if (sub->app->get_option(std::string("--") + f)->count() > 0) req.flags[f] = sub->values[f];
        for (const char* s : kSwitches)
            if (sub->switches[s]) req.flags[s] = "true";
    }

    k3walls::Report rep = k3walls::execute(req);
    if (rep.artifact) {
        std::ofstream out(req.flags.at("out"), std::ios::binary);
        out << *rep.artifact;
        if (!out) return fail("io", "cannot write " + req.flags.at("out"));
    }
    std::cout << k3walls::render(rep.doc);
    if (!rep.summary.empty()) std::cerr << req.subcommand << ": " << rep.summary << "\n";
    return rep.exit_code;
}
