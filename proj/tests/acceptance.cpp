// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "k3walls/chains.hpp"
#include "k3walls/cli.hpp"
#include "k3walls/verify.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace k3walls;

namespace {

struct Line {
    bool ok = true;
    std::string detail;
    void add(const PropertyResult& r)
    {
        ok = ok && r.ok();
        if (!detail.empty()) detail += "; ";
        detail += r.name + ": " + std::to_string(r.checked - r.failed) + "/" + std::to_string(r.checked);
        if (!r.failures.empty()) detail += " first failure " + r.failures.front();
    }
    void require(bool cond, const std::string& what)
    {
        ok = ok && cond;
        if (!cond) detail += (detail.empty() ? "" : "; ") + what;
    }
};

class Timer {
public:
    double seconds() const
    {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int failures = 0;

void report(int id, const char* title, Line line, double secs)
{
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(2);
    s << (line.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " [" << secs << " s] " << line.detail;
    std::cout << s.str() << std::endl;
    if (!line.ok) ++failures;
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return in ? s.str() : std::string("<missing " + path + ">");
}

struct GoldenCase {
    const char* file;
    CommandRequest req;
    bool svg;
};

std::vector<GoldenCase> golden_cases()
{
    return {
        {"rho_k.json", {"rho-k", {{"g", "5"}, {"k", "2"}, {"r", "1"}, {"d", "3"}}, {}}, false},
        {"walls.json", {"walls", {{"g", "3"}, {"k", "2"}, {"eps", "1/10"}, {"v", "0,1,0,-1"}, {"type", "[[1,1]]"}}, {}}, false},
        {"tableaux.json", {"tableaux", {{"g", "2"}, {"k", "2"}, {"r", "1"}, {"d", "1"}}, {}}, false},
        {"plot_walls_rank0.svg",
         {"plot-walls",
          {{"g", "3"}, {"k", "2"}, {"eps", "1/10"}, {"v", "0,1,0,-1"}, {"type", "[[2,1],[1,1]]"}, {"out", "plot.svg"}},
          {}},
         true},
        {"plot_walls_point.svg",
         {"plot-walls", {{"g", "3"}, {"k", "2"}, {"eps", "1/10"}, {"v", "1,0,1,1"}, {"out", "plot.svg"}}, {}},
         true},
    };
}

}  // namespace

int main()
{
    const int threads = worker_count_from_env();

    {
        Timer t;
        Line l;
        l.add(props::tableaux_vs_formula(8, 5, 3, 12, threads));
        double s = t.seconds();
        l.require(s < 60, "runtime over 60 s");
        report(1, "tableaux agree with rho_k", l, s);
    }
    {
        Timer t;
        Line l;
        l.add(props::dimension_identity(30, 10, 6, threads));
        double s = t.seconds();
        l.require(s < 10, "runtime over 10 s");
        report(2, "stratum dimension identity", l, s);
    }
    {
        Timer t;
        Line l;
        l.add(props::degeneracy_identities(30, 10, 6, threads));
        report(3, "degeneracy identities", l, t.seconds());
    }
    {
        Timer t;
        Line l;
        l.add(props::nonexistence(30, 10, 6, threads));
        report(4, "non-existence consistency", l, t.seconds());
    }
    {
        Timer t;
        Line l;
        l.add(props::worked_walls());
        l.add(props::random_wall_sequences(100, 20240601, threads));
        report(5, "wall arithmetic", l, t.seconds());
    }
    {
        Timer t;
        Line l;
        l.add(props::small_degree(8, 5, 4, 12, threads));
        double s = t.seconds();
        l.require(s < 30, "runtime over 30 s");
        report(6, "bounded small-degree class scan", l, s);
    }
    {
        Timer t;
        Line l;
        l.add(props::chains_verify(10, 6, threads));
        ChainSeries c = build_chain(4, 3, 1, 3);
        const std::vector<std::pair<RamificationSequence, RamificationSequence>> trace{
            {{0, 0}, {1, 2}}, {{0, 1}, {1, 1}}, {{1, 1}, {0, 1}}, {{1, 2}, {0, 0}}};
        bool same = c.components.size() == trace.size();
        for (std::size_t i = 0; same && i < trace.size(); ++i)
            same = c.components[i].in == trace[i].first && c.components[i].out == trace[i].second &&
                   c.components[i].adj_rho == 0;
        l.require(same, "worked trace (4,3,1,3) differs");
        l.require(verify_chain(c).ok(), "worked trace fails verification");
        report(7, "chain verification", l, t.seconds());
    }
    {
        Timer t;
        Line l;
        l.add(props::spherical_line_bundles(100, 12, 8, threads));
        l.add(props::discriminant_relation(10000, 8, threads));
        l.add(props::gram_signature(30, 10, threads));
        report(8, "lattice suite", l, t.seconds());
    }
    {
        Timer t;
        Line l;
        int compared = 0;
        for (int th : {1, 2, 8}) {
            setenv("K3WALLS_THREADS", std::to_string(th).c_str(), 1);
            for (auto gc : golden_cases()) {
                gc.req.threads = th;
                Report rep = execute(gc.req);
                std::string got = gc.svg ? rep.artifact.value_or("") : render(rep.doc);
                std::string want = slurp(std::string(K3WALLS_GOLDEN_DIR) + "/" + gc.file);
                l.require(rep.exit_code == 0 && got == want,
                          std::string(gc.file) + " differs at " + std::to_string(th) + " threads");
                ++compared;
            }
        }
        if (l.ok) l.detail = std::to_string(compared) + " golden comparisons byte-identical";
        report(9, "golden files byte-stable across 1, 2, 8 threads", l, t.seconds());
    }
    return failures == 0 ? 0 : 1;
}
