#include "k3walls/chains.hpp"

#include "k3walls/hbn.hpp"

namespace k3walls {

void check_sequence(int r, int d, const RamificationSequence& s)
{
    if (static_cast<int>(s.size()) != r + 1)
        throw Error("malformed_sequence", "ramification sequence needs r+1 = " + std::to_string(r + 1) + " entries");
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] > d - r) throw Error("malformed_sequence", "ramification entries must lie in [0, d-r]");
        if (i > 0 && s[i] < s[i - 1]) throw Error("malformed_sequence", "ramification sequence must be non-decreasing");
    }
}

int weight(const RamificationSequence& s)
{
    int w = 0;
    for (int a : s) w += a;
    return w;
}

Integer adjusted_rho(const Integer& g, int r, int d, const std::vector<RamificationSequence>& seqs)
{
    Integer out = rho(g, r, d);
    for (const auto& s : seqs) {
        check_sequence(r, d, s);
        out -= weight(s);
    }
    return out;
}

RamificationSequence complement(int r, int d, const RamificationSequence& s)
{
    check_sequence(r, d, s);
    RamificationSequence out(r + 1);
    for (int j = 0; j <= r; ++j) out[j] = d - r - s[r - j];
    return out;
}

namespace {

// Incoming ramification on component a (1-based); a may be g+1, which gives
// the value complementary to the last outgoing one.
RamificationSequence incoming(int g, int r, int d, int a)
{
    const int h = g - d + r;
    const int first = (r + 1) * h;
    if (a == 1) return RamificationSequence(r + 1, 0);
    if (a <= 1 + first) {
        int b = (a - 2) / (r + 1), i = (a - 2) % (r + 1) + 1;
        RamificationSequence s(r + 1, b * r + i);
        for (int j = 0; j < i; ++j) s[j] = b * r + i - 1;
        return s;
    }
    return RamificationSequence(r + 1, r * h + (a - 1 - first));
}

}  // namespace

ChainSeries build_chain(int g, int k, int r, int d)
{
    if (g < 1 || r < 0 || d < r) throw Error("precondition", "need g >= 1 and 0 <= r <= d");
    if (k < r + 2) throw Error("precondition", "need k >= r+2");
    if (d > g - 1) throw Error("precondition", "need d <= g-1");
    if (rho(g, r, d) < 0) throw Error("precondition", "need rho(g,r,d) >= 0");

    ChainSeries c{g, k, r, d, {}, {}};
    const int h = g - d + r;
    const int first = (r + 1) * h;
    const Integer rho1 = rho(1, r, d);
    for (int a = 1; a <= g; ++a) {
        ChainComponent comp{a, incoming(g, r, d, a), {}, 0};
        if (a == 1) {
            comp.out.assign(r + 1, d - r - 1);
            comp.out[r] = d - r;
        } else {
            comp.out = complement(r, d, incoming(g, r, d, a + 1));
        }
        comp.adj_rho = rho1 - weight(comp.in) - weight(comp.out);
        c.components.push_back(std::move(comp));
    }
    c.notes.push_back("node points differ by k-torsion (order " + std::to_string(k) + "); not checked");
    if (1 + first <= g) {
        int offset = (1 + first) - (h - 1) - r * h;
        c.notes.push_back("alternative last-range formula a-(g-d+r-1) differs from the boundary value " +
                          std::to_string(r * h) + " by " + std::to_string(offset) + " at a = " +
                          std::to_string(1 + first) + "; boundary value used");
    }
    return c;
}

ChainCheck verify_chain(const ChainSeries& c)
{
    ChainCheck out{{}, 0};
    const int h = c.g - c.d + c.r;
    const int first = (c.r + 1) * h;
    const Integer rho1 = rho(1, c.r, c.d);
    auto fail = [&](const std::string& what) { out.failures.push_back(what); };

    if (static_cast<int>(c.components.size()) != c.g)
        fail("expected " + std::to_string(c.g) + " components, found " + std::to_string(c.components.size()));
    for (std::size_t i = 0; i < c.components.size(); ++i) {
        const auto& comp = c.components[i];
        const std::string tag = "component " + std::to_string(comp.a);
        if (comp.a != static_cast<int>(i) + 1) fail(tag + ": index out of order");
        try {
            check_sequence(c.r, c.d, comp.in);
            check_sequence(c.r, c.d, comp.out);
        } catch (const Error& e) {
            fail(tag + ": " + e.what());
            continue;
        }
        Integer adj = rho1 - weight(comp.in) - weight(comp.out);
        if (adj != comp.adj_rho) fail(tag + ": stored adjusted rho " + comp.adj_rho.str() + " != " + adj.str());
        int target = comp.a <= first ? 0 : 1;
        if (adj != target) fail(tag + ": adjusted rho " + adj.str() + ", expected " + std::to_string(target));
        out.total_adj_rho += adj;

        if (i + 1 < c.components.size()) {
            const auto& next = c.components[i + 1];
            if (next.in.size() == comp.out.size()) {
                for (int j = 0; j <= c.r; ++j)
                    if (comp.out[j] + next.in[c.r - j] != c.d - c.r) {
                        fail("node " + std::to_string(comp.a) + ": complementarity fails at j = " + std::to_string(j));
                        break;
                    }
            }
            if (comp.a <= first && next.in.size() == comp.in.size() && weight(next.in) - weight(comp.in) != c.r)
                fail("component " + std::to_string(comp.a) + ": incoming weight step is not r");
        }
    }
    Integer expect = rho(c.g, c.r, c.d);
    if (out.total_adj_rho != expect)
        fail("sum of adjusted rho " + out.total_adj_rho.str() + " != rho(g,r,d) = " + expect.str());
    return out;
}

}  // namespace k3walls
