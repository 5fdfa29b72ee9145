#include "k3walls/tableaux.hpp"

#include "k3walls/hbn.hpp"

#include <algorithm>
#include <set>

namespace k3walls {

namespace {

int mod(int a, int k) { return ((a % k) + k) % k; }

void check_params(const TableauParams& p)
{
    if (p.r < 0) throw Error("invalid_argument", "r must be >= 0");
    if (p.d > p.g - 1) throw Error("invalid_argument", "need d <= g-1");
    if (p.cols() < 1) throw Error("invalid_argument", "need g-d+r >= 1");
    if (p.k < 1) throw Error("invalid_argument", "k must be positive");
}

// Depth-first fill in row-major order with labels <= cap. The first complete
// filling reached uses the smallest label at every cell, so it is the
// lexicographically least one.
class CappedSearch {
public:
    CappedSearch(const TableauParams& p, int cap, std::uint64_t& nodes, std::uint64_t budget)
        : p_(p), rows_(p.rows()), cols_(p.cols()), cap_(cap), nodes_(nodes), budget_(budget),
          grid_(rows_ * cols_, 0), label_class_(cap + 1, -1), label_uses_(cap + 1, 0)
    {
    }

    bool run() { return fill(0); }

    Tableau tableau() const
    {
        Tableau t(rows_, std::vector<int>(cols_));
        for (int x = 0; x < rows_; ++x)
            for (int y = 0; y < cols_; ++y) t[x][y] = grid_[x * cols_ + y];
        return t;
    }

private:
    bool fill(int idx)
    {
        if (idx == rows_ * cols_) return true;
        if (++nodes_ > budget_) throw Error("budget_exhausted", "tableau search exceeded node budget");
        int x = idx / cols_, y = idx % cols_;
        int lo = 1;
        if (x > 0) lo = std::max(lo, grid_[idx - cols_] + 1);
        if (y > 0) lo = std::max(lo, grid_[idx - 1] + 1);
        int tail = (rows_ - 1 - x) + (cols_ - 1 - y);  // longest strict chain after this cell
        int hi = cap_ - tail;
        int cls = mod(x - y, p_.k);
        for (int label = lo; label <= hi; ++label) {
            if (label_uses_[label] > 0 && label_class_[label] != cls) continue;
            grid_[idx] = label;
            if (label_uses_[label]++ == 0) label_class_[label] = cls;
            if (fill(idx + 1)) return true;
            --label_uses_[label];
        }
        grid_[idx] = 0;
        return false;
    }

    const TableauParams& p_;
    int rows_, cols_, cap_;
    std::uint64_t& nodes_;
    std::uint64_t budget_;
    std::vector<int> grid_;
    std::vector<int> label_class_;
    std::vector<int> label_uses_;
};

}  // namespace

bool is_valid(const TableauParams& p, const Tableau& t, int label_cap)
{
    const int rows = p.rows(), cols = p.cols();
    if (static_cast<int>(t.size()) != rows) throw Error("shape_mismatch", "tableau row count mismatch");
    for (const auto& row : t)
        if (static_cast<int>(row.size()) != cols) throw Error("shape_mismatch", "tableau column count mismatch");
    for (int x = 0; x < rows; ++x)
        for (int y = 0; y < cols; ++y) {
            int v = t[x][y];
            if (v < 1 || v > label_cap) return false;
            if (x + 1 < rows && t[x + 1][y] <= v) return false;
            if (y + 1 < cols && t[x][y + 1] <= v) return false;
        }
    for (int a = 0; a < rows * cols; ++a)
        for (int b = a + 1; b < rows * cols; ++b) {
            int x = a / cols, y = a % cols, x2 = b / cols, y2 = b % cols;
            if (t[x][y] == t[x2][y2] && mod((x - y) - (x2 - y2), p.k) != 0) return false;
        }
    return true;
}

OmittedResult max_omitted(const TableauParams& p, std::uint64_t budget)
{
    check_params(p);
    OmittedResult out;
    // Fewest distinct labels = least cap admitting a filling; any filling
    // compresses order-preservingly onto {1..#labels}.
    for (int cap = p.rows() + p.cols() - 1; cap <= p.g; ++cap) {
        CappedSearch search(p, cap, out.nodes, budget);
        if (search.run()) {
            out.feasible = true;
            out.witness = search.tableau();
            std::set<int> used;
            for (const auto& row : out.witness) used.insert(row.begin(), row.end());
            out.omitted = p.g - static_cast<int>(used.size());
            return out;
        }
    }
    return out;
}

OmittedResult max_omitted_naive(const TableauParams& p)
{
    check_params(p);
    const int rows = p.rows(), cols = p.cols(), n = rows * cols;
    OmittedResult best;
    Tableau t(rows, std::vector<int>(cols, 0));
    auto rec = [&](auto&& self, int idx) -> void {
        ++best.nodes;
        if (idx == n) {
            if (!is_valid(p, t, p.g)) return;
            std::set<int> used;
            for (const auto& row : t) used.insert(row.begin(), row.end());
            int omitted = p.g - static_cast<int>(used.size());
            if (!best.feasible || omitted > best.omitted) {
                best.feasible = true;
                best.omitted = omitted;
                best.witness = t;
            }
            return;
        }
        int x = idx / cols, y = idx % cols;
        for (int label = 1; label <= p.g; ++label) {
            if (x > 0 && label <= t[x - 1][y]) continue;
            if (y > 0 && label <= t[x][y - 1]) continue;
            t[x][y] = label;
            self(self, idx + 1);
        }
        t[x][y] = 0;
    };
    rec(rec, 0);
    return best;
}

OracleReport oracle_check(const TableauParams& p, std::uint64_t budget)
{
    OracleReport rep{p, max_omitted(p, budget), 0, {}, false};
    RhoK rk = rho_k(p.g, p.k, p.r, p.d);
    rep.rho_k = rk.value;
    rep.argmax = rk.argmax;
    if (rep.search.feasible) {
        if (rep.search.omitted > rk.value)
            throw Error("oracle_violation", "tableau omits " + std::to_string(rep.search.omitted) +
                                                " labels, above rho_k = " + rk.value.str());
        rep.equality = rep.search.omitted == rk.value;
    } else if (rk.value >= 0) {
        throw Error("oracle_violation", "no valid tableau although rho_k = " + rk.value.str() + " >= 0");
    }
    return rep;
}

}  // namespace k3walls
