#include "exmatrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace cwb {

namespace {

constexpr std::int64_t kEntryLimit = 1'000'000'000'000'000LL;

void check_entry(std::int64_t v) {
    if (v > kEntryLimit || v < -kEntryLimit)
        throw InvariantViolation("exchange matrix entry exceeds machine-width budget");
}

}  // namespace

ExchangeMatrix::ExchangeMatrix(int n, std::vector<std::vector<std::int64_t>> rows)
    : n_(n), b_(static_cast<size_t>(n) * n, 0) {
    if (static_cast<int>(rows.size()) != n) throw InputError("matrix row count mismatch");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n) throw InputError("matrix column count mismatch");
        for (int j = 0; j < n; ++j) b_[static_cast<size_t>(i) * n_ + j] = rows[i][j];
    }
    validate();
}

void ExchangeMatrix::set(int i, int j, std::int64_t v) {
    if (i == j && v != 0) throw InputError("loops are not allowed");
    b_[static_cast<size_t>(i) * n_ + j] = v;
    b_[static_cast<size_t>(j) * n_ + i] = -v;
}

void ExchangeMatrix::validate() const {
    for (int i = 0; i < n_; ++i) {
        if (b(i, i) != 0) throw InvariantViolation("nonzero diagonal in exchange matrix");
        for (int j = 0; j < n_; ++j)
            if (b(i, j) != -b(j, i)) throw InvariantViolation("exchange matrix not skew-symmetric");
    }
}

ExchangeMatrix ExchangeMatrix::transpose() const {
    ExchangeMatrix t(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) t.b_[static_cast<size_t>(i) * n_ + j] = b(j, i);
    return t;
}

ExchangeMatrix ExchangeMatrix::permuted(const std::vector<int>& perm) const {
    ExchangeMatrix t(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            t.b_[static_cast<size_t>(i) * n_ + j] = b(perm[i], perm[j]);
    return t;
}

std::vector<std::vector<std::int64_t>> ExchangeMatrix::rows() const {
    std::vector<std::vector<std::int64_t>> r(n_, std::vector<std::int64_t>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r[i][j] = b(i, j);
    return r;
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& B, int k) {
    const int n = B.size();
    if (k < 0 || k >= n) throw InputError("mutation vertex out of range");
    ExchangeMatrix R(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::int64_t v;
            if (i == k || j == k) {
                v = -B.b(i, j);
            } else {
                std::int64_t bik = B.b(i, k), bkj = B.b(k, j);
                std::int64_t half = (std::llabs(bik) * bkj + bik * std::llabs(bkj)) / 2;
                check_entry(half);
                v = B.b(i, j) + half;
                check_entry(v);
            }
            R.set(i, j, v);
        }
    }
    R.validate();
    return R;
}

bool is_acyclic(const ExchangeMatrix& B) {
    const int n = B.size();
    std::vector<int> indeg(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (B.b(i, j) > 0) ++indeg[j];
    std::deque<int> queue;
    for (int i = 0; i < n; ++i)
        if (indeg[i] == 0) queue.push_back(i);
    int seen = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        ++seen;
        for (int j = 0; j < n; ++j)
            if (B.b(v, j) > 0 && --indeg[j] == 0) queue.push_back(j);
    }
    return seen == n;
}

std::string Classification::name() const {
    std::ostringstream out;
    switch (cls) {
        case QuiverClass::DynkinADE:
            out << family << vertices;
            break;
        case QuiverClass::Rank2:
            out << "rank-2";
            break;
        case QuiverClass::AffineA:
            out << "A(" << pq.first << "," << pq.second << ")";
            break;
        case QuiverClass::OtherTame:
            out << family << vertices << "~";
            break;
        case QuiverClass::Wild:
            out << "wild";
            break;
    }
    return out.str();
}

namespace {

// Arm lengths (in edges) from a branch vertex of a simple tree, sorted.
std::vector<int> arm_lengths(int center, const std::vector<std::vector<int>>& adj) {
    std::vector<int> arms;
    for (int nb : adj[center]) {
        int len = 1, prev = center, cur = nb;
        while (static_cast<int>(adj[cur].size()) == 2) {
            int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            prev = cur;
            cur = nxt;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    return arms;
}

}  // namespace

Classification dynkin_or_rank2_classify(const ExchangeMatrix& B) {
    if (!is_acyclic(B)) throw InputError("classification requires an acyclic quiver");
    const int n = B.size();
    Classification c;
    c.vertices = n;
    if (n == 1) {
        c.cls = QuiverClass::DynkinADE;
        c.family = 'A';
        return c;
    }
    if (n == 2) {
        if (std::llabs(B.b(0, 1)) <= 1) {
            c.cls = QuiverClass::DynkinADE;
            c.family = 'A';
        } else {
            c.cls = QuiverClass::Rank2;
        }
        return c;
    }

    // Underlying graph data.
    std::vector<std::vector<int>> adj(n);
    int edges = 0;
    bool multi_edge = false;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::int64_t m = std::llabs(B.b(i, j));
            if (m == 0) continue;
            if (m > 1) multi_edge = true;
            adj[i].push_back(j);
            adj[j].push_back(i);
            ++edges;
        }
    }

    // Connectivity.
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = ncomp;
        std::deque<int> q{s};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : adj[v])
                if (comp[w] < 0) {
                    comp[w] = ncomp;
                    q.push_back(w);
                }
        }
        ++ncomp;
    }
    if (ncomp > 1) {
        c.cls = QuiverClass::Wild;  // disconnected quivers are out of scope here
        return c;
    }
    if (multi_edge) {
        c.cls = QuiverClass::Wild;
        return c;
    }

    int max_deg = 0, deg3 = 0, deg4 = 0;
    for (int i = 0; i < n; ++i) {
        int d = static_cast<int>(adj[i].size());
        max_deg = std::max(max_deg, d);
        if (d == 3) ++deg3;
        if (d == 4) ++deg4;
    }

    if (edges == n && max_deg == 2) {
        // Single cycle through all vertices: affine A with mixed orientation.
        // Walk the cycle once and count arrows along / against the walk.
        std::vector<int> order{0, adj[0][0]};
        while (static_cast<int>(order.size()) < n) {
            int cur = order.back(), prev = order[order.size() - 2];
            order.push_back(adj[cur][0] == prev ? adj[cur][1] : adj[cur][0]);
        }
        int fwd = 0, bwd = 0;
        for (int i = 0; i < n; ++i) {
            int u = order[i], v = order[(i + 1) % n];
            if (B.b(u, v) > 0)
                ++fwd;
            else
                ++bwd;
        }
        c.cls = QuiverClass::AffineA;
        c.family = 'A';
        c.pq = {std::max(fwd, bwd), std::min(fwd, bwd)};
        if (c.pq.second == 0) throw InvariantViolation("acyclic cycle quiver with one-way orientation");
        return c;
    }

    if (edges == n - 1) {  // tree
        if (max_deg <= 2) {
            c.cls = QuiverClass::DynkinADE;
            c.family = 'A';
            return c;
        }
        if (max_deg == 3 && deg3 == 1) {
            int center = 0;
            while (static_cast<int>(adj[center].size()) != 3) ++center;
            std::vector<int> arms = arm_lengths(center, adj);
            if (arms[0] == 1 && arms[1] == 1) {
                c.cls = QuiverClass::DynkinADE;
                c.family = 'D';
                return c;
            }
            if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) {
                c.cls = QuiverClass::DynkinADE;
                c.family = 'E';
                return c;
            }
            if (arms == std::vector<int>{2, 2, 2} || arms == std::vector<int>{1, 3, 3} ||
                arms == std::vector<int>{1, 2, 5}) {
                c.cls = QuiverClass::OtherTame;
                c.family = 'E';
                return c;
            }
            c.cls = QuiverClass::Wild;
            return c;
        }
        if (max_deg == 3 && deg3 == 2) {
            // Affine D: a path with two pendant vertices hanging at each end.
            int pendant_at_branch = 0, leaves = 0;
            for (int i = 0; i < n; ++i) {
                if (adj[i].size() != 1) continue;
                ++leaves;
                if (adj[adj[i][0]].size() == 3) ++pendant_at_branch;
            }
            if (leaves == 4 && pendant_at_branch == 4) {
                c.cls = QuiverClass::OtherTame;
                c.family = 'D';
                return c;
            }
            c.cls = QuiverClass::Wild;
            return c;
        }
        if (max_deg == 4 && deg4 == 1 && n == 5) {
            c.cls = QuiverClass::OtherTame;  // four-pronged star
            c.family = 'D';
            return c;
        }
        c.cls = QuiverClass::Wild;
        return c;
    }

    c.cls = QuiverClass::Wild;
    return c;
}

std::optional<std::vector<int>> find_acyclic_word(const ExchangeMatrix& B, int max_nodes) {
    if (is_acyclic(B)) return std::vector<int>{};
    std::set<ExchangeMatrix> seen{B};
    std::deque<std::pair<ExchangeMatrix, std::vector<int>>> queue{{B, {}}};
    while (!queue.empty() && static_cast<int>(seen.size()) <= max_nodes) {
        auto [m, word] = std::move(queue.front());
        queue.pop_front();
        for (int k = 0; k < B.size(); ++k) {
            ExchangeMatrix next = mutate_matrix(m, k);
            if (!seen.insert(next).second) continue;
            std::vector<int> w = word;
            w.push_back(k);
            if (is_acyclic(next)) return w;
            queue.emplace_back(std::move(next), std::move(w));
        }
    }
    return std::nullopt;
}

ExchangeMatrix apply_word(const ExchangeMatrix& B, const std::vector<int>& word) {
    ExchangeMatrix m = B;
    for (int k : word) m = mutate_matrix(m, k);
    return m;
}

ExchangeMatrix parse_quiver(std::istream& in) {
    std::string line;
    int n = -1;
    ExchangeMatrix B;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n)) continue;  // skip leading blank/comment lines
            if (n <= 0) throw InputError("vertex count must be positive");
            B = ExchangeMatrix(n);
            continue;
        }
        int i, j;
        std::int64_t m;
        if (!(ls >> i)) continue;
        if (!(ls >> j >> m)) throw InputError("malformed arrow line " + std::to_string(lineno));
        if (i < 1 || i > n || j < 1 || j > n) throw InputError("vertex out of range on line " + std::to_string(lineno));
        if (i == j) throw InputError("loop arrow on line " + std::to_string(lineno));
        if (m <= 0) throw InputError("arrow multiplicity must be positive on line " + std::to_string(lineno));
        if (B.b(i - 1, j - 1) != 0 || B.b(j - 1, i - 1) != 0)
            throw InputError("duplicate arrow pair on line " + std::to_string(lineno));
        B.set(i - 1, j - 1, m);
        std::string trailing;
        if (ls >> trailing) throw InputError("trailing tokens on line " + std::to_string(lineno));
    }
    if (n < 0) throw InputError("empty quiver file");
    B.validate();
    return B;
}

ExchangeMatrix parse_quiver_string(const std::string& text) {
    std::istringstream in(text);
    return parse_quiver(in);
}

ExchangeMatrix load_quiver_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open quiver file: " + path);
    return parse_quiver(in);
}

std::string serialize_quiver(const ExchangeMatrix& B) {
    std::ostringstream out;
    out << B.size() << "\n";
    for (int i = 0; i < B.size(); ++i)
        for (int j = 0; j < B.size(); ++j)
            if (B.b(i, j) > 0) out << (i + 1) << " " << (j + 1) << " " << B.b(i, j) << "\n";
    return out.str();
}

}  // namespace cwb
