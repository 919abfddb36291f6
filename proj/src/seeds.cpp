#include "seeds.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace cwb {

namespace {

constexpr size_t kSeedCap = 500000;

LaurentPoly exchange_numerator(const ExchangeMatrix& B, const std::vector<LaurentPoly>& cluster, int k) {
    const int n = B.size();
    LaurentPoly in = LaurentPoly::constant(n, 1), out = LaurentPoly::constant(n, 1);
    for (int i = 0; i < n; ++i) {
        for (std::int64_t c = 0; c < B.b(i, k); ++c) in = mul(in, cluster[i]);
        for (std::int64_t c = 0; c < -B.b(i, k); ++c) out = mul(out, cluster[i]);
    }
    return add(in, out);
}

}  // namespace

Seed make_root_seed(const ExchangeMatrix& B, int num_systems) {
    B.validate();
    Seed s;
    s.matrix = B;
    s.systems.assign(num_systems, {});
    for (auto& cluster : s.systems) {
        cluster.reserve(B.size());
        for (int i = 0; i < B.size(); ++i) cluster.push_back(LaurentPoly::variable(B.size(), i));
    }
    return s;
}

Seed mutate_seed(const Seed& s, int k) {
    const int n = s.size();
    if (k < 0 || k >= n) throw InputError("mutation vertex out of range");
    Seed r;
    r.matrix = mutate_matrix(s.matrix, k);
    r.word = s.word;
    r.word.push_back(k);
    r.systems = s.systems;
    for (int sys = 0; sys < s.num_systems(); ++sys) {
        LaurentPoly numer = exchange_numerator(s.matrix, s.systems[sys], k);
        r.systems[sys][k] = exact_div(numer, s.systems[sys][k]);
    }
    return r;
}

ExchangePairRecord exchange_data(const Seed& s, int k) {
    const int n = s.size();
    if (k < 0 || k >= n) throw InputError("exchange position out of range");
    ExchangePairRecord rec;
    rec.k = k;
    for (int i = 0; i < n; ++i) {
        if (s.matrix.b(i, k) > 0) rec.bplus.emplace_back(i, static_cast<int>(s.matrix.b(i, k)));
        if (s.matrix.b(i, k) < 0) rec.bminus.emplace_back(i, static_cast<int>(-s.matrix.b(i, k)));
    }
    for (int sys = 0; sys < s.num_systems(); ++sys) {
        LaurentPoly numer = exchange_numerator(s.matrix, s.systems[sys], k);
        rec.xm.push_back(s.systems[sys][k]);
        rec.xmstar.push_back(exact_div(numer, s.systems[sys][k]));
    }
    return rec;
}

void assert_exchange_equation(const Seed& s, const ExchangePairRecord& rec) {
    const int n = s.size();
    for (int sys = 0; sys < s.num_systems(); ++sys) {
        LaurentPoly rhs = LaurentPoly::constant(n, 1), rhs2 = LaurentPoly::constant(n, 1);
        for (auto [i, m] : rec.bplus)
            for (int c = 0; c < m; ++c) rhs = mul(rhs, s.systems[sys][i]);
        for (auto [i, m] : rec.bminus)
            for (int c = 0; c < m; ++c) rhs2 = mul(rhs2, s.systems[sys][i]);
        if (mul(rec.xm[sys], rec.xmstar[sys]) != add(rhs, rhs2))
            throw InvariantViolation("exchange pair equation violated");
    }
}

std::vector<LaurentPoly> cluster_planted_at(const ExchangeMatrix& B_root, const std::vector<int>& word) {
    ExchangeMatrix B_at = apply_word(B_root, word);
    Seed s = make_root_seed(B_at, 1);
    for (auto it = word.rbegin(); it != word.rend(); ++it) s = mutate_seed(s, *it);
    if (s.matrix != B_root)
        throw InvariantViolation("planted cluster did not return to the root matrix");
    return s.systems[0];
}

int Enumeration::seed_by_word(const std::vector<int>& word) const {
    for (size_t i = 0; i < seeds.size(); ++i)
        if (seeds[i].word == word) return static_cast<int>(i);
    return -1;
}

namespace {

struct VarTable {
    std::map<std::string, int> by_key;
    std::vector<VariableRecord>* records;

    int intern(const std::vector<LaurentPoly>& expr, const std::vector<int>& witness) {
        std::string key = raw_string(expr[0]);
        auto it = by_key.find(key);
        if (it != by_key.end()) return it->second;
        int id = static_cast<int>(records->size());
        records->push_back(VariableRecord{expr, witness});
        by_key.emplace(std::move(key), id);
        return id;
    }

    int lookup(const LaurentPoly& p) const {
        auto it = by_key.find(raw_string(p));
        return it == by_key.end() ? -1 : it->second;
    }
};

struct CanonicalSeed {
    std::vector<int> sorted_vars;
    ExchangeMatrix canon_matrix;
};

CanonicalSeed canonicalize(const std::vector<int>& var_at, const ExchangeMatrix& m) {
    const int n = m.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](int a, int b) { return var_at[a] < var_at[b]; });
    CanonicalSeed c;
    c.sorted_vars.reserve(n);
    for (int i = 0; i < n; ++i) c.sorted_vars.push_back(var_at[perm[i]]);
    c.canon_matrix = m.permuted(perm);
    return c;
}

}  // namespace

Enumeration enumerate_seeds(const Seed& root, const Budget& budget, int threads) {
    const int n = root.size();
    if (budget.to_closure) {
        auto word = find_acyclic_word(root.matrix);
        if (!word)
            throw UnsupportedQuiver("to-closure budget: no acyclic representative found");
        Classification cls = dynkin_or_rank2_classify(apply_word(root.matrix, *word));
        if (!cls.is_dynkin())
            throw UnsupportedQuiver("to-closure budget requires a Dynkin quiver, got " + cls.name());
    }
    if (threads < 1) threads = 1;

    Enumeration result;
    result.n = n;
    result.num_systems = root.num_systems();

    VarTable vars;
    vars.records = &result.variables;

    // Intern the root cluster.
    std::vector<int> root_vars(n);
    for (int i = 0; i < n; ++i) {
        std::vector<LaurentPoly> expr;
        for (int sys = 0; sys < root.num_systems(); ++sys) expr.push_back(root.systems[sys][i]);
        root_vars[i] = vars.intern(expr, {});
    }
    {
        std::set<int> distinct(root_vars.begin(), root_vars.end());
        if (static_cast<int>(distinct.size()) != n)
            throw InvariantViolation("root cluster entries are not pairwise distinct");
    }

    std::map<std::vector<int>, int> seed_by_cluster;  // sorted var ids -> seed index
    std::vector<ExchangeMatrix> canon_matrices;

    CanonicalSeed canon_root = canonicalize(root_vars, root.matrix);
    result.seeds.push_back(SeedRecord{root.word, root.matrix, root_vars, 0});
    seed_by_cluster.emplace(canon_root.sorted_vars, 0);
    canon_matrices.push_back(canon_root.canon_matrix);

    std::map<std::pair<int, int>, int> edge_index;

    std::vector<int> frontier{0};
    int depth = 0;
    result.closed = true;

    auto cluster_of = [&](const SeedRecord& rec, int sys) {
        std::vector<LaurentPoly> cluster;
        cluster.reserve(n);
        for (int i = 0; i < n; ++i) cluster.push_back(result.variables[rec.var_at[i]].expr[sys]);
        return cluster;
    };

    while (!frontier.empty()) {
        if (!budget.to_closure && depth >= budget.max_depth) {
            result.closed = false;
            break;
        }
        struct Task {
            int seed_idx;
            int k;
        };
        std::vector<Task> tasks;
        tasks.reserve(frontier.size() * n);
        for (int si : frontier)
            for (int k = 0; k < n; ++k) tasks.push_back({si, k});

        // Mutations are independent; the merge below runs in task order, so
        // results do not depend on the schedule.
        struct Outcome {
            std::vector<std::vector<LaurentPoly>> new_expr;  // per system, the new variable
            ExchangeMatrix matrix;
        };
        std::vector<Outcome> outcomes(tasks.size());
        auto run_task = [&](size_t t) {
            const SeedRecord& rec = result.seeds[tasks[t].seed_idx];
            const int k = tasks[t].k;
            Outcome& out = outcomes[t];
            out.matrix = mutate_matrix(rec.matrix, k);
            out.new_expr.assign(result.num_systems, {});
            for (int sys = 0; sys < result.num_systems; ++sys) {
                std::vector<LaurentPoly> cluster = cluster_of(rec, sys);
                LaurentPoly numer = exchange_numerator(rec.matrix, cluster, k);
                out.new_expr[sys] = {exact_div(numer, cluster[k])};
            }
        };
        if (threads == 1 || tasks.size() < 2) {
            for (size_t t = 0; t < tasks.size(); ++t) run_task(t);
        } else {
            std::vector<std::thread> pool;
            std::size_t nw = std::min<std::size_t>(threads, tasks.size());
            for (std::size_t w = 0; w < nw; ++w)
                pool.emplace_back([&, w] {
                    for (size_t t = w; t < tasks.size(); t += nw) run_task(t);
                });
            for (auto& th : pool) th.join();
        }

        std::vector<int> next_frontier;
        for (size_t t = 0; t < tasks.size(); ++t) {
            const int si = tasks[t].seed_idx;
            const int k = tasks[t].k;
            const SeedRecord parent = result.seeds[si];
            std::vector<LaurentPoly> expr;
            for (int sys = 0; sys < result.num_systems; ++sys)
                expr.push_back(outcomes[t].new_expr[sys][0]);
            std::vector<int> child_word = parent.word;
            child_word.push_back(k);
            int new_var = vars.intern(expr, child_word);

            // Edge bookkeeping, keyed on the unordered variable pair.
            {
                int m = parent.var_at[k], mstar = new_var;
                std::vector<std::pair<int, int>> bplus, bminus;
                for (int i = 0; i < n; ++i) {
                    if (parent.matrix.b(i, k) > 0)
                        bplus.emplace_back(parent.var_at[i], static_cast<int>(parent.matrix.b(i, k)));
                    if (parent.matrix.b(i, k) < 0)
                        bminus.emplace_back(parent.var_at[i], static_cast<int>(-parent.matrix.b(i, k)));
                }
                std::sort(bplus.begin(), bplus.end());
                std::sort(bminus.begin(), bminus.end());
                auto key = std::minmax(m, mstar);
                auto it = edge_index.find(key);
                if (it == edge_index.end()) {
                    EdgeRecord e;
                    e.m = m;
                    e.mstar = mstar;
                    e.bplus = bplus;
                    e.bminus = bminus;
                    e.witness_word = parent.word;
                    e.k = k;
                    e.count = 1;
                    edge_index.emplace(key, static_cast<int>(result.edges.size()));
                    result.edges.push_back(std::move(e));
                } else {
                    EdgeRecord& e = result.edges[it->second];
                    ++e.count;
                    bool same_side = (e.m == m);
                    const auto& expect_plus = same_side ? e.bplus : e.bminus;
                    const auto& expect_minus = same_side ? e.bminus : e.bplus;
                    if (!(same_side ? e.mstar == mstar : (e.m == mstar && e.mstar == m)) ||
                        bplus != expect_plus || bminus != expect_minus)
                        throw InvariantViolation("inconsistent exchange data on revisited edge");
                }
            }

            std::vector<int> child_vars = parent.var_at;
            child_vars[k] = new_var;
            {
                std::set<int> distinct(child_vars.begin(), child_vars.end());
                if (static_cast<int>(distinct.size()) != n)
                    throw InvariantViolation("cluster entries are not pairwise distinct");
            }
            CanonicalSeed canon = canonicalize(child_vars, outcomes[t].matrix);
            auto [it2, inserted] = seed_by_cluster.emplace(canon.sorted_vars,
                                                           static_cast<int>(result.seeds.size()));
            if (!inserted) {
                if (canon_matrices[it2->second] != canon.canon_matrix)
                    throw InvariantViolation("equal clusters with different exchange matrices");
                continue;
            }
            if (result.seeds.size() >= kSeedCap)
                throw InvariantViolation("seed enumeration exceeded the safety cap");
            result.seeds.push_back(
                SeedRecord{child_word, outcomes[t].matrix, child_vars, depth + 1, si, k});
            canon_matrices.push_back(canon.canon_matrix);
            next_frontier.push_back(it2->second);
        }
        frontier = std::move(next_frontier);
        ++depth;
    }
    return result;
}

std::vector<LaurentPoly> replay_system(const Enumeration& e,
                                       const std::vector<LaurentPoly>& planted_root_cluster) {
    if (static_cast<int>(planted_root_cluster.size()) != e.n)
        throw InputError("planted cluster has the wrong length");
    std::vector<LaurentPoly> out(e.variables.size());
    std::vector<bool> have(e.variables.size(), false);
    std::vector<std::vector<LaurentPoly>> clusters(e.seeds.size());
    for (size_t s = 0; s < e.seeds.size(); ++s) {
        const SeedRecord& rec = e.seeds[s];
        if (rec.parent < 0) {
            clusters[s] = planted_root_cluster;
        } else {
            const SeedRecord& par = e.seeds[rec.parent];
            clusters[s] = clusters[rec.parent];
            LaurentPoly numer = exchange_numerator(par.matrix, clusters[rec.parent], rec.parent_k);
            clusters[s][rec.parent_k] = exact_div(numer, clusters[rec.parent][rec.parent_k]);
        }
        for (int i = 0; i < e.n; ++i) {
            if (!have[rec.var_at[i]]) {
                out[rec.var_at[i]] = clusters[s][i];
                have[rec.var_at[i]] = true;
            }
        }
    }
    for (bool h : have)
        if (!h) throw InvariantViolation("replay did not reach every variable");
    return out;
}

namespace {

nlohmann::json word_json(const std::vector<int>& word) {
    nlohmann::json arr = nlohmann::json::array();
    for (int k : word) arr.push_back(k + 1);
    return arr;
}

}  // namespace

std::string seed_json(const Seed& s, int system) {
    nlohmann::json j;
    j["n"] = s.size();
    j["word"] = word_json(s.word);
    nlohmann::json cluster = nlohmann::json::array();
    for (const auto& p : s.systems[system]) cluster.push_back(fraction_string(p));
    j["cluster"] = cluster;
    j["matrix"] = s.matrix.rows();
    return j.dump(2);
}

std::string enumeration_json(const Enumeration& e, int system) {
    nlohmann::json j;
    j["n"] = e.n;
    j["cluster_count"] = e.seeds.size();
    j["closed"] = e.closed;
    nlohmann::json vars = nlohmann::json::array();
    std::vector<int> order(e.variables.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return fraction_string(e.variables[a].expr[system]) < fraction_string(e.variables[b].expr[system]);
    });
    for (int v : order) {
        nlohmann::json item;
        item["expr"] = fraction_string(e.variables[v].expr[system]);
        item["dvec"] = denominator_vector(e.variables[v].expr[system]);
        item["witness"] = word_json(e.variables[v].witness);
        vars.push_back(item);
    }
    j["variables"] = vars;
    return j.dump(2);
}

std::vector<int> parse_word(const std::string& text, int n) {
    std::vector<int> word;
    if (text.empty()) return word;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw InputError("bad word token: " + tok);
            if (v < 1 || v > n) throw InputError("word vertex out of range: " + tok);
            word.push_back(v - 1);
        } catch (const std::invalid_argument&) {
            throw InputError("bad word token: " + tok);
        } catch (const std::out_of_range&) {
            throw InputError("bad word token: " + tok);
        }
    }
    return word;
}

std::string word_string(const std::vector<int>& word) {
    std::ostringstream out;
    for (size_t i = 0; i < word.size(); ++i) {
        if (i) out << ",";
        out << word[i] + 1;
    }
    return out.str();
}

}  // namespace cwb
