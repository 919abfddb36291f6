#ifndef CWB_SEEDS_HPP
#define CWB_SEEDS_HPP

#include <string>
#include <utility>
#include <vector>

#include "exmatrix.hpp"
#include "laurent.hpp"

namespace cwb {

// A seed: one cluster per coordinate system, an exchange matrix, and the
// mutation word from the root.  All parallel systems mutate in lockstep;
// system 0 is the root basis and is the one used for identity of variables
// and clusters.  Extra systems carry the same cluster expressed in bases
// planted at other seeds.
struct Seed {
    ExchangeMatrix matrix;
    std::vector<int> word;  // 0-indexed vertices
    std::vector<std::vector<LaurentPoly>> systems;

    int size() const { return matrix.size(); }
    int num_systems() const { return static_cast<int>(systems.size()); }
};

// Root seed whose clusters are fresh variables in every system.
Seed make_root_seed(const ExchangeMatrix& B, int num_systems = 1);

// Exchange relation: position k is replaced by
// (prod_{b(i,k)>0} x_i^{b(i,k)} + prod_{b(i,k)<0} x_i^{-b(i,k)}) / x_k
// in every system; the matrix is mutated; the word grows by k.
Seed mutate_seed(const Seed& s, int k);

struct ExchangePairRecord {
    int k = -1;
    std::vector<LaurentPoly> xm, xmstar;               // per system
    std::vector<std::pair<int, int>> bplus, bminus;    // (position, multiplicity)
};

ExchangePairRecord exchange_data(const Seed& s, int k);

// Checks xm * xmstar == prod_{bplus} + prod_{bminus} in every system.
void assert_exchange_equation(const Seed& s, const ExchangePairRecord& rec);

// Cluster of the root seed expressed in fresh coordinates planted at the
// seed reached by `word`.  Mutates a fresh cluster backwards along the word;
// the matrix must return to B_root exactly.
std::vector<LaurentPoly> cluster_planted_at(const ExchangeMatrix& B_root, const std::vector<int>& word);

struct Budget {
    bool to_closure = false;
    int max_depth = 0;

    static Budget closure() { return {true, 0}; }
    static Budget depth(int d) { return {false, d}; }
};

struct VariableRecord {
    std::vector<LaurentPoly> expr;  // one per system
    std::vector<int> witness;       // shortest discovering word, 0-indexed
};

struct SeedRecord {
    std::vector<int> word;
    ExchangeMatrix matrix;
    std::vector<int> var_at;  // variable id per cluster position
    int depth = 0;
    int parent = -1;    // discovery tree
    int parent_k = -1;  // mutated position at discovery
};

struct EdgeRecord {
    int m = -1, mstar = -1;                          // variable ids
    std::vector<std::pair<int, int>> bplus, bminus;  // (variable id, multiplicity), sorted
    std::vector<int> witness_word;                   // seed where first traversed
    int k = -1;
    int count = 0;  // traversal multiplicity
};

struct Enumeration {
    int n = 0;
    int num_systems = 1;
    std::vector<VariableRecord> variables;
    std::vector<SeedRecord> seeds;
    std::vector<EdgeRecord> edges;
    bool closed = false;

    const LaurentPoly& expr(int var, int system = 0) const { return variables[var].expr[system]; }
    // Index of the seed with the given witness word; -1 when absent.
    int seed_by_word(const std::vector<int>& word) const;
};

// Breadth-first closure of the exchange graph.  Deduplicates seeds on the
// unordered cluster in system 0 and asserts matrix agreement on every
// deduplication hit.  to_closure is refused unless the mutation class of the
// matrix has an acyclic Dynkin representative.  Output is deterministic and
// independent of the worker count.
Enumeration enumerate_seeds(const Seed& root, const Budget& budget, int threads = 1);

// Expression of every enumerated variable in one more coordinate system,
// planted on the root seed, obtained by replaying the discovery tree.  Much
// cheaper than enumerating again with an extra parallel system.
std::vector<LaurentPoly> replay_system(const Enumeration& e,
                                       const std::vector<LaurentPoly>& planted_root_cluster);

std::string seed_json(const Seed& s, int system = 0);
std::string enumeration_json(const Enumeration& e, int system = 0);

// 1-indexed comma-separated mutation word, e.g. "2,1".
std::vector<int> parse_word(const std::string& text, int n);
std::string word_string(const std::vector<int>& word);

}  // namespace cwb

#endif
