#ifndef CWB_EXMATRIX_HPP
#define CWB_EXMATRIX_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace cwb {

// Skew-symmetric integer exchange matrix of a quiver without loops or
// 2-cycles.  Convention: b(i,j) > 0 means b(i,j) arrows i -> j.
// Vertices are 0-indexed internally, 1-indexed in all I/O.
class ExchangeMatrix {
  public:
    ExchangeMatrix() : n_(0) {}
    explicit ExchangeMatrix(int n) : n_(n), b_(static_cast<size_t>(n) * n, 0) {}
    ExchangeMatrix(int n, std::vector<std::vector<std::int64_t>> rows);

    int size() const { return n_; }
    std::int64_t b(int i, int j) const { return b_[static_cast<size_t>(i) * n_ + j]; }
    void set(int i, int j, std::int64_t v);  // sets b(i,j)=v and b(j,i)=-v

    void validate() const;  // zero diagonal, skew-symmetry

    bool operator==(const ExchangeMatrix& o) const { return n_ == o.n_ && b_ == o.b_; }
    bool operator!=(const ExchangeMatrix& o) const { return !(*this == o); }
    bool operator<(const ExchangeMatrix& o) const { return b_ < o.b_; }

    ExchangeMatrix transpose() const;
    ExchangeMatrix permuted(const std::vector<int>& perm) const;  // b'(i,j)=b(perm[i],perm[j])

    std::vector<std::vector<std::int64_t>> rows() const;

  private:
    int n_;
    std::vector<std::int64_t> b_;
};

// Fomin-Zelevinsky matrix mutation at vertex k.  Entries are machine-width
// with overflow checks; exceeding them aborts with a diagnostic.
ExchangeMatrix mutate_matrix(const ExchangeMatrix& B, int k);

// True iff the digraph with b(i,j)>0 arrows i -> j has no directed cycle.
bool is_acyclic(const ExchangeMatrix& B);

enum class QuiverClass { DynkinADE, Rank2, AffineA, OtherTame, Wild };

struct Classification {
    QuiverClass cls = QuiverClass::Wild;
    char family = 0;            // 'A','D','E' when meaningful
    int vertices = 0;
    std::pair<int, int> pq{0, 0};  // AffineA only, p >= q >= 1

    bool is_dynkin() const { return cls == QuiverClass::DynkinADE; }
    std::string name() const;
};

// Classification of an acyclic quiver by its underlying graph.
Classification dynkin_or_rank2_classify(const ExchangeMatrix& B);

// Breadth-first search over matrix mutations for an acyclic representative of
// the mutation class.  Returns the mutation word (0-indexed) leading to it,
// empty when B itself is acyclic.  Fails past the node budget.
std::optional<std::vector<int>> find_acyclic_word(const ExchangeMatrix& B, int max_nodes = 20000);

ExchangeMatrix apply_word(const ExchangeMatrix& B, const std::vector<int>& word);

// Quiver text format: line 1 is the vertex count, then lines "i j m" meaning
// m arrows i -> j (1-indexed); '#' starts a comment.
ExchangeMatrix parse_quiver(std::istream& in);
ExchangeMatrix parse_quiver_string(const std::string& text);
ExchangeMatrix load_quiver_file(const std::string& path);
std::string serialize_quiver(const ExchangeMatrix& B);

}  // namespace cwb

#endif
