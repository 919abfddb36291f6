#ifndef CWB_REPCAT_HPP
#define CWB_REPCAT_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "exmatrix.hpp"
#include "linalg.hpp"

namespace cwb {

struct Arrow {
    int src = -1, tgt = -1;
};

using Path = std::vector<int>;  // arrow indices in traversal order

// Representation of the context quiver over the exact rationals: one vector
// space dimension per vertex, one matrix per arrow of shape
// dims[tgt] x dims[src].
struct QuiverRep {
    std::vector<int> dims;
    std::vector<RatMat> maps;

    int total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
};

// Fixed acyclic quiver together with derived data: the arrow list, all paths
// between vertex pairs, indecomposable projectives and injectives, the Euler
// form and (in the tame case) the null root.
class QuiverCtx {
  public:
    explicit QuiverCtx(const ExchangeMatrix& B);

    const ExchangeMatrix& matrix() const { return b_; }
    int vertices() const { return b_.size(); }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    int arrow_index(int src, int tgt, int copy) const;

    const std::vector<Path>& paths(int from, int to) const { return paths_[from][to]; }
    int path_index(int from, int to, const Path& p) const;

    const QuiverRep& projective(int i) const { return projectives_[i]; }
    const QuiverRep& injective(int i) const { return injectives_[i]; }
    QuiverRep simple(int i) const;
    QuiverRep zero_rep() const;

    // <dx,dy> = sum dx_i dy_i - sum_{a:s->t} dx_s dy_t.
    long long euler(const std::vector<int>& dx, const std::vector<int>& dy) const;

    const Classification& classification() const { return cls_; }
    bool has_null_root() const { return !delta_.empty(); }
    const std::vector<int>& null_root() const { return delta_; }
    long long defect(const std::vector<int>& dim) const;  // <delta, dim>

    int projective_index(const std::vector<int>& dim) const;  // -1 when no match
    int injective_index(const std::vector<int>& dim) const;

    const QuiverCtx& opposite() const;

  private:
    ExchangeMatrix b_;
    std::vector<Arrow> arrows_;
    std::map<std::pair<int, int>, int> first_arrow_;
    std::vector<std::vector<std::vector<Path>>> paths_;
    std::vector<QuiverRep> projectives_, injectives_;
    Classification cls_;
    std::vector<int> delta_;
    mutable std::unique_ptr<QuiverCtx> op_;
    const QuiverCtx* op_back_ = nullptr;
};

// Product of the arrow matrices of `rep` along a path (identity for the
// trivial path at `from`).
RatMat path_matrix(const QuiverCtx& ctx, const QuiverRep& rep, int from, const Path& p);

// Minimal projective presentation P1 -> P0 -> M -> 0 on path coefficients:
// the summand vertices of P0 and P1 and, per (P1 summand j, P0 summand g),
// the coefficients over the paths gens0[g] ~> gens1[j].
struct Presentation {
    std::vector<int> gens0, gens1;
    std::vector<std::vector<std::map<int, Rat>>> coef;  // [j][g]: path index -> coefficient
};

Presentation minimal_presentation(const QuiverCtx& ctx, const QuiverRep& M);

// dim Hom_H(X,Y), computed as the kernel dimension of
// Hom(P0,Y) -> Hom(P1,Y) over a projective presentation of X.  (The direct
// intertwiner system solves the same problem on a much larger matrix.)
int hom_h(const QuiverCtx& ctx, const QuiverRep& X, const QuiverRep& Y);

// hom_h(X,Y) - <dim X, dim Y>; negative results are engine errors.
int ext1_h(const QuiverCtx& ctx, const QuiverRep& X, const QuiverRep& Y);

// Reverses all arrows; the result lives over ctx.opposite().
QuiverRep dualize(const QuiverCtx& ctx, const QuiverRep& M);

// Auslander-Reiten translate of a module without projective summands,
// computed from the minimal projective presentation via the Nakayama
// functor.  Returns the zero representation on projectives.
QuiverRep tau_rep(const QuiverCtx& ctx, const QuiverRep& M);
QuiverRep tau_inv_rep(const QuiverCtx& ctx, const QuiverRep& M);

// Exceptional indecomposable object of the cluster category: a module or a
// shifted projective P_i[1].
struct IndecObject {
    enum class Kind { Module, ShiftedProjective };
    Kind kind = Kind::Module;
    int index = -1;  // shifted projectives only
    QuiverRep rep;
    std::vector<int> dim;

    static IndecObject module(QuiverRep r);
    static IndecObject shifted(int i);
    bool is_module() const { return kind == Kind::Module; }
};

bool same_object(const IndecObject& a, const IndecObject& b);
std::string object_name(const IndecObject& x);

// tau(P_i) = P_i[1], tau(P_i[1]) = I_i; tau_inv(P_i[1]) = P_i,
// tau_inv(I_i) = P_i[1]; D Tr / Tr D on everything else.
IndecObject tau_obj(const QuiverCtx& ctx, const IndecObject& x);
IndecObject tau_inv_obj(const QuiverCtx& ctx, const IndecObject& x);

// dim Hom in the cluster category: the derived-category part plus the
// F-twisted part.
int hom_c(const QuiverCtx& ctx, const IndecObject& x, const IndecObject& y);
int ext1_c(const QuiverCtx& ctx, const IndecObject& x, const IndecObject& y);

// Memoized cluster-category Hom dimensions keyed by isomorphism class
// (kind plus dimension vector).  Sound for exceptional objects only, whose
// dimension vectors determine them; every object in the verification flows
// is exceptional.  Single-threaded writers.
class HomCache {
  public:
    explicit HomCache(const QuiverCtx& ctx) : ctx_(&ctx) {}

    int hom_c(const IndecObject& x, const IndecObject& y);
    int ext1_c(const IndecObject& x, const IndecObject& y);

  private:
    using Key = std::pair<int, std::vector<int>>;
    static Key key(const IndecObject& x);
    const QuiverRep& tau_inv_of(const IndecObject& y);

    const QuiverCtx* ctx_;
    std::map<std::pair<Key, Key>, int> homc_;
    std::map<std::vector<int>, QuiverRep> tauinv_;
};

// Exceptional tube data for affine A(p,q): rank and the quasisimples in
// tau-cyclic order (tau U_s = U_{s-1 mod rank}).
struct Tube {
    int rank = 0;
    std::vector<QuiverRep> quasisimples;
};

struct TubeCoords {
    int tube = -1;
    int socle = -1;
    int ql = 0;
};

std::vector<Tube> build_tube_atlas(const QuiverCtx& ctx);

struct TubeObject {
    TubeCoords coords;
    QuiverRep rep;
};

// All exceptional objects of the tubes: quasilengths 1..rank-1, built by
// iterated nonsplit extensions above the quasisimples.
std::vector<TubeObject> exceptional_tube_objects(const QuiverCtx& ctx, const std::vector<Tube>& tubes);

// Middle term of a nonsplit extension of `quot` by `sub`; requires
// Ext^1(quot, sub) = 1.
QuiverRep nonsplit_extension(const QuiverCtx& ctx, const QuiverRep& sub, const QuiverRep& quot);

struct Coords {
    enum class Kind { FinitePosition, Preprojective, Preinjective, Regular, Shifted };
    Kind kind = Kind::FinitePosition;
    int step = 0;
    int base = -1;
    TubeCoords tube;

    std::string str() const;
};

// Component coordinates of a module: finite position over Dynkin quivers,
// defect-signed transjective position or tube coordinates over tame ones.
Coords classify_module(const QuiverCtx& ctx, const std::vector<TubeObject>& tube_objects,
                       const QuiverRep& M);

// Catalog of exceptional indecomposable objects: shifted projectives, the
// transjective orbits to the depth bound, and (tame affine A) all
// exceptional tube objects.  Every module is verified exceptional and
// dimension vectors are pairwise distinct.
class Inventory {
  public:
    Inventory(const QuiverCtx& ctx, int depth);

    const QuiverCtx& ctx() const { return *ctx_; }
    int size() const { return static_cast<int>(objects_.size()); }
    const IndecObject& obj(int id) const { return objects_[id]; }
    const Coords& coords(int id) const { return coords_[id]; }
    const std::vector<Tube>& tubes() const { return tubes_; }
    const std::vector<TubeObject>& tube_objects() const { return tube_objects_; }

    int shifted_id(int i) const { return i; }
    int module_id_by_dim(const std::vector<int>& dim) const;  // -1 when absent

    // Object id of tau(obj(id)) when the result is in the inventory, else -1.
    int tau_id(int id) const;
    int tau_inv_id(int id) const;

    int hom_c(int x, int y) const;  // memoized

    std::string dump_json() const;

  private:
    void add_module(QuiverRep rep, Coords c);

    const QuiverCtx* ctx_;
    std::vector<IndecObject> objects_;
    std::vector<Coords> coords_;
    std::map<std::vector<int>, int> module_by_dim_;
    std::vector<Tube> tubes_;
    std::vector<TubeObject> tube_objects_;
    mutable std::vector<int> homc_memo_;
};

// Object of the inventory matching a denominator vector w.r.t. the acyclic
// root cluster: a single -1 entry names P_i[1], otherwise the unique module
// with that dimension vector.  Throws ResolutionError when there is no match.
int alpha_resolve(const Inventory& inv, const std::vector<int>& dvec);

bool is_cluster_tilting(const QuiverCtx& ctx, const std::vector<IndecObject>& T);

// Entries dim Hom_C(T_i, M); T must be cluster-tilting.
std::vector<int> t_vector(const QuiverCtx& ctx, const std::vector<IndecObject>& T,
                          const IndecObject& M);

}  // namespace cwb

#endif
