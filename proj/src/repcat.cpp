#include "repcat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace cwb {

namespace {
constexpr int kOrbitCap = 4096;
using BigInt = boost::multiprecision::cpp_int;
}

int QuiverRep::total_dim() const {
    return std::accumulate(dims.begin(), dims.end(), 0);
}

QuiverCtx::QuiverCtx(const ExchangeMatrix& B) : b_(B) {
    b_.validate();
    if (!is_acyclic(b_)) throw InputError("representation context requires an acyclic quiver");
    const int n = b_.size();

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (b_.b(i, j) > 0) {
                first_arrow_[{i, j}] = static_cast<int>(arrows_.size());
                for (std::int64_t c = 0; c < b_.b(i, j); ++c) arrows_.push_back(Arrow{i, j});
            }

    // All paths between vertex pairs, depth-first in arrow order.
    paths_.assign(n, std::vector<std::vector<Path>>(n));
    for (int start = 0; start < n; ++start) {
        Path cur;
        auto dfs = [&](auto&& self, int v) -> void {
            paths_[start][v].push_back(cur);
            for (int a = 0; a < static_cast<int>(arrows_.size()); ++a) {
                if (arrows_[a].src != v) continue;
                cur.push_back(a);
                self(self, arrows_[a].tgt);
                cur.pop_back();
            }
        };
        dfs(dfs, start);
    }

    for (int i = 0; i < n; ++i) {
        QuiverRep P, I;
        P.dims.resize(n);
        I.dims.resize(n);
        for (int v = 0; v < n; ++v) {
            P.dims[v] = static_cast<int>(paths_[i][v].size());
            I.dims[v] = static_cast<int>(paths_[v][i].size());
        }
        P.maps.reserve(arrows_.size());
        I.maps.reserve(arrows_.size());
        for (int a = 0; a < static_cast<int>(arrows_.size()); ++a) {
            const int s = arrows_[a].src, t = arrows_[a].tgt;
            RatMat mp(P.dims[t], P.dims[s]);
            for (int pi = 0; pi < P.dims[s]; ++pi) {
                Path q = paths_[i][s][pi];
                q.push_back(a);
                mp.at(path_index(i, t, q), pi) = 1;
            }
            P.maps.push_back(std::move(mp));

            RatMat mi(I.dims[t], I.dims[s]);
            for (int qi = 0; qi < I.dims[s]; ++qi) {
                const Path& q = paths_[s][i][qi];
                if (!q.empty() && q.front() == a) {
                    Path r(q.begin() + 1, q.end());
                    mi.at(path_index(t, i, r), qi) = 1;
                }
            }
            I.maps.push_back(std::move(mi));
        }
        projectives_.push_back(std::move(P));
        injectives_.push_back(std::move(I));
    }

    cls_ = dynkin_or_rank2_classify(b_);

    // Null root: primitive positive generator of the radical of the
    // symmetrized Euler form, when one exists.
    {
        RatMat C(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                C.at(i, j) = (i == j) ? 2 : 0;
                if (i != j) C.at(i, j) -= Rat(std::llabs(b_.b(i, j)));
            }
        RatMat ker = nullspace(C);
        if (ker.cols() == 1) {
            BigInt lcm_den = 1;
            for (int i = 0; i < n; ++i)
                lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(ker.at(i, 0)));
            std::vector<BigInt> v(n);
            BigInt g = 0;
            for (int i = 0; i < n; ++i) {
                v[i] = boost::multiprecision::numerator(ker.at(i, 0) * Rat(lcm_den));
                g = boost::multiprecision::gcd(g, v[i]);
            }
            bool ok = g != 0;
            if (ok && v[0] < 0)
                for (auto& x : v) x = -x;
            for (int i = 0; ok && i < n; ++i)
                if (v[i] <= 0) ok = false;
            if (ok) {
                delta_.resize(n);
                for (int i = 0; i < n; ++i) delta_[i] = static_cast<int>(v[i] / g);
            }
        }
    }
}

int QuiverCtx::arrow_index(int src, int tgt, int copy) const {
    auto it = first_arrow_.find({src, tgt});
    if (it == first_arrow_.end()) throw InvariantViolation("no arrow between vertices");
    return it->second + copy;
}

int QuiverCtx::path_index(int from, int to, const Path& p) const {
    const auto& list = paths_[from][to];
    for (int i = 0; i < static_cast<int>(list.size()); ++i)
        if (list[i] == p) return i;
    throw InvariantViolation("path not found in context");
}

QuiverRep QuiverCtx::simple(int i) const {
    QuiverRep r;
    r.dims.assign(vertices(), 0);
    r.dims[i] = 1;
    for (const Arrow& a : arrows_) r.maps.emplace_back(r.dims[a.tgt], r.dims[a.src]);
    return r;
}

QuiverRep QuiverCtx::zero_rep() const {
    QuiverRep r;
    r.dims.assign(vertices(), 0);
    for (size_t a = 0; a < arrows_.size(); ++a) r.maps.emplace_back(0, 0);
    return r;
}

long long QuiverCtx::euler(const std::vector<int>& dx, const std::vector<int>& dy) const {
    long long v = 0;
    for (int i = 0; i < vertices(); ++i) v += static_cast<long long>(dx[i]) * dy[i];
    for (const Arrow& a : arrows_) v -= static_cast<long long>(dx[a.src]) * dy[a.tgt];
    return v;
}

long long QuiverCtx::defect(const std::vector<int>& dim) const {
    if (!has_null_root()) throw UnsupportedQuiver("defect needs a tame quiver");
    return euler(delta_, dim);
}

int QuiverCtx::projective_index(const std::vector<int>& dim) const {
    for (int i = 0; i < vertices(); ++i)
        if (projectives_[i].dims == dim) return i;
    return -1;
}

int QuiverCtx::injective_index(const std::vector<int>& dim) const {
    for (int i = 0; i < vertices(); ++i)
        if (injectives_[i].dims == dim) return i;
    return -1;
}

const QuiverCtx& QuiverCtx::opposite() const {
    if (op_back_) return *op_back_;
    if (!op_) {
        op_ = std::make_unique<QuiverCtx>(b_.transpose());
        op_->op_back_ = this;
    }
    return *op_;
}

RatMat path_matrix(const QuiverCtx& ctx, const QuiverRep& rep, int from, const Path& p) {
    RatMat m = RatMat::identity(rep.dims[from]);
    for (int a : p) m = rep.maps[a] * m;
    return m;
}

namespace {
int hom_h_presented(const QuiverCtx& ctx, const Presentation& pr, const QuiverRep& Y);
}

int hom_h(const QuiverCtx& ctx, const QuiverRep& X, const QuiverRep& Y) {
    if (X.total_dim() == 0 || Y.total_dim() == 0) return 0;
    Presentation pr = minimal_presentation(ctx, X);
    return hom_h_presented(ctx, pr, Y);
}

int ext1_h(const QuiverCtx& ctx, const QuiverRep& X, const QuiverRep& Y) {
    long long e = hom_h(ctx, X, Y) - ctx.euler(X.dims, Y.dims);
    if (e < 0) throw InvariantViolation("negative Ext dimension; Euler data is broken");
    return static_cast<int>(e);
}

QuiverRep dualize(const QuiverCtx& ctx, const QuiverRep& M) {
    const QuiverCtx& op = ctx.opposite();
    QuiverRep r;
    r.dims = M.dims;
    r.maps.resize(op.arrows().size());
    std::map<std::pair<int, int>, int> copy_count;
    for (int a = 0; a < static_cast<int>(ctx.arrows().size()); ++a) {
        const Arrow& ar = ctx.arrows()[a];
        int copy = copy_count[{ar.src, ar.tgt}]++;
        r.maps[op.arrow_index(ar.tgt, ar.src, copy)] = M.maps[a].transposed();
    }
    return r;
}

namespace {

// Direct sum of projectives (or injectives) over the listed vertices, with
// per-summand basis offsets at each vertex.
struct SumRep {
    std::vector<int> gens;  // vertex per summand
    QuiverRep rep;
    std::vector<std::vector<int>> offset;  // offset[summand][vertex]
};

SumRep sum_standard(const QuiverCtx& ctx, const std::vector<int>& gens, bool projective) {
    const int n = ctx.vertices();
    SumRep s;
    s.gens = gens;
    s.rep.dims.assign(n, 0);
    s.offset.assign(gens.size(), std::vector<int>(n, 0));
    for (size_t g = 0; g < gens.size(); ++g) {
        const QuiverRep& block = projective ? ctx.projective(gens[g]) : ctx.injective(gens[g]);
        for (int v = 0; v < n; ++v) {
            s.offset[g][v] = s.rep.dims[v];
            s.rep.dims[v] += block.dims[v];
        }
    }
    for (int a = 0; a < static_cast<int>(ctx.arrows().size()); ++a) {
        const Arrow& ar = ctx.arrows()[a];
        RatMat m(s.rep.dims[ar.tgt], s.rep.dims[ar.src]);
        for (size_t g = 0; g < gens.size(); ++g) {
            const QuiverRep& block = projective ? ctx.projective(gens[g]) : ctx.injective(gens[g]);
            const RatMat& bm = block.maps[a];
            for (int i = 0; i < bm.rows(); ++i)
                for (int j = 0; j < bm.cols(); ++j)
                    m.at(s.offset[g][ar.tgt] + i, s.offset[g][ar.src] + j) = bm.at(i, j);
        }
        s.rep.maps.push_back(std::move(m));
    }
    return s;
}

// Coordinates (vertex, basis index) of a minimal generating set: standard
// basis vectors of M_v completing the radical to a basis.
std::vector<std::pair<int, int>> top_generators(const QuiverCtx& ctx, const QuiverRep& M) {
    const int n = ctx.vertices();
    std::vector<std::pair<int, int>> gens;
    for (int v = 0; v < n; ++v) {
        RatMat cur(M.dims[v], 0);
        for (int a = 0; a < static_cast<int>(ctx.arrows().size()); ++a)
            if (ctx.arrows()[a].tgt == v) cur = hstack(cur, M.maps[a]);
        int cur_rank = rank(cur);
        for (int e = 0; e < M.dims[v] && cur_rank < M.dims[v]; ++e) {
            RatMat col(M.dims[v], 1);
            col.at(e, 0) = 1;
            RatMat cand = hstack(cur, col);
            int cand_rank = rank(cand);
            if (cand_rank > cur_rank) {
                cur = std::move(cand);
                cur_rank = cand_rank;
                gens.emplace_back(v, e);
            }
        }
        if (cur_rank != M.dims[v]) throw InvariantViolation("top generators do not span");
    }
    return gens;
}

// Projective cover map pi: (+) P_{v_g} -> M sending each generator to its
// chosen vector and extending along paths.
std::vector<RatMat> cover_map(const QuiverCtx& ctx, const QuiverRep& M, const SumRep& P0,
                              const std::vector<std::pair<int, int>>& gens) {
    const int n = ctx.vertices();
    std::vector<RatMat> pi(n);
    for (int u = 0; u < n; ++u) {
        pi[u] = RatMat(M.dims[u], P0.rep.dims[u]);
        for (size_t g = 0; g < gens.size(); ++g) {
            const auto [v, coord] = gens[g];
            const auto& plist = ctx.paths(v, u);
            for (int p = 0; p < static_cast<int>(plist.size()); ++p) {
                RatMat mp = path_matrix(ctx, M, v, plist[p]);
                for (int i = 0; i < M.dims[u]; ++i) pi[u].at(i, P0.offset[g][u] + p) = mp.at(i, coord);
            }
        }
    }
    return pi;
}

struct SubRep {
    QuiverRep rep;
    std::vector<RatMat> basis;  // columns: inclusion into the ambient rep
};

// Kernel of a morphism F: src -> tgt as a subrepresentation of src.
SubRep morphism_kernel(const QuiverCtx& ctx, const QuiverRep& src, const std::vector<RatMat>& F) {
    const int n = ctx.vertices();
    SubRep out;
    out.basis.resize(n);
    out.rep.dims.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        out.basis[v] = nullspace(F[v]);
        out.rep.dims[v] = out.basis[v].cols();
    }
    for (int a = 0; a < static_cast<int>(ctx.arrows().size()); ++a) {
        const Arrow& ar = ctx.arrows()[a];
        auto sol = solve(out.basis[ar.tgt], src.maps[a] * out.basis[ar.src]);
        if (!sol) throw InvariantViolation("kernel is not closed under the arrow action");
        out.rep.maps.push_back(std::move(*sol));
    }
    return out;
}

int hom_h_presented(const QuiverCtx& ctx, const Presentation& pr, const QuiverRep& Y) {
    // Hom(P0,Y) -> Hom(P1,Y), phi |-> phi o f, on path coefficients.
    std::vector<int> coloff{0}, rowoff{0};
    for (int v : pr.gens0) coloff.push_back(coloff.back() + Y.dims[v]);
    for (int w : pr.gens1) rowoff.push_back(rowoff.back() + Y.dims[w]);
    if (coloff.back() == 0) return 0;
    if (rowoff.back() == 0) return coloff.back();
    RatMat F(rowoff.back(), coloff.back());
    for (size_t j = 0; j < pr.gens1.size(); ++j)
        for (size_t g = 0; g < pr.gens0.size(); ++g) {
            const int v = pr.gens0[g], w = pr.gens1[j];
            for (const auto& [pidx, c] : pr.coef[j][g]) {
                RatMat yp = path_matrix(ctx, Y, v, ctx.paths(v, w)[pidx]);
                for (int r = 0; r < Y.dims[w]; ++r)
                    for (int s = 0; s < Y.dims[v]; ++s)
                        F.at(rowoff[j] + r, coloff[g] + s) += c * yp.at(r, s);
            }
        }
    return coloff.back() - rank_bareiss(F);
}

}  // namespace

Presentation minimal_presentation(const QuiverCtx& ctx, const QuiverRep& M) {
    const int n = ctx.vertices();
    Presentation pr;
    if (M.total_dim() == 0) return pr;

    std::vector<std::pair<int, int>> gens = top_generators(ctx, M);
    for (auto& [v, c] : gens) pr.gens0.push_back(v);
    SumRep P0 = sum_standard(ctx, pr.gens0, true);
    std::vector<RatMat> pi = cover_map(ctx, M, P0, gens);
    SubRep omega = morphism_kernel(ctx, P0.rep, pi);
    if (omega.rep.total_dim() == 0) return pr;  // M projective

    std::vector<std::pair<int, int>> gens1 = top_generators(ctx, omega.rep);
    for (auto& [v, c] : gens1) pr.gens1.push_back(v);
    SumRep P1 = sum_standard(ctx, pr.gens1, true);
    if (P1.rep.dims != omega.rep.dims)
        throw InvariantViolation("first syzygy over a hereditary algebra must be projective");
    std::vector<RatMat> rho = cover_map(ctx, omega.rep, P1, gens1);

    // f = (inclusion of omega) o rho, read off as path coefficients.
    pr.coef.assign(pr.gens1.size(), std::vector<std::map<int, Rat>>(pr.gens0.size()));
    for (size_t j = 0; j < pr.gens1.size(); ++j) {
        const int w = pr.gens1[j];
        RatMat fw = omega.basis[w] * rho[w];
        const int gen_col = P1.offset[j][w] + ctx.path_index(w, w, {});
        for (size_t g = 0; g < pr.gens0.size(); ++g) {
            const int v = pr.gens0[g];
            const auto& plist = ctx.paths(v, w);
            for (int p = 0; p < static_cast<int>(plist.size()); ++p) {
                const Rat& c = fw.at(P0.offset[g][w] + p, gen_col);
                if (c != 0) pr.coef[j][g][p] = c;
            }
        }
    }
    return pr;
}

QuiverRep tau_rep(const QuiverCtx& ctx, const QuiverRep& M) {
    const int n = ctx.vertices();
    if (M.total_dim() == 0) return ctx.zero_rep();
    Presentation pr = minimal_presentation(ctx, M);
    if (pr.gens1.empty()) return ctx.zero_rep();  // M projective

    // Nakayama: nu keeps the path coefficients of f, acting on injectives by
    // stripping path suffixes.
    SumRep nuP0 = sum_standard(ctx, pr.gens0, false);
    SumRep nuP1 = sum_standard(ctx, pr.gens1, false);
    std::vector<RatMat> nuf(n);
    for (int u = 0; u < n; ++u) {
        nuf[u] = RatMat(nuP0.rep.dims[u], nuP1.rep.dims[u]);
        for (size_t j = 0; j < pr.gens1.size(); ++j) {
            const int w = pr.gens1[j];
            const auto& rlist = ctx.paths(u, w);
            for (int ri = 0; ri < static_cast<int>(rlist.size()); ++ri) {
                const Path& r = rlist[ri];
                for (size_t g = 0; g < pr.gens0.size(); ++g) {
                    const int v = pr.gens0[g];
                    const auto& plist = ctx.paths(v, w);
                    for (const auto& [p, coef] : pr.coef[j][g]) {
                        const Path& pp = plist[p];
                        if (pp.size() > r.size()) continue;
                        if (!std::equal(pp.begin(), pp.end(), r.end() - pp.size())) continue;
                        Path prefix(r.begin(), r.end() - pp.size());
                        nuf[u].at(nuP0.offset[g][u] + ctx.path_index(u, v, prefix),
                                  nuP1.offset[j][u] + ri) += coef;
                    }
                }
            }
        }
    }

    // nu f must be a morphism of representations.
    for (int a = 0; a < static_cast<int>(ctx.arrows().size()); ++a) {
        const Arrow& ar = ctx.arrows()[a];
        if (!(nuf[ar.tgt] * nuP1.rep.maps[a] + (-(nuP0.rep.maps[a] * nuf[ar.src]))).is_zero())
            throw InvariantViolation("Nakayama image is not a morphism");
    }

    return morphism_kernel(ctx, nuP1.rep, nuf).rep;
}

QuiverRep tau_inv_rep(const QuiverCtx& ctx, const QuiverRep& M) {
    const QuiverCtx& op = ctx.opposite();
    QuiverRep dual = dualize(ctx, M);
    QuiverRep t = tau_rep(op, dual);
    return dualize(op, t);
}

IndecObject IndecObject::module(QuiverRep r) {
    IndecObject x;
    x.kind = Kind::Module;
    x.dim = r.dims;
    x.rep = std::move(r);
    return x;
}

IndecObject IndecObject::shifted(int i) {
    IndecObject x;
    x.kind = Kind::ShiftedProjective;
    x.index = i;
    return x;
}

bool same_object(const IndecObject& a, const IndecObject& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == IndecObject::Kind::ShiftedProjective) return a.index == b.index;
    return a.dim == b.dim;
}

std::string object_name(const IndecObject& x) {
    std::ostringstream out;
    if (x.kind == IndecObject::Kind::ShiftedProjective) {
        out << "P" << (x.index + 1) << "[1]";
    } else {
        out << "M(";
        for (size_t i = 0; i < x.dim.size(); ++i) {
            if (i) out << ",";
            out << x.dim[i];
        }
        out << ")";
    }
    return out.str();
}

IndecObject tau_obj(const QuiverCtx& ctx, const IndecObject& x) {
    if (!x.is_module()) return IndecObject::module(ctx.injective(x.index));
    int pi = ctx.projective_index(x.dim);
    if (pi >= 0) return IndecObject::shifted(pi);
    return IndecObject::module(tau_rep(ctx, x.rep));
}

IndecObject tau_inv_obj(const QuiverCtx& ctx, const IndecObject& x) {
    if (!x.is_module()) return IndecObject::module(ctx.projective(x.index));
    int ii = ctx.injective_index(x.dim);
    if (ii >= 0) return IndecObject::shifted(ii);
    return IndecObject::module(tau_inv_rep(ctx, x.rep));
}

int hom_c(const QuiverCtx& ctx, const IndecObject& x, const IndecObject& y) {
    if (x.is_module() && y.is_module()) {
        int h = hom_h(ctx, x.rep, y.rep);
        if (ctx.injective_index(y.dim) >= 0) return h;  // F-part vanishes
        return h + ext1_h(ctx, x.rep, tau_inv_rep(ctx, y.rep));
    }
    if (x.is_module()) return ext1_h(ctx, x.rep, ctx.projective(y.index));
    if (y.is_module()) {
        if (ctx.injective_index(y.dim) >= 0) return 0;
        return tau_inv_rep(ctx, y.rep).dims[x.index];
    }
    return hom_h(ctx, ctx.projective(x.index), ctx.projective(y.index));
}

int ext1_c(const QuiverCtx& ctx, const IndecObject& x, const IndecObject& y) {
    return hom_c(ctx, x, tau_obj(ctx, y));
}

HomCache::Key HomCache::key(const IndecObject& x) {
    if (x.is_module()) return {0, x.dim};
    return {1, {x.index}};
}

const QuiverRep& HomCache::tau_inv_of(const IndecObject& y) {
    auto it = tauinv_.find(y.dim);
    if (it == tauinv_.end()) it = tauinv_.emplace(y.dim, tau_inv_rep(*ctx_, y.rep)).first;
    return it->second;
}

int HomCache::hom_c(const IndecObject& x, const IndecObject& y) {
    auto k = std::make_pair(key(x), key(y));
    auto it = homc_.find(k);
    if (it != homc_.end()) return it->second;
    int v;
    if (x.is_module() && y.is_module()) {
        int h = hom_h(*ctx_, x.rep, y.rep);
        if (ctx_->injective_index(y.dim) >= 0) {
            v = h;
        } else {
            const QuiverRep& ti = tau_inv_of(y);
            long long e = hom_h(*ctx_, x.rep, ti) - ctx_->euler(x.dim, ti.dims);
            if (e < 0) throw InvariantViolation("negative Ext dimension in hom cache");
            v = h + static_cast<int>(e);
        }
    } else if (x.is_module()) {
        v = ext1_h(*ctx_, x.rep, ctx_->projective(y.index));
    } else if (y.is_module()) {
        v = ctx_->injective_index(y.dim) >= 0 ? 0 : tau_inv_of(y).dims[x.index];
    } else {
        v = hom_h(*ctx_, ctx_->projective(x.index), ctx_->projective(y.index));
    }
    homc_.emplace(k, v);
    return v;
}

int HomCache::ext1_c(const IndecObject& x, const IndecObject& y) {
    return hom_c(x, tau_obj(*ctx_, y));
}

std::vector<Tube> build_tube_atlas(const QuiverCtx& ctx) {
    if (ctx.classification().cls != QuiverClass::AffineA)
        throw UnsupportedQuiver("tube atlas is built for affine A(p,q) only");
    const int n = ctx.vertices();
    const ExchangeMatrix& B = ctx.matrix();

    // Walk the underlying cycle once.
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (B.b(i, j) > 0) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
    std::vector<int> order{0, adj[0][0]};
    while (static_cast<int>(order.size()) < n) {
        int cur = order.back(), prev = order[order.size() - 2];
        order.push_back(adj[cur][0] == prev ? adj[cur][1] : adj[cur][0]);
    }

    std::vector<int> fwd_edges, bwd_edges;  // edge e joins order[e], order[e+1 mod n]
    for (int e = 0; e < n; ++e) {
        int u = order[e], v = order[(e + 1) % n];
        (B.b(u, v) > 0 ? fwd_edges : bwd_edges).push_back(e);
    }

    auto string_module = [&](const std::vector<int>& arc) {
        QuiverRep rep;
        rep.dims.assign(n, 0);
        for (int v : arc) rep.dims[v] = 1;
        for (size_t a = 0; a < ctx.arrows().size(); ++a)
            rep.maps.emplace_back(rep.dims[ctx.arrows()[a].tgt], rep.dims[ctx.arrows()[a].src]);
        for (size_t i = 0; i + 1 < arc.size(); ++i) {
            int u = arc[i], v = arc[i + 1];
            int a = B.b(u, v) > 0 ? ctx.arrow_index(u, v, 0) : ctx.arrow_index(v, u, 0);
            rep.maps[a] = RatMat(1, 1);
            rep.maps[a].at(0, 0) = 1;
        }
        return rep;
    };

    auto arcs_between = [&](const std::vector<int>& cuts) {
        std::vector<std::vector<int>> arcs;
        const int m = static_cast<int>(cuts.size());
        for (int c = 0; c < m; ++c) {
            std::vector<int> arc;
            int begin = (cuts[c] + 1) % n;
            int end = cuts[(c + 1) % m];  // inclusive vertex index range along the walk
            for (int e = begin;; e = (e + 1) % n) {
                arc.push_back(order[e]);
                if (e == end) break;
            }
            arcs.push_back(std::move(arc));
        }
        return arcs;
    };

    std::vector<Tube> tubes;
    for (const auto& cuts : {fwd_edges, bwd_edges}) {
        if (static_cast<int>(cuts.size()) < 2) continue;
        Tube tube;
        tube.rank = static_cast<int>(cuts.size());
        std::vector<QuiverRep> qs;
        for (const auto& arc : arcs_between(cuts)) qs.push_back(string_module(arc));

        // tau-cyclic order with a deterministic anchor.
        std::sort(qs.begin(), qs.end(), [](const QuiverRep& a, const QuiverRep& b) { return a.dims < b.dims; });
        std::vector<QuiverRep> ordered{qs[0]};
        std::vector<bool> used(qs.size(), false);
        used[0] = true;
        // U_{r-1} = tau(U_0), U_{r-2} = tau(U_{r-1}), ...
        std::vector<QuiverRep> reversed;
        QuiverRep cur = qs[0];
        for (int s = 1; s < tube.rank; ++s) {
            cur = tau_rep(ctx, cur);
            bool found = false;
            for (size_t i = 0; i < qs.size(); ++i)
                if (!used[i] && qs[i].dims == cur.dims) {
                    used[i] = true;
                    reversed.push_back(qs[i]);
                    found = true;
                    break;
                }
            if (!found) throw InvariantViolation("tau does not permute the tube quasisimples");
        }
        if (tau_rep(ctx, cur).dims != qs[0].dims)
            throw InvariantViolation("tau orbit on quasisimples does not close with the tube rank");
        for (auto it = reversed.rbegin(); it != reversed.rend(); ++it) ordered.push_back(*it);
        tube.quasisimples = std::move(ordered);
        tubes.push_back(std::move(tube));
    }
    std::sort(tubes.begin(), tubes.end(), [](const Tube& a, const Tube& b) {
        if (a.rank != b.rank) return a.rank > b.rank;
        return a.quasisimples[0].dims < b.quasisimples[0].dims;
    });
    return tubes;
}

QuiverRep nonsplit_extension(const QuiverCtx& ctx, const QuiverRep& sub, const QuiverRep& quot) {
    const int n = ctx.vertices();
    const auto& arrows = ctx.arrows();

    std::vector<int> voff(n + 1, 0), aoff(arrows.size() + 1, 0);
    for (int v = 0; v < n; ++v) voff[v + 1] = voff[v] + sub.dims[v] * quot.dims[v];
    for (size_t a = 0; a < arrows.size(); ++a)
        aoff[a + 1] = aoff[a] + sub.dims[arrows[a].tgt] * quot.dims[arrows[a].src];

    // Coboundary map on the cocycle complex of Hom(quot, sub).
    RatMat D(aoff[arrows.size()], voff[n]);
    for (size_t a = 0; a < arrows.size(); ++a) {
        const int s = arrows[a].src, t = arrows[a].tgt;
        for (int r = 0; r < sub.dims[t]; ++r)
            for (int c = 0; c < quot.dims[s]; ++c) {
                int row = aoff[a] + r * quot.dims[s] + c;
                for (int m = 0; m < sub.dims[s]; ++m)
                    D.at(row, voff[s] + m * quot.dims[s] + c) += sub.maps[a].at(r, m);
                for (int m = 0; m < quot.dims[t]; ++m)
                    D.at(row, voff[t] + r * quot.dims[t] + m) -= quot.maps[a].at(m, c);
            }
    }
    int d_rank = rank(D);
    int ext_dim = aoff[arrows.size()] - d_rank;
    if (ext_dim != ext1_h(ctx, quot, sub))
        throw InvariantViolation("cocycle Ext dimension disagrees with the Euler form");
    if (ext_dim < 1) throw InvariantViolation("no nonsplit extension exists");

    // First standard basis cocycle outside the coboundaries.
    int chosen = -1;
    for (int e = 0; e < aoff[arrows.size()] && chosen < 0; ++e) {
        RatMat col(aoff[arrows.size()], 1);
        col.at(e, 0) = 1;
        if (rank(hstack(D, col)) > d_rank) chosen = e;
    }
    if (chosen < 0) throw InvariantViolation("failed to pick a nonsplit cocycle");

    QuiverRep E;
    E.dims.resize(n);
    for (int v = 0; v < n; ++v) E.dims[v] = sub.dims[v] + quot.dims[v];
    for (size_t a = 0; a < arrows.size(); ++a) {
        const int s = arrows[a].src, t = arrows[a].tgt;
        RatMat m(E.dims[t], E.dims[s]);
        for (int i = 0; i < sub.dims[t]; ++i)
            for (int j = 0; j < sub.dims[s]; ++j) m.at(i, j) = sub.maps[a].at(i, j);
        for (int i = 0; i < quot.dims[t]; ++i)
            for (int j = 0; j < quot.dims[s]; ++j)
                m.at(sub.dims[t] + i, sub.dims[s] + j) = quot.maps[a].at(i, j);
        if (chosen >= aoff[a] && chosen < aoff[a + 1]) {
            int local = chosen - aoff[a];
            int r = local / quot.dims[s], c = local % quot.dims[s];
            m.at(r, sub.dims[s] + c) = 1;
        }
        E.maps.push_back(std::move(m));
    }
    return E;
}

std::vector<TubeObject> exceptional_tube_objects(const QuiverCtx& ctx, const std::vector<Tube>& tubes) {
    std::vector<TubeObject> out;
    for (int t = 0; t < static_cast<int>(tubes.size()); ++t) {
        const Tube& tube = tubes[t];
        std::vector<QuiverRep> layer = tube.quasisimples;
        for (int s = 0; s < tube.rank; ++s)
            out.push_back(TubeObject{TubeCoords{t, s, 1}, layer[s]});
        for (int ql = 2; ql <= tube.rank - 1; ++ql) {
            std::vector<QuiverRep> next;
            for (int s = 0; s < tube.rank; ++s) {
                const QuiverRep& quot = tube.quasisimples[(s + ql - 1) % tube.rank];
                QuiverRep e = nonsplit_extension(ctx, layer[s], quot);
                if (hom_h(ctx, e, e) != 1 || ext1_h(ctx, e, e) != 0)
                    throw InvariantViolation("tube extension is not exceptional");
                out.push_back(TubeObject{TubeCoords{t, s, ql}, e});
                next.push_back(std::move(e));
            }
            layer = std::move(next);
        }
    }
    return out;
}

std::string Coords::str() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::FinitePosition:
            out << "pos(" << step << ",P" << (base + 1) << ")";
            break;
        case Kind::Preprojective:
            out << "preproj(" << step << ",P" << (base + 1) << ")";
            break;
        case Kind::Preinjective:
            out << "preinj(" << step << ",I" << (base + 1) << ")";
            break;
        case Kind::Regular:
            out << "reg(tube" << tube.tube << ",socle" << tube.socle << ",ql" << tube.ql << ")";
            break;
        case Kind::Shifted:
            out << "P" << (base + 1) << "[1]";
            break;
    }
    return out.str();
}

Coords classify_module(const QuiverCtx& ctx, const std::vector<TubeObject>& tube_objects,
                       const QuiverRep& M) {
    Coords c;
    auto walk_to_projective = [&](QuiverRep x) -> std::pair<int, int> {
        for (int s = 0; s < kOrbitCap; ++s) {
            int pi = ctx.projective_index(x.dims);
            if (pi >= 0) return {s, pi};
            x = tau_rep(ctx, x);
            if (x.total_dim() == 0) throw InvariantViolation("tau walk hit zero before a projective");
        }
        throw UnsupportedQuiver("tau walk did not reach a projective");
    };
    auto walk_to_injective = [&](QuiverRep x) -> std::pair<int, int> {
        for (int s = 0; s < kOrbitCap; ++s) {
            int ii = ctx.injective_index(x.dims);
            if (ii >= 0) return {s, ii};
            x = tau_inv_rep(ctx, x);
            if (x.total_dim() == 0) throw InvariantViolation("tau-inverse walk hit zero before an injective");
        }
        throw UnsupportedQuiver("tau-inverse walk did not reach an injective");
    };

    if (ctx.classification().is_dynkin()) {
        auto [s, b] = walk_to_projective(M);
        c.kind = Coords::Kind::FinitePosition;
        c.step = s;
        c.base = b;
        return c;
    }
    if (ctx.has_null_root()) {
        long long d = ctx.defect(M.dims);
        if (d < 0) {
            auto [s, b] = walk_to_projective(M);
            c.kind = Coords::Kind::Preprojective;
            c.step = s;
            c.base = b;
            return c;
        }
        if (d > 0) {
            auto [s, b] = walk_to_injective(M);
            c.kind = Coords::Kind::Preinjective;
            c.step = s;
            c.base = b;
            return c;
        }
        for (const TubeObject& to : tube_objects)
            if (to.rep.dims == M.dims) {
                c.kind = Coords::Kind::Regular;
                c.tube = to.coords;
                return c;
            }
        throw UnsupportedQuiver("regular module outside the exceptional tube inventory");
    }
    // Wild rank-2: exceptional modules are transjective.
    try {
        auto [s, b] = walk_to_projective(M);
        c.kind = Coords::Kind::Preprojective;
        c.step = s;
        c.base = b;
        return c;
    } catch (const UnsupportedQuiver&) {
        auto [s, b] = walk_to_injective(M);
        c.kind = Coords::Kind::Preinjective;
        c.step = s;
        c.base = b;
        return c;
    }
}

Inventory::Inventory(const QuiverCtx& ctx, int depth) : ctx_(&ctx) {
    const int n = ctx.vertices();
    const Classification& cls = ctx.classification();
    if (cls.cls == QuiverClass::OtherTame || cls.cls == QuiverClass::Wild)
        throw UnsupportedQuiver("inventory supports Dynkin, affine A(p,q) and rank-2 quivers; got " +
                                cls.name());

    for (int i = 0; i < n; ++i) {
        objects_.push_back(IndecObject::shifted(i));
        Coords c;
        c.kind = Coords::Kind::Shifted;
        c.base = i;
        coords_.push_back(c);
    }

    if (cls.is_dynkin()) {
        for (int i = 0; i < n; ++i) {
            QuiverRep x = ctx.projective(i);
            int s = 0;
            while (true) {
                Coords c;
                c.kind = Coords::Kind::FinitePosition;
                c.step = s;
                c.base = i;
                add_module(x, c);
                if (ctx.injective_index(x.dims) >= 0) break;
                x = tau_inv_rep(ctx, x);
                ++s;
                if (s > kOrbitCap) throw InvariantViolation("Dynkin tau orbit failed to terminate");
            }
        }
    } else {
        for (int i = 0; i < n; ++i) {
            QuiverRep x = ctx.projective(i);
            for (int s = 0; s <= depth; ++s) {
                Coords c;
                c.kind = Coords::Kind::Preprojective;
                c.step = s;
                c.base = i;
                add_module(x, c);
                if (s < depth) x = tau_inv_rep(ctx, x);
            }
        }
        for (int i = 0; i < n; ++i) {
            QuiverRep x = ctx.injective(i);
            for (int s = 0; s <= depth; ++s) {
                Coords c;
                c.kind = Coords::Kind::Preinjective;
                c.step = s;
                c.base = i;
                add_module(x, c);
                if (s < depth) x = tau_rep(ctx, x);
            }
        }
        if (cls.cls == QuiverClass::AffineA) {
            tubes_ = build_tube_atlas(ctx);
            tube_objects_ = exceptional_tube_objects(ctx, tubes_);
            for (const TubeObject& to : tube_objects_) {
                Coords c;
                c.kind = Coords::Kind::Regular;
                c.tube = to.coords;
                add_module(to.rep, c);
            }
        }
    }
    homc_memo_.assign(static_cast<size_t>(size()) * size(), -1);
}

void Inventory::add_module(QuiverRep rep, Coords c) {
    if (hom_h(*ctx_, rep, rep) != 1 || ext1_h(*ctx_, rep, rep) != 0)
        throw InvariantViolation("inventory module is not exceptional at " + c.str());
    auto [it, inserted] = module_by_dim_.emplace(rep.dims, static_cast<int>(objects_.size()));
    if (!inserted)
        throw InvariantViolation("duplicate dimension vector in exceptional inventory at " + c.str());
    objects_.push_back(IndecObject::module(std::move(rep)));
    coords_.push_back(c);
}

int Inventory::module_id_by_dim(const std::vector<int>& dim) const {
    auto it = module_by_dim_.find(dim);
    return it == module_by_dim_.end() ? -1 : it->second;
}

int Inventory::tau_id(int id) const {
    IndecObject t = tau_obj(*ctx_, objects_[id]);
    if (!t.is_module()) return shifted_id(t.index);
    return module_id_by_dim(t.dim);
}

int Inventory::tau_inv_id(int id) const {
    IndecObject t = tau_inv_obj(*ctx_, objects_[id]);
    if (!t.is_module()) return shifted_id(t.index);
    return module_id_by_dim(t.dim);
}

int Inventory::hom_c(int x, int y) const {
    size_t key = static_cast<size_t>(x) * size() + y;
    if (homc_memo_[key] < 0) homc_memo_[key] = cwb::hom_c(*ctx_, objects_[x], objects_[y]);
    return homc_memo_[key];
}

std::string Inventory::dump_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (int id = 0; id < size(); ++id) {
        nlohmann::json o;
        o["id"] = id;
        o["kind"] = objects_[id].is_module() ? "module" : "shifted-projective";
        if (objects_[id].is_module())
            o["dim"] = objects_[id].dim;
        else
            o["index"] = objects_[id].index + 1;
        o["coords"] = coords_[id].str();
        arr.push_back(o);
    }
    return arr.dump(2);
}

int alpha_resolve(const Inventory& inv, const std::vector<int>& dvec) {
    bool has_negative = false;
    for (int d : dvec) has_negative |= d < 0;
    if (has_negative) {
        int idx = -1;
        for (size_t i = 0; i < dvec.size(); ++i) {
            if (dvec[i] == -1 && idx < 0) {
                idx = static_cast<int>(i);
            } else if (dvec[i] != 0) {
                throw ResolutionError("denominator vector with negative entries must be -e_i");
            }
        }
        return inv.shifted_id(idx);
    }
    int id = inv.module_id_by_dim(dvec);
    if (id < 0) {
        std::ostringstream out;
        out << "no inventory module with dimension vector (";
        for (size_t i = 0; i < dvec.size(); ++i) out << (i ? "," : "") << dvec[i];
        out << "); increase the inventory depth";
        throw ResolutionError(out.str());
    }
    return id;
}

bool is_cluster_tilting(const QuiverCtx& ctx, const std::vector<IndecObject>& T) {
    if (static_cast<int>(T.size()) != ctx.vertices()) return false;
    for (size_t i = 0; i < T.size(); ++i)
        for (size_t j = 0; j < T.size(); ++j) {
            if (i < j && same_object(T[i], T[j])) return false;
            if (ext1_c(ctx, T[i], T[j]) != 0) return false;
        }
    return true;
}

std::vector<int> t_vector(const QuiverCtx& ctx, const std::vector<IndecObject>& T,
                          const IndecObject& M) {
    if (!is_cluster_tilting(ctx, T))
        throw InputError("t-vector requires a cluster-tilting object");
    std::vector<int> t;
    t.reserve(T.size());
    for (const IndecObject& Ti : T) t.push_back(hom_c(ctx, Ti, M));
    return t;
}

}  // namespace cwb
