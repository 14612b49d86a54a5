#include "fvslab/family.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "fvslab/canonical.hpp"
#include "fvslab/errors.hpp"
#include "fvslab/patterns.hpp"
#include "fvslab/structure.hpp"

namespace fvslab {

namespace {

// Where a member edge came from, for replaying the bound constructions.
enum class Tag : int {
    Inherited,   // survives from the parent (payload = parent edge index)
    SubHalfA,    // subdivision halves of the parent edge
    SubHalfB,
    E1Half,      // halves of e1 / e2 after a circ step; the twice-subdivided
    E2Half,      // e1 == e2 path pieces also carry E1Half
    CenterA,     // c - a
    CenterW1,    // c - w1
    CenterW2,    // c - w2
};

struct TaggedEdge {
    Edge e;
    Tag tag;
    std::size_t payload;  // parent edge index for Inherited
};

struct StoredMember {
    Graph graph;
    // Derivation: base loop when parent_index < 0.
    int parent_i = 0, parent_j = 0;
    long parent_index = -1;
    ReplayStep step{};                 // applied to the parent graph
    Vertex w1 = -1, w2 = -1, c = -1;   // fresh vertices (w1 only for Subdivide)
    std::vector<TaggedEdge> tags;      // parallel to graph.edges()
};

struct Cell {
    std::vector<StoredMember> members;
    std::map<std::string, long> canon_index;
};

class FamilyCache {
  public:
    static FamilyCache& instance() {
        static FamilyCache cache;
        return cache;
    }

    const Cell& cell(int i, int j) {
        std::lock_guard<std::mutex> lock(mu_);
        return cell_locked(i, j);
    }

    // Locked variants so multi-cell operations stay consistent.
    template <typename F>
    auto with_lock(F&& f) {
        std::lock_guard<std::mutex> lock(mu_);
        return f(*this);
    }

    const Cell& cell_locked(int i, int j) {
        auto key = std::make_pair(i, j);
        auto it = cells_.find(key);
        if (it != cells_.end()) return it->second;
        Cell built = build(i, j);
        return cells_.emplace(key, std::move(built)).first->second;
    }

  private:
    std::map<std::pair<int, int>, Cell> cells_;
    std::mutex mu_;

    void add_candidate(Cell& cell, StoredMember member) {
        std::string form = canonical_form(member.graph);
        if (cell.canon_index.count(form)) return;
        cell.canon_index.emplace(std::move(form), static_cast<long>(cell.members.size()));
        cell.members.push_back(std::move(member));
    }

    static std::vector<TaggedEdge> sort_tags(std::vector<TaggedEdge> tagged, const Graph& child) {
        std::sort(tagged.begin(), tagged.end(), [](const TaggedEdge& a, const TaggedEdge& b) {
            if (a.e != b.e) return a.e < b.e;
            if (a.tag != b.tag) return a.tag < b.tag;
            return a.payload < b.payload;
        });
        for (std::size_t k = 0; k < tagged.size(); ++k) {
            if (tagged[k].e != child.edge_at(k))
                throw IntegrityError("family: tag bookkeeping out of sync with edge multiset");
        }
        return tagged;
    }

    Cell build(int i, int j) {
        Cell cell;
        if (i < 1 || j < 0 || j > i) return cell;
        if (i == 1 && j == 0) {
            StoredMember base;
            base.graph = Graph({0}, {Edge(0, 0)});
            base.tags = {{Edge(0, 0), Tag::Inherited, 0}};
            cell.members.push_back(std::move(base));
            cell.canon_index.emplace(canonical_form(cell.members[0].graph), 0);
            return cell;
        }

        const Cell& by_subdivision = cell_locked(i - 1, j);
        for (long idx = 0; idx < static_cast<long>(by_subdivision.members.size()); ++idx) {
            const Graph& parent = by_subdivision.members[static_cast<std::size_t>(idx)].graph;
            for (std::size_t pe = 0; pe < parent.edges().size(); ++pe) {
                Vertex w = parent.fresh_vertex();
                Graph child = parent.subdivide_edge_at(pe);
                StoredMember m;
                m.graph = child;
                m.parent_i = i - 1;
                m.parent_j = j;
                m.parent_index = idx;
                m.step = {ReplayStep::Kind::Subdivide, pe, 0, -1};
                m.w1 = w;
                std::vector<TaggedEdge> tagged;
                Edge f = parent.edge_at(pe);
                for (std::size_t k = 0; k < parent.edges().size(); ++k)
                    if (k != pe) tagged.push_back({parent.edge_at(k), Tag::Inherited, k});
                tagged.push_back({Edge(f.u, w), Tag::SubHalfA, 0});
                tagged.push_back({Edge(w, f.v), Tag::SubHalfB, 0});
                m.tags = sort_tags(std::move(tagged), child);
                add_candidate(cell, std::move(m));
            }
        }

        const Cell& by_circ = cell_locked(i, j - 1);
        for (long idx = 0; idx < static_cast<long>(by_circ.members.size()); ++idx) {
            const Graph& parent = by_circ.members[static_cast<std::size_t>(idx)].graph;
            std::vector<Vertex> attach;
            for (Vertex a : parent.vertices())
                if (parent.degree(a) == 2) attach.push_back(a);
            for (std::size_t e1 = 0; e1 < parent.edges().size(); ++e1) {
                for (std::size_t e2 = e1; e2 < parent.edges().size(); ++e2) {
                    for (Vertex a : attach) {
                        Vertex w1 = parent.fresh_vertex(), w2 = w1 + 1, c = w1 + 2;
                        Graph child = parent.circ(e1, e2, a);
                        StoredMember m;
                        m.graph = child;
                        m.parent_i = i;
                        m.parent_j = j - 1;
                        m.parent_index = idx;
                        m.step = {ReplayStep::Kind::Circ, e1, e2, a};
                        m.w1 = w1;
                        m.w2 = w2;
                        m.c = c;
                        std::vector<TaggedEdge> tagged;
                        for (std::size_t k = 0; k < parent.edges().size(); ++k)
                            if (k != e1 && k != e2)
                                tagged.push_back({parent.edge_at(k), Tag::Inherited, k});
                        if (e1 == e2) {
                            Edge f = parent.edge_at(e1);
                            tagged.push_back({Edge(f.u, w1), Tag::E1Half, 0});
                            tagged.push_back({Edge(w1, w2), Tag::E1Half, 0});
                            tagged.push_back({Edge(w2, f.v), Tag::E1Half, 0});
                        } else {
                            Edge f1 = parent.edge_at(e1), f2 = parent.edge_at(e2);
                            tagged.push_back({Edge(f1.u, w1), Tag::E1Half, 0});
                            tagged.push_back({Edge(w1, f1.v), Tag::E1Half, 0});
                            tagged.push_back({Edge(f2.u, w2), Tag::E2Half, 0});
                            tagged.push_back({Edge(w2, f2.v), Tag::E2Half, 0});
                        }
                        tagged.push_back({Edge(c, a), Tag::CenterA, 0});
                        tagged.push_back({Edge(c, w1), Tag::CenterW1, 0});
                        tagged.push_back({Edge(c, w2), Tag::CenterW2, 0});
                        m.tags = sort_tags(std::move(tagged), child);
                        add_candidate(cell, std::move(m));
                    }
                }
            }
        }
        return cell;
    }
};

void check_generation_args(int i, int j, int cap) {
    if (i < 1 || j < 0 || j > i)
        throw DomainError("family: need i >= 1 and 0 <= j <= i");
    if (i + 3 * j > cap)
        throw ResourceError("family: member order i + 3j = " + std::to_string(i + 3 * j) +
                            " exceeds the cap " + std::to_string(cap));
}

// (i, j) implied by the vertex/edge counts, if consistent.
std::optional<FamilySignature> signature_from_counts(const Graph& g) {
    int n = g.vertex_count(), m = g.edge_count();
    if ((m - n) % 2 != 0 || m < n) return std::nullopt;
    int j = (m - n) / 2;
    int i = n - 3 * j;
    if (i < 1 || j < 0 || j > i) return std::nullopt;
    return FamilySignature{i, j};
}

bool quick_member_rejects(const Graph& g, FamilySignature sig) {
    if (!g.is_connected()) return true;
    int deg2 = 0;
    for (Vertex v : g.vertices()) {
        int d = g.degree(v);
        if (d < 2 || d > 3) return true;
        if (d == 2) ++deg2;
    }
    if (deg2 != sig.i - sig.j) return true;
    if (!g.is_simple() && !(sig.i <= 2 && sig.j == 0)) return true;
    return false;
}

// Location of a member inside the cache, plus the mapping member -> g.
struct MemberRef {
    int i, j;
    long index;
    std::map<Vertex, Vertex> to_g;  // member vertex -> g vertex
};

std::optional<MemberRef> locate_member(const Graph& g, int cap) {
    auto sig = signature_from_counts(g);
    if (!sig) return std::nullopt;
    if (quick_member_rejects(g, *sig)) return std::nullopt;
    if (sig->order() > cap)
        throw ResourceError("family_membership: order " + std::to_string(sig->order()) +
                            " exceeds the cap " + std::to_string(cap));

    return FamilyCache::instance().with_lock([&](FamilyCache& cache) -> std::optional<MemberRef> {
        const Cell& cell = cache.cell_locked(sig->i, sig->j);
        std::string form = canonical_form(g);
        auto it = cell.canon_index.find(form);
        if (it == cell.canon_index.end()) return std::nullopt;
        const StoredMember& m = cell.members[static_cast<std::size_t>(it->second)];
        auto phi = isomorphism(m.graph, g);
        if (!phi) throw IntegrityError("family: canonical match without isomorphism");
        return MemberRef{sig->i, sig->j, it->second, std::move(*phi)};
    });
}

}  // namespace

Graph replay_derivation(const std::vector<ReplayStep>& steps) {
    Graph g({0}, {Edge(0, 0)});
    for (const ReplayStep& s : steps) {
        if (s.kind == ReplayStep::Kind::Subdivide)
            g = g.subdivide_edge_at(s.e1);
        else
            g = g.circ(s.e1, s.e2, s.a);
    }
    return g;
}

std::vector<FamilyMember> generate_family(int i, int j, int cap) {
    check_generation_args(i, j, cap);
    return FamilyCache::instance().with_lock([&](FamilyCache& cache) {
        std::vector<FamilyMember> out;
        const Cell& cell = cache.cell_locked(i, j);
        for (const StoredMember& m : cell.members) {
            FamilyMember fm;
            fm.graph = m.graph;
            fm.signature = {i, j};
            // Collect the replay chain back to the base loop.
            std::vector<ReplayStep> steps;
            const StoredMember* cur = &m;
            int ci = i, cj = j;
            while (cur->parent_index >= 0) {
                steps.push_back(cur->step);
                int pi = cur->parent_i, pj = cur->parent_j;
                const Cell& pcell = cache.cell_locked(pi, pj);
                cur = &pcell.members[static_cast<std::size_t>(cur->parent_index)];
                ci = pi;
                cj = pj;
            }
            if (ci != 1 || cj != 0)
                throw IntegrityError("family: derivation chain does not reach the base loop");
            std::reverse(steps.begin(), steps.end());
            fm.derivation = std::move(steps);
            out.push_back(std::move(fm));
        }
        return out;
    });
}

std::optional<FamilySignature> family_membership(const Graph& g, int cap) {
    if (g.empty()) return std::nullopt;
    auto sig = signature_from_counts(g);
    if (!sig) return std::nullopt;
    if (quick_member_rejects(g, *sig)) return std::nullopt;
    if (sig->j == 0) {
        // A connected graph with all degrees two is a cycle; no cap needed.
        return sig;
    }
    if (auto ref = locate_member(g, cap)) return FamilySignature{ref->i, ref->j};
    return std::nullopt;
}

Sevenths epsilon_of(const Graph& g, int cap) {
    if (g.empty()) throw DomainError("epsilon_of: empty graph");
    if (!(g.vertex_count() <= 2 || is_two_connected(g)))
        throw DomainError("epsilon_of: need a 2-connected graph or a multigraph on <= 2 vertices");
    auto sig = signature_from_counts(g);
    if (!sig) return Sevenths(0);
    if (sig->i >= 5) return Sevenths(0);  // member or not, epsilon vanishes
    auto member = family_membership(g, cap);
    return member ? member->epsilon() : Sevenths(0);
}

Sevenths r_of(const Graph& g, int cap) {
    if (g.empty() || !g.is_connected()) throw DomainError("r_of: graph must be connected");
    if (!g.is_simple()) {
        // The only multigraph members are the loop graph and the doubled edge.
        auto sig = signature_from_counts(g);
        if (sig && sig->j == 0 && sig->i <= 2 && family_membership(g, cap)) return sig->epsilon();
        throw DomainError("r_of: defined only for simple graphs and family members");
    }
    // For simple members the block sum equals epsilon(g): they are 2-connected.
    Sevenths total(0);
    auto decomposition = block_decomposition(g);
    for (const auto& blk : decomposition.blocks) total = total + epsilon_of(g.induced(blk), cap);
    return total;
}

const std::vector<Graph>& forbidden_family() {
    static const std::vector<Graph> family = [] {
        std::vector<Graph> out;
        for (auto [i, j] : {std::pair{4, 2}, std::pair{4, 3}}) {
            for (const FamilyMember& m : generate_family(i, j))
                if (girth_at_least(m.graph, 5)) out.push_back(m.graph);
        }
        for (auto [i, j] : {std::pair{3, 2}, std::pair{3, 3}}) {
            for (const FamilyMember& m : generate_family(i, j)) {
                for (std::size_t e = 0; e < m.graph.edges().size(); ++e) {
                    if (girth_at_least(m.graph.minus_edge_at(e), 5)) {
                        out.push_back(m.graph);
                        break;
                    }
                }
            }
        }
        return out;
    }();
    return family;
}

bool forbidden_free(const Graph& g) {
    for (const Graph& h : forbidden_family()) {
        if (h.vertex_count() > g.vertex_count()) continue;
        if (contains_induced_subdivision(g, h)) return false;
    }
    return true;
}

namespace {

// Lemma-style recursive constructions over the stored derivation.

std::vector<Vertex> fvs_plain(FamilyCache& cache, int i, int j, long index);

std::vector<Vertex> fvs_minus(FamilyCache& cache, int i, int j, long index, std::size_t edge_idx) {
    const Cell& cell = cache.cell_locked(i, j);
    const StoredMember& m = cell.members[static_cast<std::size_t>(index)];
    if (m.parent_index < 0) return {};  // loop graph minus its loop is a point

    const TaggedEdge& t = m.tags[edge_idx];
    const bool subdivide = m.step.kind == ReplayStep::Kind::Subdivide;
    auto recurse = [&](std::size_t parent_edge) {
        return fvs_minus(cache, m.parent_i, m.parent_j, m.parent_index, parent_edge);
    };

    if (subdivide) {
        std::size_t pe = t.tag == Tag::Inherited ? t.payload : m.step.e1;
        return recurse(pe);  // subdividing preserves the deleted-edge bound
    }

    // Circ step: adding the centre kills every cycle through the gadget;
    // when a centre edge is deleted, killing w1/w2 severs e1/e2 instead.
    std::vector<Vertex> s;
    switch (t.tag) {
        case Tag::Inherited:
            s = recurse(t.payload);
            s.push_back(m.c);
            break;
        case Tag::E1Half:
            s = recurse(m.step.e1);
            s.push_back(m.c);
            break;
        case Tag::E2Half:
            s = recurse(m.step.e2);
            s.push_back(m.c);
            break;
        case Tag::CenterA:
        case Tag::CenterW2:
            s = recurse(m.step.e1);
            s.push_back(m.w1);
            break;
        case Tag::CenterW1:
            s = recurse(m.step.e2);
            s.push_back(m.w2);
            break;
        default:
            throw IntegrityError("family_fvs: unexpected edge tag");
    }
    std::sort(s.begin(), s.end());
    return s;
}

std::vector<Vertex> fvs_plain(FamilyCache& cache, int i, int j, long index) {
    const Cell& cell = cache.cell_locked(i, j);
    const StoredMember& m = cell.members[static_cast<std::size_t>(index)];
    if (m.parent_index < 0) return {0};  // the loop vertex
    std::vector<Vertex> s = fvs_plain(cache, m.parent_i, m.parent_j, m.parent_index);
    if (m.step.kind == ReplayStep::Kind::Circ) s.push_back(m.c);
    std::sort(s.begin(), s.end());
    return s;
}

MemberRef require_member(const Graph& g, int cap, const char* who) {
    auto ref = locate_member(g, cap);
    if (!ref) throw DomainError(std::string(who) + ": graph is not a generated family member");
    return *ref;
}

// Cycles are the j = 0 members; their constructions need no cache.
std::optional<FamilySignature> as_cycle(const Graph& g) {
    auto sig = signature_from_counts(g);
    if (!sig || sig->j != 0 || g.empty() || !g.is_connected()) return std::nullopt;
    for (Vertex v : g.vertices())
        if (g.degree(v) != 2) return std::nullopt;
    return sig;
}

std::vector<Vertex> transport(const std::vector<Vertex>& s, const std::map<Vertex, Vertex>& phi) {
    std::vector<Vertex> out;
    out.reserve(s.size());
    for (Vertex v : s) out.push_back(phi.at(v));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<Vertex> family_fvs(const Graph& g, int cap) {
    if (as_cycle(g)) return {g.vertices().front()};
    MemberRef ref = require_member(g, cap, "family_fvs");
    auto s = FamilyCache::instance().with_lock(
        [&](FamilyCache& cache) { return fvs_plain(cache, ref.i, ref.j, ref.index); });
    return transport(s, ref.to_g);
}

std::vector<Vertex> family_fvs_minus_edge(const Graph& g, Edge deleted, int cap) {
    if (!g.has_edge(deleted.u, deleted.v))
        throw DomainError("family_fvs_minus_edge: edge not in graph");
    if (as_cycle(g)) return {};
    MemberRef ref = require_member(g, cap, "family_fvs_minus_edge");
    // Pull the deleted edge back through the isomorphism.
    std::map<Vertex, Vertex> inverse;
    for (auto [mv, gv] : ref.to_g) inverse[gv] = mv;
    auto s = FamilyCache::instance().with_lock([&](FamilyCache& cache) {
        const Cell& cell = cache.cell_locked(ref.i, ref.j);
        const Graph& member = cell.members[static_cast<std::size_t>(ref.index)].graph;
        std::size_t edge_idx = member.edge_index(inverse.at(deleted.u), inverse.at(deleted.v));
        return fvs_minus(cache, ref.i, ref.j, ref.index, edge_idx);
    });
    return transport(s, ref.to_g);
}

std::vector<Vertex> family_fvs_through(const Graph& g, Vertex v, int cap) {
    if (!g.has_vertex(v)) throw DomainError("family_fvs_through: vertex not in graph");
    if (as_cycle(g)) return {v};
    MemberRef ref = require_member(g, cap, "family_fvs_through");
    std::map<Vertex, Vertex> inverse;
    for (auto [mv, gv] : ref.to_g) inverse[gv] = mv;
    Vertex mv = inverse.at(v);
    auto s = FamilyCache::instance().with_lock([&](FamilyCache& cache) {
        const Cell& cell = cache.cell_locked(ref.i, ref.j);
        const Graph& member = cell.members[static_cast<std::size_t>(ref.index)].graph;
        std::size_t incident = member.edges().size();
        for (std::size_t k = 0; k < member.edges().size(); ++k) {
            if (member.edge_at(k).touches(mv)) {
                incident = k;
                break;
            }
        }
        if (incident == member.edges().size())
            throw IntegrityError("family_fvs_through: isolated vertex in a member");
        auto inner = fvs_minus(cache, ref.i, ref.j, ref.index, incident);
        inner.push_back(mv);
        std::sort(inner.begin(), inner.end());
        inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
        return inner;
    });
    return transport(s, ref.to_g);
}

}  // namespace fvslab
