#include "sts/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <sstream>

namespace sts {

namespace {

struct UnionFind {
    std::map<int, int> parent;
    int find(int x) {
        if (!parent.count(x)) parent[x] = x;
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent[b] = a;  // keep the smaller id as representative
    }
};

}  // namespace

PlanarDiagram PlanarDiagram::unknot() {
    PlanarDiagram d;
    d.free_loops_ = 1;
    d.loop_dots_ = {false};
    d.name_ = "unknot";
    return d;
}

PlanarDiagram::PlanarDiagram(std::vector<Crossing> crossings, int free_loops, std::string name)
    : crossings_(std::move(crossings)), free_loops_(free_loops), name_(std::move(name)) {
    loop_dots_.assign(free_loops_, false);
    validate_and_orient();
}

PlanarDiagram PlanarDiagram::assemble(std::vector<Crossing> cs, int free_loops,
                                      std::vector<bool> loop_dots, std::set<int> edge_dots,
                                      std::optional<int> base_point, std::string name) {
    PlanarDiagram d;
    d.crossings_ = std::move(cs);
    d.free_loops_ = free_loops;
    d.loop_dots_ = std::move(loop_dots);
    d.loop_dots_.resize(free_loops, false);
    d.edge_dots_ = std::move(edge_dots);
    d.base_point_ = base_point;
    d.name_ = std::move(name);
    d.validate_and_orient();
    return d;
}

PlanarDiagram PlanarDiagram::with_name(std::string n) const {
    PlanarDiagram d = *this;
    d.name_ = std::move(n);
    return d;
}

PlanarDiagram PlanarDiagram::with_base_point(int edge) const {
    if (!occ_.count(edge)) throw DiagramError("base point on nonexistent edge");
    PlanarDiagram d = *this;
    d.base_point_ = edge;
    return d;
}

PlanarDiagram PlanarDiagram::with_edge_dot(int edge) const {
    if (!occ_.count(edge)) throw DiagramError("dot on nonexistent edge");
    PlanarDiagram d = *this;
    d.edge_dots_.insert(edge);
    return d;
}

// --- validation, orientation inference, crossing signs -----------------------

void PlanarDiagram::validate_and_orient() {
    occ_.clear();
    for (int c = 0; c < (int)crossings_.size(); c++)
        for (int s = 0; s < 4; s++) {
            int e = crossings_[c].e[s];
            if (e <= 0) throw DiagramError("edge ids must be positive");
            occ_[e].push_back({c, s});
        }
    for (auto& [e, v] : occ_)
        if (v.size() != 2)
            throw DiagramError("edge " + std::to_string(e) + " appears " +
                               std::to_string(v.size()) + " times (expected 2)");

    // Orientation: each occurrence is IN (head) or OUT (tail).
    // slot 0 is IN, slot 2 is OUT; the two occurrences of an edge disagree;
    // slots 1 and 3 of a crossing disagree (the over-strand passes through).
    // Propagate as a 2-colouring; unconstrained strands (running over
    // everything) get a deterministic default.
    auto occ_id = [&](int c, int s) { return 4 * c + s; };
    int n = (int)crossings_.size();
    std::vector<int> role(4 * n, -1);  // 0 = IN, 1 = OUT
    std::deque<int> work;
    auto assign = [&](int id, int r) {
        if (role[id] == -1) {
            role[id] = r;
            work.push_back(id);
        } else if (role[id] != r) {
            throw DiagramError("inconsistent orientation");
        }
    };
    for (int c = 0; c < n; c++) {
        assign(occ_id(c, 0), 0);
        assign(occ_id(c, 2), 1);
    }
    auto other_occ = [&](int c, int s) {
        auto& v = occ_[crossings_[c].e[s]];
        auto [c2, s2] = v[0];
        if (c2 == c && s2 == s) return v[1];
        return v[0];
    };
    auto flood = [&]() {
        while (!work.empty()) {
            int id = work.front();
            work.pop_front();
            int c = id / 4, s = id % 4;
            auto [c2, s2] = other_occ(c, s);
            assign(occ_id(c2, s2), 1 - role[id]);
            if (s == 1 || s == 3) assign(occ_id(c, s ^ 2), 1 - role[id]);
        }
    };
    flood();
    // strands with no under-passage anywhere: orient their smallest edge out
    for (auto& [e, v] : occ_) {
        int id = occ_id(v[0].first, v[0].second);
        if (role[id] == -1) {
            assign(id, 1);
            flood();
        }
    }

    over_in_.assign(n, 0);
    n_pos_ = n_neg_ = 0;
    for (int c = 0; c < n; c++) {
        int r1 = role[occ_id(c, 1)], r3 = role[occ_id(c, 3)];
        if (r1 == r3) throw DiagramError("inconsistent orientation at crossing");
        over_in_[c] = (r1 == 0) ? 1 : 3;
        (crossing_sign(c) > 0 ? n_pos_ : n_neg_)++;
    }

    // strand components
    UnionFind uf;
    for (auto& cr : crossings_) {
        uf.unite(cr.e[0], cr.e[2]);
        uf.unite(cr.e[1], cr.e[3]);
    }
    std::map<int, std::vector<int>> comps;
    for (auto& [e, v] : occ_) comps[uf.find(e)].push_back(e);
    edge_comp_.clear();
    comp_min_edge_.clear();
    for (auto& [rep, es] : comps) {  // reps ascend; rep is the min edge
        for (int e : es) edge_comp_[e] = (int)comp_min_edge_.size();
        comp_min_edge_.push_back(rep);
    }

    if (base_point_ && !occ_.count(*base_point_)) base_point_.reset();
    for (auto it = edge_dots_.begin(); it != edge_dots_.end();)
        it = occ_.count(*it) ? std::next(it) : edge_dots_.erase(it);
    if ((int)loop_dots_.size() != free_loops_) loop_dots_.assign(free_loops_, false);
}

int PlanarDiagram::component_of_edge(int edge) const {
    auto it = edge_comp_.find(edge);
    if (it == edge_comp_.end()) throw DiagramError("no such edge");
    return it->second;
}

std::vector<int> PlanarDiagram::edges() const {
    std::vector<int> es;
    for (auto& [e, v] : occ_) es.push_back(e);
    return es;
}

bool PlanarDiagram::component_dotted(int comp) const {
    int ns = strand_component_count();
    if (comp < ns) {
        for (int e : edge_dots_)
            if (edge_comp_.at(e) == comp) return true;
        return false;
    }
    return loop_dots_[comp - ns];
}

bool PlanarDiagram::connected() const {
    if (crossings_.empty()) return free_loops_ == 1;
    if (free_loops_ > 0) return false;
    UnionFind uf;
    for (int c = 0; c < (int)crossings_.size(); c++)
        for (int s = 0; s < 4; s++) uf.unite(-1 - c, crossings_[c].e[s] * 8);
    int rep = uf.find(-1);
    for (int c = 1; c < (int)crossings_.size(); c++)
        if (uf.find(-1 - c) != rep) return false;
    return true;
}

// --- faces --------------------------------------------------------------------

PlanarDiagram::Faces PlanarDiagram::faces() const {
    if (free_loops_ > 0 && !crossings_.empty())
        throw DiagramError("faces: diagram has detached loops");
    Faces F;
    int n = (int)crossings_.size();
    if (n == 0) {
        F.faces.resize(free_loops_ > 0 ? 2 : 1);
        return F;
    }
    auto other_occ = [&](int c, int s) {
        auto& v = occ_.at(crossings_[c].e[s]);
        auto [c2, s2] = v[0];
        if (c2 == c && s2 == s) return v[1];
        return v[0];
    };
    F.quad_face.assign(n, {-1, -1, -1, -1});
    std::vector<bool> seen(4 * n, false);
    for (int c0 = 0; c0 < n; c0++)
        for (int s0 = 0; s0 < 4; s0++) {
            if (seen[4 * c0 + s0]) continue;
            int fid = (int)F.faces.size();
            F.faces.emplace_back();
            int c = c0, s = s0;
            do {
                seen[4 * c + s] = true;
                // the half-edge (c, s) walks the quadrant between slots s+1 and s
                F.quad_face[c][(s + 1) % 4] = fid;
                F.faces.back().push_back({c, (s + 1) % 4});
                auto [c2, s2] = other_occ(c, s);
                c = c2;
                s = (s2 + 1) % 4;
            } while (!(c == c0 && s == s0));
        }
    if (connected() && F.count() != n + 2)
        throw DiagramError("face count violates Euler formula: input is not a planar diagram");
    return F;
}

PlanarDiagram::Checkerboard PlanarDiagram::checkerboard(bool swap_colors) const {
    if (!connected()) throw DiagramError("checkerboard colouring requires a connected diagram");
    Checkerboard cb;
    cb.faces = faces();
    int nf = cb.faces.count();
    cb.color.assign(nf, -1);
    int n = (int)crossings_.size();
    if (n == 0) {  // crossing-free unknot: one white and one black region
        cb.color = {0, 1};
        cb.white = swap_colors ? 1 : 0;
        for (int f = 0; f < nf; f++)
            if (cb.color[f] == cb.white) cb.white_faces.push_back(f);
        return cb;
    }
    // around a crossing the four quadrants alternate colours
    std::deque<int> work;
    cb.color[cb.faces.quad_face[0][0]] = 0;
    work.push_back(0);
    std::vector<bool> done(n, false);
    while (true) {
        // propagate through crossings whose quadrants touch a coloured face
        bool progress = false;
        for (int c = 0; c < n; c++) {
            if (done[c]) continue;
            auto& q = cb.faces.quad_face[c];
            int known = -1;
            for (int s = 0; s < 4; s++)
                if (cb.color[q[s]] != -1) known = s;
            if (known < 0) continue;
            for (int s = 0; s < 4; s++) {
                int want = (s % 2 == known % 2) ? cb.color[q[known]] : 1 - cb.color[q[known]];
                if (cb.color[q[s]] == -1)
                    cb.color[q[s]] = want;
                else if (cb.color[q[s]] != want)
                    throw DiagramError("face graph is not bipartite: corrupted input");
            }
            done[c] = true;
            progress = true;
        }
        if (!progress) break;
    }
    for (int f = 0; f < nf; f++)
        if (cb.color[f] == -1) throw DiagramError("checkerboard colouring failed");

    cb.white = swap_colors ? 1 : 0;
    for (int f = 0; f < nf; f++)
        if (cb.color[f] == cb.white) cb.white_faces.push_back(f);
    cb.eta.assign(n, 0);
    cb.white_pair.assign(n, {0, 0});
    cb.type2.assign(n, false);
    for (int c = 0; c < n; c++) {
        auto& q = cb.faces.quad_face[c];
        bool white13 = cb.color[q[1]] == cb.white;
        // incidence sign relative to the white surface; the sign convention is
        // pinned by sigma(T(2,3)) = -2 together with colouring independence
        cb.eta[c] = white13 ? -1 : 1;
        cb.white_pair[c] = white13 ? std::array<int, 2>{q[1], q[3]} : std::array<int, 2>{q[0], q[2]};
        cb.type2[c] = crossing_sign(c) == cb.eta[c];
    }
    return cb;
}

// --- mirror -------------------------------------------------------------------

PlanarDiagram PlanarDiagram::mirrored() const {
    std::vector<Crossing> cs;
    cs.reserve(crossings_.size());
    for (auto& cr : crossings_) cs.push_back({{cr.e[0], cr.e[3], cr.e[2], cr.e[1]}});
    PlanarDiagram d(std::move(cs), free_loops_, name_.empty() ? "" : "m(" + name_ + ")");
    d.loop_dots_ = loop_dots_;
    d.edge_dots_ = edge_dots_;
    d.base_point_ = base_point_;
    d.validate_and_orient();
    return d;
}

// --- surgery core: remove crossings, splice edges -----------------------------

namespace {

struct Surgery {
    const PlanarDiagram& src;
    std::set<int> removed;                   // crossing indices
    std::vector<std::pair<int, int>> joins;  // edge pairs spliced together

    PlanarDiagram run(std::string name) const {
        UnionFind uf;
        for (auto& [a, b] : joins) uf.unite(a, b);
        std::vector<Crossing> cs;
        std::set<int> live_edges;
        for (int c = 0; c < (int)src.crossings().size(); c++) {
            if (removed.count(c)) continue;
            Crossing cr = src.crossings()[c];
            for (int s = 0; s < 4; s++) cr.e[s] = uf.find(cr.e[s]);
            for (int s = 0; s < 4; s++) live_edges.insert(cr.e[s]);
            cs.push_back(cr);
        }
        // spliced classes with no surviving occurrence close into free loops
        std::set<int> dead;
        for (auto& [a, b] : joins) {
            int r = uf.find(a);
            (void)b;
            if (!live_edges.count(r)) dead.insert(r);
        }
        std::set<int> edge_dots;
        for (int e : src.dotted_edges()) {
            int r = uf.find(e);
            if (live_edges.count(r)) edge_dots.insert(r);
        }
        std::vector<bool> loop_dots = src.loop_dots();
        for (int cls : dead) {
            bool dotted = false;
            for (int e : src.dotted_edges())
                if (uf.find(e) == cls) dotted = true;
            loop_dots.push_back(dotted);
        }
        std::optional<int> base;
        if (src.base_point()) {
            int r = uf.find(*src.base_point());
            if (live_edges.count(r)) base = r;
        }
        return PlanarDiagram::assemble(std::move(cs), src.free_loop_count() + (int)dead.size(),
                                       std::move(loop_dots), std::move(edge_dots), base,
                                       std::move(name));
    }
};

}  // namespace

PlanarDiagram PlanarDiagram::resolved(const CrossingSite& site) const {
    if (site.index < 0 || site.index >= crossing_count())
        throw DiagramError("resolve: crossing index out of range");
    if (site.resolution_label != 0 && site.resolution_label != 1)
        throw DiagramError("resolve: label must be 0 or 1");
    const auto& q = crossings_[site.index].e;
    Surgery s{*this, {site.index}, {}};
    if (site.resolution_label == 0) {
        // A-smoothing: arcs a~b and c~d
        s.joins = {{q[0], q[1]}, {q[2], q[3]}};
    } else {
        s.joins = {{q[1], q[2]}, {q[3], q[0]}};
    }
    return s.run(name_);
}

PlanarDiagram PlanarDiagram::simplified() const {
    PlanarDiagram d = *this;
    bool moved = true;
    while (moved) {
        moved = false;
        int n = d.crossing_count();
        // R1: a kink has the same edge in two cyclically adjacent slots
        for (int c = 0; c < n && !moved; c++) {
            const auto& q = d.crossings_[c].e;
            for (int s = 0; s < 4 && !moved; s++) {
                if (q[s] != q[(s + 1) % 4]) continue;
                int e = q[s], g = q[(s + 2) % 4], h = q[(s + 3) % 4];
                Surgery su{d, {c}, {{g, e}, {e, h}}};
                d = su.run(d.name());
                moved = true;
            }
        }
        if (moved) continue;
        // R2: a bigon face whose strand is over at both crossings (or under at both)
        for (int c1 = 0; c1 < n && !moved; c1++) {
            const auto& q1 = d.crossings_[c1].e;
            for (int s1 = 0; s1 < 4 && !moved; s1++) {
                int e = q1[s1], f = q1[(s1 + 1) % 4];
                if (e == f) continue;
                // locate the other occurrences
                auto oe = d.occ_.at(e), of = d.occ_.at(f);
                auto other = [&](std::vector<std::pair<int, int>>& v, int c, int s) {
                    return v[0] == std::make_pair(c, s) ? v[1] : v[0];
                };
                auto [ce, se] = other(oe, c1, s1);
                auto [cf, sf] = other(of, c1, (s1 + 1) % 4);
                if (ce != cf || ce == c1) continue;
                int c2 = ce;
                // at c2 they must be cyclically adjacent with f before e
                if ((sf + 1) % 4 != se) continue;
                // same strand over (or under) at both crossings
                bool e_under_c1 = (s1 % 2 == 0), e_under_c2 = (se % 2 == 0);
                if (e_under_c1 != e_under_c2) continue;
                // bigon confirmed: quadrant (c1, s1) and (c2, sf) bound the same
                // two-corner face by construction of the occurrence pattern
                auto partner = [](int s) { return s ^ 2; };
                const auto& q2 = d.crossings_[c2].e;
                int ea1 = q1[partner(s1)], ea2 = q2[partner(se)];
                int fb1 = q1[partner((s1 + 1) % 4)], fb2 = q2[partner(sf)];
                Surgery su{d, {c1, c2}, {{ea1, e}, {e, ea2}, {fb1, f}, {f, fb2}}};
                d = su.run(d.name());
                moved = true;
            }
        }
    }
    return d;
}

PlanarDiagram PlanarDiagram::connected_sum(const PlanarDiagram& a, const PlanarDiagram& b) {
    if (a.component_count() != 1 || b.component_count() != 1)
        throw DiagramError("connected sum requires knots (one component each)");
    if (a.crossing_count() == 0) return b;
    if (b.crossing_count() == 0) return a;
    int e1 = a.base_point() ? *a.base_point() : *a.edges().begin();
    int e2 = b.base_point() ? *b.base_point() : *b.edges().begin();
    int off = 0;
    for (int e : a.edges()) off = std::max(off, e);
    // b's edges shifted by off
    std::vector<Crossing> cs = a.crossings();
    for (auto& cr : b.crossings()) {
        Crossing c2 = cr;
        for (int s = 0; s < 4; s++) c2.e[s] += off;
        cs.push_back(c2);
    }
    e2 += off;
    // splice: head occurrence of e1 takes label e2, head occurrence of e2 takes e1
    auto head_occ = [](const PlanarDiagram& d, int e) {
        for (auto& [c, s] : d.occ_.at(e)) {
            // IN occurrences: slot 0, or the over-in slot
            if (s == 0 || s == d.over_in_[c]) return std::make_pair(c, s);
        }
        throw DiagramError("connected sum: edge without head");
    };
    auto [hc1, hs1] = head_occ(a, e1);
    auto [hc2, hs2] = head_occ(b, e2 - off);
    cs[hc1].e[hs1] = e2;
    cs[(int)a.crossings().size() + hc2].e[hs2] = e1;

    PlanarDiagram out(std::move(cs), 0,
                      a.name().empty() || b.name().empty() ? "" : a.name() + "#" + b.name());
    for (int e : a.dotted_edges()) out.edge_dots_.insert(e);
    for (int e : b.dotted_edges()) out.edge_dots_.insert(e + off);
    out.base_point_ = e1;
    out.validate_and_orient();
    return out;
}

// --- predicates ----------------------------------------------------------------

bool PlanarDiagram::alternating() const {
    for (auto& [e, v] : occ_) {
        bool u0 = v[0].second % 2 == 0, u1 = v[1].second % 2 == 0;
        if (u0 == u1) return false;
    }
    return true;
}

bool PlanarDiagram::unlink(int k) const {
    PlanarDiagram s = simplified();
    return s.crossing_count() == 0 && s.free_loop_count() == k;
}

bool PlanarDiagram::dotted_unlink(int k) const {
    PlanarDiagram s = simplified();
    if (s.crossing_count() != 0 || s.free_loop_count() != k) return false;
    for (int i = 0; i < k; i++)
        if (!s.loop_dots_[i]) return false;
    return true;
}

// --- canonical code --------------------------------------------------------------

namespace {

// Canonical code of a connected (crossing-wise) sub-diagram given by a set of
// crossing indices. Minimizes a strand-following relabelling over all choices
// of starting edge occurrence (2E starts); component reversal is covered
// because both occurrences of every edge are tried as the strand's "arrival".
std::string canonical_code_piece(const PlanarDiagram& d, const std::vector<int>& piece) {
    const auto& crs = d.crossings();
    // occurrence lookup local to the piece
    std::map<int, std::vector<std::pair<int, int>>> occ;
    for (int c : piece)
        for (int s = 0; s < 4; s++) occ[crs[c].e[s]].push_back({c, s});

    std::string best;
    for (auto& [e0, v0] : occ) {
        (void)e0;
        for (int dir = 0; dir < 2; dir++) {
            std::map<int, int> label;
            std::set<int> arrived_in;  // edges whose traversal-head is an IN occurrence
            int next_label = 1;
            std::vector<std::pair<int, int>> seeds{dir == 0 ? v0[0] : v0[1]};
            while (!seeds.empty()) {
                auto [hc, hs] = seeds.front();
                seeds.erase(seeds.begin());
                int c = hc, s = hs;
                while (true) {
                    int e = crs[c].e[s];
                    if (label.count(e)) break;
                    label[e] = next_label++;
                    if (s == 0 || s == d.over_in_slot(c)) arrived_in.insert(e);
                    int s2 = s ^ 2;  // leave the crossing
                    int enext = crs[c].e[s2];
                    auto& occs = occ.at(enext);
                    auto arr = occs[0] == std::make_pair(c, s2) ? occs[1] : occs[0];
                    c = arr.first;
                    s = arr.second;
                }
                if ((int)label.size() == (int)occ.size()) break;
                // seed the next strand: among unlabelled-edge occurrences at
                // crossings that already have a labelled edge, order by the
                // crossing's smallest label, then by slot
                std::tuple<int, int, int, int> bk{INT32_MAX, 0, 0, 0};
                bool found = false;
                for (int c3 : piece) {
                    int cmin = INT32_MAX;
                    for (int s3 = 0; s3 < 4; s3++) {
                        auto it = label.find(crs[c3].e[s3]);
                        if (it != label.end()) cmin = std::min(cmin, it->second);
                    }
                    if (cmin == INT32_MAX) continue;
                    for (int s3 = 0; s3 < 4; s3++) {
                        if (label.count(crs[c3].e[s3])) continue;
                        std::tuple<int, int, int, int> k{cmin, s3, c3, s3};
                        if (!found || k < bk) {
                            bk = k;
                            found = true;
                        }
                    }
                }
                if (!found) break;  // should not happen for a connected piece
                seeds.push_back({std::get<2>(bk), std::get<3>(bk)});
            }
            if ((int)label.size() != (int)occ.size()) continue;
            std::vector<std::array<int, 4>> quads;
            for (int c : piece) {
                auto& q = crs[c].e;
                // rotating by two restores "slot 0 = incoming under" when the
                // traversal reversed this under-strand
                int rot = arrived_in.count(q[0]) ? 0 : 2;
                std::array<int, 4> out;
                for (int s = 0; s < 4; s++) out[s] = label.at(q[(s + rot) % 4]);
                quads.push_back(out);
            }
            std::sort(quads.begin(), quads.end());
            std::ostringstream os;
            for (auto& q : quads) os << q[0] << "," << q[1] << "," << q[2] << "," << q[3] << ";";
            std::string s = os.str();
            if (best.empty() || s < best) best = s;
        }
    }
    return best;
}

}  // namespace

std::string PlanarDiagram::canonical_code() const {
    // split crossings into connected pieces
    int n = (int)crossings_.size();
    UnionFind uf;
    for (int c = 0; c < n; c++) {
        uf.unite(-(c + 1), crossings_[c].e[0]);
        for (int s = 1; s < 4; s++) uf.unite(crossings_[c].e[0], crossings_[c].e[s]);
    }
    std::map<int, std::vector<int>> pieces;
    for (int c = 0; c < n; c++) pieces[uf.find(-(c + 1))].push_back(c);
    std::vector<std::string> codes;
    for (auto& [rep, piece] : pieces) codes.push_back(canonical_code_piece(*this, piece));
    std::sort(codes.begin(), codes.end());
    std::ostringstream os;
    for (auto& c : codes) os << c << "|";
    os << "U" << free_loops_;
    int ld = 0;
    for (bool b : loop_dots_)
        if (b) ld++;
    os << "d" << ld;
    // dotted strand components matter for unlink recognition inside trees
    std::vector<int> dotted;
    for (int c = 0; c < component_count(); c++)
        if (component_dotted(c)) dotted.push_back(c);
    os << "D" << dotted.size();
    return os.str();
}

// --- parsing / serialization ------------------------------------------------------

PlanarDiagram PlanarDiagram::parse(const std::string& text) {
    size_t i = 0;
    auto skip = [&]() {
        while (i < text.size() && (isspace((unsigned char)text[i]) || text[i] == ',')) i++;
    };
    skip();
    if (text.compare(i, 3, "PD[") != 0) throw DiagramError("PD code must start with 'PD['");
    i += 3;
    std::vector<Crossing> cs;
    while (true) {
        skip();
        if (i >= text.size()) throw DiagramError("unterminated PD code");
        if (text[i] == ']') {
            i++;
            break;
        }
        if (text[i] != 'X') throw DiagramError("expected 'X' in PD code");
        i++;
        if (i >= text.size() || (text[i] != '(' && text[i] != '[')) throw DiagramError("expected '(' after X");
        char close = text[i] == '(' ? ')' : ']';
        i++;
        Crossing cr;
        for (int s = 0; s < 4; s++) {
            skip();
            size_t j = i;
            while (j < text.size() && isdigit((unsigned char)text[j])) j++;
            if (j == i) throw DiagramError("expected edge number");
            cr.e[s] = std::stoi(text.substr(i, j - i));
            i = j;
        }
        skip();
        if (i >= text.size() || text[i] != close) throw DiagramError("expected closing bracket");
        i++;
        cs.push_back(cr);
    }
    return PlanarDiagram(std::move(cs));
}

PlanarDiagram PlanarDiagram::from_json(const nlohmann::json& j) {
    std::vector<Crossing> cs;
    if (j.contains("pd")) {
        for (auto& q : j.at("pd")) {
            if (q.size() != 4) throw DiagramError("pd quadruples must have four entries");
            cs.push_back({{q[0].get<int>(), q[1].get<int>(), q[2].get<int>(), q[3].get<int>()}});
        }
    }
    int loops = j.value("free_loops", 0);
    PlanarDiagram d(std::move(cs), loops, j.value("name", std::string()));
    if (j.contains("mirror") && j["mirror"].get<bool>()) d = d.mirrored().with_name(j.value("name", std::string()));
    if (j.contains("base_point")) d = d.with_base_point(j["base_point"].get<int>());
    if (j.contains("dots")) {
        for (auto& c : j["dots"]) {
            int comp = c.get<int>();
            int ns = d.strand_component_count();
            if (comp < ns) {
                // dot the smallest edge of that component
                d = d.with_edge_dot(d.comp_min_edge_[comp]);
            } else if (comp < d.component_count()) {
                d.loop_dots_[comp - ns] = true;
            } else {
                throw DiagramError("dot component index out of range");
            }
        }
    }
    if (j.contains("loop_dots")) {
        auto ld = j["loop_dots"];
        for (int k = 0; k < (int)ld.size() && k < d.free_loops_; k++) d.loop_dots_[k] = ld[k].get<bool>();
    }
    return d;
}

nlohmann::json PlanarDiagram::to_json() const {
    nlohmann::json j;
    if (!name_.empty()) j["name"] = name_;
    j["pd"] = nlohmann::json::array();
    for (auto& cr : crossings_) j["pd"].push_back({cr.e[0], cr.e[1], cr.e[2], cr.e[3]});
    if (free_loops_) j["free_loops"] = free_loops_;
    if (base_point_) j["base_point"] = *base_point_;
    std::vector<int> dots;
    for (int c = 0; c < component_count(); c++)
        if (component_dotted(c)) dots.push_back(c);
    if (!dots.empty()) j["dots"] = dots;
    return j;
}

std::string PlanarDiagram::pd_string() const {
    std::ostringstream os;
    os << "PD[";
    for (size_t c = 0; c < crossings_.size(); c++) {
        if (c) os << ", ";
        os << "X(" << crossings_[c].e[0] << "," << crossings_[c].e[1] << "," << crossings_[c].e[2]
           << "," << crossings_[c].e[3] << ")";
    }
    os << "]";
    return os.str();
}

}  // namespace sts
