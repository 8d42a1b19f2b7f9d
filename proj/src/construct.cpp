#include "sts/construct.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>

namespace sts {

namespace {

struct EdgeUF {
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
        parent[b] = a;
    }
};

// Quadruple with slot parity fixed (slots 0/2 under, 1/3 over, CCW) but the
// in/out rooting not yet resolved; finalize() orients strands and rotates.
struct RawDiagram {
    std::vector<std::array<int, 4>> quads;
    int free_loops = 0;

    PlanarDiagram finalize(std::string name) const {
        // strand cycles: edges joined through 0<->2 and 1<->3 passages
        std::map<int, std::vector<std::pair<int, int>>> occ;
        for (int c = 0; c < (int)quads.size(); c++)
            for (int s = 0; s < 4; s++) occ[quads[c][s]].push_back({c, s});
        for (auto& [e, v] : occ)
            if (v.size() != 2) throw DiagramError("raw diagram: open edge " + std::to_string(e));

        // orient every strand by walking it once
        std::map<int, int> dir;  // edge -> +1 if oriented "from occurrence 0 exit"
        std::vector<std::array<int, 4>> rooted = quads;
        std::set<int> oriented;
        // in/out flags per occurrence: occ (c,s) is OUT if strand leaves c via s
        std::map<std::pair<int, int>, bool> is_out;
        for (auto& [e0, v0] : occ) {
            if (oriented.count(e0)) continue;
            // walk: treat v0[0] as the head (arrival) of e0
            int c = v0[0].first, s = v0[0].second;
            int e = e0;
            while (!oriented.count(e)) {
                oriented.insert(e);
                is_out[{c, s}] = false;  // arrival
                int s2 = s ^ 2;
                is_out[{c, s2}] = true;
                int enext = quads[c][s2];
                auto& vv = occ[enext];
                auto arr = vv[0] == std::make_pair(c, s2) ? vv[1] : vv[0];
                c = arr.first;
                s = arr.second;
                e = enext;
            }
        }
        (void)dir;
        for (int c = 0; c < (int)quads.size(); c++) {
            // rotate so that slot 0 is the incoming under-strand
            if (is_out[{c, 0}]) {
                std::array<int, 4> r;
                for (int s = 0; s < 4; s++) r[s] = rooted[c][(s + 2) % 4];
                rooted[c] = r;
            }
        }
        std::vector<Crossing> cs;
        for (auto& q : rooted) cs.push_back({q});
        return PlanarDiagram(std::move(cs), free_loops, std::move(name));
    }
};

}  // namespace

PlanarDiagram braid_closure(int strands, const std::vector<int>& word, std::string name) {
    if (strands < 1) throw DiagramError("braid needs at least one strand");
    std::vector<int> cur(strands);
    std::iota(cur.begin(), cur.end(), 1);
    int next_edge = strands + 1;
    std::vector<std::array<int, 4>> quads;
    for (int g : word) {
        int i = std::abs(g);
        if (i < 1 || i >= strands) throw DiagramError("braid generator out of range");
        int l = i - 1, r = i;
        int el = cur[l], er = cur[r];
        int nl = next_edge++, nr = next_edge++;
        if (g > 0) {
            // left strand passes over: under-in at bottom right
            quads.push_back({er, nr, nl, el});
        } else {
            quads.push_back({el, er, nr, nl});
        }
        cur[l] = nl;
        cur[r] = nr;
    }
    // plat the top back to the bottom
    EdgeUF uf;
    for (int p = 0; p < strands; p++) uf.unite(cur[p], p + 1);
    RawDiagram raw;
    std::set<int> live;
    for (auto q : quads) {
        for (int s = 0; s < 4; s++) q[s] = uf.find(q[s]);
        for (int s = 0; s < 4; s++) live.insert(q[s]);
        raw.quads.push_back(q);
    }
    std::set<int> dead;
    for (int p = 0; p < strands; p++) {
        int r = uf.find(p + 1);
        if (!live.count(r)) dead.insert(r);
    }
    raw.free_loops = (int)dead.size();
    return raw.finalize(std::move(name));
}

PlanarDiagram torus_pd(int p, int q, std::string name) {
    if (p < 1 || q < 1) throw DiagramError("torus parameters must be positive");
    std::vector<int> word;
    for (int rep = 0; rep < q; rep++)
        for (int i = 1; i < p; i++) word.push_back(i);
    if (name.empty()) name = "T(" + std::to_string(p) + "," + std::to_string(q) + ")";
    return braid_closure(p, word, std::move(name));
}

// ---------------------------------------------------------------------------
// Rational tangles and Montesinos links.
//
// A tangle keeps four open boundary edges (nw, ne, sw, se). Twists append
// crossings at the bottom (horizontal pair) or at the right (vertical pair);
// a positive twist puts the strand of positive slope on top.
// ---------------------------------------------------------------------------

namespace {

struct Tangle {
    std::vector<std::array<int, 4>> quads;  // parity convention as RawDiagram
    int nw = 0, ne = 0, sw = 0, se = 0;
};

struct TangleBuilder {
    int next_edge = 1;
    int fresh() { return next_edge++; }

    Tangle zero_tangle() {  // two horizontal strands
        Tangle t;
        t.nw = t.ne = fresh();
        t.sw = t.se = fresh();
        // boundary edges nw..se are "half open": nw/ne are the same edge here
        return t;
    }

    // one crossing between the two right endpoints (vertical twist)
    void twist_right(Tangle& t, int sign) {
        int a = fresh(), b = fresh();
        // ends: NW=old ne, SW=old se, NE=a, SE=b
        // positive: SW-NE strand over
        if (sign > 0)
            t.quads.push_back({t.ne, b, t.se, a});  // under NW<->SE: slots 0,2: {ne, b}? see note
        else
            t.quads.push_back({t.ne, a, t.se, b});
        // note: quadruple written CCW starting from the NW end; parity puts
        // slots 0/2 on the under-strand, fixed up below
        if (sign > 0) {
            // under-strand NW-SE: CCW order from NW: NW(ne), SW(se), SE(b), NE(a)
            t.quads.back() = {t.ne, t.se, b, a};
        } else {
            // under-strand SW-NE: CCW from SW: SW(se), SE(b), NE(a), NW(ne)
            t.quads.back() = {t.se, b, a, t.ne};
        }
        t.ne = a;
        t.se = b;
    }

    // one crossing between the two bottom endpoints (horizontal twist)
    void twist_bottom(Tangle& t, int sign) {
        int a = fresh(), b = fresh();
        // ends: NW=old sw, NE=old se, SW=a, SE=b
        if (sign > 0) {
            // positive slope strand = SW-NE over; under NW-SE: CCW from NW: NW(sw), SW(a), SE(b), NE(se)
            t.quads.push_back({t.sw, a, b, t.se});
        } else {
            // under SW-NE: CCW from SW: SW(a), SE(b), NE(se), NW(sw)
            t.quads.push_back({a, b, t.se, t.sw});
        }
        t.sw = a;
        t.se = b;
    }

    // Continued-fraction build. Right twists add 1 to the tangle fraction,
    // bottom twists send F to 1/(1/F + 1); applying the continued-fraction
    // digits of p/q deepest-first, alternating right/bottom and ENDING on a
    // right-twist run, produces the p/q tangle.
    Tangle rational(int p, int q) {
        bool neg = (p < 0) != (q < 0);
        long long pp = std::abs((long long)p), qq = std::abs((long long)q);
        std::vector<int> digits;  // p/q = d0 + 1/(d1 + 1/(...))
        while (qq != 0) {
            digits.push_back((int)(pp / qq));
            long long r = pp % qq;
            pp = qq;
            qq = r;
        }
        if (digits.empty()) digits = {0};
        // the build alternates and must end horizontally: force an odd count
        if (digits.size() % 2 == 0) {
            digits.back() -= 1;
            digits.push_back(1);
        }
        std::reverse(digits.begin(), digits.end());  // deepest digit first
        if (neg)
            for (auto& d : digits) d = -d;
        Tangle t = zero_tangle();
        bool horizontal = true;
        for (int d : digits) {
            for (int k = 0; k < std::abs(d); k++) {
                if (horizontal)
                    twist_right(t, d > 0 ? 1 : -1);
                else
                    twist_bottom(t, d > 0 ? 1 : -1);
            }
            horizontal = !horizontal;
        }
        return t;
    }

    // horizontal juxtaposition: a then b
    Tangle hsum(Tangle a, const Tangle& b) {
        Tangle r;
        r.quads = a.quads;
        r.quads.insert(r.quads.end(), b.quads.begin(), b.quads.end());
        EdgeUF uf;
        uf.unite(a.ne, b.nw);
        uf.unite(a.se, b.sw);
        for (auto& q : r.quads)
            for (int s = 0; s < 4; s++) q[s] = uf.find(q[s]);
        r.nw = uf.find(a.nw);
        r.sw = uf.find(a.sw);
        r.ne = uf.find(b.ne);
        r.se = uf.find(b.se);
        return r;
    }
};

PlanarDiagram close_numerator(Tangle t, int free_loops_hint, std::string name) {
    EdgeUF uf;
    uf.unite(t.nw, t.ne);
    uf.unite(t.sw, t.se);
    RawDiagram raw;
    std::set<int> live;
    for (auto q : t.quads) {
        for (int s = 0; s < 4; s++) q[s] = uf.find(q[s]);
        for (int s = 0; s < 4; s++) live.insert(q[s]);
        raw.quads.push_back(q);
    }
    int dead = 0;
    for (int e : {uf.find(t.nw), uf.find(t.sw)})
        if (!live.count(e)) dead++;
    if (uf.find(t.nw) == uf.find(t.sw) && dead) dead = 1;
    raw.free_loops = dead + free_loops_hint;
    return raw.finalize(std::move(name));
}

}  // namespace

PlanarDiagram montesinos_pd(int e, const std::vector<std::pair<int, int>>& fractions,
                            std::string name) {
    TangleBuilder tb;
    std::optional<Tangle> acc;
    for (auto& [p, q] : fractions) {
        Tangle t = tb.rational(p, q);
        acc = acc ? tb.hsum(*acc, t) : t;
    }
    if (!acc) throw DiagramError("montesinos: no tangles");
    // e extra horizontal half-twists appended at the bottom
    for (int k = 0; k < std::abs(e); k++) tb.twist_bottom(*acc, e > 0 ? 1 : -1);
    return close_numerator(*acc, 0, std::move(name));
}

PlanarDiagram rational_pd(int p, int q, std::string name) {
    TangleBuilder tb;
    Tangle t = tb.rational(p, q);
    return close_numerator(t, 0, std::move(name));
}

PlanarDiagram pretzel_pd(const std::vector<int>& twists, std::string name) {
    std::vector<std::pair<int, int>> fr;
    for (int k : twists) fr.push_back({1, k});
    return montesinos_pd(0, fr, std::move(name));
}

// ---------------------------------------------------------------------------
// DT realization (alternating codes)
// ---------------------------------------------------------------------------

std::optional<PlanarDiagram> dt_realize_alternating(const std::vector<int>& code) {
    int n = (int)code.size();
    // chords: odd position 2k+1 pairs with code[k]
    std::vector<int> mate(2 * n + 1, 0);
    for (int k = 0; k < n; k++) {
        int a = 2 * k + 1, b = code[k];
        if (b < 2 || b > 2 * n || b % 2 != 0) return std::nullopt;
        if (mate[b]) return std::nullopt;
        mate[a] = b;
        mate[b] = a;
    }
    // parity filter: every chord must interleave an even number of chords
    auto interleaves = [&](int a1, int b1, int a2, int b2) {
        if (a1 > b1) std::swap(a1, b1);
        if (a2 > b2) std::swap(a2, b2);
        bool in1 = a1 < a2 && a2 < b1, in2 = a1 < b2 && b2 < b1;
        return in1 != in2;
    };
    for (int k = 0; k < n; k++) {
        int cnt = 0;
        for (int j = 0; j < n; j++)
            if (j != k && interleaves(2 * k + 1, code[k], 2 * j + 1, code[j])) cnt++;
        if (cnt % 2) return std::nullopt;
    }
    // edges: position i -> i+1 holds edge i (edge 2n wraps to position 1)
    // crossing k: under passage at odd position (alternating convention),
    // over at even. Handedness choice h: order of the over edges in the
    // quadruple. Try all assignments, keep the first planar one.
    auto edge_before = [&](int pos) { return pos == 1 ? 2 * n : pos - 1; };
    for (int bits = 0; bits < (1 << (n > 0 ? n - 1 : 0)); bits++) {
        std::vector<Crossing> cs;
        for (int k = 0; k < n; k++) {
            int podd = 2 * k + 1, peven = code[k];
            int under_in = edge_before(podd), under_out = podd;
            int over_in = edge_before(peven), over_out = peven;
            bool h = k == 0 ? false : ((bits >> (k - 1)) & 1);
            if (!h)
                cs.push_back({{under_in, over_in, under_out, over_out}});
            else
                cs.push_back({{under_in, over_out, under_out, over_in}});
        }
        try {
            PlanarDiagram d(cs);
            auto F = d.faces();  // throws unless Euler-consistent
            (void)F;
            return d;
        } catch (const DiagramError&) {
            continue;
        }
    }
    return std::nullopt;
}

}  // namespace sts
