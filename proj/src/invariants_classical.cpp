#include "sts/invariants.hpp"
#include "sts/construct.hpp"
#include "sts/snf.hpp"

#include <map>
#include <numeric>

namespace sts {

GoeritzForm goeritz(const PlanarDiagram& d, bool swap_colors) {
    if (!d.connected()) throw DiagramError("Goeritz form requires a connected diagram");
    auto cb = d.checkerboard(swap_colors);
    // index white faces, drop the first
    std::map<int, int> windex;
    for (int i = 0; i < (int)cb.white_faces.size(); i++) windex[cb.white_faces[i]] = i - 1;
    int m = (int)cb.white_faces.size() - 1;
    GoeritzForm g;
    g.matrix.assign(std::max(m, 0), std::vector<Int>(std::max(m, 0), 0));
    std::vector<Int> diag_full(cb.white_faces.size(), 0);

    int n = d.crossing_count();
    std::vector<std::vector<Int>> full(cb.white_faces.size(),
                                       std::vector<Int>(cb.white_faces.size(), 0));
    for (int c = 0; c < n; c++) {
        int f1 = windex.at(cb.white_pair[c][0]) + 1;
        int f2 = windex.at(cb.white_pair[c][1]) + 1;
        if (f1 != f2) {
            full[f1][f2] -= cb.eta[c];
            full[f2][f1] -= cb.eta[c];
        }
        if (cb.type2[c]) g.correction += cb.eta[c];
    }
    for (size_t i = 0; i < full.size(); i++) {
        Int s = 0;
        for (size_t j = 0; j < full.size(); j++)
            if (j != i) s += full[i][j];
        full[i][i] = -s;
    }
    for (int i = 0; i < m; i++)
        for (int j = 0; j < m; j++) g.matrix[i][j] = full[i + 1][j + 1];
    return g;
}

int signature_gl(const PlanarDiagram& d) {
    GoeritzForm g = goeritz(d);
    std::vector<std::vector<Rat>> q(g.matrix.size(), std::vector<Rat>(g.matrix.size()));
    for (size_t i = 0; i < g.matrix.size(); i++)
        for (size_t j = 0; j < g.matrix.size(); j++) q[i][j] = Rat(g.matrix[i][j]);
    return symmetric_signature(q) - g.correction;
}

Int determinant(const PlanarDiagram& d) {
    if (d.crossing_count() == 0 && d.free_loop_count() == 0) return 0;
    if (!d.connected()) return 0;
    GoeritzForm g = goeritz(d);
    Int det = det_bareiss(g.matrix);
    return det < 0 ? -det : det;
}

int torus_slice_torus_value(const TorusKnotParams& t) {
    if (t.p < 2 || t.q < 2 || std::gcd(t.p, t.q) != 1)
        throw DiagramError("torus parameters must be coprime and >= 2");
    return (t.p - 1) * (t.q - 1) / 2;
}

int torus_signature(const TorusKnotParams& t) {
    if (t.p < 2 || t.q < 2 || std::gcd(t.p, t.q) != 1)
        throw DiagramError("torus parameters must be coprime and >= 2");
    int p = t.p, q = t.q;
    if (p > q) std::swap(p, q);
    // sigma(T(p, q)) = sigma(T(p, q - 2p)) - step, with the positive-braid
    // diagram computation on the base range q < 2p
    long long sigma = 0;
    int step = p % 2 == 1 ? p * p - 1 : p * p;
    while (q >= 2 * p) {
        sigma -= step;
        q -= 2 * p;
        if (q == 1 || p == 1) return (int)sigma;
        if (q < p) {
            std::swap(p, q);
            step = p % 2 == 1 ? p * p - 1 : p * p;
        }
    }
    if (p == 1 || q == 1) return (int)sigma;
    return (int)sigma + signature_gl(torus_pd(p, q));
}

}  // namespace sts
