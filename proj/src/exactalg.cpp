#include "sts/snf.hpp"

namespace sts {

Int det_bareiss(std::vector<std::vector<Int>> m) {
    int n = (int)m.size();
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; k++) {
        if (m[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; i++)
                if (m[i][k] != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; i++)
            for (int j = k + 1; j < n; j++)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

// Exact signature by symmetric pivoting. A nonzero diagonal pivot contributes
// its sign and is eliminated by the Schur complement (one-sided update is
// enough by symmetry). If every live diagonal entry is zero but some pairing
// m[a][b] is not, the basis change e_a += e_b makes m[a][a] = 2*m[a][b] != 0.
int symmetric_signature(const std::vector<std::vector<Rat>>& m0) {
    auto m = m0;
    int n = (int)m.size();
    std::vector<bool> dead(n, false);
    int sig = 0;
    while (true) {
        int p = -1;
        for (int i = 0; i < n; i++)
            if (!dead[i] && m[i][i] != 0) {
                p = i;
                break;
            }
        if (p >= 0) {
            Rat d = m[p][p];
            sig += d > 0 ? 1 : -1;
            dead[p] = true;
            std::vector<Rat> f(n, 0);
            for (int i = 0; i < n; i++)
                if (!dead[i]) f[i] = m[i][p] / d;
            for (int i = 0; i < n; i++) {
                if (dead[i] || f[i] == 0) continue;
                for (int j = 0; j < n; j++)
                    if (!dead[j]) m[i][j] -= f[i] * m[p][j];
            }
            for (int i = 0; i < n; i++) m[i][p] = m[p][i] = 0;
            continue;
        }
        int a = -1, b = -1;
        for (int i = 0; i < n && a < 0; i++) {
            if (dead[i]) continue;
            for (int j = i + 1; j < n; j++)
                if (!dead[j] && m[i][j] != 0) {
                    a = i;
                    b = j;
                    break;
                }
        }
        if (a < 0) break;  // zero form on the remainder
        for (int j = 0; j < n; j++)
            if (!dead[j]) m[a][j] += m[b][j];
        for (int i = 0; i < n; i++)
            if (!dead[i]) m[i][a] += m[i][b];
    }
    return sig;
}

}  // namespace sts
