#include "oracle.hpp"

#include <cassert>
#include <cstdint>

namespace oracle {

Q Consts::c(int i, int j, int k) const {
    auto it = br.find({i, j});
    if (it == br.end()) return Q(0);
    auto jt = it->second.find(k);
    return jt == it->second.end() ? Q(0) : jt->second;
}

void Consts::set(int i, int j, int k, const Q& v) {
    if (v == 0) return;
    br[{i, j}][k] += v;
    if (br[{i, j}][k] == 0) br[{i, j}].erase(k);
}

Mat rref(Mat m) {
    if (m.empty()) return m;
    const long rows = (long)m.size(), cols = (long)m[0].size();
    long r = 0;
    for (long col = 0; col < cols && r < rows; ++col) {
        long piv = -1;
        for (long i = r; i < rows; ++i)
            if (m[i][col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(m[r], m[piv]);
        Q inv = m[r][col];
        for (long j = 0; j < cols; ++j) m[r][j] /= inv;
        for (long i = 0; i < rows; ++i) {
            if (i == r || m[i][col] == 0) continue;
            Q f = m[i][col];
            for (long j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return m;
}

long rank(Mat m) {
    m = rref(std::move(m));
    long rk = 0;
    for (auto& row : m) {
        bool nz = false;
        for (auto& x : row)
            if (x != 0) { nz = true; break; }
        if (nz) ++rk;
    }
    return rk;
}

Mat nullspace_rows(const Mat& m) {
    if (m.empty()) return {};
    const long cols = (long)m[0].size();
    Mat r = rref(m);
    std::vector<long> pivot_of_col(cols, -1);
    long rk = 0;
    for (long i = 0; i < (long)r.size(); ++i) {
        long lead = -1;
        for (long j = 0; j < cols; ++j)
            if (r[i][j] != 0) { lead = j; break; }
        if (lead < 0) break;
        pivot_of_col[lead] = i;
        ++rk;
    }
    Mat basis;
    for (long f = 0; f < cols; ++f) {
        if (pivot_of_col[f] >= 0) continue;
        std::vector<Q> v(cols, Q(0));
        v[f] = 1;
        for (long j = 0; j < cols; ++j)
            if (pivot_of_col[j] >= 0) v[j] = -r[pivot_of_col[j]][f];
        basis.push_back(std::move(v));
    }
    (void)rk;
    return basis;
}

namespace {

long ipow(long b, int e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// lexicographic rank of an arbitrary tuple over [0,d)
long tuple_rank(const std::vector<int>& t, int d) {
    long r = 0;
    for (int x : t) r = r * d + x;
    return r;
}

// lexicographic rank of a strictly increasing tuple over [0,d)
long inc_rank(const std::vector<int>& t, int d) {
    long r = 0;
    int prev = -1;
    int n = (int)t.size();
    for (int i = 0; i < n; ++i) {
        for (int x = prev + 1; x < t[i]; ++x) r += binom(d - 1 - x, n - 1 - i);
        prev = t[i];
    }
    return r;
}

bool next_tuple(std::vector<int>& t, int d) {
    for (int i = (int)t.size() - 1; i >= 0; --i) {
        if (++t[i] < d) return true;
        t[i] = 0;
    }
    return false;
}

bool next_inc(std::vector<int>& t, int d) {
    int n = (int)t.size();
    for (int i = n - 1; i >= 0; --i) {
        if (++t[i] <= d - (n - i)) {
            for (int j = i + 1; j < n; ++j) t[j] = t[j - 1] + 1;
            return true;
        }
    }
    return false;
}

long sym_index(int a, int b, int d) { // a <= b
    return (long)a * d - (long)a * (a - 1) / 2 + (b - a);
}

} // namespace

Mat loday_d(const Consts& g, int n) {
    const int d = g.dim;
    const long rows = ipow(d, n + 1), cols = ipow(d, n);
    Mat m(rows, std::vector<Q>(cols, Q(0)));
    if (n == 0) return m; // trivial coefficients: only the substitution terms survive
    std::vector<int> t(n + 1, 0);
    do {
        long row = tuple_rank(t, d);
        for (int p = 0; p <= n; ++p) {
            for (int q = p + 1; q <= n; ++q) {
                int sgn = (q % 2 == 0) ? 1 : -1; // (-1)^{j+1} with 1-based j = q+1
                auto it = g.br.find({t[p], t[q]});
                if (it == g.br.end()) continue;
                for (auto& [k, coeff] : it->second) {
                    std::vector<int> u;
                    u.reserve(n);
                    for (int i = 0; i <= n; ++i) {
                        if (i == q) continue;
                        u.push_back(i == p ? k : t[i]);
                    }
                    m[row][tuple_rank(u, d)] += sgn * coeff;
                }
            }
        }
    } while (next_tuple(t, d));
    return m;
}

Mat ce_d(const Consts& g, int n) {
    const int d = g.dim;
    const long rows = binom(d, n + 1), cols = binom(d, n);
    Mat m(rows, std::vector<Q>(cols, Q(0)));
    if (n == 0 || rows == 0) return m;
    std::vector<int> t(n + 1);
    for (int i = 0; i <= n; ++i) t[i] = i;
    if (d < n + 1) return m;
    do {
        long row = inc_rank(t, d);
        for (int p = 0; p <= n; ++p) {
            for (int q = p + 1; q <= n; ++q) {
                int sgn = ((p + q) % 2 == 0) ? 1 : -1; // (-1)^{i+j}, 1-based i+j = p+q+2
                auto it = g.br.find({t[p], t[q]});
                if (it == g.br.end()) continue;
                std::vector<int> rest;
                rest.reserve(n - 1);
                for (int i = 0; i <= n; ++i)
                    if (i != p && i != q) rest.push_back(t[i]);
                for (auto& [k, coeff] : it->second) {
                    bool dup = false;
                    int pos = 0;
                    for (int w : rest) {
                        if (w == k) { dup = true; break; }
                        if (w < k) ++pos;
                    }
                    if (dup) continue;
                    std::vector<int> u = rest;
                    u.insert(u.begin() + pos, k);
                    int s2 = (pos % 2 == 0) ? 1 : -1; // move the bracket into sorted position
                    m[row][inc_rank(u, d)] += sgn * s2 * coeff;
                }
            }
        }
    } while (next_inc(t, d));
    return m;
}

Mat invariance_system(const Consts& g) {
    const int d = g.dim;
    const long cols = (long)d * (d + 1) / 2;
    Mat m;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int c0 = 0; c0 < d; ++c0) {
                std::vector<Q> row(cols, Q(0));
                bool nz = false;
                for (int k = 0; k < d; ++k) {
                    Q v = g.c(a, b, k);
                    if (v != 0) {
                        row[sym_index(std::min(k, c0), std::max(k, c0), d)] += v;
                        nz = true;
                    }
                    Q w = g.c(b, c0, k);
                    if (w != 0) {
                        row[sym_index(std::min(a, k), std::max(a, k), d)] -= w;
                        nz = true;
                    }
                }
                if (nz) m.push_back(std::move(row));
            }
    if (m.empty()) m.push_back(std::vector<Q>(cols, Q(0)));
    return m;
}

Mat dual_derivation_system(const Consts& g) {
    const int d = g.dim;
    const long cols = (long)d * d;
    Mat m;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            for (int mu = 0; mu < d; ++mu) {
                std::vector<Q> row(cols, Q(0));
                bool nz = false;
                for (int k = 0; k < d; ++k) {
                    Q v = g.c(a, b, k);
                    if (v != 0) { row[(long)mu * d + k] += v; nz = true; }
                    Q w = g.c(mu, a, k);
                    if (w != 0) { row[(long)k * d + b] -= w; nz = true; }
                    Q u = g.c(mu, b, k);
                    if (u != 0) { row[(long)k * d + a] += u; nz = true; }
                }
                if (nz) m.push_back(std::move(row));
            }
    if (m.empty()) m.push_back(std::vector<Q>(cols, Q(0)));
    return m;
}

Mat dual_inner_generators(const Consts& g) {
    const int d = g.dim;
    Mat m((long)d * d, std::vector<Q>(d, Q(0)));
    for (int mu = 0; mu < d; ++mu)
        for (int a = 0; a < d; ++a)
            for (int nu = 0; nu < d; ++nu)
                m[(long)mu * d + a][nu] = g.c(mu, a, nu);
    return m;
}

long dim_hl(const Consts& g, int n) {
    long cn = ipow(g.dim, n);
    long z = cn - rank(loday_d(g, n));
    long b = (n == 0) ? 0 : rank(loday_d(g, n - 1));
    return z - b;
}

long dim_h(const Consts& g, int n) {
    long cn = binom(g.dim, n);
    long z = cn - rank(ce_d(g, n));
    long b = (n == 0) ? 0 : rank(ce_d(g, n - 1));
    return z - b;
}

long dim_b(const Consts& g) {
    return (long)g.dim * (g.dim + 1) / 2 - rank(invariance_system(g));
}

long dim_der_dual(const Consts& g) {
    return (long)g.dim * g.dim - rank(dual_derivation_system(g));
}

long dim_inn_dual(const Consts& g) { return rank(dual_inner_generators(g)); }

long dim_sder_dual(const Consts& g) {
    const int d = g.dim;
    Mat m = dual_derivation_system(g);
    for (int a = 0; a < d; ++a)
        for (int b = a; b < d; ++b) {
            std::vector<Q> row((long)d * d, Q(0));
            row[(long)b * d + a] += 1; // D(x_a)(x_b)
            row[(long)a * d + b] += 1; // D(x_b)(x_a)
            m.push_back(std::move(row));
        }
    return (long)d * d - rank(m);
}

long dim_ker_cartan_koszul(const Consts& g) {
    const int d = g.dim;
    Mat forms = nullspace_rows(invariance_system(g));
    if (forms.empty()) return 0;
    const long ntrip = binom(d, 3);
    // image of ce delta^2 plus the h(phi) vectors, as rows over increasing triples
    Mat d2 = ce_d(g, 2);
    Mat base;
    if (!d2.empty() && !d2[0].empty()) {
        const long c2 = (long)d2[0].size();
        for (long j = 0; j < c2; ++j) {
            std::vector<Q> col(ntrip, Q(0));
            for (long i = 0; i < (long)d2.size(); ++i) col[i] = d2[i][j];
            base.push_back(std::move(col));
        }
    }
    long rk_b = base.empty() ? 0 : rank(base);
    Mat stacked = base;
    for (auto& phi : forms) {
        std::vector<Q> h(ntrip, Q(0));
        std::vector<int> t{0, 1, 2};
        if (d >= 3) do {
                Q v(0);
                for (int k = 0; k < d; ++k) {
                    Q cc = g.c(t[0], t[1], k);
                    if (cc != 0) {
                        int a = std::min(k, t[2]), b = std::max(k, t[2]);
                        v += cc * phi[sym_index(a, b, d)];
                    }
                }
                h[inc_rank(t, d)] = v;
            } while (next_inc(t, d));
        stacked.push_back(std::move(h));
    }
    long rk_s = stacked.empty() ? 0 : rank(stacked);
    return (long)forms.size() - (rk_s - rk_b);
}

} // namespace oracle
