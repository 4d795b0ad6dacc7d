#include "leibcoh/cochain.hpp"

#include <algorithm>
#include <atomic>

#include "leibcoh/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace leibcoh {
namespace {

long ipow(long b, long e) {
    long r = 1;
    for (long i = 0; i < e; ++i) {
        if (b != 0 && r > (1L << 60) / (b > 0 ? b : 1))
            throw GuardError("cochain space too large");
        r *= b;
    }
    return r;
}

long binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (long i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
}

// lexicographic successor of a strictly increasing tuple
void next_increasing(std::vector<long>& t, long dim) {
    const long n = static_cast<long>(t.size());
    for (long p = n - 1; p >= 0; --p) {
        if (++t[p] <= dim - (n - p)) {
            for (long j = p + 1; j < n; ++j) t[j] = t[j - 1] + 1;
            return;
        }
    }
}

long inversions(const std::vector<long>& t) {
    long c = 0;
    for (size_t i = 0; i < t.size(); ++i)
        for (size_t j = i + 1; j < t.size(); ++j)
            if (t[i] > t[j]) ++c;
    return c;
}

bool degree_in_box(const Degree& d, long radius) {
    for (long c : d)
        if (c > radius || c < -radius) return false;
    return true;
}

bool shallow_admissible(const AlgebraPresentation& g, const std::vector<long>& t) {
    for (size_t p = 0; p < t.size(); ++p)
        for (size_t q = p + 1; q < t.size(); ++q)
            if (!g.in_window(t[p], t[q])) return false;
    return true;
}

} // namespace

long CochainSpace::rank_tuple(const std::vector<long>& t) const {
    const long d = algebra->dim();
    if (theory == Theory::leibniz) {
        long r = 0;
        for (long v : t) r = r * d + v;
        return r;
    }
    // lex rank of a strictly increasing tuple
    const long n = degree;
    long r = 0, lo = 0;
    for (long p = 0; p < n; ++p) {
        for (long v = lo; v < t[p]; ++v) r += binom(d - 1 - v, n - 1 - p);
        lo = t[p] + 1;
    }
    return r;
}

std::vector<long> CochainSpace::unrank_tuple(long rank) const {
    const long d = algebra->dim();
    const long n = degree;
    std::vector<long> t(n);
    if (theory == Theory::leibniz) {
        for (long p = n - 1; p >= 0; --p) {
            t[p] = rank % d;
            rank /= d;
        }
        return t;
    }
    long lo = 0;
    for (long p = 0; p < n; ++p) {
        long v = lo;
        for (;; ++v) {
            long c = binom(d - 1 - v, n - 1 - p);
            if (rank < c) break;
            rank -= c;
        }
        t[p] = v;
        lo = v + 1;
    }
    return t;
}

CochainSpace cochain_space(Theory theory, const AlgebraPresentation& g,
                           const Representation& m, long degree) {
    if (degree < 0) throw InputError("negative cochain degree");
    CochainSpace s;
    s.theory = theory;
    s.degree = degree;
    s.algebra = &g;
    s.coefficients = &m;
    s.tuple_count = theory == Theory::leibniz ? ipow(g.dim(), degree)
                                              : binom(g.dim(), degree);
    s.dimension = s.tuple_count * m.dim;
    return s;
}

Coboundary leibniz_coboundary(const AlgebraPresentation& g, const Representation& m,
                              long degree, const Context& ctx) {
    const long n = degree;
    Coboundary cb;
    cb.domain = cochain_space(Theory::leibniz, g, m, n);
    cb.codomain = cochain_space(Theory::leibniz, g, m, n + 1);
    cb.mat = SparseMatrix(cb.codomain.dimension, cb.domain.dimension);
    cb.tuple_admissible.assign(cb.codomain.tuple_count, 0);

    const long T = cb.codomain.tuple_count;
    const long Tn = cb.domain.tuple_count;
    const long mdim = m.dim;

    std::atomic<bool> cancelled{false};
    const bool par = ctx.parallel && T >= 64;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) if (par)
#else
    (void)par;
#endif
    for (long rt = 0; rt < T; ++rt) {
        if (ctx.cancel && ctx.cancel->cancelled()) {
            cancelled.store(true);
            continue;
        }
        std::vector<long> t = cb.codomain.unrank_tuple(rt);
        if (!shallow_admissible(g, t)) continue;
        cb.tuple_admissible[rt] = 1;

        std::vector<SparseVector> rows(mdim, SparseVector(cb.domain.dimension));
        std::vector<long> sub(n);

        // [x_1, f(x_2..x_{n+1})]
        std::copy(t.begin() + 1, t.end(), sub.begin());
        long sr = cb.domain.rank_tuple(sub);
        for (long mu = 0; mu < mdim; ++mu)
            for (const auto& e : m.left[t[0]].row(mu))
                rows[mu].add(e.col * Tn + sr, e.val);

        // (-1)^i [f(..x_i-hat..), x_i], i = p+1 in 1-based numbering
        for (long p = 1; p <= n; ++p) {
            long w = 0;
            for (long v = 0; v <= n; ++v)
                if (v != p) sub[w++] = t[v];
            sr = cb.domain.rank_tuple(sub);
            const long sign = (p % 2 == 0) ? -1 : 1; // (-1)^{p+1}
            for (long mu = 0; mu < mdim; ++mu)
                for (const auto& e : m.right[t[p]].row(mu))
                    rows[mu].add(e.col * Tn + sr, sign * e.val);
        }

        // (-1)^{j+1} f(.., [x_i,x_j], .., x_j-hat, ..), j = q+1 in 1-based
        for (long p = 0; p <= n; ++p) {
            for (long q = p + 1; q <= n; ++q) {
                const long sign = (q % 2 == 0) ? 1 : -1; // (-1)^q
                for (const auto& e : g.bracket(t[p], t[q]).entries()) {
                    long w = 0;
                    for (long v = 0; v <= n; ++v) {
                        if (v == q) continue;
                        sub[w++] = (v == p) ? e.col : t[v];
                    }
                    sr = cb.domain.rank_tuple(sub);
                    for (long mu = 0; mu < mdim; ++mu)
                        rows[mu].add(mu * Tn + sr, sign * e.val);
                }
            }
        }
        for (long mu = 0; mu < mdim; ++mu)
            cb.mat.set_row(mu * T + rt, rows[mu].entries());
    }
    if (cancelled.load()) throw CancelledError();
    ctx.poll();

    for (auto f : cb.tuple_admissible) cb.admissible_tuples += f;
    return cb;
}

Coboundary ce_coboundary(const AlgebraPresentation& g, const Representation& m,
                         long degree, const Context& ctx) {
    if (g.kind() != AlgebraKind::lie)
        throw UnsupportedError("chevalley-eilenberg coboundary needs a lie presentation");
    const long n = degree;
    Coboundary cb;
    cb.domain = cochain_space(Theory::chevalley_eilenberg, g, m, n);
    cb.codomain = cochain_space(Theory::chevalley_eilenberg, g, m, n + 1);
    cb.mat = SparseMatrix(cb.codomain.dimension, cb.domain.dimension);
    cb.tuple_admissible.assign(cb.codomain.tuple_count, 0);

    const long T = cb.codomain.tuple_count;
    const long Tn = cb.domain.tuple_count;
    const long mdim = m.dim;

    std::atomic<bool> cancelled{false};
    const bool par = ctx.parallel && T >= 64;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) if (par)
#else
    (void)par;
#endif
    for (long rt = 0; rt < T; ++rt) {
        if (ctx.cancel && ctx.cancel->cancelled()) {
            cancelled.store(true);
            continue;
        }
        std::vector<long> t = cb.codomain.unrank_tuple(rt);
        if (!shallow_admissible(g, t)) continue;
        cb.tuple_admissible[rt] = 1;

        std::vector<SparseVector> rows(mdim, SparseVector(cb.domain.dimension));
        std::vector<long> sub(n);

        // (-1)^{i+1} x_i . f(..x_i-hat..), i = p+1 in 1-based numbering
        for (long p = 0; p <= n; ++p) {
            long w = 0;
            for (long v = 0; v <= n; ++v)
                if (v != p) sub[w++] = t[v];
            const long sr = cb.domain.rank_tuple(sub);
            const long sign = (p % 2 == 0) ? 1 : -1; // (-1)^p
            for (long mu = 0; mu < mdim; ++mu)
                for (const auto& e : m.left[t[p]].row(mu))
                    rows[mu].add(e.col * Tn + sr, sign * e.val);
        }

        // (-1)^{i+j} f([x_i,x_j], rest), sorted into the increasing basis
        std::vector<long> rest(n - 1 >= 0 ? n - 1 : 0);
        for (long p = 0; p <= n; ++p) {
            for (long q = p + 1; q <= n; ++q) {
                const long pair_sign = ((p + q) % 2 == 0) ? 1 : -1; // (-1)^{p+q}
                for (const auto& e : g.bracket(t[p], t[q]).entries()) {
                    const long k = e.col;
                    long w = 0;
                    bool repeat = false;
                    for (long v = 0; v <= n; ++v) {
                        if (v == p || v == q) continue;
                        if (t[v] == k) { repeat = true; break; }
                        rest[w++] = t[v];
                    }
                    if (repeat) continue;
                    long pos = 0;
                    for (long v = 0; v < n - 1; ++v)
                        if (rest[v] < k) ++pos;
                    sub.assign(rest.begin(), rest.end());
                    sub.insert(sub.begin() + pos, k);
                    const long sr = cb.domain.rank_tuple(sub);
                    const long sign = pair_sign * ((pos % 2 == 0) ? 1 : -1);
                    for (long mu = 0; mu < mdim; ++mu)
                        rows[mu].add(mu * Tn + sr, sign * e.val);
                }
            }
        }
        for (long mu = 0; mu < mdim; ++mu)
            cb.mat.set_row(mu * T + rt, rows[mu].entries());
    }
    if (cancelled.load()) throw CancelledError();
    ctx.poll();

    for (auto f : cb.tuple_admissible) cb.admissible_tuples += f;
    return cb;
}

SparseMatrix skew_embedding(const AlgebraPresentation& g, const Representation& m,
                            long degree) {
    if (g.kind() != AlgebraKind::lie)
        throw UnsupportedError("skew embedding needs a lie presentation");
    CochainSpace dom = cochain_space(Theory::chevalley_eilenberg, g, m, degree);
    CochainSpace cod = cochain_space(Theory::leibniz, g, m, degree);
    SparseMatrix iota(cod.dimension, dom.dimension);

    std::vector<long> u(degree);
    for (long p = 0; p < degree; ++p) u[p] = p;
    for (long ru = 0; ru < dom.tuple_count; ++ru) {
        std::vector<long> perm = u;
        do {
            const long sign = (inversions(perm) % 2 == 0) ? 1 : -1;
            const long rp = cod.rank_tuple(perm);
            for (long mu = 0; mu < m.dim; ++mu)
                iota.set(mu * cod.tuple_count + rp, mu * dom.tuple_count + ru, sign);
        } while (std::next_permutation(perm.begin(), perm.end()));
        next_increasing(u, g.dim());
    }
    return iota;
}

namespace {

// A composite row reproduces the full-algebra value exactly when the whole
// two-step expansion stays inside the window; see the header note.
bool deep_admissible(const AlgebraPresentation& g, const Representation& m, long mu,
                     const std::vector<long>& t) {
    if (!shallow_admissible(g, t)) return false;
    const long n1 = static_cast<long>(t.size());
    for (long p = 0; p < n1; ++p) {
        for (long q = p + 1; q < n1; ++q) {
            for (const auto& e : g.bracket(t[p], t[q]).entries()) {
                const long k = e.col;
                for (long r = 0; r < n1; ++r) {
                    if (r == p || r == q) continue;
                    const bool before = r < p;
                    if (before ? !g.in_window(t[r], k) : !g.in_window(k, t[r]))
                        return false;
                    if (g.kind() == AlgebraKind::lie &&
                        (before ? !g.in_window(k, t[r]) : !g.in_window(t[r], k)))
                        return false;
                }
            }
        }
    }
    if (m.truncated) {
        const long radius = g.window() ? g.window()->radius : 0;
        for (long i = 0; i < n1; ++i) {
            Degree mid = g.degree(mu);
            const Degree& di = g.degree(t[i]);
            for (size_t c = 0; c < mid.size(); ++c) mid[c] += di[c];
            if (!degree_in_box(mid, radius)) return false;
        }
    }
    return true;
}

} // namespace

CompositeReport composite_check(Theory theory, const AlgebraPresentation& g,
                                const Representation& m, long degree,
                                const Context& ctx) {
    auto assemble = [&](long n) {
        return theory == Theory::leibniz ? leibniz_coboundary(g, m, n, ctx)
                                         : ce_coboundary(g, m, n, ctx);
    };
    Coboundary inner = assemble(degree);
    Coboundary outer = assemble(degree + 1);

    CompositeReport report;
    report.rows = outer.mat.rows();

    std::atomic<bool> cancelled{false};
    std::atomic<long> deep{0};
    std::atomic<bool> all_zero{true};
    std::vector<long> failing;
#ifdef _OPENMP
    const bool par = ctx.parallel && report.rows >= 256;
#pragma omp parallel for schedule(dynamic, 128) if (par)
#endif
    for (long r = 0; r < report.rows; ++r) {
        if (ctx.cancel && ctx.cancel->cancelled()) {
            cancelled.store(true);
            continue;
        }
        const long mu = r / outer.codomain.tuple_count;
        std::vector<long> t = outer.codomain.unrank_tuple(r % outer.codomain.tuple_count);
        if (!deep_admissible(g, m, mu, t)) continue;
        deep.fetch_add(1, std::memory_order_relaxed);

        SparseRow acc;
        for (const auto& e : outer.mat.row(r)) row_axpy(acc, e.val, inner.mat.row(e.col));
        if (!acc.empty()) {
            all_zero.store(false);
#ifdef _OPENMP
#pragma omp critical
#endif
            if (failing.size() < 8) failing.push_back(r);
        }
    }
    if (cancelled.load()) throw CancelledError();
    ctx.poll();

    report.deep_rows = deep.load();
    report.zero_on_deep_rows = all_zero.load();
    std::sort(failing.begin(), failing.end());
    report.failing_rows = std::move(failing);
    return report;
}

} // namespace leibcoh
