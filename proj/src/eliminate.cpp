#include "leibcoh/eliminate.hpp"

#include <algorithm>
#include <utility>

#include "leibcoh/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace leibcoh {
namespace {

using IEntry = std::pair<long, Integer>;
using IRow = std::vector<IEntry>;

struct WorkRow {
    IRow m; // matrix part
    IRow t; // transform part (empty when transform is not tracked)
};

const Integer* irow_find(const IRow& row, long col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const IEntry& e, long c) { return e.first < c; });
    if (it != row.end() && it->first == col) return &it->second;
    return nullptr;
}

// p*a - q*b, merged by column, zeros dropped.
IRow irow_combine(const IRow& a, const Integer& p, const IRow& b, const Integer& q) {
    IRow out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    Integer v;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.emplace_back(a[i].first, p * a[i].second);
            ++i;
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -q * b[j].second);
            ++j;
        } else {
            v = p * a[i].second - q * b[j].second;
            if (v != 0) out.emplace_back(a[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

void gcd_accumulate(Integer& g, const IRow& row) {
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
}

void divide_row(IRow& row, const Integer& g) {
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

void normalize_content(WorkRow& r) {
    Integer g = 0;
    gcd_accumulate(g, r.m);
    if (g != 1) gcd_accumulate(g, r.t);
    if (g > 1) {
        divide_row(r.m, g);
        divide_row(r.t, g);
    }
}

// Clear denominators of one rational row; transform part starts as L*e_r.
WorkRow integerize(const SparseRow& row, long r, bool with_transform) {
    Integer lcm = 1;
    for (const auto& e : row)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.val.get_den_mpz_t());
    WorkRow w;
    w.m.reserve(row.size());
    Integer scale, v;
    for (const auto& e : row) {
        mpz_divexact(scale.get_mpz_t(), lcm.get_mpz_t(), e.val.get_den_mpz_t());
        v = Integer(e.val.get_num()) * scale;
        w.m.emplace_back(e.col, v);
    }
    if (with_transform) w.t.emplace_back(r, lcm);
    normalize_content(w);
    return w;
}

SparseRow to_rational_row(const IRow& row, const Integer& div) {
    SparseRow out;
    out.reserve(row.size());
    for (const auto& [c, v] : row) {
        Rational q(v, div);
        q.canonicalize();
        out.push_back({c, std::move(q)});
    }
    return out;
}

} // namespace

EchelonResult eliminate(const SparseMatrix& m, const Context& ctx, bool with_transform) {
    const long nrows = m.rows();
    const long ncols = m.cols();

    std::vector<WorkRow> work(nrows);
    for (long r = 0; r < nrows; ++r) work[r] = integerize(m.row(r), r, with_transform);

    std::vector<char> is_pivot(nrows, 0);
    std::vector<long> pivot_rows; // one per pivot, in column order
    std::vector<long> pivot_cols;

    std::vector<long> affected;
    affected.reserve(nrows);

    for (long col = 0; col < ncols; ++col) {
        ctx.poll();
        long piv = -1;
        for (long r = 0; r < nrows; ++r) {
            if (!is_pivot[r] && irow_find(work[r].m, col)) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        is_pivot[piv] = 1;
        pivot_rows.push_back(piv);
        pivot_cols.push_back(col);

        affected.clear();
        for (long r = 0; r < nrows; ++r)
            if (r != piv && irow_find(work[r].m, col)) affected.push_back(r);
        if (affected.empty()) continue;

        const WorkRow& pr = work[piv];
        const Integer p = *irow_find(pr.m, col);
        const long n = static_cast<long>(affected.size());

#ifdef _OPENMP
        const bool par = ctx.parallel && n >= 16;
#pragma omp parallel for schedule(dynamic, 8) if (par)
#endif
        for (long k = 0; k < n; ++k) {
            WorkRow& w = work[affected[k]];
            const Integer q = *irow_find(w.m, col);
            w.m = irow_combine(w.m, p, pr.m, q);
            if (with_transform) w.t = irow_combine(w.t, p, pr.t, q);
            normalize_content(w);
        }
    }

    EchelonResult res;
    res.rank = static_cast<long>(pivot_rows.size());
    res.pivot_cols = pivot_cols;
    res.reduced = SparseMatrix(nrows, ncols);
    if (with_transform) res.transform = SparseMatrix(nrows, nrows);

    // Pivot rows first (in pivot-column order), normalized so pivots are 1,
    // then the remaining rows in their original relative order.
    long out = 0;
    for (long k = 0; k < res.rank; ++k, ++out) {
        const WorkRow& w = work[pivot_rows[k]];
        const Integer& p = *irow_find(w.m, pivot_cols[k]);
        res.reduced.set_row(out, to_rational_row(w.m, p));
        if (with_transform) res.transform.set_row(out, to_rational_row(w.t, p));
    }
    for (long r = 0; r < nrows; ++r) {
        if (is_pivot[r]) continue;
        // Matrix part is identically zero here; keep the dependency row of
        // the transform, content-normalized with positive leading entry.
        if (with_transform && !work[r].t.empty()) {
            Integer g = 0;
            gcd_accumulate(g, work[r].t);
            if (work[r].t.front().second < 0) g = -g;
            res.transform.set_row(out, to_rational_row(work[r].t, g));
        }
        ++out;
    }
    return res;
}

long rank_of(const SparseMatrix& m, const Context& ctx) {
    return eliminate(m, ctx, false).rank;
}

SparseMatrix nullspace(const SparseMatrix& m, const Context& ctx) {
    EchelonResult e = eliminate(m, ctx, false);
    const long ncols = m.cols();

    std::vector<long> pivot_of_col(ncols, -1);
    for (long k = 0; k < e.rank; ++k) pivot_of_col[e.pivot_cols[k]] = k;

    std::vector<long> free_cols;
    for (long c = 0; c < ncols; ++c)
        if (pivot_of_col[c] < 0) free_cols.push_back(c);

    SparseMatrix basis(ncols, static_cast<long>(free_cols.size()));
    for (long j = 0; j < static_cast<long>(free_cols.size()); ++j) {
        const long f = free_cols[j];
        // v[f] = 1, v[pivot_cols[k]] = -reduced[k][f]
        basis.set(f, j, 1);
        for (long k = 0; k < e.rank; ++k) {
            Rational v = e.reduced.at(k, f);
            if (v != 0) basis.set(e.pivot_cols[k], j, -v);
        }
    }
    return basis;
}

std::optional<SparseVector> solve(const SparseMatrix& m, const SparseVector& b,
                                  const Context& ctx) {
    if (b.dim() != m.rows()) throw DimensionError("solve: rhs dimension mismatch");
    const long ncols = m.cols();
    SparseMatrix aug(m.rows(), ncols + 1);
    for (long r = 0; r < m.rows(); ++r) aug.set_row(r, m.row(r));
    for (const auto& e : b.entries()) aug.set(e.col, ncols, e.val);

    EchelonResult e = eliminate(aug, ctx, false);
    for (long k = 0; k < e.rank; ++k)
        if (e.pivot_cols[k] == ncols) return std::nullopt;

    SparseVector x(ncols);
    for (long k = 0; k < e.rank; ++k) {
        Rational v = e.reduced.at(k, ncols);
        if (v != 0) x.set(e.pivot_cols[k], v);
    }
    return x;
}

} // namespace leibcoh
