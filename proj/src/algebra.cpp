#include "leibcoh/algebra.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace leibcoh {
namespace {

void mat_axpy(SparseMatrix& target, const Rational& a, const SparseMatrix& x) {
    for (long r = 0; r < target.rows(); ++r) {
        SparseRow row = target.row(r);
        row_axpy(row, a, x.row(r));
        target.set_row(r, std::move(row));
    }
}

SparseMatrix mat_negate(const SparseMatrix& m) {
    SparseMatrix out(m.rows(), m.cols());
    for (long r = 0; r < m.rows(); ++r) {
        SparseRow row = m.row(r);
        for (auto& e : row) e.val = -e.val;
        out.set_row(r, std::move(row));
    }
    return out;
}

bool degree_in_box(const Degree& d, long radius) {
    for (long c : d)
        if (c > radius || c < -radius) return false;
    return true;
}

Degree degree_diff(const Degree& a, const Degree& b) {
    Degree d(a.size());
    for (size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return d;
}

} // namespace

AlgebraPresentation::AlgebraPresentation(std::string name, AlgebraKind kind,
                                         std::vector<std::string> basis)
    : name_(std::move(name)), kind_(kind), labels_(std::move(basis)) {
    for (long i = 0; i < dim(); ++i) {
        if (labels_[i].empty()) throw InputError("empty basis label");
        if (!index_.emplace(labels_[i], i).second)
            throw InputError("duplicate basis label: " + labels_[i]);
    }
    table_.assign(dim() * dim(), SparseVector(dim()));
    out_.assign(dim() * dim(), 0);
}

long AlgebraPresentation::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw InputError("unknown basis label: " + label);
    return it->second;
}

void AlgebraPresentation::check_degree_additive(long i, long j, long k) const {
    if (degrees_.empty()) return;
    for (long c = 0; c < arity_; ++c) {
        if (degrees_[k][c] != degrees_[i][c] + degrees_[j][c])
            throw GradingError("bracket [" + labels_[i] + "," + labels_[j] +
                               "] hits " + labels_[k] + " outside degree " +
                               "additivity");
    }
}

void AlgebraPresentation::add_bracket_term(long i, long j, long k, const Rational& c_in) {
    if (i < 0 || j < 0 || k < 0 || i >= dim() || j >= dim() || k >= dim())
        throw InputError("bracket term index out of range");
    Rational c = c_in;
    c.canonicalize();
    if (c == 0) return;
    if (kind_ == AlgebraKind::lie) {
        if (i == j) throw InputError("nonzero diagonal bracket in a lie presentation");
        if (i > j) {
            std::swap(i, j);
            c = -c;
        }
    }
    if (out_[i * dim() + j])
        throw InputError("bracket term on an out-of-window pair");
    check_degree_additive(i, j, k);
    table_[i * dim() + j].add(k, c);
    if (kind_ == AlgebraKind::lie) table_[j * dim() + i].add(k, -c);
}

void AlgebraPresentation::set_out_of_window(long i, long j) {
    if (i < 0 || j < 0 || i >= dim() || j >= dim())
        throw InputError("out-of-window mark out of range");
    if (kind_ == AlgebraKind::lie) {
        if (i == j) throw InputError("diagonal lie bracket is always zero, not out of window");
        if (i > j) std::swap(i, j);
    }
    if (!table_[i * dim() + j].is_zero())
        throw InputError("out-of-window mark on a pair with bracket data");
    out_[i * dim() + j] = 1;
    if (kind_ == AlgebraKind::lie) out_[j * dim() + i] = 1;
    windowed_ = true;
}

bool AlgebraPresentation::in_window(long i, long j) const {
    return !out_[i * dim() + j];
}

const SparseVector& AlgebraPresentation::bracket(long i, long j) const {
    if (out_[i * dim() + j])
        throw UnsupportedError("bracket [" + labels_[i] + "," + labels_[j] +
                               "] is out of window");
    return table_[i * dim() + j];
}

SparseVector AlgebraPresentation::bracket(const SparseVector& x, const SparseVector& y) const {
    if (x.dim() != dim() || y.dim() != dim())
        throw DimensionError("bracket argument dimension mismatch");
    SparseVector acc(dim());
    for (const auto& ex : x.entries())
        for (const auto& ey : y.entries())
            acc.axpy(ex.val * ey.val, bracket(ex.col, ey.col));
    return acc;
}

void AlgebraPresentation::set_grading(std::vector<Degree> degrees) {
    if (static_cast<long>(degrees.size()) != dim())
        throw GradingError("grading size does not match basis size");
    long arity = degrees.empty() ? 1 : static_cast<long>(degrees.front().size());
    if (arity != 1 && arity != 2) throw GradingError("grading arity must be 1 or 2");
    for (const auto& d : degrees)
        if (static_cast<long>(d.size()) != arity)
            throw GradingError("mixed grading arity");
    degrees_ = std::move(degrees);
    arity_ = arity;
    try {
        for (long i = 0; i < dim(); ++i)
            for (long j = 0; j < dim(); ++j)
                for (const auto& e : table_[i * dim() + j].entries())
                    check_degree_additive(i, j, e.col);
    } catch (...) {
        degrees_.clear();
        arity_ = 0;
        throw;
    }
}

void AlgebraPresentation::set_window(WindowInfo info) {
    windowed_ = true;
    window_ = info;
}

ValidationReport validate(const AlgebraPresentation& a, const Context& ctx) {
    ValidationReport report;
    const long d = a.dim();

    if (a.kind() == AlgebraKind::lie) {
        for (long i = 0; i < d; ++i) {
            for (long j = 0; j <= i; ++j) {
                if (!a.in_window(i, j)) continue;
                SparseVector s = a.bracket(i, j);
                s.axpy(1, a.bracket(j, i));
                ++report.checked;
                if (!s.is_zero()) {
                    report.valid = false;
                    SparseVector rhs = a.bracket(j, i);
                    rhs.negate();
                    report.violations.push_back({i, j, -1, a.bracket(i, j), rhs});
                }
            }
        }
    }

    std::vector<ValidationReport> parts(d);
    std::atomic<bool> cancelled{false};
    const bool par = ctx.parallel && d >= 8;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (par)
#else
    (void)par;
#endif
    for (long i = 0; i < d; ++i) {
        if (ctx.cancel && ctx.cancel->cancelled()) {
            cancelled.store(true);
            continue;
        }
        ValidationReport& part = parts[i];
        for (long j = 0; j < d; ++j) {
            for (long k = 0; k < d; ++k) {
                bool ok = a.in_window(j, k) && a.in_window(i, j) && a.in_window(i, k);
                if (ok)
                    for (const auto& e : a.bracket(j, k).entries())
                        if (!a.in_window(i, e.col)) { ok = false; break; }
                if (ok)
                    for (const auto& e : a.bracket(i, j).entries())
                        if (!a.in_window(e.col, k)) { ok = false; break; }
                if (ok)
                    for (const auto& e : a.bracket(i, k).entries())
                        if (!a.in_window(e.col, j)) { ok = false; break; }
                if (!ok) {
                    ++part.skipped;
                    continue;
                }
                SparseVector lhs(d), rhs(d);
                for (const auto& e : a.bracket(j, k).entries())
                    lhs.axpy(e.val, a.bracket(i, e.col));
                for (const auto& e : a.bracket(i, j).entries())
                    rhs.axpy(e.val, a.bracket(e.col, k));
                for (const auto& e : a.bracket(i, k).entries())
                    rhs.axpy(-e.val, a.bracket(e.col, j));
                ++part.checked;
                if (!(lhs == rhs)) {
                    part.valid = false;
                    part.violations.push_back({i, j, k, std::move(lhs), std::move(rhs)});
                }
            }
        }
    }
    if (cancelled.load()) throw CancelledError();
    ctx.poll();

    for (auto& part : parts) {
        report.checked += part.checked;
        report.skipped += part.skipped;
        if (!part.valid) report.valid = false;
        for (auto& v : part.violations) report.violations.push_back(std::move(v));
    }
    return report;
}

Representation trivial_module(const AlgebraPresentation& a) {
    Representation m;
    m.algebra = &a;
    m.dim = 1;
    m.left.assign(a.dim(), SparseMatrix(1, 1));
    m.right.assign(a.dim(), SparseMatrix(1, 1));
    m.rep_kind = RepKind::trivial;
    return m;
}

Representation adjoint_module(const AlgebraPresentation& a) {
    if (a.windowed())
        throw UnsupportedError("adjoint module needs the full bracket, not a window");
    const long d = a.dim();
    Representation m;
    m.algebra = &a;
    m.dim = d;
    m.left.assign(d, SparseMatrix(d, d));
    m.right.assign(d, SparseMatrix(d, d));
    for (long y = 0; y < d; ++y) {
        for (long x = 0; x < d; ++x) {
            for (const auto& e : a.bracket(y, x).entries()) m.left[y].set(e.col, x, e.val);
            for (const auto& e : a.bracket(x, y).entries()) m.right[y].set(e.col, x, e.val);
        }
    }
    m.rep_kind = RepKind::adjoint;
    return m;
}

Representation dual_module(const AlgebraPresentation& a) {
    if (a.kind() != AlgebraKind::lie)
        throw UnsupportedError("dual module is only defined for lie presentations");
    if (a.windowed()) {
        if (!a.window() || !a.window()->degree_saturated || !a.graded())
            throw UnsupportedError(
                "dual module on a window needs a degree-saturated graded window");
    }
    const long d = a.dim();
    Representation m;
    m.algebra = &a;
    m.dim = d;
    m.left.assign(d, SparseMatrix(d, d));
    m.right.assign(d, SparseMatrix(d, d));
    for (long y = 0; y < d; ++y) {
        SparseMatrix act(d, d);
        for (long mu2 = 0; mu2 < d; ++mu2) {
            if (!a.in_window(mu2, y)) continue; // saturated: nothing lands inside
            for (const auto& e : a.bracket(mu2, y).entries()) act.set(mu2, e.col, e.val);
        }
        m.right[y] = mat_negate(act);
        m.left[y] = std::move(act);
    }
    m.rep_kind = RepKind::dual;
    m.truncated = a.windowed();
    return m;
}

RepReport validate_representation(const AlgebraPresentation& a, const Representation& m,
                                  const Context& ctx) {
    const long d = a.dim();
    if (static_cast<long>(m.left.size()) != d || static_cast<long>(m.right.size()) != d)
        throw DimensionError("representation has wrong number of action matrices");
    for (long y = 0; y < d; ++y)
        if (m.left[y].rows() != m.dim || m.left[y].cols() != m.dim ||
            m.right[y].rows() != m.dim || m.right[y].cols() != m.dim)
            throw DimensionError("action matrix shape mismatch");

    const long radius = a.window() ? a.window()->radius : 0;
    const bool filter_cols = m.truncated;
    if (filter_cols && !a.graded())
        throw UnsupportedError("truncated module on an ungraded algebra");

    RepReport report;
    std::vector<RepReport> parts(d);
    std::atomic<bool> cancelled{false};
    const bool par = ctx.parallel && d >= 8;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (par)
#else
    (void)par;
#endif
    for (long i = 0; i < d; ++i) {
        if (ctx.cancel && ctx.cancel->cancelled()) {
            cancelled.store(true);
            continue;
        }
        RepReport& part = parts[i];
        for (long j = 0; j < d; ++j) {
            if (!a.in_window(i, j)) {
                part.skipped += 3;
                continue;
            }
            SparseMatrix lc(m.dim, m.dim), rc(m.dim, m.dim);
            for (const auto& e : a.bracket(i, j).entries()) {
                mat_axpy(lc, e.val, m.left[e.col]);
                mat_axpy(rc, e.val, m.right[e.col]);
            }
            // MLL: [m,[x,y]] = [[m,x],y] - [[m,y],x]
            SparseMatrix mll = m.right[j].multiply(m.right[i]);
            mat_axpy(mll, -1, m.right[i].multiply(m.right[j]));
            // LML: [x,[m,y]] = [[x,m],y] - [[x,y],m]
            SparseMatrix lml = m.right[j].multiply(m.left[i]);
            mat_axpy(lml, -1, lc);
            // LLM: [x,[y,m]] = [[x,y],m] - [[x,m],y]
            SparseMatrix llm = lc;
            mat_axpy(llm, -1, m.right[j].multiply(m.left[i]));

            std::vector<long> cols;
            if (filter_cols) {
                for (long mu = 0; mu < m.dim; ++mu)
                    if (degree_in_box(degree_diff(a.degree(mu), a.degree(i)), radius) &&
                        degree_in_box(degree_diff(a.degree(mu), a.degree(j)), radius))
                        cols.push_back(mu);
                if (cols.empty()) {
                    part.skipped += 3;
                    continue;
                }
            }
            auto check = [&](const char* axiom, const SparseMatrix& got,
                             const SparseMatrix& want) {
                ++part.checked;
                bool ok;
                if (filter_cols) {
                    ok = true;
                    for (long mu : cols)
                        if (!(got.column_vector(mu) == want.column_vector(mu))) {
                            ok = false;
                            break;
                        }
                } else {
                    ok = got == want;
                }
                if (!ok) {
                    part.valid = false;
                    part.violations.push_back({axiom, i, j});
                }
            };
            check("MLL", rc, mll);
            check("LML", m.left[i].multiply(m.right[j]), lml);
            check("LLM", m.left[i].multiply(m.left[j]), llm);
        }
    }
    if (cancelled.load()) throw CancelledError();
    ctx.poll();

    for (auto& part : parts) {
        report.checked += part.checked;
        report.skipped += part.skipped;
        if (!part.valid) report.valid = false;
        for (auto& v : part.violations) report.violations.push_back(std::move(v));
    }
    return report;
}

DerivedSubalgebra derived_subalgebra(const AlgebraPresentation& a, const Context& ctx) {
    const long d = a.dim();
    std::vector<SparseVector> gens;
    for (long i = 0; i < d; ++i)
        for (long j = 0; j < d; ++j)
            if (a.in_window(i, j) && !a.bracket(i, j).is_zero())
                gens.push_back(a.bracket(i, j));
    DerivedSubalgebra out{Subspace::span(d, gens, ctx), false};
    out.is_perfect = out.space.dim() == d;
    return out;
}

} // namespace leibcoh
