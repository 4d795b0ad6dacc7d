#include "leibcoh/sparse.hpp"

#include <algorithm>

#include "leibcoh/errors.hpp"

namespace leibcoh {

namespace {
SparseRow::const_iterator find_col(const SparseRow& r, long c) {
    auto it = std::lower_bound(r.begin(), r.end(), c,
                               [](const Entry& e, long col) { return e.col < col; });
    return (it != r.end() && it->col == c) ? it : r.end();
}

// GMP comparison and arithmetic assume canonical rationals; values coming
// from callers are normalized once on entry, everything stored stays
// canonical after that.
Rational canonical(const Rational& v) {
    Rational c = v;
    c.canonicalize();
    return c;
}
} // namespace

void row_axpy(SparseRow& target, const Rational& a_in, const SparseRow& x) {
    const Rational a = canonical(a_in);
    if (a == 0 || x.empty()) return;
    SparseRow out;
    out.reserve(target.size() + x.size());
    auto ti = target.begin(), te = target.end();
    auto xi = x.begin(), xe = x.end();
    while (ti != te || xi != xe) {
        if (xi == xe || (ti != te && ti->col < xi->col)) {
            out.push_back(*ti++);
        } else if (ti == te || xi->col < ti->col) {
            out.push_back({xi->col, a * xi->val});
            ++xi;
        } else {
            Rational v = ti->val + a * xi->val;
            if (v != 0) out.push_back({ti->col, std::move(v)});
            ++ti;
            ++xi;
        }
    }
    target = std::move(out);
}

Rational row_dot(const SparseRow& a, const SparseRow& b) {
    Rational s(0);
    auto ai = a.begin(), bi = b.begin();
    while (ai != a.end() && bi != b.end()) {
        if (ai->col < bi->col)
            ++ai;
        else if (bi->col < ai->col)
            ++bi;
        else {
            s += ai->val * bi->val;
            ++ai;
            ++bi;
        }
    }
    return s;
}

Rational SparseVector::at(long i) const {
    auto it = find_col(entries_, i);
    return it == entries_.end() ? Rational(0) : it->val;
}

void SparseVector::set(long i, const Rational& v_in) {
    const Rational v = canonical(v_in);
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const Entry& e, long col) { return e.col < col; });
    if (it != entries_.end() && it->col == i) {
        if (v == 0)
            entries_.erase(it);
        else
            it->val = v;
    } else if (v != 0) {
        entries_.insert(it, {i, v});
    }
}

void SparseVector::add(long i, const Rational& v_in) {
    const Rational v = canonical(v_in);
    if (v == 0) return;
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const Entry& e, long col) { return e.col < col; });
    if (it != entries_.end() && it->col == i) {
        it->val += v;
        if (it->val == 0) entries_.erase(it);
    } else {
        entries_.insert(it, {i, v});
    }
}

void SparseVector::axpy(const Rational& a, const SparseVector& x) {
    row_axpy(entries_, a, x.entries_);
}

void SparseVector::scale(const Rational& a_in) {
    const Rational a = canonical(a_in);
    if (a == 0) {
        entries_.clear();
        return;
    }
    for (auto& e : entries_) e.val *= a;
}

void SparseVector::negate() {
    for (auto& e : entries_) e.val = -e.val;
}

SparseMatrix SparseMatrix::identity(long n) {
    SparseMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.data_[i] = {{i, Rational(1)}};
    return m;
}

long SparseMatrix::nnz() const {
    long n = 0;
    for (auto& r : data_) n += (long)r.size();
    return n;
}

bool SparseMatrix::is_zero() const {
    for (auto& r : data_)
        if (!r.empty()) return false;
    return true;
}

Rational SparseMatrix::at(long r, long c) const {
    auto it = find_col(data_[r], c);
    return it == data_[r].end() ? Rational(0) : it->val;
}

void SparseMatrix::set(long r, long c, const Rational& v) {
    SparseVector tmp(cols_, std::move(data_[r]));
    tmp.set(c, v);
    data_[r] = tmp.entries();
}

void SparseMatrix::add(long r, long c, const Rational& v) {
    SparseVector tmp(cols_, std::move(data_[r]));
    tmp.add(c, v);
    data_[r] = tmp.entries();
}

SparseVector SparseMatrix::column_vector(long c) const {
    SparseVector v(rows_);
    SparseRow ents;
    for (long r = 0; r < rows_; ++r) {
        auto it = find_col(data_[r], c);
        if (it != data_[r].end()) ents.push_back({r, it->val});
    }
    return SparseVector(rows_, std::move(ents));
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t(cols_, rows_);
    for (long r = 0; r < rows_; ++r)
        for (auto& e : data_[r]) t.data_[e.col].push_back({r, e.val});
    return t;
}

SparseVector SparseMatrix::apply(const SparseVector& x) const {
    if (x.dim() != cols_) throw DimensionError("matrix-vector dimension mismatch");
    SparseRow ents;
    for (long r = 0; r < rows_; ++r) {
        Rational v = row_dot(data_[r], x.entries());
        if (v != 0) ents.push_back({r, std::move(v)});
    }
    return SparseVector(rows_, std::move(ents));
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionError("matrix product dimension mismatch");
    SparseMatrix out(rows_, o.cols_);
    for (long r = 0; r < rows_; ++r) {
        SparseRow acc;
        for (auto& e : data_[r]) row_axpy(acc, e.val, o.data_[e.col]);
        out.data_[r] = std::move(acc);
    }
    return out;
}

SparseMatrix SparseMatrix::vstack(const SparseMatrix& below) const {
    if (cols_ != below.cols_) throw DimensionError("vstack column mismatch");
    SparseMatrix out(rows_ + below.rows_, cols_);
    for (long r = 0; r < rows_; ++r) out.data_[r] = data_[r];
    for (long r = 0; r < below.rows_; ++r) out.data_[rows_ + r] = below.data_[r];
    return out;
}

} // namespace leibcoh
