#include "leibcoh/subspace.hpp"

namespace leibcoh {

Subspace Subspace::zero(long ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.rows_ = SparseMatrix(0, ambient);
    return s;
}

Subspace Subspace::full(long ambient) {
    Subspace s;
    s.ambient_ = ambient;
    s.rows_ = SparseMatrix::identity(ambient);
    s.pivots_.resize(ambient);
    for (long i = 0; i < ambient; ++i) s.pivots_[i] = i;
    return s;
}

Subspace Subspace::span_rows(const SparseMatrix& rows, const Context& ctx) {
    EchelonResult e = eliminate(rows, ctx, false);
    Subspace s;
    s.ambient_ = rows.cols();
    s.rows_ = SparseMatrix(e.rank, rows.cols());
    for (long r = 0; r < e.rank; ++r) s.rows_.set_row(r, e.reduced.row(r));
    s.pivots_ = e.pivot_cols;
    return s;
}

Subspace Subspace::span_columns(const SparseMatrix& cols, const Context& ctx) {
    return span_rows(cols.transpose(), ctx);
}

Subspace Subspace::span(long ambient, const std::vector<SparseVector>& vecs,
                        const Context& ctx) {
    SparseMatrix m(static_cast<long>(vecs.size()), ambient);
    for (long r = 0; r < static_cast<long>(vecs.size()); ++r) {
        if (vecs[r].dim() != ambient) throw DimensionError("span: vector dimension mismatch");
        m.set_row_vector(r, vecs[r]);
    }
    return span_rows(m, ctx);
}

SparseVector Subspace::reduce_mod(const SparseVector& v) const {
    if (v.dim() != ambient_) throw DimensionError("reduce_mod: dimension mismatch");
    SparseVector w = v;
    for (long i = 0; i < dim(); ++i) {
        Rational c = v.at(pivots_[i]);
        if (c != 0) w.axpy(-c, rows_.row_vector(i));
    }
    return w;
}

bool Subspace::contains(const SparseVector& v) const {
    return reduce_mod(v).is_zero();
}

bool Subspace::contains(const Subspace& o) const {
    if (o.ambient_ != ambient_) return false;
    for (long r = 0; r < o.dim(); ++r)
        if (!contains(o.rows_.row_vector(r))) return false;
    return true;
}

SparseVector Subspace::coordinates(const SparseVector& v) const {
    if (!contains(v)) throw ContainmentError("coordinates: vector not in subspace");
    SparseVector c(dim());
    for (long i = 0; i < dim(); ++i) {
        Rational val = v.at(pivots_[i]);
        if (val != 0) c.set(i, val);
    }
    return c;
}

Subspace Subspace::sum(const Subspace& o, const Context& ctx) const {
    if (o.ambient_ != ambient_) throw DimensionError("sum: ambient mismatch");
    return span_rows(rows_.vstack(o.rows_), ctx);
}

Subspace Subspace::intersect(const Subspace& o, const Context& ctx) const {
    if (o.ambient_ != ambient_) throw DimensionError("intersect: ambient mismatch");
    const long da = dim(), db = o.dim();
    if (da == 0 || db == 0) return zero(ambient_);

    // Columns of [A^T | B^T]; kernel elements (a, b) give a*A = -b*B in the
    // intersection, and every intersection vector arises this way.
    SparseMatrix at = rows_.transpose();
    SparseMatrix bt = o.rows_.transpose();
    SparseMatrix m(ambient_, da + db);
    for (long r = 0; r < ambient_; ++r) {
        SparseRow row = at.row(r);
        for (const auto& e : bt.row(r)) row.push_back({da + e.col, e.val});
        m.set_row(r, row);
    }
    SparseMatrix ker = nullspace(m, ctx);

    SparseMatrix gens(ker.cols(), ambient_);
    for (long j = 0; j < ker.cols(); ++j) {
        SparseVector x(ambient_);
        for (long i = 0; i < da; ++i) {
            Rational a = ker.at(i, j);
            if (a != 0) x.axpy(a, rows_.row_vector(i));
        }
        gens.set_row_vector(j, x);
    }
    return span_rows(gens, ctx);
}

Quotient quotient_basis(const Subspace& space, const Subspace& sub, const Context& ctx) {
    if (space.ambient() != sub.ambient())
        throw DimensionError("quotient_basis: ambient mismatch");
    if (!space.contains(sub))
        throw ContainmentError("quotient_basis: sub is not contained in space");

    const long n = space.ambient();
    SparseMatrix gens(space.dim(), n);
    for (long r = 0; r < space.dim(); ++r)
        gens.set_row_vector(r, sub.reduce_mod(space.basis_rows().row_vector(r)));
    Subspace comp = Subspace::span_rows(gens, ctx);

    Quotient q;
    q.space = space;
    q.sub = sub;
    q.representatives = comp.basis_columns();

    // reduce(v) reads v - proj_sub(v) at the complement's pivot coordinates.
    const long d = comp.dim();
    q.reduce = SparseMatrix(d, n);
    for (long j = 0; j < d; ++j) q.reduce.set(j, comp.pivots()[j], 1);
    for (long i = 0; i < sub.dim(); ++i) {
        const long p = sub.pivots()[i];
        for (long j = 0; j < d; ++j) {
            Rational s = sub.basis_rows().at(i, comp.pivots()[j]);
            if (s != 0) q.reduce.set(j, p, -s);
        }
    }
    return q;
}

SparseMatrix induced_quotient_map(const SparseMatrix& f, const Quotient& dom,
                                  const Quotient& cod) {
    if (f.cols() != dom.space.ambient() || f.rows() != cod.space.ambient())
        throw DimensionError("induced_quotient_map: shape mismatch");
    for (long r = 0; r < dom.sub.dim(); ++r) {
        SparseVector fs = f.apply(dom.sub.basis_rows().row_vector(r));
        if (!cod.sub.contains(fs))
            throw WellDefinednessError("induced map does not preserve the divided subspace");
    }
    for (long j = 0; j < dom.dim(); ++j) {
        SparseVector fr = f.apply(dom.representative(j));
        if (!cod.space.contains(fr))
            throw WellDefinednessError("induced map leaves the target space");
    }
    return cod.reduce.multiply(f).multiply(dom.representatives);
}

} // namespace leibcoh
