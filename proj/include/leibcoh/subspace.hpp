#pragma once
#include <vector>

#include "leibcoh/cancel.hpp"
#include "leibcoh/eliminate.hpp"
#include "leibcoh/errors.hpp"
#include "leibcoh/sparse.hpp"

namespace leibcoh {

// Subspace of K^ambient in canonical form: basis stored as the RREF of the
// spanning vectors written as rows, so equal subspaces compare equal
// entrywise.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(long ambient);
    static Subspace full(long ambient);
    static Subspace span_rows(const SparseMatrix& rows, const Context& ctx = {});
    static Subspace span_columns(const SparseMatrix& cols, const Context& ctx = {});
    static Subspace span(long ambient, const std::vector<SparseVector>& vecs,
                         const Context& ctx = {});

    long ambient() const { return ambient_; }
    long dim() const { return rows_.rows(); }
    const SparseMatrix& basis_rows() const { return rows_; }
    SparseMatrix basis_columns() const { return rows_.transpose(); }
    const std::vector<long>& pivots() const { return pivots_; }

    bool contains(const SparseVector& v) const;
    bool contains(const Subspace& o) const;

    // v minus its projection onto this subspace along the pivot coordinates;
    // zero exactly when v is contained.
    SparseVector reduce_mod(const SparseVector& v) const;

    // Coefficients c with c * basis_rows == v; throws ContainmentError.
    SparseVector coordinates(const SparseVector& v) const;

    Subspace sum(const Subspace& o, const Context& ctx = {}) const;
    Subspace intersect(const Subspace& o, const Context& ctx = {}) const;

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && rows_ == o.rows_;
    }

private:
    long ambient_ = 0;
    SparseMatrix rows_{0, 0};
    std::vector<long> pivots_;
};

// Basis data for space/sub. Columns of `representatives` are vectors in
// `space` spanning a complement of `sub`; `reduce` maps any vector of
// `space` to its coefficient vector over those representatives, killing
// `sub`, with reduce * representatives == identity.
struct Quotient {
    Subspace space;
    Subspace sub;
    SparseMatrix representatives; // ambient x dim
    SparseMatrix reduce;          // dim x ambient

    long dim() const { return representatives.cols(); }
    SparseVector reduce_vector(const SparseVector& v) const { return reduce.apply(v); }
    SparseVector representative(long j) const { return representatives.column_vector(j); }
};

Quotient quotient_basis(const Subspace& space, const Subspace& sub,
                        const Context& ctx = {});

// Matrix of the map dom -> cod induced by f on the quotients. Verifies that
// f maps dom.sub into cod.sub and dom.space into cod.space; throws
// WellDefinednessError otherwise.
SparseMatrix induced_quotient_map(const SparseMatrix& f, const Quotient& dom,
                                  const Quotient& cod);

} // namespace leibcoh
