#pragma once
#include <optional>
#include <vector>

#include "leibcoh/cancel.hpp"
#include "leibcoh/sparse.hpp"

namespace leibcoh {

struct EchelonResult {
    long rank = 0;
    std::vector<long> pivot_cols;
    SparseMatrix reduced;   // unique RREF of the input, same shape
    SparseMatrix transform; // square, transform * input == reduced (empty if not requested)
};

// Deterministic reduction to RREF. Pivots are chosen as the first row (in
// current order) with a nonzero entry, scanning columns left to right.
// Internally works on integer rows (cross-multiplication updates, content
// normalization), so no rational division happens until the final pivot
// normalization. Row updates within one pivot step are independent and run
// under OpenMP when ctx.parallel is set; the result is identical either way.
EchelonResult eliminate(const SparseMatrix& m, const Context& ctx = {},
                        bool with_transform = true);

long rank_of(const SparseMatrix& m, const Context& ctx = {});

// Columns form the canonical kernel basis derived from the RREF
// (one column per free variable).
SparseMatrix nullspace(const SparseMatrix& m, const Context& ctx = {});

// Exact solution of m x = b, or nullopt if the system is inconsistent.
// Free variables are set to zero.
std::optional<SparseVector> solve(const SparseMatrix& m, const SparseVector& b,
                                  const Context& ctx = {});

} // namespace leibcoh
