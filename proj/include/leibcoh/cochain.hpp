#pragma once
#include <cstdint>
#include <utility>
#include <vector>

#include "leibcoh/algebra.hpp"
#include "leibcoh/cancel.hpp"
#include "leibcoh/sparse.hpp"

namespace leibcoh {

enum class Theory { leibniz, chevalley_eilenberg };

// Basis bookkeeping for C^n(g, M). Leibniz cochains run over all ordered
// n-tuples of basis indices, Chevalley-Eilenberg cochains over strictly
// increasing ones; both are ranked lexicographically with the coefficient
// index slowest-varying: index = mu * tuple_count + tuple_rank.
struct CochainSpace {
    Theory theory = Theory::leibniz;
    long degree = 0;
    const AlgebraPresentation* algebra = nullptr;
    const Representation* coefficients = nullptr;
    long tuple_count = 0;
    long dimension = 0;

    long rank_tuple(const std::vector<long>& t) const;
    std::vector<long> unrank_tuple(long rank) const;
    long index(long mu, const std::vector<long>& t) const {
        return mu * tuple_count + rank_tuple(t);
    }
    std::pair<long, std::vector<long>> unindex(long idx) const {
        return {idx / tuple_count, unrank_tuple(idx % tuple_count)};
    }
};

CochainSpace cochain_space(Theory theory, const AlgebraPresentation& g,
                           const Representation& m, long degree);

struct Cochain {
    CochainSpace space;
    SparseVector coords;

    Rational value(long mu, const std::vector<long>& t) const {
        return coords.at(space.index(mu, t));
    }
};

// Coboundary matrix C^n -> C^{n+1} over the full row enumeration. For
// windowed algebras, rows whose tuple has an out-of-window pairwise bracket
// carry no constraint and are left zero; tuple_admissible records which
// tuples are real.
struct Coboundary {
    SparseMatrix mat;
    CochainSpace domain, codomain;
    std::vector<std::uint8_t> tuple_admissible; // per codomain tuple
    long admissible_tuples = 0;

    bool row_admissible(long row) const {
        return tuple_admissible[row % codomain.tuple_count] != 0;
    }
};

// Loday coboundary (d^n f)(x_1..x_{n+1}) = [x_1, f(rest)]
//   + sum_{i>=2} (-1)^i [f(..x_i-hat..), x_i]
//   + sum_{i<j} (-1)^{j+1} f(.., x_{i-1}, [x_i,x_j], x_{i+1}, .., x_j-hat, ..).
Coboundary leibniz_coboundary(const AlgebraPresentation& g, const Representation& m,
                              long degree, const Context& ctx = {});

// Chevalley-Eilenberg coboundary (delta^n f)(x_1..x_{n+1})
//   = sum_i (-1)^{i+1} x_i . f(..x_i-hat..)
//   + sum_{i<j} (-1)^{i+j} f([x_i,x_j], .., x_i-hat, .., x_j-hat, ..),
// on the strictly-increasing basis (bracket components merged with the sign
// of the sorting permutation). Requires kind=lie.
Coboundary ce_coboundary(const AlgebraPresentation& g, const Representation& m,
                         long degree, const Context& ctx = {});

// Natural embedding of alternating cochains: column (mu, increasing tuple)
// spreads over all permuted ordered tuples with the permutation sign.
// Requires kind=lie.
SparseMatrix skew_embedding(const AlgebraPresentation& g, const Representation& m,
                            long degree);

// Verifies d^{degree+1} * d^{degree} = 0 row by row. For windowed algebras
// only deeply admissible rows count: every bracket-inserted tuple must stay
// pairwise in-window, and truncated dual coefficients additionally need
// |deg mu + deg t_i| <= radius at every position, which is exactly when the
// windowed row reproduces the full-algebra composite.
struct CompositeReport {
    long rows = 0;
    long deep_rows = 0;
    bool zero_on_deep_rows = true;
    std::vector<long> failing_rows; // at most 8 witnesses
};

CompositeReport composite_check(Theory theory, const AlgebraPresentation& g,
                                const Representation& m, long degree,
                                const Context& ctx = {});

} // namespace leibcoh
