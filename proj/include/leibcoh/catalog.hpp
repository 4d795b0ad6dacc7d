#pragma once
#include <string>
#include <vector>

#include "leibcoh/algebra.hpp"
#include "leibcoh/cochain.hpp"

namespace leibcoh {

struct CatalogParams {
    long window = 0;            // radius for the *_window families
    long order = 1;             // operator order bound for diffops_window
    long n = 1;                 // rank of abelian(n)
    Rational q = 2;             // q_virasoro_like parameter, not in {0, 1, -1}
    Rational phi = 1;           // block_window multiple of the determinant form
    std::string simple = "sl2"; // underlying algebra for loop_window
};

std::vector<std::string> catalog_names();

// Families: sl2, sl3, abelian, heisenberg3, affine1, witt_window,
// hvir_base_window, hvir_window, diffops_window, block_window,
// virasoro_like_window, q_virasoro_like_window, loop_window.
// Throws InputError for unknown names or invalid parameters.
AlgebraPresentation catalog(const std::string& name, const CatalogParams& params = {});

// Named cochains are built against a presentation from this catalog; the
// caller supplies the trivial module so the returned pointers stay valid.
// Mismatched presentations raise InputError.

// alpha(L_m, L_n) = delta_{m+n,0} (m^3 - m)/12 on a Witt window.
Cochain virasoro_cocycle(const AlgebraPresentation& w, const Representation& triv);

// The three central terms of the twisted Heisenberg-Virasoro extension as
// cocycles on the base window: n delta_{m+n,0} on (I_m, I_n), the Virasoro
// term on (L_m, L_n), and (m^2 - m) delta_{m+n,0} on (L_m, I_n).
struct HvirCocycles {
    Cochain ii, ll, li;
};
HvirCocycles hvir_cocycles(const AlgebraPresentation& h, const Representation& triv);

// Degree-zero cocycle on a differential-operator window. On the falling
// factorials t^a D(D-1)..(D-r+1) it is delta_{a+b,0} (-1)^r r! s!
// binom(a, r+s+1); monomial values follow by the Stirling expansion of D^j.
Cochain w1inf_psi(const AlgebraPresentation& d, const Representation& triv);

// delta_{x+y,0} on a Block-type window (degenerate Block, Virasoro-like or
// its q-analogue).
BilinearForm block_form(const AlgebraPresentation& b);

// f(x (x) t^m, y (x) t^n) = kappa(x,y) n delta_{m+n+k,0} on a loop window,
// kappa the Killing form of the underlying algebra.
Cochain loop_51(const AlgebraPresentation& l, const Representation& triv, long k);

// phi(x (x) t^m, y (x) t^n) = kappa(x,y) delta_{m+n,-1}, the residue pairing.
BilinearForm loop_residue_form(const AlgebraPresentation& l);

// t^k d/dt on the loop window, x (x) t^m -> m x (x) t^{m+k-1}; images that
// leave the window truncate to zero.
SparseMatrix loop_degree_derivation(const AlgebraPresentation& l, long k);

} // namespace leibcoh
