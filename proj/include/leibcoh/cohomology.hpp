#pragma once
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "leibcoh/algebra.hpp"
#include "leibcoh/cancel.hpp"
#include "leibcoh/cochain.hpp"
#include "leibcoh/subspace.hpp"

namespace leibcoh {

struct CohomologyGroup {
    Theory theory = Theory::leibniz;
    long degree = 0;
    long dim = 0;
    CochainSpace space;  // the ambient C^n
    Quotient classes;    // space = cocycles, sub = coboundaries
    std::vector<Cochain> representatives;
    bool window_relative = false;
    // Set when the coefficient module was built internally; keeps the
    // pointers inside space/representatives valid after return.
    std::shared_ptr<const Representation> owned_coefficients;
};

// dim ker(d^n) - dim im(d^{n-1}) with canonical representatives. On windowed
// input the result is window-relative: cocycles over-approximate and
// coboundaries under-approximate the true graded objects.
CohomologyGroup cohomology(Theory theory, const AlgebraPresentation& g,
                           const Representation& m, long degree,
                           const Context& ctx = {});

struct InvariantForms {
    Subspace space; // vectors over row-major matrix coordinates x*dim + y
    std::vector<BilinearForm> basis;
    bool window_relative = false;
};

// Symmetric forms with phi([x,y],z) = phi(x,[y,z]); windowed algebras
// contribute invariance constraints only for in-window instances.
InvariantForms invariant_forms(const AlgebraPresentation& g, const Context& ctx = {});

// g(alpha)(x,y) = alpha(x,y) + alpha(y,x) for a Leibniz 2-cocycle alpha with
// trivial coefficients. Verifies the cocycle condition and that the result
// is invariant.
BilinearForm map_g(const AlgebraPresentation& g, const Cochain& alpha,
                   const Context& ctx = {});

struct CartanKoszul {
    Cochain cochain;                      // degree-3 alternating, trivial coeffs
    std::optional<SparseVector> h3_class; // class coordinates; absent on windows
    std::shared_ptr<const Representation> owned_coefficients;
};

// h(phi)(x,y,z) = phi([x,y],z) for phi in B(g,K) (symmetry and invariance
// verified). On full algebras also reduces the result to its H^3 class.
CartanKoszul cartan_koszul_h(const AlgebraPresentation& g, const BilinearForm& phi,
                             const Context& ctx = {});

struct ExactnessReport {
    long dim_h2 = 0, dim_hl2 = 0, dim_b = 0, dim_h3 = 0;
    long rank_f = 0, rank_g = 0, rank_h = 0;
    long dim_ker_h = 0;
    bool f_injective = false;
    bool im_f_eq_ker_g = false;
    bool im_g_eq_ker_h = false;
    bool dim_split = false; // dim HL^2 == dim H^2 + dim ker h
};

// Exactness of 0 -> H^2 -> HL^2 -> B(g,K) -> H^3 with the induced maps
// computed on explicit representatives (well-definedness verified, not
// assumed). Rejects windowed and non-lie input.
ExactnessReport verify_exact_sequence(const AlgebraPresentation& g,
                                      const Context& ctx = {});

// phi(h,h) after verifying [x,y]=h, [h,x]=2x, [h,y]=-2y; a nonzero value
// certifies that the Cartan-Koszul image of phi is nonzero in H^3.
Rational sl2_obstruction(const AlgebraPresentation& g, const BilinearForm& phi,
                         const SparseVector& x, const SparseVector& y,
                         const SparseVector& h);

struct DerivationSpaces {
    Subspace der; // kernel of the degree-1 coboundary: d([x,y]) = x.d(y) - y.d(x)
    Subspace inn; // image of the degree-0 coboundary: x -> x.m
    CohomologyGroup h1;
};

DerivationSpaces derivations(const AlgebraPresentation& g, const Representation& m,
                             const Context& ctx = {});

// Derivations g -> g* with phi(x)(y) + phi(y)(x) = 0.
Subspace skew_derivations(const AlgebraPresentation& g, const Context& ctx = {});

struct ThetaResult {
    SparseMatrix matrix; // induced H^1(g,g*) -> HL^2(g,K) on representatives
    bool iso = false;
    CohomologyGroup h1_dual;
    CohomologyGroup hl2;
};

// theta(alpha)(x,y) = alpha(y)(x). Rejects windowed and non-lie input; a
// false iso flag on valid input signals a bug, it is never expected.
ThetaResult theta(const AlgebraPresentation& g, const Context& ctx = {});

// Central extension by a Leibniz 2-cocycle with trivial coefficients:
// basis(g) + {label}, [x,y]_new = [x,y] + alpha(x,y) c, c central. The output
// is lie exactly when g is lie and alpha is alternating; grading and window
// marks survive when alpha respects them.
AlgebraPresentation central_extension(const AlgebraPresentation& g, const Cochain& alpha,
                                      const std::string& label = "c");

struct QuadraticCocycle {
    Cochain cochain; // f(x,y) = phi(x, d(y))
    bool alternating = false;
    std::shared_ptr<const Representation> owned_coefficients;
};

// Cocycle built from an invariant symmetric form and a derivation
// d: g -> g (both verified). Alternating iff phi(dx,y) + phi(x,dy) = 0, in
// which case f is also a Lie 2-cocycle.
QuadraticCocycle cocycle_from_quadratic(const AlgebraPresentation& g,
                                        const BilinearForm& phi, const SparseMatrix& d,
                                        const Context& ctx = {});

} // namespace leibcoh
