// Acceptance gate: one pass/fail line per criterion. All value checks are
// exact rational equalities (tolerance zero); the only numeric slack is the
// per-criterion wall-clock budget printed on each line.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "leibcoh/catalog.hpp"
#include "leibcoh/cochain.hpp"
#include "leibcoh/cohomology.hpp"
#include "leibcoh/eliminate.hpp"
#include "leibcoh/errors.hpp"
#include "leibcoh/json_io.hpp"
#include "oracle.hpp"

using namespace leibcoh;

namespace {

struct Failure {
    std::string msg;
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw Failure{msg};
}

int g_failures = 0;

void criterion(int id, const char* label, long budget_ms,
               const std::function<void()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    std::string msg;
    bool ok = true;
    try {
        body();
    } catch (const Failure& f) {
        ok = false;
        msg = f.msg;
    } catch (const std::exception& e) {
        ok = false;
        msg = std::string("exception: ") + e.what();
    }
    const long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    if (ok && ms > budget_ms) {
        ok = false;
        msg = "time budget exceeded";
    }
    std::printf("%s %2d/13 %s [%ld ms <= %ld ms]%s%s\n", ok ? "PASS" : "FAIL", id,
                label, ms, budget_ms, msg.empty() ? "" : " -- ", msg.c_str());
    std::fflush(stdout);
    if (!ok) ++g_failures;
}

long ix(const AlgebraPresentation& g, const std::string& label) {
    return g.index_of(label);
}

oracle::Consts to_consts(const AlgebraPresentation& a) {
    oracle::Consts g;
    g.dim = static_cast<int>(a.dim());
    for (long i = 0; i < a.dim(); ++i)
        for (long j = 0; j < a.dim(); ++j)
            for (const Entry& e : a.bracket(i, j).entries())
                g.set(static_cast<int>(i), static_cast<int>(j),
                      static_cast<int>(e.col), e.val);
    return g;
}

std::vector<AlgebraPresentation> finite_catalog() {
    std::vector<AlgebraPresentation> out;
    out.push_back(catalog("sl2", {}));
    out.push_back(catalog("sl3", {}));
    for (long n = 2; n <= 4; ++n) {
        CatalogParams p;
        p.n = n;
        out.push_back(catalog("abelian", p));
    }
    out.push_back(catalog("heisenberg3", {}));
    out.push_back(catalog("affine1", {}));
    return out;
}

bool closed2(const AlgebraPresentation& g, const Representation& triv,
             const Cochain& c) {
    return leibniz_coboundary(g, triv, 2).mat.apply(c.coords).is_zero();
}

// Admissible rows reproduce exact full-algebra identity instances; the
// infeasibility of the restricted system is therefore window-independent.
std::pair<SparseMatrix, SparseVector> admissible_system(const Coboundary& d,
                                                        const SparseVector& rhs) {
    std::vector<long> keep;
    for (long r = 0; r < d.mat.rows(); ++r)
        if (d.row_admissible(r)) keep.push_back(r);
    SparseMatrix m(static_cast<long>(keep.size()), d.mat.cols());
    SparseVector b(static_cast<long>(keep.size()));
    for (long k = 0; k < static_cast<long>(keep.size()); ++k) {
        for (const Entry& e : d.mat.row(keep[k])) m.set(k, e.col, e.val);
        const Rational v = rhs.at(keep[k]);
        if (v != 0) b.set(k, v);
    }
    return {std::move(m), std::move(b)};
}

void composite_suite(const AlgebraPresentation& a, const Representation& m,
                     long& deep_total) {
    const std::vector<Theory> theories =
        a.kind() == AlgebraKind::lie
            ? std::vector<Theory>{Theory::leibniz, Theory::chevalley_eilenberg}
            : std::vector<Theory>{Theory::leibniz};
    for (Theory th : theories)
        for (long n = 0; n <= 2; ++n) {
            const CompositeReport r = composite_check(th, a, m, n);
            require(r.zero_on_deep_rows,
                    a.name() + ": d^" + std::to_string(n + 1) + " d^" +
                        std::to_string(n) + " != 0");
            if (!a.windowed())
                require(r.deep_rows == r.rows, a.name() + ": full algebra skipped rows");
            deep_total += r.deep_rows;
        }
}

void c01_composites() {
    long deep = 0;
    for (const AlgebraPresentation& a : finite_catalog()) {
        const Representation triv = trivial_module(a);
        composite_suite(a, triv, deep);
        const Representation dual = dual_module(a);
        composite_suite(a, dual, deep);
    }
    struct Item {
        const char* name;
        long window, order, dual_window;
    };
    // order <= 3, radius <= 4; dual coefficients blow the module dimension up
    // by dim(g), so those runs use smaller radii. diffops is order-truncated,
    // hence not degree-saturated and carries no dual module.
    const std::vector<Item> windows = {
        {"witt_window", 4, 1, 4},          {"hvir_base_window", 3, 1, 2},
        {"hvir_window", 3, 1, 2},          {"diffops_window", 3, 3, 0},
        {"block_window", 2, 1, 1},         {"virasoro_like_window", 2, 1, 1},
        {"q_virasoro_like_window", 2, 1, 1}, {"loop_window", 3, 1, 2}};
    for (const Item& it : windows) {
        CatalogParams p;
        p.window = it.window;
        p.order = it.order;
        const AlgebraPresentation a = catalog(it.name, p);
        const Representation triv = trivial_module(a);
        composite_suite(a, triv, deep);
        if (it.dual_window > 0) {
            CatalogParams pd = p;
            pd.window = it.dual_window;
            const AlgebraPresentation ad = catalog(it.name, pd);
            const Representation dual = dual_module(ad);
            composite_suite(ad, dual, deep);
        }
    }
    require(deep > 0, "no deep rows exercised");
}

void c02_low_degree_agreement() {
    for (const AlgebraPresentation& a : finite_catalog()) {
        const Representation triv = trivial_module(a);
        const Representation dual = dual_module(a);
        for (long n = 0; n <= 1; ++n) {
            for (const Representation* m : {&triv, &dual}) {
                const long hl = cohomology(Theory::leibniz, a, *m, n).dim;
                const long h = cohomology(Theory::chevalley_eilenberg, a, *m, n).dim;
                require(hl == h, a.name() + ": HL^" + std::to_string(n) +
                                     " != H^" + std::to_string(n));
            }
        }
    }
}

void c03_simple_vanishing() {
    for (const char* name : {"sl2", "sl3"}) {
        const AlgebraPresentation a = catalog(name, {});
        const Representation triv = trivial_module(a);
        require(cohomology(Theory::leibniz, a, triv, 2).dim == 0,
                std::string(name) + ": HL^2 != 0");
        require(cohomology(Theory::chevalley_eilenberg, a, triv, 2).dim == 0,
                std::string(name) + ": H^2 != 0");
        require(invariant_forms(a).space.dim() == 1,
                std::string(name) + ": dim B != 1");
    }
}

void c04_abelian_counts() {
    for (long n = 2; n <= 4; ++n) {
        CatalogParams p;
        p.n = n;
        const AlgebraPresentation a = catalog("abelian", p);
        const ExactnessReport r = verify_exact_sequence(a);
        const std::string tag = a.name() + ": ";
        require(r.dim_h2 == n * (n - 1) / 2, tag + "dim H^2");
        require(r.dim_hl2 == n * n, tag + "dim HL^2");
        require(r.dim_b == n * (n + 1) / 2, tag + "dim B");
        require(r.dim_ker_h == r.dim_b, tag + "ker h != B");
        require(r.dim_hl2 == r.dim_h2 + r.dim_b, tag + "n^2 split");
    }
}

void c05_exact_sequence() {
    for (const AlgebraPresentation& a : finite_catalog()) {
        const ExactnessReport r = verify_exact_sequence(a);
        const std::string tag = a.name() + ": ";
        require(r.f_injective, tag + "f not injective");
        require(r.im_f_eq_ker_g, tag + "im f != ker g");
        require(r.im_g_eq_ker_h, tag + "im g != ker h");
        require(r.dim_split, tag + "dim HL^2 != dim H^2 + dim ker h");
        const oracle::Consts c = to_consts(a);
        require(r.dim_h2 == oracle::dim_h(c, 2), tag + "H^2 vs oracle");
        require(r.dim_hl2 == oracle::dim_hl(c, 2), tag + "HL^2 vs oracle");
        require(r.dim_b == oracle::dim_b(c), tag + "B vs oracle");
        require(r.dim_h3 == oracle::dim_h(c, 3), tag + "H^3 vs oracle");
        require(r.dim_ker_h == oracle::dim_ker_cartan_koszul(c), tag + "ker h vs oracle");
    }
}

void c06_theta_and_derivations() {
    for (const AlgebraPresentation& a : finite_catalog()) {
        const std::string tag = a.name() + ": ";
        const ThetaResult t = theta(a);
        require(t.iso, tag + "theta not bijective");
        require(t.matrix.rows() == t.matrix.cols(), tag + "theta not square");
        require(rank_of(t.matrix) == t.matrix.rows(), tag + "theta not full rank");
        const Representation dual = dual_module(a);
        const long der = derivations(a, dual).der.dim();
        const long sder = skew_derivations(a).dim();
        const ExactnessReport r = verify_exact_sequence(a);
        require(der - sder == r.dim_hl2 - r.dim_h2, tag + "derivation identity");
        const oracle::Consts c = to_consts(a);
        require(der == oracle::dim_der_dual(c), tag + "Der vs oracle");
        require(sder == oracle::dim_sder_dual(c), tag + "SDer vs oracle");
    }
}

void c07_virasoro_cocycle() {
    CatalogParams p;
    p.window = 6;
    const AlgebraPresentation w = catalog("witt_window", p);
    const Representation triv = trivial_module(w);
    const Cochain alpha = virasoro_cocycle(w, triv);
    require(closed2(w, triv, alpha), "d alpha != 0 on admissible rows");
    require(alpha.value(0, {ix(w, "L2"), ix(w, "L-2")}) == Rational(1, 2),
            "alpha(L2, L-2) != 1/2");
    require(alpha.value(0, {ix(w, "L-2"), ix(w, "L2")}) == Rational(-1, 2),
            "alpha not alternating");
    const Coboundary d1 = leibniz_coboundary(w, triv, 1);
    for (const Entry& e : alpha.coords.entries())
        require(d1.row_admissible(e.col), "alpha supported outside admissible rows");
    const auto [m, b] = admissible_system(d1, alpha.coords);
    require(!solve(m, b).has_value(), "alpha is a windowed coboundary");
}

void c08_psi_and_hvir_triple() {
    CatalogParams pd;
    pd.window = 4;
    pd.order = 3;
    const AlgebraPresentation d = catalog("diffops_window", pd);
    const Representation dtriv = trivial_module(d);
    const Cochain psi = w1inf_psi(d, dtriv);
    require(!psi.coords.is_zero(), "psi vanished");
    require(closed2(d, dtriv, psi), "d psi != 0 on admissible rows");

    CatalogParams ph;
    ph.window = 5;
    const AlgebraPresentation h = catalog("hvir_base_window", ph);
    const Representation htriv = trivial_module(h);
    const HvirCocycles t = hvir_cocycles(h, htriv);
    for (const Cochain* c : {&t.ii, &t.ll, &t.li})
        require(closed2(h, htriv, *c), "a central cocycle is not closed");
    const Coboundary d1 = leibniz_coboundary(h, htriv, 1);
    const Subspace b = Subspace::span_columns(d1.mat);
    const Subspace sum = b.sum(Subspace::span(
        t.ii.space.dimension, {t.ii.coords, t.ll.coords, t.li.coords}));
    require(sum.dim() == b.dim() + 3, "triple rank mod coboundaries != 3");
}

void c09_no_invariant_forms() {
    for (long n = 3; n <= 5; ++n) {
        for (const char* name : {"witt_window", "hvir_base_window"}) {
            CatalogParams p;
            p.window = n;
            require(invariant_forms(catalog(name, p)).space.dim() == 0,
                    std::string(name) + "(" + std::to_string(n) + "): forms != 0");
        }
    }
}

void c10_block_obstruction() {
    CatalogParams p;
    p.window = 3;
    const AlgebraPresentation bl = catalog("virasoro_like_window", p);
    const BilinearForm alpha = block_form(bl);
    require(alpha.is_symmetric(), "form not symmetric");
    SparseVector flat(bl.dim() * bl.dim());
    for (long r = 0; r < alpha.matrix.rows(); ++r)
        for (const Entry& e : alpha.matrix.row(r)) flat.set(r * bl.dim() + e.col, e.val);
    require(invariant_forms(bl).space.contains(flat), "form not invariant");
    const CartanKoszul h = cartan_koszul_h(bl, alpha);
    require(!h.cochain.coords.is_zero(), "h(alpha) vanished");
    require(!h.h3_class.has_value(), "windowed input produced a class");
    const Representation triv = trivial_module(bl);
    const Coboundary d2 = ce_coboundary(bl, triv, 2);
    const auto [m, b] = admissible_system(d2, h.cochain.coords);
    require(!b.is_zero(), "obstruction lost by row restriction");
    require(!solve(m, b).has_value(), "h(alpha) is a windowed coboundary");
}

void c11_loop_counterexample() {
    CatalogParams p;
    p.window = 3;
    const AlgebraPresentation l = catalog("loop_window", p);
    const Representation triv = trivial_module(l);
    const Cochain f = loop_51(l, triv, 1);
    require(closed2(l, triv, f), "loop cocycle not closed");
    const BilinearForm g = map_g(l, f);
    bool nonzero = false;
    for (long r = 0; r < g.matrix.rows() && !nonzero; ++r)
        nonzero = !g.matrix.row(r).empty();
    require(nonzero, "symmetrization vanished: cocycle would be alternating");
}

void c12_random_quadratic_pairs() {
    std::mt19937 rng(20260814u);
    std::uniform_int_distribution<int> coeff(-3, 3);
    bool saw_skew = false, saw_nonskew = false;
    for (const char* name : {"sl2", "heisenberg3"}) {
        const AlgebraPresentation g = catalog(name, {});
        const long dim = g.dim();
        const Representation adj = adjoint_module(g);
        const Subspace der = derivations(g, adj).der;
        const std::vector<BilinearForm> forms = invariant_forms(g).basis;
        const Representation triv = trivial_module(g);
        for (int trial = 0; trial < 100; ++trial) {
            SparseMatrix phi_m(dim, dim), d_m(dim, dim);
            for (const BilinearForm& f : forms) {
                const int c = coeff(rng);
                if (c == 0) continue;
                for (long r = 0; r < dim; ++r)
                    for (const Entry& e : f.matrix.row(r))
                        phi_m.set(r, e.col, phi_m.at(r, e.col) + c * e.val);
            }
            const SparseMatrix basis = der.basis_rows();
            for (long r = 0; r < basis.rows(); ++r) {
                const int c = coeff(rng);
                if (c == 0) continue;
                for (const Entry& e : basis.row(r))
                    d_m.set(e.col / dim, e.col % dim,
                            d_m.at(e.col / dim, e.col % dim) + c * e.val);
            }
            const BilinearForm phi{&g, phi_m};
            const QuadraticCocycle qc = cocycle_from_quadratic(g, phi, d_m);
            require(closed2(g, triv, qc.cochain),
                    std::string(name) + ": quadratic cocycle not closed");
            bool skew = true;
            for (long a = 0; a < dim && skew; ++a)
                for (long b = 0; b < dim && skew; ++b) {
                    Rational s = 0;
                    for (long k = 0; k < dim; ++k)
                        s += d_m.at(k, a) * phi_m.at(k, b) +
                             phi_m.at(a, k) * d_m.at(k, b);
                    if (s != 0) skew = false;
                }
            (skew ? saw_skew : saw_nonskew) = true;
            if (skew)
                require(qc.alternating,
                        std::string(name) + ": skew pair gave a non-alternating cocycle");
        }
    }
    require(saw_skew && saw_nonskew, "sampling never hit both branches");
}

void c13_central_extensions() {
    CatalogParams p;
    p.window = 6;
    const AlgebraPresentation w = catalog("witt_window", p);
    const Representation wtriv = trivial_module(w);
    const AlgebraPresentation ext = central_extension(w, virasoro_cocycle(w, wtriv), "C");
    require(ext.kind() == AlgebraKind::lie, "virasoro extension lost lie kind");
    require(ext.windowed(), "virasoro extension lost the window");
    require(validate(ext).valid, "virasoro extension invalid");
    const long c = ix(ext, "C");
    for (long i = 0; i < ext.dim(); ++i) {
        if (ext.in_window(i, c))
            require(ext.bracket(i, c).is_zero() && ext.bracket(c, i).is_zero(),
                    "central element brackets nonzero");
    }
    const AlgebraPresentation back =
        parse_algebra_text(algebra_to_json(ext), "roundtrip");
    require(same_presentation(ext, back), "extension does not round trip");

    CatalogParams p1;
    p1.n = 1;
    const AlgebraPresentation ab = catalog("abelian", p1);
    const Representation atriv = trivial_module(ab);
    const CochainSpace sp = cochain_space(Theory::leibniz, ab, atriv, 2);
    SparseVector coords(sp.dimension);
    coords.set(sp.index(0, {0, 0}), 1);
    const AlgebraPresentation sq = central_extension(ab, Cochain{sp, coords}, "c");
    require(sq.kind() == AlgebraKind::leibniz, "square extension is not leibniz");
    require(validate(sq).valid, "square extension invalid");
    require(!sq.bracket(0, 0).is_zero(), "square extension lost [x,x]");
}

} // namespace

int main() {
    criterion(1, "composite coboundaries vanish exactly across the catalog", 60000,
              c01_composites);
    criterion(2, "leibniz and lie cohomology agree in degrees 0 and 1", 10000,
              c02_low_degree_agreement);
    criterion(3, "simple algebras have HL^2 = H^2 = 0 and one invariant form", 5000,
              c03_simple_vanishing);
    criterion(4, "abelian algebras match the closed-form counts", 10000,
              c04_abelian_counts);
    criterion(5, "four-term sequence exact, dimensions match the dense oracle", 30000,
              c05_exact_sequence);
    criterion(6, "theta bijective and the derivation dimension identity holds", 30000,
              c06_theta_and_derivations);
    criterion(7, "virasoro cocycle closed, normalized, not a windowed coboundary",
              10000, c07_virasoro_cocycle);
    criterion(8, "psi and the central triple closed; triple rank 3 mod coboundaries",
              60000, c08_psi_and_hvir_triple);
    criterion(9, "witt and base windows carry no invariant forms", 10000,
              c09_no_invariant_forms);
    criterion(10, "block form invariant; its degree-3 image is not a coboundary",
              60000, c10_block_obstruction);
    criterion(11, "loop cocycle closed with nonzero symmetrization", 10000,
              c11_loop_counterexample);
    criterion(12, "random quadratic pairs close; skew pairs are alternating", 30000,
              c12_random_quadratic_pairs);
    criterion(13, "central extensions validate and round trip", 10000,
              c13_central_extensions);
    if (g_failures == 0)
        std::printf("ACCEPTANCE: all 13 criteria passed\n");
    else
        std::printf("ACCEPTANCE: %d criterion(s) failed\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
