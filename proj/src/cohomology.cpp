#include "leibcoh/cohomology.hpp"

#include <utility>

#include "leibcoh/eliminate.hpp"
#include "leibcoh/errors.hpp"

namespace leibcoh {

namespace {

Coboundary coboundary(Theory theory, const AlgebraPresentation& g,
                      const Representation& m, long degree, const Context& ctx) {
    return theory == Theory::leibniz ? leibniz_coboundary(g, m, degree, ctx)
                                     : ce_coboundary(g, m, degree, ctx);
}

void check_form_shape(const AlgebraPresentation& g, const BilinearForm& phi) {
    if (phi.algebra != &g) throw InputError("form belongs to a different algebra");
    if (phi.matrix.rows() != g.dim() || phi.matrix.cols() != g.dim())
        throw DimensionError("form matrix must be dim x dim");
}

void check_trivial_2cochain(const AlgebraPresentation& g, const Cochain& c,
                            const char* what) {
    const CochainSpace& sp = c.space;
    if (sp.algebra != &g || sp.theory != Theory::leibniz || sp.degree != 2 ||
        sp.coefficients == nullptr || sp.coefficients->dim != 1)
        throw InputError(std::string(what) +
                         " expects a degree-2 Leibniz cochain with trivial coefficients");
    if (c.coords.dim() != sp.dimension)
        throw DimensionError("cochain coordinate vector has the wrong dimension");
}

// phi([x,y],z) == phi(x,[y,z]) over instances whose brackets are in-window.
bool invariant_on_window(const AlgebraPresentation& g, const SparseMatrix& m) {
    const long d = g.dim();
    for (long x = 0; x < d; ++x)
        for (long y = 0; y < d; ++y)
            for (long z = 0; z < d; ++z) {
                if (!g.in_window(x, y) || !g.in_window(y, z)) continue;
                Rational lhs = 0, rhs = 0;
                for (const Entry& e : g.bracket(x, y).entries()) lhs += e.val * m.at(e.col, z);
                for (const Entry& e : g.bracket(y, z).entries()) rhs += e.val * m.at(x, e.col);
                if (lhs != rhs) return false;
            }
    return true;
}

// Coordinates of (x,y,z) -> phi([x,y],z) in the increasing-tuple basis.
// Out-of-window brackets contribute no coordinate.
SparseVector cartan_koszul_coords(const AlgebraPresentation& g, const SparseMatrix& phi,
                                  const CochainSpace& c3) {
    SparseVector v(c3.dimension);
    for (long rt = 0; rt < c3.tuple_count; ++rt) {
        const std::vector<long> t = c3.unrank_tuple(rt);
        if (!g.in_window(t[0], t[1])) continue;
        Rational val = 0;
        for (const Entry& e : g.bracket(t[0], t[1]).entries()) val += e.val * phi.at(e.col, t[2]);
        v.set(rt, val);
    }
    return v;
}

// g(alpha) as a matrix over coordinate pairs: row a*dim+b picks up
// alpha(a,b) + alpha(b,a).
SparseMatrix symmetrize_matrix(const AlgebraPresentation& g, const CochainSpace& c2) {
    const long d = g.dim();
    SparseMatrix s(d * d, c2.dimension);
    for (long a = 0; a < d; ++a)
        for (long b = 0; b < d; ++b) {
            s.add(a * d + b, c2.index(0, {a, b}), 1);
            s.add(a * d + b, c2.index(0, {b, a}), 1);
        }
    return s;
}

} // namespace

CohomologyGroup cohomology(Theory theory, const AlgebraPresentation& g,
                           const Representation& m, long degree, const Context& ctx) {
    if (degree < 0) throw InputError("cohomology degree must be nonnegative");
    Coboundary dn = coboundary(theory, g, m, degree, ctx);
    Subspace cocycles = Subspace::span_columns(nullspace(dn.mat, ctx), ctx);
    Subspace coboundaries = Subspace::zero(dn.domain.dimension);
    if (degree > 0) {
        Coboundary dprev = coboundary(theory, g, m, degree - 1, ctx);
        coboundaries = Subspace::span_columns(dprev.mat, ctx);
    }
    if (g.windowed()) coboundaries = coboundaries.intersect(cocycles, ctx);

    CohomologyGroup out;
    out.theory = theory;
    out.degree = degree;
    out.space = dn.domain;
    out.classes = quotient_basis(cocycles, coboundaries, ctx);
    out.dim = out.classes.dim();
    out.window_relative = g.windowed();
    out.representatives.reserve(static_cast<std::size_t>(out.dim));
    for (long j = 0; j < out.dim; ++j)
        out.representatives.push_back(Cochain{out.space, out.classes.representative(j)});
    return out;
}

InvariantForms invariant_forms(const AlgebraPresentation& g, const Context& ctx) {
    const long d = g.dim();
    std::vector<SparseRow> rows;
    for (long x = 0; x < d; ++x)
        for (long y = x + 1; y < d; ++y) {
            SparseVector r(d * d);
            r.set(x * d + y, 1);
            r.set(y * d + x, -1);
            rows.push_back(r.entries());
        }
    for (long x = 0; x < d; ++x) {
        ctx.poll();
        for (long y = 0; y < d; ++y)
            for (long z = 0; z < d; ++z) {
                if (!g.in_window(x, y) || !g.in_window(y, z)) continue;
                SparseVector r(d * d);
                for (const Entry& e : g.bracket(x, y).entries()) r.add(e.col * d + z, e.val);
                for (const Entry& e : g.bracket(y, z).entries()) r.add(x * d + e.col, -e.val);
                if (!r.is_zero()) rows.push_back(r.entries());
            }
    }
    SparseMatrix sys(static_cast<long>(rows.size()), d * d);
    for (long i = 0; i < sys.rows(); ++i) sys.set_row(i, std::move(rows[static_cast<std::size_t>(i)]));

    InvariantForms out;
    out.space = Subspace::span_columns(nullspace(sys, ctx), ctx);
    out.window_relative = g.windowed();
    out.basis.reserve(static_cast<std::size_t>(out.space.dim()));
    for (long i = 0; i < out.space.dim(); ++i) {
        SparseMatrix m(d, d);
        for (const Entry& e : out.space.basis_rows().row(i)) m.set(e.col / d, e.col % d, e.val);
        out.basis.push_back(BilinearForm{&g, std::move(m)});
    }
    return out;
}

BilinearForm map_g(const AlgebraPresentation& g, const Cochain& alpha, const Context& ctx) {
    check_trivial_2cochain(g, alpha, "map g");
    Coboundary d2 = leibniz_coboundary(g, *alpha.space.coefficients, 2, ctx);
    if (!d2.mat.apply(alpha.coords).is_zero())
        throw NotACocycleError("map g applied to a 2-cochain that is not a cocycle");

    const long d = g.dim();
    SparseMatrix m(d, d);
    for (const Entry& e : alpha.coords.entries()) {
        const auto [mu, t] = alpha.space.unindex(e.col);
        m.add(t[0], t[1], e.val);
        m.add(t[1], t[0], e.val);
    }
    if (!invariant_on_window(g, m))
        throw WellDefinednessError("symmetrized cocycle is not an invariant form");
    return BilinearForm{&g, std::move(m)};
}

CartanKoszul cartan_koszul_h(const AlgebraPresentation& g, const BilinearForm& phi,
                             const Context& ctx) {
    check_form_shape(g, phi);
    if (g.kind() != AlgebraKind::lie)
        throw UnsupportedError("Cartan-Koszul map requires a Lie algebra");
    if (!phi.is_symmetric()) throw PreconditionError("form is not symmetric");
    if (!invariant_on_window(g, phi.matrix)) throw PreconditionError("form is not invariant");

    auto triv = std::make_shared<const Representation>(trivial_module(g));
    CartanKoszul out;
    out.owned_coefficients = triv;
    CochainSpace c3 = cochain_space(Theory::chevalley_eilenberg, g, *triv, 3);
    out.cochain = Cochain{c3, cartan_koszul_coords(g, phi.matrix, c3)};
    if (!g.windowed()) {
        CohomologyGroup h3 = cohomology(Theory::chevalley_eilenberg, g, *triv, 3, ctx);
        if (!h3.classes.space.contains(out.cochain.coords))
            throw WellDefinednessError("Cartan-Koszul image is not closed");
        out.h3_class = h3.classes.reduce_vector(out.cochain.coords);
    }
    return out;
}

ExactnessReport verify_exact_sequence(const AlgebraPresentation& g, const Context& ctx) {
    if (g.kind() != AlgebraKind::lie)
        throw UnsupportedError("exact sequence comparison requires a Lie algebra");
    if (g.windowed())
        throw UnsupportedError("exact sequence comparison needs a total bracket, not a window");

    const Representation triv = trivial_module(g);
    CohomologyGroup h2 = cohomology(Theory::chevalley_eilenberg, g, triv, 2, ctx);
    CohomologyGroup hl2 = cohomology(Theory::leibniz, g, triv, 2, ctx);
    CohomologyGroup h3 = cohomology(Theory::chevalley_eilenberg, g, triv, 3, ctx);
    InvariantForms forms = invariant_forms(g, ctx);

    ExactnessReport rep;
    rep.dim_h2 = h2.dim;
    rep.dim_hl2 = hl2.dim;
    rep.dim_b = forms.space.dim();
    rep.dim_h3 = h3.dim;

    SparseMatrix f = induced_quotient_map(skew_embedding(g, triv, 2), h2.classes, hl2.classes);
    rep.rank_f = rank_of(f, ctx);
    rep.f_injective = rep.rank_f == rep.dim_h2;

    SparseMatrix s = symmetrize_matrix(g, hl2.space);
    for (long i = 0; i < hl2.classes.sub.dim(); ++i)
        if (!s.apply(hl2.classes.sub.basis_rows().row_vector(i)).is_zero())
            throw WellDefinednessError("a Leibniz coboundary maps to a nonzero form");
    SparseMatrix gm(rep.dim_b, rep.dim_hl2);
    for (long j = 0; j < rep.dim_hl2; ++j) {
        SparseVector w = s.apply(hl2.classes.representative(j));
        SparseVector coords;
        try {
            coords = forms.space.coordinates(w);
        } catch (const ContainmentError&) {
            throw WellDefinednessError("symmetrized representative is not invariant");
        }
        for (const Entry& e : coords.entries()) gm.set(e.col, j, e.val);
    }
    rep.rank_g = rank_of(gm, ctx);

    CochainSpace c3 = cochain_space(Theory::chevalley_eilenberg, g, triv, 3);
    SparseMatrix hm(rep.dim_h3, rep.dim_b);
    for (long i = 0; i < rep.dim_b; ++i) {
        SparseVector v = cartan_koszul_coords(g, forms.basis[static_cast<std::size_t>(i)].matrix, c3);
        if (!h3.classes.space.contains(v))
            throw WellDefinednessError("Cartan-Koszul image is not closed");
        SparseVector cls = h3.classes.reduce_vector(v);
        for (const Entry& e : cls.entries()) hm.set(e.col, i, e.val);
    }
    rep.rank_h = rank_of(hm, ctx);
    rep.dim_ker_h = rep.dim_b - rep.rank_h;

    Subspace im_f = Subspace::span_columns(f, ctx);
    Subspace ker_g = Subspace::span_columns(nullspace(gm, ctx), ctx);
    rep.im_f_eq_ker_g = im_f == ker_g;
    Subspace im_g = Subspace::span_columns(gm, ctx);
    Subspace ker_h = Subspace::span_columns(nullspace(hm, ctx), ctx);
    rep.im_g_eq_ker_h = im_g == ker_h;
    rep.dim_split = rep.dim_hl2 == rep.dim_h2 + rep.dim_ker_h;
    return rep;
}

Rational sl2_obstruction(const AlgebraPresentation& g, const BilinearForm& phi,
                         const SparseVector& x, const SparseVector& y,
                         const SparseVector& h) {
    check_form_shape(g, phi);
    if (x.dim() != g.dim() || y.dim() != g.dim() || h.dim() != g.dim())
        throw DimensionError("triple vectors must live in the algebra");
    if (!(g.bracket(x, y) == h))
        throw PreconditionError("triple does not satisfy [x,y] = h");
    SparseVector x2 = x;
    x2.scale(2);
    if (!(g.bracket(h, x) == x2))
        throw PreconditionError("triple does not satisfy [h,x] = 2x");
    SparseVector y2 = y;
    y2.scale(-2);
    if (!(g.bracket(h, y) == y2))
        throw PreconditionError("triple does not satisfy [h,y] = -2y");
    return row_dot(h.entries(), phi.matrix.apply(h).entries());
}

DerivationSpaces derivations(const AlgebraPresentation& g, const Representation& m,
                             const Context& ctx) {
    DerivationSpaces out;
    out.h1 = cohomology(Theory::chevalley_eilenberg, g, m, 1, ctx);
    out.der = out.h1.classes.space;
    out.inn = out.h1.classes.sub;
    return out;
}

Subspace skew_derivations(const AlgebraPresentation& g, const Context& ctx) {
    const Representation dual = dual_module(g);
    Coboundary d1 = ce_coboundary(g, dual, 1, ctx);
    const long d = g.dim();
    SparseMatrix skew(d * (d + 1) / 2, d * d);
    long r = 0;
    for (long x = 0; x < d; ++x)
        for (long y = x; y < d; ++y, ++r) {
            skew.add(r, y * d + x, 1);
            skew.add(r, x * d + y, 1);
        }
    return Subspace::span_columns(nullspace(d1.mat.vstack(skew), ctx), ctx);
}

ThetaResult theta(const AlgebraPresentation& g, const Context& ctx) {
    if (g.kind() != AlgebraKind::lie) throw UnsupportedError("theta requires a Lie algebra");
    if (g.windowed())
        throw UnsupportedError("theta needs a total bracket, not a window");

    auto dual = std::make_shared<const Representation>(dual_module(g));
    auto triv = std::make_shared<const Representation>(trivial_module(g));
    ThetaResult out;
    out.h1_dual = cohomology(Theory::chevalley_eilenberg, g, *dual, 1, ctx);
    out.h1_dual.owned_coefficients = dual;
    out.hl2 = cohomology(Theory::leibniz, g, *triv, 2, ctx);
    out.hl2.owned_coefficients = triv;

    const long d = g.dim();
    SparseMatrix t(out.hl2.space.dimension, out.h1_dual.space.dimension);
    for (long x = 0; x < d; ++x)
        for (long y = 0; y < d; ++y) t.set(out.hl2.space.index(0, {x, y}), x * d + y, 1);
    out.matrix = induced_quotient_map(t, out.h1_dual.classes, out.hl2.classes);
    out.iso = out.h1_dual.dim == out.hl2.dim && rank_of(out.matrix, ctx) == out.hl2.dim;
    return out;
}

AlgebraPresentation central_extension(const AlgebraPresentation& g, const Cochain& alpha,
                                      const std::string& label) {
    check_trivial_2cochain(g, alpha, "central extension");
    Coboundary d2 = leibniz_coboundary(g, *alpha.space.coefficients, 2);
    if (!d2.mat.apply(alpha.coords).is_zero())
        throw NotACocycleError("extension cocycle fails the cocycle identity");

    const long d = g.dim();
    const CochainSpace& sp = alpha.space;
    for (const Entry& e : alpha.coords.entries()) {
        const auto [mu, t] = sp.unindex(e.col);
        if (!g.in_window(t[0], t[1]))
            throw InputError("extension cocycle is supported on an out-of-window pair");
    }
    auto aval = [&](long a, long b) { return alpha.coords.at(sp.index(0, {a, b})); };

    bool alternating = true;
    for (long a = 0; a < d && alternating; ++a)
        for (long b = a; b < d; ++b)
            if (aval(a, b) != -aval(b, a)) {
                alternating = false;
                break;
            }
    const AlgebraKind kind =
        g.kind() == AlgebraKind::lie && alternating ? AlgebraKind::lie : AlgebraKind::leibniz;

    std::vector<std::string> labels = g.basis();
    for (const std::string& l : labels)
        if (l == label) throw InputError("central element label '" + label + "' is taken");
    labels.push_back(label);

    AlgebraPresentation ext(g.name() + "_ext", kind, std::move(labels));
    if (g.graded()) {
        bool degree_zero = true;
        for (const Entry& e : alpha.coords.entries()) {
            const auto [mu, t] = sp.unindex(e.col);
            const Degree& da = g.degree(t[0]);
            const Degree& db = g.degree(t[1]);
            for (std::size_t i = 0; i < da.size(); ++i)
                if (da[i] + db[i] != 0) degree_zero = false;
        }
        if (degree_zero) {
            std::vector<Degree> degrees;
            degrees.reserve(static_cast<std::size_t>(d) + 1);
            for (long i = 0; i < d; ++i) degrees.push_back(g.degree(i));
            degrees.emplace_back(static_cast<std::size_t>(g.grading_arity()), 0);
            ext.set_grading(std::move(degrees));
        }
    }
    for (long a = 0; a < d; ++a)
        for (long b = kind == AlgebraKind::lie ? a + 1 : 0; b < d; ++b) {
            if (!g.in_window(a, b)) continue;
            for (const Entry& e : g.bracket(a, b).entries()) ext.add_bracket_term(a, b, e.col, e.val);
            const Rational v = aval(a, b);
            if (v != 0) ext.add_bracket_term(a, b, d, v);
        }
    if (g.windowed()) {
        for (long a = 0; a < d; ++a)
            for (long b = kind == AlgebraKind::lie ? a + 1 : 0; b < d; ++b)
                if (!g.in_window(a, b)) ext.set_out_of_window(a, b);
        if (g.window()) ext.set_window(*g.window());
    }
    return ext;
}

QuadraticCocycle cocycle_from_quadratic(const AlgebraPresentation& g,
                                        const BilinearForm& phi, const SparseMatrix& d,
                                        const Context& ctx) {
    check_form_shape(g, phi);
    const long n = g.dim();
    if (d.rows() != n || d.cols() != n)
        throw DimensionError("derivation matrix must be dim x dim");
    if (!phi.is_symmetric()) throw PreconditionError("form is not symmetric");
    if (!invariant_on_window(g, phi.matrix)) throw PreconditionError("form is not invariant");

    std::vector<SparseVector> cols;
    cols.reserve(static_cast<std::size_t>(n));
    for (long a = 0; a < n; ++a) cols.push_back(d.column_vector(a));
    for (long a = 0; a < n; ++a) {
        ctx.poll();
        for (long b = 0; b < n; ++b) {
            if (!g.in_window(a, b)) continue;
            SparseVector rhs(n);
            bool checkable = true;
            for (const Entry& e : cols[static_cast<std::size_t>(a)].entries()) {
                if (!g.in_window(e.col, b)) {
                    checkable = false;
                    break;
                }
                rhs.axpy(e.val, g.bracket(e.col, b));
            }
            for (const Entry& e : cols[static_cast<std::size_t>(b)].entries()) {
                if (!checkable) break;
                if (!g.in_window(a, e.col)) {
                    checkable = false;
                    break;
                }
                rhs.axpy(e.val, g.bracket(a, e.col));
            }
            if (!checkable) continue;
            if (!(d.apply(g.bracket(a, b)) == rhs))
                throw PreconditionError("matrix is not a derivation");
        }
    }

    const SparseMatrix p = phi.matrix.multiply(d);
    auto triv = std::make_shared<const Representation>(trivial_module(g));
    CochainSpace c2 = cochain_space(Theory::leibniz, g, *triv, 2);
    SparseVector coords(c2.dimension);
    for (long a = 0; a < n; ++a)
        for (const Entry& e : p.row(a)) coords.set(c2.index(0, {a, e.col}), e.val);

    QuadraticCocycle out;
    out.cochain = Cochain{c2, std::move(coords)};
    out.owned_coefficients = triv;
    out.alternating = true;
    for (long a = 0; a < n && out.alternating; ++a)
        for (long b = a; b < n; ++b)
            if (p.at(a, b) + p.at(b, a) != 0) {
                out.alternating = false;
                break;
            }
    return out;
}

} // namespace leibcoh
