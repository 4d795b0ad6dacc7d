#include "leibcoh/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "leibcoh/eliminate.hpp"
#include "leibcoh/errors.hpp"

namespace leibcoh {

namespace {

Rational int_pow(const Rational& q, long e) {
    if (e == 0) return 1;
    const unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    Integer nu, de;
    mpz_pow_ui(nu.get_mpz_t(), q.get_num_mpz_t(), a);
    mpz_pow_ui(de.get_mpz_t(), q.get_den_mpz_t(), a);
    if (e < 0) std::swap(nu, de);
    if (de == 0) throw InputError("zero raised to a negative power");
    Rational r(nu, de);
    r.canonicalize();
    return r;
}

Rational factorial(long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

// binom(a, k) for any integer a, k >= 0
Rational gbinom(long a, long k) {
    if (k < 0) return 0;
    Rational num = 1;
    for (long i = 0; i < k; ++i) num *= a - i;
    return num / factorial(k);
}

using DMat = std::vector<std::vector<Rational>>;

DMat dmat(long n) { return DMat(n, std::vector<Rational>(n, 0)); }

DMat commutator(const DMat& a, const DMat& b) {
    const long n = static_cast<long>(a.size());
    DMat c = dmat(n);
    for (long i = 0; i < n; ++i)
        for (long k = 0; k < n; ++k)
            for (long j = 0; j < n; ++j)
                c[i][j] += a[i][k] * b[k][j] - b[i][k] * a[k][j];
    return c;
}

SparseVector vectorize(const DMat& m) {
    const long n = static_cast<long>(m.size());
    SparseVector v(n * n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) v.set(i * n + j, m[i][j]);
    return v;
}

AlgebraPresentation from_matrices(const std::string& name,
                                  const std::vector<std::string>& labels,
                                  const std::vector<DMat>& basis) {
    const long d = static_cast<long>(basis.size());
    const long n = static_cast<long>(basis[0].size());
    SparseMatrix span(n * n, d);
    for (long c = 0; c < d; ++c) {
        const SparseVector v = vectorize(basis[static_cast<std::size_t>(c)]);
        for (const Entry& e : v.entries()) span.set(e.col, c, e.val);
    }

    AlgebraPresentation a(name, AlgebraKind::lie, labels);
    for (long i = 0; i < d; ++i)
        for (long j = i + 1; j < d; ++j) {
            auto coords = solve(span, vectorize(commutator(basis[i], basis[j])));
            if (!coords) throw Error("matrix realization does not close");
            for (const Entry& e : coords->entries()) a.add_bracket_term(i, j, e.col, e.val);
        }
    return a;
}

AlgebraPresentation make_sl2() {
    DMat e = dmat(2), f = dmat(2), h = dmat(2);
    e[0][1] = 1;
    f[1][0] = 1;
    h[0][0] = 1;
    h[1][1] = -1;
    return from_matrices("sl2", {"e", "f", "h"}, {e, f, h});
}

AlgebraPresentation make_sl3() {
    auto unit = [](long i, long j) {
        DMat m = dmat(3);
        m[i][j] = 1;
        return m;
    };
    DMat h1 = dmat(3), h2 = dmat(3);
    h1[0][0] = 1;
    h1[1][1] = -1;
    h2[1][1] = 1;
    h2[2][2] = -1;
    return from_matrices(
        "sl3", {"e1", "e2", "e12", "f1", "f2", "f12", "h1", "h2"},
        {unit(0, 1), unit(1, 2), unit(0, 2), unit(1, 0), unit(2, 1), unit(2, 0), h1, h2});
}

AlgebraPresentation make_abelian(long n) {
    if (n < 1) throw InputError("abelian rank must be at least 1");
    std::vector<std::string> labels;
    for (long i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i));
    return AlgebraPresentation("abelian(" + std::to_string(n) + ")", AlgebraKind::lie,
                               labels);
}

AlgebraPresentation make_heisenberg3() {
    AlgebraPresentation a("heisenberg3", AlgebraKind::lie, {"x", "y", "z"});
    a.add_bracket_term(0, 1, 2, 1);
    return a;
}

AlgebraPresentation make_affine1() {
    AlgebraPresentation a("affine1", AlgebraKind::lie, {"x", "y"});
    a.add_bracket_term(0, 1, 1, 1);
    return a;
}

long require_window(const CatalogParams& p) {
    if (p.window < 1) throw InputError("window radius must be at least 1");
    return p.window;
}

AlgebraPresentation make_witt(long radius) {
    std::vector<std::string> labels;
    std::vector<Degree> degs;
    for (long m = -radius; m <= radius; ++m) {
        labels.push_back("L" + std::to_string(m));
        degs.push_back({m});
    }
    AlgebraPresentation a("witt_window(" + std::to_string(radius) + ")",
                          AlgebraKind::lie, labels);
    auto idx = [&](long m) { return m + radius; };
    for (long m = -radius; m <= radius; ++m)
        for (long n = m + 1; n <= radius; ++n) {
            if (std::labs(m + n) > radius)
                a.set_out_of_window(idx(m), idx(n));
            else
                a.add_bracket_term(idx(m), idx(n), idx(m + n), m - n);
        }
    a.set_grading(degs);
    a.set_window({radius, true});
    return a;
}

AlgebraPresentation make_hvir(long radius, bool with_center) {
    const long span = 2 * radius + 1;
    std::vector<std::string> labels;
    std::vector<Degree> degs;
    for (long m = -radius; m <= radius; ++m) {
        labels.push_back("L" + std::to_string(m));
        degs.push_back({m});
    }
    for (long m = -radius; m <= radius; ++m) {
        labels.push_back("I" + std::to_string(m));
        degs.push_back({m});
    }
    if (with_center)
        for (const char* c : {"C_I", "C_L", "C_LI"}) {
            labels.push_back(c);
            degs.push_back({0});
        }
    std::string name = with_center ? "hvir_window(" : "hvir_base_window(";
    AlgebraPresentation a(name + std::to_string(radius) + ")", AlgebraKind::lie, labels);
    auto lidx = [&](long m) { return m + radius; };
    auto iidx = [&](long m) { return span + m + radius; };
    const long ci = 2 * span, cl = 2 * span + 1, cli = 2 * span + 2;

    for (long m = -radius; m <= radius; ++m)
        for (long n = m + 1; n <= radius; ++n) {
            if (std::labs(m + n) > radius) {
                a.set_out_of_window(lidx(m), lidx(n));
            } else {
                a.add_bracket_term(lidx(m), lidx(n), lidx(m + n), m - n);
                if (with_center && m + n == 0)
                    a.add_bracket_term(lidx(m), lidx(n), cl, Rational(m * m * m - m, 12));
            }
        }
    for (long m = -radius; m <= radius; ++m)
        for (long n = -radius; n <= radius; ++n) {
            if (std::labs(m + n) > radius) {
                if (n != 0) a.set_out_of_window(lidx(m), iidx(n));
                continue;
            }
            if (n != 0) a.add_bracket_term(lidx(m), iidx(n), iidx(m + n), -n);
            if (with_center && m + n == 0)
                a.add_bracket_term(lidx(m), iidx(n), cli, m * m - m);
        }
    if (with_center)
        for (long m = -radius; m < 0; ++m)
            a.add_bracket_term(iidx(m), iidx(-m), ci, -m);
    a.set_grading(degs);
    a.set_window({radius, true});
    return a;
}

AlgebraPresentation make_diffops(long radius, long order) {
    if (order < 1) throw InputError("order bound must be at least 1");
    std::vector<std::string> labels;
    std::vector<Degree> degs;
    for (long m = -radius; m <= radius; ++m)
        for (long r = 0; r <= order; ++r) {
            labels.push_back("t" + std::to_string(m) + "d" + std::to_string(r));
            degs.push_back({m});
        }
    AlgebraPresentation a("diffops_window(" + std::to_string(radius) + "," +
                              std::to_string(order) + ")",
                          AlgebraKind::lie, labels);
    auto idx = [&](long m, long r) { return (m + radius) * (order + 1) + r; };

    // [t^m D^r, t^n D^s] = t^{m+n} ((D+n)^r D^s - (D+m)^s D^r)
    for (long i = 0; i < a.dim(); ++i)
        for (long j = i + 1; j < a.dim(); ++j) {
            const long m = i / (order + 1) - radius, r = i % (order + 1);
            const long n = j / (order + 1) - radius, s = j % (order + 1);
            std::vector<std::pair<long, Rational>> comps;
            bool escapes = false;
            for (long u = 0; u <= r + s; ++u) {
                Rational c = 0;
                if (u >= s && u - s <= r) c += gbinom(r, u - s) * int_pow(n, r - (u - s));
                if (u >= r && u - r <= s) c -= gbinom(s, u - r) * int_pow(m, s - (u - r));
                if (c == 0) continue;
                if (std::labs(m + n) > radius || u > order) {
                    escapes = true;
                    break;
                }
                comps.emplace_back(u, c);
            }
            if (escapes)
                a.set_out_of_window(i, j);
            else
                for (const auto& [u, c] : comps) a.add_bracket_term(i, j, idx(m + n, u), c);
        }
    a.set_grading(degs);
    a.set_window({radius, false}); // order truncation loses generators per degree
    return a;
}

// [e_x, e_y] = phi(x, y) e_{x+y} on the punctured square lattice window
AlgebraPresentation make_block_like(
    const std::string& name, long radius,
    const std::function<Rational(long, long, long, long)>& phi) {
    std::vector<std::string> labels;
    std::vector<Degree> degs;
    std::vector<std::pair<long, long>> pts;
    for (long m = -radius; m <= radius; ++m)
        for (long n = -radius; n <= radius; ++n) {
            if (m == 0 && n == 0) continue;
            pts.emplace_back(m, n);
            labels.push_back("e_" + std::to_string(m) + "_" + std::to_string(n));
            degs.push_back({m, n});
        }
    AlgebraPresentation a(name, AlgebraKind::lie, labels);
    for (long i = 0; i < a.dim(); ++i)
        for (long j = i + 1; j < a.dim(); ++j) {
            const auto [m, n] = pts[static_cast<std::size_t>(i)];
            const auto [m1, n1] = pts[static_cast<std::size_t>(j)];
            const Rational c = phi(m, n, m1, n1);
            if (c == 0) continue;
            if (std::labs(m + m1) > radius || std::labs(n + n1) > radius) {
                a.set_out_of_window(i, j);
                continue;
            }
            const long k = static_cast<long>(
                std::find(pts.begin(), pts.end(), std::make_pair(m + m1, n + n1)) -
                pts.begin());
            a.add_bracket_term(i, j, k, c);
        }
    a.set_grading(degs);
    a.set_window({radius, true});
    return a;
}

AlgebraPresentation make_loop(const std::string& simple, long radius) {
    AlgebraPresentation base = simple == "sl2"   ? make_sl2()
                               : simple == "sl3" ? make_sl3()
                                                 : throw InputError(
                                                       "loop base must be sl2 or sl3");
    const long s = base.dim();
    std::vector<std::string> labels;
    std::vector<Degree> degs;
    for (long m = -radius; m <= radius; ++m)
        for (long i = 0; i < s; ++i) {
            labels.push_back(base.label(i) + "@" + std::to_string(m));
            degs.push_back({m});
        }
    AlgebraPresentation a("loop_window(" + simple + "," + std::to_string(radius) + ")",
                          AlgebraKind::lie, labels);
    for (long ai = 0; ai < a.dim(); ++ai)
        for (long bj = ai + 1; bj < a.dim(); ++bj) {
            const long m = ai / s - radius, i = ai % s;
            const long n = bj / s - radius, j = bj % s;
            const SparseVector& br = base.bracket(i, j);
            if (br.is_zero()) continue;
            if (std::labs(m + n) > radius) {
                a.set_out_of_window(ai, bj);
                continue;
            }
            for (const Entry& e : br.entries())
                a.add_bracket_term(ai, bj, (m + n + radius) * s + e.col, e.val);
        }
    a.set_grading(degs);
    a.set_window({radius, true});
    return a;
}

// loop window bookkeeping: for each basis index, its underlying element
// (position within the degree-0 copy) and its t-degree
struct LoopShape {
    long radius = 0;
    long base_dim = 0;
    std::vector<long> elem;
    std::vector<long> deg;
    SparseMatrix kappa; // Killing form of the degree-0 copy
};

LoopShape loop_shape(const AlgebraPresentation& l) {
    if (!l.graded() || l.grading_arity() != 1 || !l.window())
        throw InputError("not a loop window presentation");
    LoopShape sh;
    sh.radius = l.window()->radius;
    std::vector<long> zero; // indices of the degree-0 copy
    for (long i = 0; i < l.dim(); ++i)
        if (l.degree(i)[0] == 0) zero.push_back(i);
    sh.base_dim = static_cast<long>(zero.size());
    if (sh.base_dim == 0 || l.dim() != sh.base_dim * (2 * sh.radius + 1))
        throw InputError("not a loop window presentation");

    for (long i = 0; i < l.dim(); ++i) {
        const std::string& lab = l.label(i);
        const auto at = lab.find('@');
        if (at == std::string::npos) throw InputError("not a loop window presentation");
        sh.deg.push_back(l.degree(i)[0]);
        const std::string prefix = lab.substr(0, at);
        long e = -1;
        for (long z = 0; z < sh.base_dim; ++z) {
            const std::string& zl = l.label(zero[static_cast<std::size_t>(z)]);
            if (zl.substr(0, zl.find('@')) == prefix) e = z;
        }
        if (e < 0) throw InputError("not a loop window presentation");
        sh.elem.push_back(e);
    }

    std::vector<SparseMatrix> ad(static_cast<std::size_t>(sh.base_dim),
                                 SparseMatrix(sh.base_dim, sh.base_dim));
    for (long x = 0; x < sh.base_dim; ++x)
        for (long y = 0; y < sh.base_dim; ++y)
            for (const Entry& e : l.bracket(zero[static_cast<std::size_t>(x)],
                                            zero[static_cast<std::size_t>(y)])
                                      .entries()) {
                // degree-0 brackets stay in the degree-0 copy
                long p = -1;
                for (long z = 0; z < sh.base_dim; ++z)
                    if (zero[static_cast<std::size_t>(z)] == e.col) p = z;
                if (p < 0) throw InputError("not a loop window presentation");
                ad[static_cast<std::size_t>(x)].add(p, y, e.val);
            }
    sh.kappa = SparseMatrix(sh.base_dim, sh.base_dim);
    for (long x = 0; x < sh.base_dim; ++x)
        for (long y = 0; y < sh.base_dim; ++y) {
            Rational tr = 0;
            for (long p = 0; p < sh.base_dim; ++p)
                for (const Entry& e : ad[static_cast<std::size_t>(x)].row(p))
                    tr += e.val * ad[static_cast<std::size_t>(y)].at(e.col, p);
            sh.kappa.set(x, y, tr);
        }
    return sh;
}

void require_arity1_labels(const AlgebraPresentation& g, const char* allowed,
                           const char* what) {
    if (!g.graded() || g.grading_arity() != 1)
        throw InputError(std::string(what) + " needs a graded window presentation");
    for (long i = 0; i < g.dim(); ++i) {
        const char c = g.label(i)[0];
        if (std::string(allowed).find(c) == std::string::npos)
            throw InputError(std::string(what) + " does not match this presentation");
    }
}

CochainSpace trivial_2space(const AlgebraPresentation& g, const Representation& triv) {
    if (triv.algebra != &g || triv.dim != 1)
        throw InputError("expected the trivial module of the same presentation");
    return cochain_space(Theory::leibniz, g, triv, 2);
}

} // namespace

std::vector<std::string> catalog_names() {
    return {"sl2",          "sl3",
            "abelian",      "heisenberg3",
            "affine1",      "witt_window",
            "hvir_base_window", "hvir_window",
            "diffops_window",   "block_window",
            "virasoro_like_window", "q_virasoro_like_window",
            "loop_window"};
}

AlgebraPresentation catalog(const std::string& name, const CatalogParams& params) {
    if (name == "sl2") return make_sl2();
    if (name == "sl3") return make_sl3();
    if (name == "abelian") return make_abelian(params.n);
    if (name == "heisenberg3") return make_heisenberg3();
    if (name == "affine1") return make_affine1();
    if (name == "witt_window") return make_witt(require_window(params));
    if (name == "hvir_base_window") return make_hvir(require_window(params), false);
    if (name == "hvir_window") return make_hvir(require_window(params), true);
    if (name == "diffops_window")
        return make_diffops(require_window(params), params.order);
    if (name == "block_window") {
        if (params.phi == 0) throw InputError("block form multiple must be nonzero");
        const Rational c = params.phi;
        return make_block_like(
            "block_window(" + std::to_string(params.window) + ")",
            require_window(params),
            [c](long m, long n, long m1, long n1) -> Rational {
                return c * (n * m1 - m * n1);
            });
    }
    if (name == "virasoro_like_window")
        return make_block_like(
            "virasoro_like_window(" + std::to_string(params.window) + ")",
            require_window(params),
            [](long m, long n, long m1, long n1) { return Rational(n * m1 - m * n1); });
    if (name == "q_virasoro_like_window") {
        if (params.q == 0 || params.q == 1 || params.q == -1)
            throw InputError("q must avoid 0 and the roots of unity 1, -1");
        const Rational q = params.q;
        return make_block_like(
            "q_virasoro_like_window(" + std::to_string(params.window) + ")",
            require_window(params), [q](long m, long n, long m1, long n1) -> Rational {
                return int_pow(q, n * m1) - int_pow(q, m * n1);
            });
    }
    if (name == "loop_window") return make_loop(params.simple, require_window(params));
    throw InputError("unknown catalog name '" + name + "'");
}

Cochain virasoro_cocycle(const AlgebraPresentation& w, const Representation& triv) {
    require_arity1_labels(w, "L", "virasoro cocycle");
    CochainSpace c2 = trivial_2space(w, triv);
    SparseVector coords(c2.dimension);
    for (long i = 0; i < w.dim(); ++i)
        for (long j = 0; j < w.dim(); ++j) {
            const long m = w.degree(i)[0];
            if (m + w.degree(j)[0] != 0) continue;
            coords.set(c2.index(0, {i, j}), Rational(m * m * m - m, 12));
        }
    return Cochain{c2, std::move(coords)};
}

HvirCocycles hvir_cocycles(const AlgebraPresentation& h, const Representation& triv) {
    require_arity1_labels(h, "LI", "twisted Heisenberg-Virasoro cocycles");
    CochainSpace c2 = trivial_2space(h, triv);
    SparseVector ii(c2.dimension), ll(c2.dimension), li(c2.dimension);
    for (long i = 0; i < h.dim(); ++i)
        for (long j = 0; j < h.dim(); ++j) {
            const long m = h.degree(i)[0], n = h.degree(j)[0];
            if (m + n != 0) continue;
            const char a = h.label(i)[0], b = h.label(j)[0];
            const long idx = c2.index(0, {i, j});
            if (a == 'I' && b == 'I') ii.set(idx, n);
            if (a == 'L' && b == 'L') ll.set(idx, Rational(m * m * m - m, 12));
            if (a == 'L' && b == 'I') li.set(idx, m * m - m);
            if (a == 'I' && b == 'L') li.set(idx, -(n * n - n));
        }
    return HvirCocycles{Cochain{c2, std::move(ii)}, Cochain{c2, std::move(ll)},
                        Cochain{c2, std::move(li)}};
}

// psi is exact on the falling-factorial elements t^a D(D-1)..(D-r+1); monomial
// values come from the Stirling expansion D^j = sum_r S(j,r) D(D-1)..(D-r+1).
Cochain w1inf_psi(const AlgebraPresentation& d, const Representation& triv) {
    require_arity1_labels(d, "t", "psi cocycle");
    CochainSpace c2 = trivial_2space(d, triv);
    long max_ord = 0;
    std::vector<long> ord(static_cast<std::size_t>(d.dim()));
    for (long i = 0; i < d.dim(); ++i) {
        const std::string& lab = d.label(i);
        const auto at = lab.find('d');
        if (at == std::string::npos) throw InputError("psi cocycle label mismatch");
        ord[static_cast<std::size_t>(i)] = std::stol(lab.substr(at + 1));
        max_ord = std::max(max_ord, ord[static_cast<std::size_t>(i)]);
    }
    std::vector<std::vector<Rational>> stir(
        static_cast<std::size_t>(max_ord + 1),
        std::vector<Rational>(static_cast<std::size_t>(max_ord + 1), 0));
    stir[0][0] = 1;
    for (long j = 1; j <= max_ord; ++j)
        for (long r = 1; r <= j; ++r)
            stir[static_cast<std::size_t>(j)][static_cast<std::size_t>(r)] =
                r * stir[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(r)] +
                stir[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(r - 1)];

    SparseVector coords(c2.dimension);
    for (long i = 0; i < d.dim(); ++i)
        for (long j = 0; j < d.dim(); ++j) {
            const long a = d.degree(i)[0], b = d.degree(j)[0];
            if (a + b != 0) continue;
            const long oi = ord[static_cast<std::size_t>(i)];
            const long oj = ord[static_cast<std::size_t>(j)];
            Rational v = 0;
            for (long r = 0; r <= oi; ++r)
                for (long s = 0; s <= oj; ++s) {
                    const Rational c =
                        stir[static_cast<std::size_t>(oi)][static_cast<std::size_t>(r)] *
                        stir[static_cast<std::size_t>(oj)][static_cast<std::size_t>(s)];
                    if (c == 0) continue;
                    Rational term = c * factorial(r) * factorial(s) *
                                    gbinom(a + r, r + s + 1);
                    if (r % 2 != 0) term = -term;
                    v += term;
                }
            if (v != 0) coords.set(c2.index(0, {i, j}), v);
        }
    return Cochain{c2, std::move(coords)};
}

BilinearForm block_form(const AlgebraPresentation& b) {
    if (!b.graded() || b.grading_arity() != 2)
        throw InputError("block form needs a rank-2 graded presentation");
    SparseMatrix m(b.dim(), b.dim());
    for (long i = 0; i < b.dim(); ++i)
        for (long j = 0; j < b.dim(); ++j)
            if (b.degree(i)[0] + b.degree(j)[0] == 0 &&
                b.degree(i)[1] + b.degree(j)[1] == 0)
                m.set(i, j, 1);
    return BilinearForm{&b, std::move(m)};
}

Cochain loop_51(const AlgebraPresentation& l, const Representation& triv, long k) {
    const LoopShape sh = loop_shape(l);
    CochainSpace c2 = trivial_2space(l, triv);
    SparseVector coords(c2.dimension);
    for (long i = 0; i < l.dim(); ++i)
        for (long j = 0; j < l.dim(); ++j) {
            if (sh.deg[static_cast<std::size_t>(i)] + sh.deg[static_cast<std::size_t>(j)] +
                    k !=
                0)
                continue;
            const Rational kv = sh.kappa.at(sh.elem[static_cast<std::size_t>(i)],
                                            sh.elem[static_cast<std::size_t>(j)]);
            if (kv == 0) continue;
            coords.set(c2.index(0, {i, j}), kv * sh.deg[static_cast<std::size_t>(j)]);
        }
    return Cochain{c2, std::move(coords)};
}

BilinearForm loop_residue_form(const AlgebraPresentation& l) {
    const LoopShape sh = loop_shape(l);
    SparseMatrix m(l.dim(), l.dim());
    for (long i = 0; i < l.dim(); ++i)
        for (long j = 0; j < l.dim(); ++j) {
            if (sh.deg[static_cast<std::size_t>(i)] + sh.deg[static_cast<std::size_t>(j)] !=
                -1)
                continue;
            const Rational kv = sh.kappa.at(sh.elem[static_cast<std::size_t>(i)],
                                            sh.elem[static_cast<std::size_t>(j)]);
            if (kv != 0) m.set(i, j, kv);
        }
    return BilinearForm{&l, std::move(m)};
}

SparseMatrix loop_degree_derivation(const AlgebraPresentation& l, long k) {
    const LoopShape sh = loop_shape(l);
    SparseMatrix d(l.dim(), l.dim());
    for (long i = 0; i < l.dim(); ++i) {
        const long m = sh.deg[static_cast<std::size_t>(i)];
        const long target = m + k - 1;
        if (m == 0 || std::labs(target) > sh.radius) continue;
        const long j = (target + sh.radius) * sh.base_dim +
                       sh.elem[static_cast<std::size_t>(i)];
        d.set(j, i, m);
    }
    return d;
}

} // namespace leibcoh
