#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leibcoh/algebra.hpp"

using namespace leibcoh;

namespace {

AlgebraPresentation make_sl2() {
    AlgebraPresentation a("sl2", AlgebraKind::lie, {"e", "f", "h"});
    a.add_bracket_term(0, 1, 2, 1);  // [e,f] = h
    a.add_bracket_term(2, 0, 0, 2);  // [h,e] = 2e
    a.add_bracket_term(2, 1, 1, -2); // [h,f] = -2f
    return a;
}

AlgebraPresentation make_abelian(long n) {
    std::vector<std::string> labels;
    for (long i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i));
    return AlgebraPresentation("abelian", AlgebraKind::lie, labels);
}

AlgebraPresentation make_affine1() {
    AlgebraPresentation a("affine1", AlgebraKind::lie, {"x", "y"});
    a.add_bracket_term(0, 1, 1, 1); // [x,y] = y
    return a;
}

// Witt generators L_{-radius}..L_{radius} with [L_m, L_n] = (m-n) L_{m+n}.
AlgebraPresentation make_witt(long radius) {
    std::vector<std::string> labels;
    std::vector<Degree> degs;
    for (long m = -radius; m <= radius; ++m) {
        labels.push_back("L" + std::to_string(m));
        degs.push_back({m});
    }
    AlgebraPresentation a("witt", AlgebraKind::lie, labels);
    auto idx = [&](long m) { return m + radius; };
    for (long m = -radius; m <= radius; ++m)
        for (long n = m + 1; n <= radius; ++n) {
            if (m + n < -radius || m + n > radius)
                a.set_out_of_window(idx(m), idx(n));
            else
                a.add_bracket_term(idx(m), idx(n), idx(m + n), m - n);
        }
    a.set_grading(degs);
    a.set_window({radius, true});
    return a;
}

} // namespace

TEST_CASE("sl2 and abelian presentations validate") {
    AlgebraPresentation sl2 = make_sl2();
    ValidationReport r = validate(sl2);
    CHECK(r.valid);
    CHECK(r.violations.empty());
    CHECK(r.checked > 0);
    CHECK(r.skipped == 0);

    ValidationReport ab = validate(make_abelian(3));
    CHECK(ab.valid);

    // The same constants written out two-sided pass the Leibniz-kind check.
    AlgebraPresentation lz("sl2z", AlgebraKind::leibniz, {"e", "f", "h"});
    lz.add_bracket_term(0, 1, 2, 1);
    lz.add_bracket_term(1, 0, 2, -1);
    lz.add_bracket_term(2, 0, 0, 2);
    lz.add_bracket_term(0, 2, 0, -2);
    lz.add_bracket_term(2, 1, 1, -2);
    lz.add_bracket_term(1, 2, 1, 2);
    CHECK(validate(lz).valid);
}

TEST_CASE("a broken sl2 reports the witnessing triple") {
    AlgebraPresentation a("bad", AlgebraKind::lie, {"e", "f", "h"});
    a.add_bracket_term(0, 1, 2, 1);
    a.add_bracket_term(2, 0, 0, 3); // breaks Jacobi
    a.add_bracket_term(2, 1, 1, -2);
    ValidationReport r = validate(a);
    CHECK(!r.valid);
    bool found = false;
    for (const auto& v : r.violations)
        if (v.i == 0 && v.j == 2 && v.k == 1) found = true; // (e, h, f)
    CHECK(found);
    for (const auto& v : r.violations) CHECK(!(v.lhs == v.rhs));
}

TEST_CASE("lie bracket storage is one-sided with inferred negation") {
    AlgebraPresentation a("t", AlgebraKind::lie, {"x", "y", "z"});
    a.add_bracket_term(1, 0, 2, 5); // written as [y,x] = 5z
    CHECK(a.bracket(0, 1).at(2) == -5);
    CHECK(a.bracket(1, 0).at(2) == 5);
    CHECK(a.bracket(0, 0).is_zero());
    CHECK_THROWS_AS(a.add_bracket_term(1, 1, 2, 1), InputError);

    a.add_bracket_term(0, 1, 2, 5); // [x,y] = 5z cancels the stored -5z
    CHECK(a.bracket(0, 1).is_zero());
    CHECK(a.bracket(1, 0).is_zero());
}

TEST_CASE("label bookkeeping") {
    CHECK_THROWS_AS(AlgebraPresentation("d", AlgebraKind::lie, {"x", "x"}), InputError);
    AlgebraPresentation a = make_sl2();
    CHECK(a.index_of("h") == 2);
    CHECK_THROWS_AS(a.index_of("nope"), InputError);
    CHECK(a.label(0) == "e");
}

TEST_CASE("grading additivity is enforced") {
    AlgebraPresentation a("g", AlgebraKind::lie, {"x", "y", "z"});
    a.add_bracket_term(0, 1, 2, 1);
    CHECK_THROWS_AS(a.set_grading({{1}, {1}, {3}}), GradingError);
    CHECK(!a.graded());
    a.set_grading({{1}, {1}, {2}});
    CHECK(a.graded());
    CHECK(a.degree(2) == Degree{2});
    CHECK_THROWS_AS(a.add_bracket_term(0, 2, 1, 1), GradingError);

    AlgebraPresentation b("g2", AlgebraKind::lie, {"x", "y"});
    CHECK_THROWS_AS(b.set_grading({{1}}), GradingError);
    CHECK_THROWS_AS(b.set_grading({{1, 0}, {1}}), GradingError);
    CHECK_THROWS_AS(b.set_grading({{1, 0, 0}, {1, 0, 0}}), GradingError);
}

TEST_CASE("adjoint module of sl2") {
    AlgebraPresentation sl2 = make_sl2();
    Representation ad = adjoint_module(sl2);
    CHECK(ad.dim == 3);
    CHECK(ad.left[2].at(0, 0) == 2);
    CHECK(ad.left[2].at(1, 1) == -2);
    CHECK(ad.left[2].at(2, 2) == 0);
    // right action is bracket on the other side: [e, h] = -2e
    CHECK(ad.right[2].at(0, 0) == -2);
    RepReport r = validate_representation(sl2, ad);
    CHECK(r.valid);
    CHECK(r.checked == 27);
}

TEST_CASE("trivial module validates everywhere") {
    AlgebraPresentation sl2 = make_sl2();
    Representation tv = trivial_module(sl2);
    CHECK(tv.dim == 1);
    CHECK(validate_representation(sl2, tv).valid);

    AlgebraPresentation w = make_witt(2);
    RepReport rw = validate_representation(w, trivial_module(w));
    CHECK(rw.valid);
    CHECK(rw.skipped > 0);
}

TEST_CASE("dual module matches the hand-computed sl2 coadjoint action") {
    AlgebraPresentation sl2 = make_sl2();
    Representation du = dual_module(sl2);
    // (h . e*)(x) = e*([x,h]); [e,h] = -2e
    CHECK(du.left[2].at(0, 0) == -2);
    CHECK(du.left[2].at(1, 1) == 2);
    CHECK(du.right[2].at(0, 0) == 2);
    // (f . h*)(e) = h*([e,f]) = 1, and f fixes no e* component of e*
    CHECK(du.left[1].at(0, 2) == 1);
    CHECK(du.left[1].at(0, 0) == 0);
    RepReport r = validate_representation(sl2, du);
    CHECK(r.valid);

    AlgebraPresentation lz("z", AlgebraKind::leibniz, {"x"});
    CHECK_THROWS_AS(dual_module(lz), UnsupportedError);
}

TEST_CASE("dual module on windows requires degree saturation") {
    AlgebraPresentation w = make_witt(2);
    Representation du = dual_module(w);
    CHECK(du.truncated);
    RepReport r = validate_representation(w, du);
    CHECK(r.valid);
    CHECK(r.skipped > 0);

    AlgebraPresentation nosat("n", AlgebraKind::lie, {"x", "y"});
    nosat.set_out_of_window(0, 1);
    CHECK_THROWS_AS(dual_module(nosat), UnsupportedError);
    CHECK_THROWS_AS(adjoint_module(nosat), UnsupportedError);
}

TEST_CASE("a corrupted action matrix is reported") {
    AlgebraPresentation sl2 = make_sl2();
    Representation ad = adjoint_module(sl2);
    ad.left[0].set(0, 0, 7);
    RepReport r = validate_representation(sl2, ad);
    CHECK(!r.valid);
    CHECK(!r.violations.empty());
}

TEST_CASE("windowed witt validates with skipped instances") {
    AlgebraPresentation w = make_witt(3);
    ValidationReport r = validate(w);
    CHECK(r.valid);
    CHECK(r.checked > 0);
    CHECK(r.skipped > 0);
    CHECK(w.windowed());
    CHECK(w.window()->degree_saturated);
    CHECK_THROWS_AS(w.bracket(w.index_of("L3"), w.index_of("L2")), UnsupportedError);
    CHECK(w.bracket(w.index_of("L1"), w.index_of("L-1")).at(w.index_of("L0")) == 2);
}

TEST_CASE("bilinear bracket extension") {
    AlgebraPresentation sl2 = make_sl2();
    SparseVector x(3), y(3);
    x.set(0, 1); // e
    y.set(1, 1); // f
    x.axpy(1, y);
    // [e+f, f] = h since [f,f]=0
    CHECK(sl2.bracket(x, y).at(2) == 1);
}

TEST_CASE("derived subalgebras") {
    DerivedSubalgebra d1 = derived_subalgebra(make_sl2());
    CHECK(d1.is_perfect);
    CHECK(d1.space.dim() == 3);

    DerivedSubalgebra d2 = derived_subalgebra(make_abelian(4));
    CHECK(!d2.is_perfect);
    CHECK(d2.space.dim() == 0);

    DerivedSubalgebra d3 = derived_subalgebra(make_affine1());
    CHECK(!d3.is_perfect);
    CHECK(d3.space.dim() == 1);
    SparseVector y(2);
    y.set(1, 1);
    CHECK(d3.space.contains(y));
}

TEST_CASE("out-of-window marks guard bracket data") {
    AlgebraPresentation a("w", AlgebraKind::lie, {"x", "y"});
    a.set_out_of_window(1, 0);
    CHECK(!a.in_window(0, 1));
    CHECK(!a.in_window(1, 0));
    CHECK(a.windowed());
    CHECK_THROWS_AS(a.add_bracket_term(0, 1, 0, 1), InputError);
    CHECK_THROWS_AS(a.bracket(0, 1), UnsupportedError);

    AlgebraPresentation b("w2", AlgebraKind::lie, {"x", "y"});
    b.add_bracket_term(0, 1, 1, 1);
    CHECK_THROWS_AS(b.set_out_of_window(0, 1), InputError);
    CHECK_THROWS_AS(b.set_out_of_window(0, 0), InputError);
}

TEST_CASE("bilinear forms expose symmetry") {
    AlgebraPresentation sl2 = make_sl2();
    BilinearForm k{&sl2, SparseMatrix(3, 3)};
    k.matrix.set(0, 1, 4);
    k.matrix.set(1, 0, 4);
    k.matrix.set(2, 2, 8);
    CHECK(k.is_symmetric());
    CHECK(k.value(2, 2) == 8);
    k.matrix.set(0, 1, 5);
    CHECK(!k.is_symmetric());
}
