#include "leibcoh/cli.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "leibcoh/catalog.hpp"
#include "leibcoh/cochain.hpp"
#include "leibcoh/cohomology.hpp"
#include "leibcoh/errors.hpp"
#include "leibcoh/json_io.hpp"
#include "leibcoh/rational.hpp"

namespace leibcoh {
namespace {

using ojson = nlohmann::ordered_json;

std::vector<Entry> sorted_entries(const std::vector<Entry>& row) {
    std::vector<Entry> es(row);
    std::sort(es.begin(), es.end(),
              [](const Entry& a, const Entry& b) { return a.col < b.col; });
    return es;
}

std::vector<Entry> sorted_entries(const SparseVector& v) {
    return sorted_entries(std::vector<Entry>(v.entries().begin(), v.entries().end()));
}

const char* kind_str(const AlgebraPresentation& a) {
    return a.kind() == AlgebraKind::lie ? "lie" : "leibniz";
}

ojson vector_json(const AlgebraPresentation& g, const SparseVector& v) {
    ojson o = ojson::object();
    for (const Entry& e : sorted_entries(v)) o[g.label(e.col)] = rational_string(e.val);
    return o;
}

// Sparse cochain as [[tuple of labels, coefficient string], ...]; a module
// index beyond the trivial line is rendered as a trailing dual label.
ojson cochain_json(const Cochain& c) {
    const CochainSpace& sp = c.space;
    const AlgebraPresentation& g = *sp.algebra;
    ojson arr = ojson::array();
    for (const Entry& e : sorted_entries(c.coords)) {
        const auto [mu, t] = sp.unindex(e.col);
        ojson labels = ojson::array();
        for (long i : t) labels.push_back(g.label(i));
        if (sp.coefficients->dim > 1) labels.push_back(g.label(mu) + "*");
        arr.push_back(ojson::array({std::move(labels), rational_string(e.val)}));
    }
    return arr;
}

ojson form_json(const BilinearForm& f) {
    const AlgebraPresentation& g = *f.algebra;
    ojson arr = ojson::array();
    for (long r = 0; r < f.matrix.rows(); ++r)
        for (const Entry& e : sorted_entries(f.matrix.row(r)))
            arr.push_back(ojson::array(
                {ojson::array({g.label(r), g.label(e.col)}), rational_string(e.val)}));
    return arr;
}

void put_validation(ojson& doc, const AlgebraPresentation& g, const ValidationReport& r) {
    doc["valid"] = r.valid;
    doc["checked"] = r.checked;
    doc["skipped"] = r.skipped;
    doc["violations_total"] = static_cast<long>(r.violations.size());
    ojson vs = ojson::array();
    const std::size_t cap = 50;
    for (std::size_t n = 0; n < r.violations.size() && n < cap; ++n) {
        const Violation& v = r.violations[n];
        ojson e;
        if (v.k < 0) {
            e["check"] = "antisymmetry";
            e["pair"] = ojson::array({g.label(v.i), g.label(v.j)});
        } else {
            e["check"] = "identity";
            e["triple"] = ojson::array({g.label(v.i), g.label(v.j), g.label(v.k)});
        }
        e["lhs"] = vector_json(g, v.lhs);
        e["rhs"] = vector_json(g, v.rhs);
        vs.push_back(std::move(e));
    }
    doc["violations"] = std::move(vs);
}

// Default guards: degree <= 3 and dim^(degree+1) <= 1e7 cells. An explicit
// --max-degree N lifts both up to degree N.
void guard_cells(long dim, long degree, const std::optional<long>& max_degree) {
    const long bound = max_degree.value_or(3);
    if (degree > bound)
        throw GuardError("degree " + std::to_string(degree) +
                         (max_degree ? " exceeds --max-degree "
                                     : " exceeds the default degree bound ") +
                         std::to_string(bound));
    if (max_degree) return;
    long cells = 1;
    for (long e = 0; e <= degree; ++e) {
        if (dim > 1 && cells > 10000000L / dim) {
            cells = 10000001L;
            break;
        }
        cells *= dim;
    }
    if (cells > 10000000L)
        throw GuardError("cochain space C^" + std::to_string(degree + 1) + " needs dim^" +
                         std::to_string(degree + 2) + " > 10^7 cells; pass --max-degree " +
                         std::to_string(degree) + " to override");
}

Cochain cochain_from_entries(const CochainSpace& sp, const std::vector<PairEntry>& pm) {
    SparseVector v(sp.dimension);
    for (const PairEntry& e : pm) v.add(sp.index(0, {e.i, e.j}), e.val);
    return Cochain{sp, std::move(v)};
}

std::vector<PairEntry> entries_from_cochain(const Cochain& c) {
    std::vector<PairEntry> out;
    for (const Entry& e : sorted_entries(c.coords)) {
        const auto [mu, t] = c.space.unindex(e.col);
        out.push_back({t[0], t[1], e.val});
    }
    return out;
}

std::vector<PairEntry> entries_from_form(const BilinearForm& f) {
    std::vector<PairEntry> out;
    for (long r = 0; r < f.matrix.rows(); ++r)
        for (const Entry& e : sorted_entries(f.matrix.row(r)))
            out.push_back({r, e.col, e.val});
    return out;
}

// Column x of a derivation matrix holds d(e_x); the pair-map key "x,y" is
// the coefficient of e_y in d(e_x).
std::vector<PairEntry> entries_from_derivation(const SparseMatrix& m) {
    std::vector<PairEntry> out;
    for (long r = 0; r < m.rows(); ++r)
        for (const Entry& e : sorted_entries(m.row(r))) out.push_back({e.col, r, e.val});
    return out;
}

bool closed_2cochain(const AlgebraPresentation& g, const Representation& triv,
                     const Cochain& c) {
    return leibniz_coboundary(g, triv, 2).mat.apply(c.coords).is_zero();
}

bool invariant_symmetric(const AlgebraPresentation& g, const BilinearForm& f) {
    if (!f.is_symmetric()) return false;
    SparseVector flat(g.dim() * g.dim());
    for (long r = 0; r < f.matrix.rows(); ++r)
        for (const Entry& e : f.matrix.row(r))
            flat.set(r * g.dim() + e.col, e.val);
    return invariant_forms(g).space.contains(flat);
}

std::string resolve_catalog_name(const std::string& name) {
    const std::vector<std::string> names = catalog_names();
    if (std::find(names.begin(), names.end(), name) != names.end()) return name;
    const std::string windowed = name + "_window";
    if (std::find(names.begin(), names.end(), windowed) != names.end()) return windowed;
    throw InputError("unknown catalog name: " + name);
}

ojson notices_for(const std::string& name) {
    ojson arr = ojson::array();
    if (name == "diffops_window")
        arr.push_back("bracket convention: [t^m D^r, t^n D^s] = t^{m+n}((D+n)^r D^s - "
                      "(D+m)^s D^r), operator composition expanded in the monomial "
                      "basis; certified by windowed validation");
    if (name == "block_window" || name == "virasoro_like_window" ||
        name == "q_virasoro_like_window")
        arr.push_back("bracket convention: [e_x, e_y] = phi(x, y) e_{x+y} with the "
                      "componentwise sum as target degree; certified by windowed "
                      "validation");
    if (name == "hvir_window" || name == "hvir_base_window")
        arr.push_back("central term convention: the L-I cocycle polynomial is m^2 - m; "
                      "the m^2 + m variant differs from it by a coboundary");
    return arr;
}

ojson cmd_validate(const std::string& path) {
    const AlgebraPresentation a = parse_algebra(path);
    const ValidationReport r = validate(a);
    ojson doc;
    doc["command"] = "validate";
    doc["algebra"] = a.name();
    doc["kind"] = kind_str(a);
    doc["dim"] = a.dim();
    doc["windowed"] = a.windowed();
    put_validation(doc, a, r);
    return doc;
}

ojson cmd_cohomology(const std::string& path, const std::string& theory,
                     long degree, const std::string& coefficients,
                     const std::optional<long>& max_degree) {
    const AlgebraPresentation a = parse_algebra(path);
    guard_cells(a.dim(), degree, max_degree);
    const Theory th =
        theory == "lie" ? Theory::chevalley_eilenberg : Theory::leibniz;
    const Representation m =
        coefficients == "dual" ? dual_module(a) : trivial_module(a);
    const CohomologyGroup res = cohomology(th, a, m, degree);
    ojson doc;
    doc["command"] = "cohomology";
    doc["algebra"] = a.name();
    doc["theory"] = theory;
    doc["degree"] = degree;
    doc["coefficients"] = coefficients;
    doc["window_relative"] = res.window_relative;
    doc["dim"] = res.dim;
    ojson reps = ojson::array();
    for (const Cochain& c : res.representatives) reps.push_back(cochain_json(c));
    doc["representatives"] = std::move(reps);
    return doc;
}

ojson cmd_bforms(const std::string& path) {
    const AlgebraPresentation a = parse_algebra(path);
    const InvariantForms forms = invariant_forms(a);
    ojson doc;
    doc["command"] = "bforms";
    doc["algebra"] = a.name();
    doc["window_relative"] = forms.window_relative;
    doc["dim"] = forms.space.dim();
    ojson basis = ojson::array();
    for (const BilinearForm& f : forms.basis) basis.push_back(form_json(f));
    doc["basis"] = std::move(basis);
    return doc;
}

ojson exactseq_json(const ExactnessReport& r) {
    ojson doc;
    doc["dims"] = {{"h2", r.dim_h2}, {"hl2", r.dim_hl2}, {"b", r.dim_b},
                   {"h3", r.dim_h3}, {"ker_h", r.dim_ker_h}};
    doc["ranks"] = {{"f", r.rank_f}, {"g", r.rank_g}, {"h", r.rank_h}};
    doc["f_injective"] = r.f_injective;
    doc["im_f_eq_ker_g"] = r.im_f_eq_ker_g;
    doc["im_g_eq_ker_h"] = r.im_g_eq_ker_h;
    doc["dim_split"] = r.dim_split;
    return doc;
}

ojson cmd_exactseq(const std::string& path) {
    const AlgebraPresentation a = parse_algebra(path);
    ojson doc;
    doc["command"] = "exactseq";
    doc["algebra"] = a.name();
    doc.update(exactseq_json(verify_exact_sequence(a)));
    return doc;
}

ojson cmd_derivations(const std::string& path, bool skew) {
    const AlgebraPresentation a = parse_algebra(path);
    const Representation dual = dual_module(a);
    const DerivationSpaces ds = derivations(a, dual);
    ojson doc;
    doc["command"] = "derivations";
    doc["algebra"] = a.name();
    doc["coefficients"] = "dual";
    doc["dim_der"] = ds.der.dim();
    doc["dim_inn"] = ds.inn.dim();
    doc["dim_h1"] = ds.h1.dim;
    if (skew) {
        const long s = skew_derivations(a).dim();
        doc["dim_skew"] = s;
        doc["dim_der_minus_skew"] = ds.der.dim() - s;
    }
    return doc;
}

ojson cmd_theta(const std::string& path) {
    const AlgebraPresentation a = parse_algebra(path);
    const ThetaResult t = theta(a);
    ojson doc;
    doc["command"] = "theta";
    doc["algebra"] = a.name();
    doc["iso"] = t.iso;
    doc["dim_h1_dual"] = t.h1_dual.dim;
    doc["dim_hl2"] = t.hl2.dim;
    ojson mat = ojson::array();
    for (long r = 0; r < t.matrix.rows(); ++r)
        for (const Entry& e : sorted_entries(t.matrix.row(r)))
            mat.push_back(ojson::array({r, e.col, rational_string(e.val)}));
    doc["matrix"] = std::move(mat);
    return doc;
}

ojson cmd_extend(const std::string& path, const std::string& cocycle_path,
                 const std::string& label, const std::string& emit) {
    const AlgebraPresentation a = parse_algebra(path);
    const Representation triv = trivial_module(a);
    const CochainSpace sp = cochain_space(Theory::leibniz, a, triv, 2);
    const Cochain c = cochain_from_entries(sp, parse_pair_map(cocycle_path, a));
    const AlgebraPresentation ext = central_extension(a, c, label);
    const ValidationReport r = validate(ext);
    ojson doc;
    doc["command"] = "extend";
    doc["algebra"] = a.name();
    doc["extension"] = ext.name();
    doc["central_label"] = label;
    doc["kind"] = kind_str(ext);
    doc["dim"] = ext.dim();
    doc["windowed"] = ext.windowed();
    put_validation(doc, ext, r);
    if (!emit.empty()) {
        emit_algebra(ext, emit);
        doc["emitted"] = emit;
    }
    return doc;
}

ojson cmd_quadratic(const std::string& path, const std::string& form_path,
                    const std::string& deriv_path) {
    const AlgebraPresentation a = parse_algebra(path);
    BilinearForm phi{&a, SparseMatrix(a.dim(), a.dim())};
    for (const PairEntry& e : parse_pair_map(form_path, a))
        phi.matrix.set(e.i, e.j, e.val);
    SparseMatrix d(a.dim(), a.dim());
    for (const PairEntry& e : parse_pair_map(deriv_path, a)) d.set(e.j, e.i, e.val);
    const QuadraticCocycle qc = cocycle_from_quadratic(a, phi, d);
    const Representation triv = trivial_module(a);
    ojson doc;
    doc["command"] = "quadratic";
    doc["algebra"] = a.name();
    doc["alternating"] = qc.alternating;
    doc["closed"] = closed_2cochain(a, triv, qc.cochain);
    doc["window_relative"] = a.windowed();
    doc["cocycle"] = cochain_json(qc.cochain);
    return doc;
}

ojson named_catalog_output(const AlgebraPresentation& a, const std::string& cname,
                           long k, const std::string& emit_path) {
    ojson meta;
    meta["name"] = cname;
    std::vector<PairEntry> entries;
    const Representation triv = trivial_module(a);
    if (cname == "virasoro" || cname == "psi" || cname == "hvir_ii" ||
        cname == "hvir_ll" || cname == "hvir_li" || cname == "loop_51") {
        Cochain c{CochainSpace{}, SparseVector(0)};
        if (cname == "virasoro") {
            c = virasoro_cocycle(a, triv);
        } else if (cname == "psi") {
            c = w1inf_psi(a, triv);
            meta["notice"] =
                "values extend the falling-factorial normal form to monomials by "
                "Stirling expansion";
        } else if (cname == "loop_51") {
            c = loop_51(a, triv, k);
            meta["k"] = k;
        } else {
            const HvirCocycles h = hvir_cocycles(a, triv);
            c = cname == "hvir_ii" ? h.ii : cname == "hvir_ll" ? h.ll : h.li;
        }
        meta["kind"] = "cochain";
        meta["closed"] = closed_2cochain(a, triv, c);
        entries = entries_from_cochain(c);
    } else if (cname == "block" || cname == "residue") {
        const BilinearForm f = cname == "block" ? block_form(a) : loop_residue_form(a);
        meta["kind"] = "form";
        meta["invariant_symmetric"] = invariant_symmetric(a, f);
        entries = entries_from_form(f);
    } else if (cname == "derivation") {
        meta["kind"] = "derivation";
        meta["k"] = k;
        entries = entries_from_derivation(loop_degree_derivation(a, k));
    } else {
        throw InputError("unknown cocycle name: " + cname +
                         " (expected virasoro, psi, hvir_ii, hvir_ll, hvir_li, "
                         "block, residue, loop_51 or derivation)");
    }
    meta["terms"] = static_cast<long>(entries.size());
    if (!emit_path.empty()) {
        emit_pair_map(entries, a, emit_path);
        meta["emitted"] = emit_path;
    }
    return meta;
}

ojson cmd_catalog(const std::string& name, const CatalogParams& params,
                  const std::string& q_str, const std::string& phi_str,
                  const std::string& emit, const std::string& cocycle, long k,
                  const std::string& cocycle_emit) {
    const std::string resolved = resolve_catalog_name(name);
    const AlgebraPresentation a = catalog(resolved, params);
    const ValidationReport r = validate(a);
    ojson doc;
    doc["command"] = "catalog";
    doc["algebra"] = a.name();
    doc["family"] = resolved;
    doc["params"] = {{"window", params.window}, {"order", params.order},
                     {"n", params.n},           {"q", q_str},
                     {"phi", phi_str},          {"simple", params.simple},
                     {"k", k}};
    doc["kind"] = kind_str(a);
    doc["dim"] = a.dim();
    doc["windowed"] = a.windowed();
    put_validation(doc, a, r);
    doc["notices"] = notices_for(resolved);
    if (!emit.empty()) {
        emit_algebra(a, emit);
        doc["emitted"] = emit;
    }
    if (!cocycle.empty()) doc["cocycle"] = named_catalog_output(a, cocycle, k, cocycle_emit);
    return doc;
}

ojson cmd_report(const std::string& path, const std::optional<long>& max_degree) {
    const AlgebraPresentation a = parse_algebra(path);
    guard_cells(a.dim(), 2, max_degree);
    const ValidationReport r = validate(a);
    const Representation triv = trivial_module(a);
    ojson doc;
    doc["command"] = "report";
    doc["algebra"] = a.name();
    doc["kind"] = kind_str(a);
    doc["dim"] = a.dim();
    doc["windowed"] = a.windowed();
    doc["window_relative"] = a.windowed();
    doc["valid"] = r.valid;
    doc["checked"] = r.checked;
    doc["skipped"] = r.skipped;
    doc["violations_total"] = static_cast<long>(r.violations.size());
    ojson leib = ojson::array();
    for (long n = 0; n <= 2; ++n)
        leib.push_back(cohomology(Theory::leibniz, a, triv, n).dim);
    ojson dims;
    dims["leibniz"] = std::move(leib);
    if (a.kind() == AlgebraKind::lie) {
        ojson lie = ojson::array();
        for (long n = 0; n <= 2; ++n)
            lie.push_back(cohomology(Theory::chevalley_eilenberg, a, triv, n).dim);
        dims["lie"] = std::move(lie);
    } else {
        dims["lie"] = nullptr;
    }
    doc["dims"] = std::move(dims);
    doc["bforms_dim"] = invariant_forms(a).space.dim();
    if (a.kind() == AlgebraKind::lie && !a.windowed())
        doc["exactseq"] = exactseq_json(verify_exact_sequence(a));
    else
        doc["exactseq"] = nullptr;
    return doc;
}

} // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"exact Lie and Leibniz cohomology of structure-constant algebras"};
    app.require_subcommand(1);

    std::string file, theory, coefficients = "trivial", cat_name;
    std::string cocycle_file, form_file, deriv_file, label = "c";
    std::string emit, cocycle_name, cocycle_emit, q_str = "2", phi_str = "1";
    std::string simple = "sl2";
    long degree = 0, window = 0, order = 1, nrank = 1, k = 1;
    std::optional<long> max_degree;
    bool skew = false;

    CLI::App* c_validate = app.add_subcommand("validate", "check the bracket identities of an algebra file");
    c_validate->add_option("file", file, "algebra JSON file")->required();

    CLI::App* c_cohomology = app.add_subcommand("cohomology", "cohomology dimension and representatives");
    c_cohomology->add_option("file", file, "algebra JSON file")->required();
    c_cohomology->add_option("--theory", theory, "lie or leibniz")
        ->required()
        ->check(CLI::IsMember({"lie", "leibniz"}));
    c_cohomology->add_option("--degree", degree, "cochain degree")
        ->required()
        ->check(CLI::NonNegativeNumber);
    c_cohomology->add_option("--coefficients", coefficients, "trivial or dual")
        ->check(CLI::IsMember({"trivial", "dual"}));
    c_cohomology->add_option("--max-degree", max_degree, "lift the degree and size guards");

    CLI::App* c_bforms = app.add_subcommand("bforms", "invariant symmetric bilinear forms");
    c_bforms->add_option("file", file, "algebra JSON file")->required();

    CLI::App* c_exactseq = app.add_subcommand("exactseq", "exactness of 0 -> H^2 -> HL^2 -> B -> H^3");
    c_exactseq->add_option("file", file, "algebra JSON file")->required();

    CLI::App* c_derivations = app.add_subcommand("derivations", "derivations into the dual module");
    c_derivations->add_option("file", file, "algebra JSON file")->required();
    c_derivations->add_flag("--skew", skew, "also compute skew derivations");

    CLI::App* c_theta = app.add_subcommand("theta", "H^1(g,g*) -> HL^2(g,K) on representatives");
    c_theta->add_option("file", file, "algebra JSON file")->required();

    CLI::App* c_extend = app.add_subcommand("extend", "central extension by a 2-cocycle file");
    c_extend->add_option("file", file, "algebra JSON file")->required();
    c_extend->add_option("--cocycle", cocycle_file, "cocycle pair-map JSON file")->required();
    c_extend->add_option("--label", label, "central element label");
    c_extend->add_option("--emit", emit, "write the extension to this path");

    CLI::App* c_quadratic = app.add_subcommand("quadratic", "cocycle phi(x, d(y)) from a form and a derivation");
    c_quadratic->add_option("file", file, "algebra JSON file")->required();
    c_quadratic->add_option("--form", form_file, "invariant form pair-map JSON file")->required();
    c_quadratic->add_option("--derivation", deriv_file, "derivation pair-map JSON file")->required();

    CLI::App* c_catalog = app.add_subcommand("catalog", "construct a named algebra family");
    c_catalog->add_option("name", cat_name, "family name")->required();
    c_catalog->add_option("--window", window, "window radius");
    c_catalog->add_option("--order", order, "operator order bound");
    c_catalog->add_option("--q", q_str, "q parameter, rational not in {0, 1, -1}");
    c_catalog->add_option("--phi", phi_str, "block form multiple");
    c_catalog->add_option("--n", nrank, "abelian rank");
    c_catalog->add_option("--simple", simple, "underlying algebra for loop windows");
    c_catalog->add_option("--k", k, "shift for loop_51 / degree derivation");
    c_catalog->add_option("--emit", emit, "write the algebra to this path");
    CLI::Option* oc = c_catalog->add_option("--cocycle", cocycle_name,
                                            "materialize a named cochain or form");
    c_catalog->add_option("--cocycle-emit", cocycle_emit, "write it as a pair map")
        ->needs(oc);

    CLI::App* c_report = app.add_subcommand("report", "validation, dimensions, forms and exactness");
    c_report->add_option("file", file, "algebra JSON file")->required();
    c_report->add_option("--max-degree", max_degree, "lift the size guard");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
        const auto t0 = std::chrono::steady_clock::now();
        ojson doc;
        if (app.got_subcommand(c_validate)) {
            doc = cmd_validate(file);
        } else if (app.got_subcommand(c_cohomology)) {
            doc = cmd_cohomology(file, theory, degree, coefficients, max_degree);
        } else if (app.got_subcommand(c_bforms)) {
            doc = cmd_bforms(file);
        } else if (app.got_subcommand(c_exactseq)) {
            doc = cmd_exactseq(file);
        } else if (app.got_subcommand(c_derivations)) {
            doc = cmd_derivations(file, skew);
        } else if (app.got_subcommand(c_theta)) {
            doc = cmd_theta(file);
        } else if (app.got_subcommand(c_extend)) {
            doc = cmd_extend(file, cocycle_file, label, emit);
        } else if (app.got_subcommand(c_quadratic)) {
            doc = cmd_quadratic(file, form_file, deriv_file);
        } else if (app.got_subcommand(c_catalog)) {
            CatalogParams params;
            params.window = window;
            params.order = order;
            params.n = nrank;
            params.q = parse_rational(q_str);
            params.phi = parse_rational(phi_str);
            params.simple = simple;
            doc = cmd_catalog(cat_name, params, q_str, phi_str, emit, cocycle_name, k,
                              cocycle_emit);
        } else {
            doc = cmd_report(file, max_degree);
        }
        out << doc.dump(2) << "\n";
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
        err << "# " << app.get_subcommands().front()->get_name() << ": " << ms
            << " ms\n";
        return 0;
    } catch (const CLI::Success&) {
        const auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs.front()->help());
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace leibcoh
