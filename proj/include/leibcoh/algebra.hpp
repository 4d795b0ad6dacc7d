#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "leibcoh/cancel.hpp"
#include "leibcoh/errors.hpp"
#include "leibcoh/sparse.hpp"
#include "leibcoh/subspace.hpp"

namespace leibcoh {

enum class AlgebraKind { lie, leibniz };

// Integer degree, arity 1 or 2 (all basis elements of one algebra share the
// arity).
using Degree = std::vector<long>;

// Extra structure for windows cut from a graded algebra by |degree| <= radius
// componentwise. degree_saturated means every generator of each retained
// degree is present, so degree bookkeeping alone decides what truncation
// loses; order-truncated windows are not saturated.
struct WindowInfo {
    long radius = 0;
    bool degree_saturated = false;
};

// Structure-constant presentation over Q. For kind=lie only ordered pairs
// i<j carry data and [j,i] is the negation; for kind=leibniz every ordered
// pair is independent. In a windowed presentation a pair may be marked
// out-of-window instead, meaning the true product leaves the basis span.
class AlgebraPresentation {
public:
    AlgebraPresentation(std::string name, AlgebraKind kind,
                        std::vector<std::string> basis);

    const std::string& name() const { return name_; }
    AlgebraKind kind() const { return kind_; }
    long dim() const { return static_cast<long>(labels_.size()); }
    const std::vector<std::string>& basis() const { return labels_; }
    const std::string& label(long i) const { return labels_[i]; }
    long index_of(const std::string& label) const; // throws InputError

    // Accumulates c into the coefficient of e_k in [e_i, e_j]. For kind=lie
    // the pair is normalized to i<j (negating c); a nonzero diagonal term is
    // rejected. Enforces degree additivity when a grading is set.
    void add_bracket_term(long i, long j, long k, const Rational& c);
    void set_out_of_window(long i, long j);

    bool in_window(long i, long j) const;
    const SparseVector& bracket(long i, long j) const; // throws if out of window
    // Bilinear extension; throws UnsupportedError if a needed pair is out.
    SparseVector bracket(const SparseVector& x, const SparseVector& y) const;

    void set_grading(std::vector<Degree> degrees); // throws GradingError
    bool graded() const { return !degrees_.empty(); }
    long grading_arity() const { return arity_; }
    const Degree& degree(long i) const { return degrees_[i]; }

    void set_windowed(bool windowed) { windowed_ = windowed; }
    void set_window(WindowInfo info);
    bool windowed() const { return windowed_; }
    const std::optional<WindowInfo>& window() const { return window_; }

private:
    void check_degree_additive(long i, long j, long k) const;

    std::string name_;
    AlgebraKind kind_;
    std::vector<std::string> labels_;
    std::map<std::string, long> index_;
    std::vector<SparseVector> table_; // dim*dim, both orientations materialized
    std::vector<char> out_;           // dim*dim out-of-window marks
    std::vector<Degree> degrees_;
    long arity_ = 0;
    bool windowed_ = false;
    std::optional<WindowInfo> window_;
};

struct Violation {
    long i, j, k;
    SparseVector lhs, rhs;
};

struct ValidationReport {
    bool valid = true;
    std::vector<Violation> violations;
    long checked = 0;
    long skipped = 0; // identity instances excluded by out-of-window brackets
};

// Leibniz identity on all basis triples; for kind=lie the bracket table is
// antisymmetric by construction and the identity is equivalent to Jacobi.
// Windowed instances are checked only when every bracket appearing in the
// identity, including those applied to intermediate products, is in-window.
ValidationReport validate(const AlgebraPresentation& a, const Context& ctx = {});

enum class RepKind { generic, trivial, adjoint, dual };

// Two-sided module: left[y] is the matrix of m -> [e_y, m], right[y] of
// m -> [m, e_y]. `truncated` marks a dual module cut to a window, where
// axiom checks must skip instances whose intermediates leave the window.
struct Representation {
    const AlgebraPresentation* algebra = nullptr;
    long dim = 0;
    std::vector<SparseMatrix> left;
    std::vector<SparseMatrix> right;
    RepKind rep_kind = RepKind::generic;
    bool truncated = false;
};

struct RepViolation {
    std::string axiom; // "MLL", "LML", "LLM"
    long i, j;
};

struct RepReport {
    bool valid = true;
    std::vector<RepViolation> violations;
    long checked = 0;
    long skipped = 0;
};

Representation trivial_module(const AlgebraPresentation& a);
// Requires a non-windowed presentation (the bracket must be total).
Representation adjoint_module(const AlgebraPresentation& a);
// Coadjoint on the dual space: (y . phi)(x) = phi([x, y]), right action the
// negation. Requires kind=lie; windowed input must be degree-saturated.
Representation dual_module(const AlgebraPresentation& a);

RepReport validate_representation(const AlgebraPresentation& a, const Representation& m,
                                  const Context& ctx = {});

struct DerivedSubalgebra {
    Subspace space;
    bool is_perfect = false;
};

DerivedSubalgebra derived_subalgebra(const AlgebraPresentation& a,
                                     const Context& ctx = {});

struct BilinearForm {
    const AlgebraPresentation* algebra = nullptr;
    SparseMatrix matrix; // dim x dim

    Rational value(long i, long j) const { return matrix.at(i, j); }
    bool is_symmetric() const { return matrix == matrix.transpose(); }
};

} // namespace leibcoh
