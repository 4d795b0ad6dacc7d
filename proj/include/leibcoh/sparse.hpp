#pragma once
#include <vector>

#include "leibcoh/rational.hpp"

namespace leibcoh {

struct Entry {
    long col;
    Rational val;
    bool operator==(const Entry& o) const { return col == o.col && val == o.val; }
};

// Sorted by column, no explicit zeros, values in canonical form.
using SparseRow = std::vector<Entry>;

// target += a * x
void row_axpy(SparseRow& target, const Rational& a, const SparseRow& x);
Rational row_dot(const SparseRow& a, const SparseRow& b);

class SparseVector {
  public:
    SparseVector() = default;
    explicit SparseVector(long dim) : dim_(dim) {}
    SparseVector(long dim, SparseRow entries) : dim_(dim), entries_(std::move(entries)) {}

    long dim() const { return dim_; }
    const SparseRow& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }
    long leading_index() const { return entries_.empty() ? -1 : entries_.front().col; }

    Rational at(long i) const;
    void set(long i, const Rational& v);
    void add(long i, const Rational& v);
    void axpy(const Rational& a, const SparseVector& x);
    void scale(const Rational& a);
    void negate();

    bool operator==(const SparseVector& o) const {
        return dim_ == o.dim_ && entries_ == o.entries_;
    }

  private:
    long dim_ = 0;
    SparseRow entries_;
};

class SparseMatrix {
  public:
    SparseMatrix() = default;
    SparseMatrix(long rows, long cols) : rows_(rows), cols_(cols), data_(rows) {}
    static SparseMatrix identity(long n);

    long rows() const { return rows_; }
    long cols() const { return cols_; }
    long nnz() const;
    bool is_zero() const;

    Rational at(long r, long c) const;
    void set(long r, long c, const Rational& v);
    void add(long r, long c, const Rational& v);

    const SparseRow& row(long r) const { return data_[r]; }
    void set_row(long r, SparseRow row) { data_[r] = std::move(row); }
    SparseVector row_vector(long r) const { return SparseVector(cols_, data_[r]); }
    void set_row_vector(long r, const SparseVector& v) { data_[r] = v.entries(); }
    SparseVector column_vector(long c) const;

    SparseMatrix transpose() const;
    SparseVector apply(const SparseVector& x) const;     // this * x
    SparseMatrix multiply(const SparseMatrix& o) const;  // this * o
    SparseMatrix vstack(const SparseMatrix& below) const;

    bool operator==(const SparseMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

  private:
    long rows_ = 0, cols_ = 0;
    std::vector<SparseRow> data_;
};

} // namespace leibcoh
