#ifndef SPTRI_SNF_HPP
#define SPTRI_SNF_HPP

#include <map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sptri/errors.hpp"

namespace sptri {

using Integer = boost::multiprecision::cpp_int;

/// Sparse integer matrix with arbitrary-precision entries.  Zero entries are
/// never stored.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::size_t nonzero_count() const { return entries_.size(); }

    void set(int r, int c, Integer value);
    Integer get(int r, int c) const;

    const std::map<std::pair<int, int>, Integer>& entries() const { return entries_; }

    /// True iff this * other is the zero matrix.
    bool product_is_zero(const IntegerMatrix& other) const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::map<std::pair<int, int>, Integer> entries_;
};

/// Dense arbitrary-precision matrix, used for the unimodular transforms.
using DenseMatrix = std::vector<std::vector<Integer>>;

struct SmithResult {
    /// d_1 | d_2 | ... | d_r, all positive; r = rank.
    std::vector<Integer> invariant_factors;
    int rank = 0;
    /// Unimodular transforms with U*M*V diagonal; populated only when
    /// requested.
    DenseMatrix u, v;
    bool has_transforms = false;
};

struct SmithOptions {
    bool with_transforms = false;
    /// Re-multiply U*M*V and compare against the diagonal (throws
    /// ConstructionError on mismatch).  Implies with_transforms.
    bool verify_transforms = false;
};

/// Smith normal form by row/column reduction with minimum-magnitude pivoting.
SmithResult smith_normal_form(const IntegerMatrix& m, const SmithOptions& options = {});

/// Rank over the rationals via integer-preserving (fraction-free)
/// elimination; cheaper than a full Smith normal form.
int integer_rank(const IntegerMatrix& m);

} // namespace sptri

#endif
