#include "sptri/snf.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace sptri {

void IntegerMatrix::set(int r, int c, Integer value) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
        throw PreconditionError("matrix index out of range");
    }
    if (value == 0) {
        entries_.erase({r, c});
    } else {
        entries_[{r, c}] = std::move(value);
    }
}

Integer IntegerMatrix::get(int r, int c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Integer(0) : it->second;
}

bool IntegerMatrix::product_is_zero(const IntegerMatrix& other) const {
    if (cols_ != other.rows()) {
        throw PreconditionError("product_is_zero: dimension mismatch");
    }
    std::vector<std::map<int, Integer>> right(other.rows());
    for (const auto& [rc, val] : other.entries()) right[rc.first][rc.second] = val;

    std::map<std::pair<int, int>, Integer> acc;
    for (const auto& [rc, val] : entries_) {
        for (const auto& [c2, val2] : right[rc.second]) {
            acc[{rc.first, c2}] += val * val2;
        }
    }
    for (const auto& [rc, val] : acc) {
        if (val != 0) return false;
    }
    return true;
}

namespace {

// extended gcd: returns g = gcd(a,b) > 0 with g = s*a + u*b
Integer ext_gcd(const Integer& a, const Integer& b, Integer& s, Integer& u) {
    Integer old_r = a, r = b;
    Integer old_s = 1, cur_s = 0;
    Integer old_t = 0, cur_t = 1;
    while (r != 0) {
        Integer q = old_r / r;
        Integer tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * cur_s;
        old_s = cur_s;
        cur_s = tmp;
        tmp = old_t - q * cur_t;
        old_t = cur_t;
        cur_t = tmp;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    s = old_s;
    u = old_t;
    return old_r;
}

// Working representation: row-major maps plus a per-column index of the
// rows holding a nonzero, kept consistent through every operation.
struct Work {
    int m = 0, n = 0;
    std::vector<std::map<int, Integer>> rows; // col -> value
    std::vector<std::set<int>> col_rows;      // rows with a nonzero in col

    explicit Work(const IntegerMatrix& a)
        : m(a.rows()), n(a.cols()), rows(a.rows()), col_rows(a.cols()) {
        for (const auto& [rc, val] : a.entries()) {
            rows[rc.first][rc.second] = val;
            col_rows[rc.second].insert(rc.first);
        }
    }

    Integer get(int r, int c) const {
        auto it = rows[r].find(c);
        return it == rows[r].end() ? Integer(0) : it->second;
    }

    void set(int r, int c, const Integer& v) {
        if (v == 0) {
            rows[r].erase(c);
            col_rows[c].erase(r);
        } else {
            rows[r][c] = v;
            col_rows[c].insert(r);
        }
    }

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (const auto& [c, v] : rows[a]) col_rows[c].erase(a);
        for (const auto& [c, v] : rows[b]) col_rows[c].erase(b);
        std::swap(rows[a], rows[b]);
        for (const auto& [c, v] : rows[a]) col_rows[c].insert(a);
        for (const auto& [c, v] : rows[b]) col_rows[c].insert(b);
    }

    void swap_cols(int a, int b) {
        if (a == b) return;
        std::set<int> touched = col_rows[a];
        touched.insert(col_rows[b].begin(), col_rows[b].end());
        for (int r : touched) {
            Integer va = get(r, a), vb = get(r, b);
            set(r, a, vb);
            set(r, b, va);
        }
    }

    // row[target] += q * row[source]
    void add_row(int target, int source, const Integer& q) {
        if (q == 0) return;
        std::map<int, Integer> src = rows[source];
        for (const auto& [c, v] : src) set(target, c, get(target, c) + q * v);
    }

    void add_col(int target, int source, const Integer& q) {
        if (q == 0) return;
        for (int r : std::set<int>(col_rows[source])) {
            set(r, target, get(r, target) + q * get(r, source));
        }
    }

    // (row_i, row_j) <- (a*row_i + b*row_j, c*row_i + d*row_j); ad-bc = +-1
    void combine_rows(int i, int j, const Integer& a, const Integer& b, const Integer& c,
                      const Integer& d) {
        std::set<int> cols;
        for (const auto& [col, v] : rows[i]) cols.insert(col);
        for (const auto& [col, v] : rows[j]) cols.insert(col);
        for (int col : cols) {
            Integer vi = get(i, col), vj = get(j, col);
            set(i, col, a * vi + b * vj);
            set(j, col, c * vi + d * vj);
        }
    }

    void combine_cols(int i, int j, const Integer& a, const Integer& b, const Integer& c,
                      const Integer& d) {
        std::set<int> touched = col_rows[i];
        touched.insert(col_rows[j].begin(), col_rows[j].end());
        for (int r : touched) {
            Integer vi = get(r, i), vj = get(r, j);
            set(r, i, a * vi + b * vj);
            set(r, j, c * vi + d * vj);
        }
    }

    void negate_row(int r) {
        for (auto& [c, v] : rows[r]) v = -v;
    }

    // minimal-|value| nonzero with row, col >= t; ties prefer sparse
    bool find_pivot(int t, int& pr, int& pc) const {
        bool found = false;
        Integer best_val = 0;
        std::size_t best_fill = 0;
        for (int r = t; r < m; ++r) {
            for (const auto& [c, v] : rows[r]) {
                if (c < t) continue;
                Integer a = abs(v);
                std::size_t fill = rows[r].size() + col_rows[c].size();
                if (!found || a < best_val || (a == best_val && fill < best_fill)) {
                    found = true;
                    best_val = a;
                    best_fill = fill;
                    pr = r;
                    pc = c;
                    if (best_val == 1 && fill <= 4) return true;
                }
            }
        }
        return found;
    }

    bool row_clear_except(int r, int except_col) const {
        for (const auto& [c, v] : rows[r]) {
            if (c != except_col) return false;
        }
        return true;
    }

    bool col_clear_except(int c, int except_row) const {
        for (int r : col_rows[c]) {
            if (r != except_row) return false;
        }
        return true;
    }
};

// Dense transform helpers.
DenseMatrix dense_identity(int n) {
    DenseMatrix id(n, std::vector<Integer>(n, 0));
    for (int i = 0; i < n; ++i) id[i][i] = 1;
    return id;
}

void dense_swap_rows(DenseMatrix& a, int i, int j) { std::swap(a[i], a[j]); }

void dense_swap_cols(DenseMatrix& a, int i, int j) {
    for (auto& row : a) std::swap(row[i], row[j]);
}

void dense_add_row(DenseMatrix& a, int target, int source, const Integer& q) {
    for (std::size_t c = 0; c < a[target].size(); ++c) a[target][c] += q * a[source][c];
}

void dense_add_col(DenseMatrix& a, int target, int source, const Integer& q) {
    for (auto& row : a) row[target] += q * row[source];
}

void dense_combine_rows(DenseMatrix& m, int i, int j, const Integer& a, const Integer& b,
                        const Integer& c, const Integer& d) {
    for (std::size_t col = 0; col < m[i].size(); ++col) {
        Integer vi = m[i][col], vj = m[j][col];
        m[i][col] = a * vi + b * vj;
        m[j][col] = c * vi + d * vj;
    }
}

void dense_combine_cols(DenseMatrix& m, int i, int j, const Integer& a, const Integer& b,
                        const Integer& c, const Integer& d) {
    for (auto& row : m) {
        Integer vi = row[i], vj = row[j];
        row[i] = a * vi + b * vj;
        row[j] = c * vi + d * vj;
    }
}

void dense_negate_row(DenseMatrix& a, int r) {
    for (auto& v : a[r]) v = -v;
}

Integer row_dot(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    }
    return s;
}

Integer div_nearest(const Integer& a, const Integer& b) {
    Integer q = a / b;
    Integer rem = a - q * b;
    if (2 * abs(rem) > abs(b)) q += ((rem > 0) == (b > 0)) ? 1 : -1;
    return q;
}

// Rows `first_free`..end of `u` can be added to any other row without
// changing U*M*V (for U they span the left kernel of M; the same applies to
// the columns of V via its transpose).  Size-reducing against them shrinks
// the transform entries dramatically; determinants are unchanged.
void reduce_free_rows(DenseMatrix& u, int first_free) {
    int m = static_cast<int>(u.size());
    if (first_free >= m) return;

    // Lagrange-style passes among the free rows themselves
    bool changed = true;
    int guard = 0;
    while (changed && guard++ < 50) {
        changed = false;
        for (int k = first_free; k < m; ++k) {
            for (int l = first_free; l < m; ++l) {
                if (k == l) continue;
                Integer nl = row_dot(u[l], u[l]);
                if (nl == 0) continue;
                Integer c = div_nearest(row_dot(u[k], u[l]), nl);
                if (c == 0) continue;
                for (std::size_t i = 0; i < u[k].size(); ++i) u[k][i] -= c * u[l][i];
                changed = true;
            }
        }
    }
    // size-reduce the pivot rows against the free rows
    for (int pass = 0; pass < 2; ++pass) {
        for (int i = 0; i < first_free; ++i) {
            for (int l = first_free; l < m; ++l) {
                Integer nl = row_dot(u[l], u[l]);
                if (nl == 0) continue;
                Integer c = div_nearest(row_dot(u[i], u[l]), nl);
                if (c == 0) continue;
                for (std::size_t t2 = 0; t2 < u[i].size(); ++t2) u[i][t2] -= c * u[l][t2];
            }
        }
    }
}

DenseMatrix transposed(const DenseMatrix& a) {
    if (a.empty()) return a;
    DenseMatrix t(a[0].size(), std::vector<Integer>(a.size()));
    for (std::size_t r = 0; r < a.size(); ++r) {
        for (std::size_t c = 0; c < a[r].size(); ++c) t[c][r] = a[r][c];
    }
    return t;
}

} // namespace

SmithResult smith_normal_form(const IntegerMatrix& matrix, const SmithOptions& options) {
    const bool transforms = options.with_transforms || options.verify_transforms;
    Work w(matrix);
    DenseMatrix u, v;
    if (transforms) {
        u = dense_identity(w.m);
        v = dense_identity(w.n);
    }

    // Phase 1: diagonalize.  Each off-pivot entry is cleared in one step:
    // an exact division when possible, otherwise a unimodular 2x2 gcd
    // combination.  This keeps the intermediate entries (and the
    // transforms) from the quotient-cascade blowup.
    int limit = std::min(w.m, w.n);
    int t = 0;
    for (; t < limit; ++t) {
        int pr = 0, pc = 0;
        if (!w.find_pivot(t, pr, pc)) break;
        w.swap_rows(t, pr);
        w.swap_cols(t, pc);
        if (transforms) {
            dense_swap_rows(u, t, pr);
            dense_swap_cols(v, t, pc);
        }

        // Clearing a column is fill-free once the row is already clear (and
        // vice versa), because the ops then involve a pivot row/column with
        // a single nonzero.  Clearing the sparser direction first minimizes
        // the fill and growth caused by the first pass.
        auto clear_column = [&] {
            for (int r : std::set<int>(w.col_rows[t])) {
                if (r <= t) continue;
                Integer a = w.get(r, t);
                if (a == 0) continue;
                Integer p = w.get(t, t);
                if (a % p == 0) {
                    Integer q = -(a / p);
                    w.add_row(r, t, q);
                    if (transforms) dense_add_row(u, r, t, q);
                } else {
                    Integer s, x;
                    Integer g = ext_gcd(p, a, s, x);
                    w.combine_rows(t, r, s, x, -(a / g), p / g);
                    if (transforms) dense_combine_rows(u, t, r, s, x, -(a / g), p / g);
                }
            }
        };
        auto clear_row = [&] {
            for (const auto& [c, val0] : std::map<int, Integer>(w.rows[t])) {
                if (c <= t) continue;
                Integer a = w.get(t, c);
                if (a == 0) continue;
                Integer p = w.get(t, t);
                if (a % p == 0) {
                    Integer q = -(a / p);
                    w.add_col(c, t, q);
                    if (transforms) dense_add_col(v, c, t, q);
                } else {
                    Integer s, x;
                    Integer g = ext_gcd(p, a, s, x);
                    w.combine_cols(t, c, s, x, -(a / g), p / g);
                    if (transforms) dense_combine_cols(v, t, c, s, x, -(a / g), p / g);
                }
            }
        };
        while (true) {
            if (w.rows[t].size() <= w.col_rows[t].size()) {
                clear_row();
                clear_column();
            } else {
                clear_column();
                clear_row();
            }
            if (w.col_clear_except(t, t) && w.row_clear_except(t, t)) break;
        }

        if (w.get(t, t) < 0) {
            w.negate_row(t);
            if (transforms) dense_negate_row(u, t);
        }
    }
    int rank = t;

    // Phase 2: enforce the divisibility chain on the diagonal.  For a bad
    // pair diag(a, b) with a not dividing b, row/column 2x2 operations turn
    // it into diag(gcd, lcm) without touching the rest of the matrix.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < rank; ++i) {
            for (int j = i + 1; j < rank; ++j) {
                Integer a = w.get(i, i), b = w.get(j, j);
                if (b % a == 0) continue;
                changed = true;
                w.add_row(i, j, 1); // (i,j) becomes b
                if (transforms) dense_add_row(u, i, j, 1);
                Integer s, x;
                Integer g = ext_gcd(a, b, s, x);
                w.combine_cols(i, j, s, x, -(b / g), a / g);
                if (transforms) dense_combine_cols(v, i, j, s, x, -(b / g), a / g);
                // the (j,i) entry is now u*b; clear it with a row operation
                Integer q = -(w.get(j, i) / g);
                w.add_row(j, i, q);
                if (transforms) dense_add_row(u, j, i, q);
                if (w.get(i, i) < 0) {
                    w.negate_row(i);
                    if (transforms) dense_negate_row(u, i);
                }
                if (w.get(j, j) < 0) {
                    w.negate_row(j);
                    if (transforms) dense_negate_row(u, j);
                }
            }
        }
    }

    SmithResult result;
    result.rank = rank;
    for (int i = 0; i < rank; ++i) result.invariant_factors.push_back(w.get(i, i));
    for (std::size_t i = 1; i < result.invariant_factors.size(); ++i) {
        if (result.invariant_factors[i] % result.invariant_factors[i - 1] != 0) {
            throw ConstructionError("smith_normal_form: invariant factors do not form a chain");
        }
    }
    if (transforms) {
        reduce_free_rows(u, rank);
        DenseMatrix vt = transposed(v);
        reduce_free_rows(vt, rank);
        v = transposed(vt);
        result.u = std::move(u);
        result.v = std::move(v);
        result.has_transforms = true;
    }
    if (options.verify_transforms) {
        int m = matrix.rows(), n = matrix.cols();
        DenseMatrix mv(m, std::vector<Integer>(n, 0));
        for (const auto& [rc, val] : matrix.entries()) {
            for (int c = 0; c < n; ++c) {
                if (result.v[rc.second][c] != 0) mv[rc.first][c] += val * result.v[rc.second][c];
            }
        }
        for (int r = 0; r < m; ++r) {
            for (int c = 0; c < n; ++c) {
                Integer s = 0;
                for (int k = 0; k < m; ++k) {
                    if (result.u[r][k] != 0 && mv[k][c] != 0) s += result.u[r][k] * mv[k][c];
                }
                Integer expect =
                    (r == c && r < result.rank) ? result.invariant_factors[r] : Integer(0);
                if (s != expect) {
                    throw ConstructionError(
                        "smith_normal_form: U*M*V disagrees with the diagonal at (" +
                        std::to_string(r) + "," + std::to_string(c) + ")");
                }
            }
        }
    }
    return result;
}

int integer_rank(const IntegerMatrix& matrix) {
    Work w(matrix);
    int limit = std::min(w.m, w.n);
    int t = 0;
    for (; t < limit; ++t) {
        int pr = 0, pc = 0;
        if (!w.find_pivot(t, pr, pc)) break;
        w.swap_rows(t, pr);
        w.swap_cols(t, pc);
        // one-shot eliminations below the pivot; row echelon suffices
        for (int r : std::set<int>(w.col_rows[t])) {
            if (r <= t) continue;
            Integer a = w.get(r, t);
            if (a == 0) continue;
            Integer p = w.get(t, t);
            if (a % p == 0) {
                w.add_row(r, t, -(a / p));
            } else {
                Integer s, x;
                Integer g = ext_gcd(p, a, s, x);
                w.combine_rows(t, r, s, x, -(a / g), p / g);
            }
        }
    }
    return t;
}

} // namespace sptri
