#include "sptri/homology.hpp"

#include <algorithm>
#include <sstream>

namespace sptri {

bool ChainComplexData::boundary_squares_to_zero() const {
    for (std::size_t k = 0; k + 1 < matrices.size(); ++k) {
        if (!matrices[k].product_is_zero(matrices[k + 1])) return false;
    }
    return true;
}

ChainComplexData boundary_matrices(const SimplicialComplex& complex) {
    if (complex.is_empty() || complex.dimension() < 0) {
        throw PreconditionError("boundary_matrices: complex has no vertices");
    }
    ChainComplexData data;
    int dim = complex.dimension();
    data.faces_by_dim.resize(dim + 1);
    for (int k = 0; k <= dim; ++k) data.faces_by_dim[k] = complex.faces(k);

    data.matrices.resize(dim + 1);
    // augmentation: every vertex maps to the (-1)-face with coefficient 1
    IntegerMatrix aug(1, static_cast<int>(data.faces_by_dim[0].size()));
    for (int c = 0; c < aug.cols(); ++c) aug.set(0, c, 1);
    data.matrices[0] = aug;

    for (int k = 1; k <= dim; ++k) {
        const auto& rows = data.faces_by_dim[k - 1];
        const auto& cols = data.faces_by_dim[k];
        IntegerMatrix d(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        for (std::size_t j = 0; j < cols.size(); ++j) {
            const auto& vs = cols[j].vertices();
            int sign = 1;
            for (std::size_t t = 0; t < vs.size(); ++t) {
                Face ridge = cols[j].without(vs[t]);
                auto it = std::lower_bound(rows.begin(), rows.end(), ridge);
                d.set(static_cast<int>(it - rows.begin()), static_cast<int>(j), sign);
                sign = -sign;
            }
        }
        data.matrices[k] = std::move(d);
    }
    return data;
}

long long HomologyProfile::betti_at(int k) const {
    if (k < 0 || k >= static_cast<int>(betti.size())) return 0;
    return betti[k];
}

const std::vector<Integer>& HomologyProfile::torsion_at(int k) const {
    static const std::vector<Integer> kNone;
    if (k < 0 || k >= static_cast<int>(torsion.size())) return kNone;
    return torsion[k];
}

bool HomologyProfile::torsion_free() const {
    for (const auto& t : torsion) {
        if (!t.empty()) return false;
    }
    return true;
}

std::string HomologyProfile::str() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < betti.size(); ++k) {
        if (k) os << "\n";
        os << "H_" << k << " = ";
        bool any = false;
        if (betti[k] > 0) {
            os << "Z";
            if (betti[k] > 1) os << "^" << betti[k];
            any = true;
        }
        for (const auto& t : torsion_at(static_cast<int>(k))) {
            if (any) os << " + ";
            os << "Z/" << t;
            any = true;
        }
        if (!any) os << "0";
    }
    return os.str();
}

HomologyProfile sphere_profile(int dim_complex, int sphere_dim) {
    HomologyProfile p;
    p.betti.assign(dim_complex + 1, 0);
    p.torsion.assign(dim_complex + 1, {});
    if (sphere_dim >= 0 && sphere_dim <= dim_complex) p.betti[sphere_dim] = 1;
    return p;
}

HomologyProfile sphere_product_profile(int a, int b) {
    HomologyProfile p;
    p.betti.assign(a + b + 1, 0);
    p.torsion.assign(a + b + 1, {});
    p.betti[a] += 1;
    p.betti[b] += 1;
    p.betti[a + b] += 1;
    if (a == 0 || b == 0) {
        // S^0 factors: Kunneth doubles the other factor instead.
        p.betti.assign(a + b + 1, 0);
        p.betti[0] = (a == 0 && b == 0) ? 3 : 1;
        if (a + b > 0) p.betti[a + b] = 2;
    }
    return p;
}

HomologyProfile reduced_homology(const SimplicialComplex& complex,
                                 const HomologyOptions& options) {
    if (complex.is_empty()) {
        throw PreconditionError("reduced_homology: complex is empty");
    }
    ChainComplexData data = boundary_matrices(complex);
    int dim = data.top_dimension();

    std::vector<int> rank(dim + 2, 0);
    std::vector<std::vector<Integer>> factors(dim + 1);
    for (int k = 0; k <= dim; ++k) {
        if (options.torsion) {
            SmithResult s = smith_normal_form(data.matrices[k]);
            rank[k] = s.rank;
            factors[k] = std::move(s.invariant_factors);
        } else {
            rank[k] = integer_rank(data.matrices[k]);
        }
    }
    if (!options.reduced) rank[0] = 0; // drop the augmentation

    HomologyProfile p;
    p.reduced = options.reduced;
    p.betti.assign(dim + 1, 0);
    p.torsion.assign(dim + 1, {});
    for (int k = 0; k <= dim; ++k) {
        long long fk = static_cast<long long>(data.faces_by_dim[k].size());
        p.betti[k] = fk - rank[k] - rank[k + 1];
        if (options.torsion && k + 1 <= dim) {
            for (const auto& d : factors[k + 1]) {
                if (d > 1) p.torsion[k].push_back(d);
            }
        }
    }
    return p;
}

} // namespace sptri
