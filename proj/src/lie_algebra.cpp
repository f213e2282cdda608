#include "currents/lie_algebra.hpp"

#include <algorithm>

namespace currents {

bool Tensor3::is_totally_symmetric() const {
    for (std::size_t a = 0; a < dim_; ++a)
        for (std::size_t b = 0; b < dim_; ++b)
            for (std::size_t c = 0; c < dim_; ++c) {
                const Gaussian& x = (*this)(a, b, c);
                if (!(x == (*this)(b, a, c) && x == (*this)(a, c, b) && x == (*this)(c, b, a) &&
                      x == (*this)(b, c, a) && x == (*this)(c, a, b)))
                    return false;
            }
    return true;
}

bool Tensor3::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Gaussian& g) { return g.is_zero(); });
}

std::optional<std::size_t> MatrixLieAlgebra::find_label(std::string_view label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

bool MatrixLieAlgebra::is_abelian() const { return f_.is_zero(); }

void MatrixLieAlgebra::check_index(std::size_t a) const {
    if (a >= dim())
        throw IndexOutOfRange("color index " + std::to_string(a) + " out of range for algebra '" + name_ +
                              "' of dimension " + std::to_string(dim()));
}

void MatrixLieAlgebra::rebuild_term_tables() {
    const std::size_t n = dim();
    bracket_terms_.assign(n * n, {});
    coadjoint_terms_.assign(n * n, {});
    d_terms_.assign(n * n, {});
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                if (!f_(a, b, c).is_zero()) bracket_terms_[a * n + b].push_back({c, f_(a, b, c)});
                if (!f_(a, c, b).is_zero()) coadjoint_terms_[a * n + b].push_back({c, f_(a, c, b)});
                if (!d_(a, b, c).is_zero()) d_terms_[a * n + b].push_back({c, d_(a, b, c)});
            }
}

namespace {

ComplexMatrix commutator(const ComplexMatrix& x, const ComplexMatrix& y) { return x * y - y * x; }

/// Basis matrices flattened into the columns of an (n*n) x dim matrix.
ComplexMatrix flatten_columns(const std::vector<ComplexMatrix>& mats, std::size_t n) {
    ComplexMatrix out(n * n, mats.size());
    for (std::size_t j = 0; j < mats.size(); ++j)
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) out(r * n + c, j) = mats[j](r, c);
    return out;
}

}  // namespace

MatrixLieAlgebra build_algebra(std::string name, std::vector<ComplexMatrix> basis, std::vector<std::string> labels) {
    if (basis.empty()) throw InvalidArgument("algebra '" + name + "' has an empty basis");
    const std::size_t n = basis.front().rows();
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i].rows() != n || basis[i].cols() != n)
            throw DimensionMismatch("basis element " + std::to_string(i) + " is not " + std::to_string(n) + "x" +
                                    std::to_string(n));
    if (n == 0) throw InvalidArgument("algebra '" + name + "' has 0x0 basis matrices");

    const std::size_t dim = basis.size();
    if (labels.empty())
        for (std::size_t i = 0; i < dim; ++i) labels.push_back(std::to_string(i + 1));
    if (labels.size() != dim)
        throw DimensionMismatch("algebra '" + name + "' has " + std::to_string(labels.size()) + " labels for " +
                                std::to_string(dim) + " basis elements");
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j)
            if (labels[i] == labels[j]) throw InvalidArgument("duplicate basis label '" + labels[i] + "'");

    const ComplexMatrix columns = flatten_columns(basis, n);
    {
        // First non-pivot column is the first element dependent on its predecessors.
        const auto ech = row_reduce(columns);
        for (std::size_t j = 0; j < dim; ++j)
            if (j >= ech.pivots.size() || ech.pivots[j] != j) throw LinearlyDependentBasis(j);
    }

    std::vector<ComplexMatrix> commutators;
    commutators.reserve(dim * dim);
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) commutators.push_back(commutator(basis[a], basis[b]));
    const auto coords = solve_columns(columns, flatten_columns(commutators, n));

    MatrixLieAlgebra alg;
    alg.name_ = std::move(name);
    alg.rep_size_ = n;
    alg.labels_ = std::move(labels);
    alg.f_ = Tensor3(dim);
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < dim; ++b) {
            const auto& x = coords[a * dim + b];
            if (!x) throw NonClosedBasis(a, b);
            for (std::size_t c = 0; c < dim; ++c) alg.f_(a, b, c) = (*x)[c];
        }

    alg.kappa_ = ComplexMatrix(dim, dim);
    alg.d_ = Tensor3(dim);
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = a; b < dim; ++b) {
            const ComplexMatrix ab = basis[a] * basis[b];
            alg.kappa_(a, b) = ab.trace();
            alg.kappa_(b, a) = alg.kappa_(a, b);
            const ComplexMatrix anti = ab + basis[b] * basis[a];
            for (std::size_t c = 0; c < dim; ++c) {
                const Gaussian value = (anti * basis[c]).trace();
                alg.d_(a, b, c) = value;
                alg.d_(b, a, c) = value;
            }
        }
    alg.basis_ = std::move(basis);
    alg.rebuild_term_tables();

    if (auto violation = find_invariant_violation(alg)) throw InvariantViolation(*violation);

    if (alg.is_abelian()) alg.warnings_.push_back("abelian algebra: all structure constants vanish");
    if (rank(alg.kappa_) < dim) alg.warnings_.push_back("degenerate trace form: kappa is singular");
    return alg;
}

Gaussian d_tensor(const MatrixLieAlgebra& alg, std::size_t a, std::size_t b, std::size_t c) {
    alg.check_index(a);
    alg.check_index(b);
    alg.check_index(c);
    const auto& t = alg.basis();
    return ((t[a] * t[b] + t[b] * t[a]) * t[c]).trace();
}

Gaussian invariance_defect(const MatrixLieAlgebra& alg, const Tensor3& x, std::size_t di, std::size_t a,
                           std::size_t b, std::size_t c) {
    if (x.dim() != alg.dim())
        throw DimensionMismatch("tensor of dimension " + std::to_string(x.dim()) + " against algebra of dimension " +
                                std::to_string(alg.dim()));
    for (auto i : {di, a, b, c}) alg.check_index(i);
    Gaussian sum;
    for (const auto& [e, coeff] : alg.bracket_terms(di, a)) sum += coeff * x(e, b, c);
    for (const auto& [e, coeff] : alg.bracket_terms(di, b)) sum += coeff * x(a, e, c);
    for (const auto& [e, coeff] : alg.bracket_terms(di, c)) sum += coeff * x(a, b, e);
    return sum;
}

Gaussian kappa_invariance_defect(const MatrixLieAlgebra& alg, std::size_t di, std::size_t a, std::size_t b) {
    Gaussian sum;
    for (const auto& [e, coeff] : alg.bracket_terms(di, a)) sum += coeff * alg.kappa(e, b);
    for (const auto& [e, coeff] : alg.bracket_terms(di, b)) sum += coeff * alg.kappa(a, e);
    return sum;
}

Gaussian jacobi_defect(const MatrixLieAlgebra& alg, std::size_t a, std::size_t b, std::size_t c, std::size_t e) {
    Gaussian sum;
    for (const auto& [d, coeff] : alg.bracket_terms(a, b)) sum += coeff * alg.f(d, c, e);
    for (const auto& [d, coeff] : alg.bracket_terms(b, c)) sum += coeff * alg.f(d, a, e);
    for (const auto& [d, coeff] : alg.bracket_terms(c, a)) sum += coeff * alg.f(d, b, e);
    return sum;
}

std::optional<std::string> find_invariant_violation(const MatrixLieAlgebra& alg) {
    const std::size_t n = alg.dim();
    const auto& lab = alg.labels();
    auto idx = [&](std::initializer_list<std::size_t> is) {
        std::string s = "(";
        bool first = true;
        for (auto i : is) {
            if (!first) s += ",";
            s += lab[i];
            first = false;
        }
        return s + ")";
    };

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (!(alg.f(a, b, c) == -alg.f(b, a, c)))
                    return "antisymmetry f^{ab}_c = -f^{ba}_c fails at " + idx({a, b, c});

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c)
                for (std::size_t e = 0; e < n; ++e)
                    if (!jacobi_defect(alg, a, b, c, e).is_zero())
                        return "Jacobi identity fails at " + idx({a, b, c, e});

    if (!alg.kappa_matrix().is_symmetric()) return "kappa is not symmetric";
    if (!alg.d_tensor().is_totally_symmetric()) return "d is not totally symmetric";

    for (std::size_t di = 0; di < n; ++di)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                if (!kappa_invariance_defect(alg, di, a, b).is_zero())
                    return "ad-invariance of kappa fails at " + idx({di, a, b});
                for (std::size_t c = 0; c < n; ++c)
                    if (!invariance_defect(alg, alg.d_tensor(), di, a, b, c).is_zero())
                        return "ad-invariance of d fails at " + idx({di, a, b, c});
            }
    return std::nullopt;
}

MatrixLieAlgebra su2() {
    const Gaussian i = Gaussian::i();
    const Gaussian half_i = Gaussian(Rational(0), rat(-1, 2));  // -(i/2)
    ComplexMatrix s1(2, 2), s2(2, 2), s3(2, 2);
    s1(0, 1) = 1;
    s1(1, 0) = 1;
    s2(0, 1) = -i;
    s2(1, 0) = i;
    s3(0, 0) = 1;
    s3(1, 1) = -1;
    return build_algebra("su2", {half_i * s1, half_i * s2, half_i * s3}, {"1", "2", "3"});
}

MatrixLieAlgebra sl3() {
    auto unit = [](std::size_t r, std::size_t c) {
        ComplexMatrix m(3, 3);
        m(r, c) = 1;
        return m;
    };
    return build_algebra("sl3",
                         {unit(0, 1), unit(1, 0), unit(0, 2), unit(2, 0), unit(1, 2), unit(2, 1),
                          unit(0, 0) - unit(1, 1), unit(1, 1) - unit(2, 2)},
                         {"E12", "E21", "E13", "E31", "E23", "E32", "H1", "H2"});
}

MatrixLieAlgebra corrupt_structure_constant(const MatrixLieAlgebra& alg, std::size_t a, std::size_t b, std::size_t c,
                                            const Gaussian& delta) {
    for (auto i : {a, b, c}) alg.check_index(i);
    MatrixLieAlgebra out = alg;
    out.f_(a, b, c) += delta;
    out.rebuild_term_tables();
    return out;
}

}  // namespace currents
