#pragma once

// Highest-weight modules of affine sl(2) and their contravariant
// (Shapovalov) form.
//
// Relations at level k:
//   [E_m, F_n] = H_{m+n} + m k delta_{m+n,0}
//   [H_m, E_n] = 2 E_{m+n}
//   [H_m, F_n] = -2 F_{m+n}
//   [H_m, H_n] = 2 m k delta_{m+n,0}
// Conjugation (compact form): E_n^† = F_{-n}, H_n^† = H_{-n}.
// The highest-weight vector v obeys X_m v = 0 for m >= 1, E_0 v = 0 and
// H_0 v = h v. Vectors of the Verma-type module are PBW monomials in
// E_{-n}, H_{-n}, F_{-n} (n >= 1) and F_0 applied to v; nothing is quotiented.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "currents/exact.hpp"
#include "currents/linalg.hpp"

namespace currents::affine {

using RationalMatrix = DenseMatrix<Rational>;

enum class Letter : std::uint8_t { E = 0, H = 1, F = 2 };

/// X_mode. Ordered by (mode, letter): deeper modes first, then E < H < F,
/// which is the canonical left-to-right order inside a PBW monomial.
struct Generator {
    std::int64_t mode = 0;
    Letter letter = Letter::E;

    /// Lowering letters: every negative mode, plus F_0.
    bool is_creation() const { return mode < 0 || (mode == 0 && letter == Letter::F); }
    Generator dagger() const;
    /// "E_{-1}", "F_{0}", ...
    std::string to_string() const;

    friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// A bracket [x, y] = sum coeff * generator + central * K, with K acting as the level.
struct Commutator {
    std::vector<std::pair<Generator, Rational>> terms;
    Rational central;
};

Commutator affine_bracket(const Generator& x, const Generator& y);

struct AffineWeight {
    Rational k;  // level
    Rational h;  // H_0 eigenvalue of the highest-weight vector (2j for spin j)
};

/// Canonically ordered creation letters; the empty monomial is v itself.
class PBWMonomial {
public:
    PBWMonomial() = default;
    /// Sorts the letters into canonical order. Throws InvalidArgument on a
    /// non-creation letter.
    explicit PBWMonomial(std::vector<Generator> letters);

    const std::vector<Generator>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    /// Sum of mode depths.
    std::int64_t grade() const;
    /// Shift of the H_0 eigenvalue relative to v: 2 (#E - #F), F_0 included.
    std::int64_t charge() const;
    std::size_t f0_count() const;

    /// "E_{-1} E_{-1}"; "v" for the empty monomial.
    std::string to_string() const;

    friend auto operator<=>(const PBWMonomial&, const PBWMonomial&) = default;

private:
    friend class Shapovalov;
    std::vector<Generator> letters_;
};

/// All canonical monomials of the given grade and charge, in PBWMonomial
/// order. `max_f0` caps the number of F_0 letters (no cap by default; each
/// (grade, charge) block is finite either way).
std::vector<PBWMonomial> pbw_basis(std::int64_t grade, std::int64_t charge,
                                   std::optional<std::size_t> max_f0 = std::nullopt);

/// <x v, y v>, computed by normal ordering x^† y v.
Rational shapovalov_pair(const PBWMonomial& x, const PBWMonomial& y, const AffineWeight& w);

/// Normal-ordering engine with a per-instance cache. Not thread-safe; make
/// one per task.
class Shapovalov {
public:
    using Vector = std::map<PBWMonomial, Rational>;

    explicit Shapovalov(AffineWeight w) : weight_(std::move(w)) {}

    /// X (mono v), expanded in the PBW basis.
    const Vector& apply(const Generator& x, const PBWMonomial& mono);
    Rational pair(const PBWMonomial& x, const PBWMonomial& y);
    const AffineWeight& weight() const { return weight_; }

private:
    Vector compute(const Generator& x, const PBWMonomial& mono);
    void apply_to_vector(const Generator& x, const Vector& in, const Rational& scale, Vector& out);

    AffineWeight weight_;
    std::map<std::pair<Generator, PBWMonomial>, Vector> cache_;
};

struct Inertia {
    std::size_t positive = 0;
    std::size_t zero = 0;
    std::size_t negative = 0;
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// T and D with T^T M T = diag(D), by symmetric congruence elimination.
/// Pivots on a nonzero diagonal entry; when the remaining diagonal is zero
/// but an off-diagonal entry a is not, the hyperbolic pair is first mixed
/// (row/column p += q), giving pivots 2a and -a/2.
struct CongruenceDiagonalization {
    RationalMatrix transform;
    std::vector<Rational> diagonal;
};

/// Throws InvalidArgument on a non-symmetric matrix.
CongruenceDiagonalization diagonalize_congruence(const RationalMatrix& m);

/// Sylvester inertia (n+, n0, n-). Throws InvalidArgument on a non-symmetric matrix.
Inertia inertia(const RationalMatrix& m);

struct GramOptions {
    std::int64_t max_grade = 4;
    /// Cap on F_0 letters per monomial. 0 keeps only the loop-mode
    /// descendants; larger values add zero-mode dressings (a principal
    /// submatrix of each full Verma block).
    std::size_t max_f0 = 0;
};

struct GramReport {
    std::int64_t grade = 0;
    std::int64_t charge = 0;
    std::vector<PBWMonomial> basis;
    RationalMatrix matrix;
    Inertia inertia;
    std::vector<std::vector<Rational>> null_basis;
};

/// One block per charge present at this grade, highest charge first.
/// Throws LimitExceeded when grade > options.max_grade.
std::vector<GramReport> gram(std::int64_t grade, const AffineWeight& w, const GramOptions& options = {});

GramReport gram_block(std::int64_t grade, std::int64_t charge, const AffineWeight& w, const GramOptions& options = {});

enum class Verdict { NonUnitary, CandidateUnitary };
std::string to_string(Verdict v);

struct NormWitness {
    std::int64_t grade = 0;
    std::int64_t charge = 0;
    std::vector<std::pair<PBWMonomial, Rational>> vector;  // nonzero components
    Rational norm;
};

struct ScanRow {
    AffineWeight weight;
    std::int64_t max_grade = 0;
    Verdict verdict = Verdict::CandidateUnitary;
    std::optional<NormWitness> witness;  // set iff NonUnitary
    /// Every Gram entry through max_grade vanishes apart from <v, v> = 1.
    bool all_null = false;
    std::optional<std::int64_t> first_null_grade;
};

/// Walks grades 0..max_grade and blocks in gram() order; the first block
/// with a negative direction yields the witness.
ScanRow classify(const AffineWeight& w, std::int64_t max_grade, const GramOptions& options = {});

/// classify() for every (k, h) in levels x weights, levels outermost.
std::vector<ScanRow> unitarity_scan(const std::vector<Rational>& levels, const std::vector<Rational>& weights,
                                    std::int64_t max_grade, const GramOptions& options = {});

}  // namespace currents::affine
