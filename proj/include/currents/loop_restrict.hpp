#pragma once

// Restriction of the torus current algebra to the loop subalgebra spanned by
// J^a_m := J^a(m e) for a fixed direction e in Z^3, and extraction of the
// cocycle the restriction induces.
//
//   MF:        eps^{mu nu rho} (m e)_mu (n e)_nu = 0, so the extension dies.
//   Kassel(k): k kappa^{ab} m delta_{m+n,0} K_e with K_e = e_mu S^mu(0),
//              the central term of an affine algebra.

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "currents/current_algebra.hpp"

namespace currents {

class Direction {
public:
    /// Throws InvalidArgument for the zero vector.
    explicit Direction(const Momentum& e);
    Direction(std::int64_t e1, std::int64_t e2, std::int64_t e3) : Direction(Momentum{e1, e2, e3}) {}

    const Momentum& vector() const { return e_; }

private:
    Momentum e_;
};

/// 1 * J^a(m e)
CurrentElement embed(std::size_t a, std::int64_t m, const Direction& e);

/// e_mu S^mu(0), the central element of the restricted Kassel algebra.
CurrentElement central_element(const Direction& e);

struct RestrictedBracketReport {
    std::int64_t mode = 0;                    // m + n; loop_part lives at J^c_{mode}
    std::map<std::size_t, Gaussian> loop_part;
    CurrentElement extension_part;            // A-, S- and unit-sector content
    bool matches_loop_algebra = true;         // extension_part == 0
};

RestrictedBracketReport restricted_bracket(std::size_t a, std::size_t b, std::int64_t m, std::int64_t n,
                                           const Direction& e, const Flavor& flavor, const MatrixLieAlgebra& alg);

/// What the restriction theorem predicts for extension_part:
/// k kappa^{ab} m delta_{m+n,0} K_e for Kassel, zero otherwise.
CurrentElement predicted_extension(std::size_t a, std::size_t b, std::int64_t m, std::int64_t n,
                                   const Direction& e, const Flavor& flavor, const MatrixLieAlgebra& alg);

/// Checks one restricted bracket against the loop homomorphism and the
/// predicted extension. Returns the reason for the first failure.
std::optional<std::string> check_restriction(std::size_t a, std::size_t b, std::int64_t m, std::int64_t n,
                                             const Direction& e, const Flavor& flavor, const MatrixLieAlgebra& alg);

struct ScanWitness {
    Momentum e;
    std::size_t a = 0, b = 0;
    std::int64_t m = 0, n = 0;
    std::string reason;
    std::string extension_part;
    std::string predicted;
};

struct ScanReport {
    std::string flavor;
    std::string level;  // "p/q"; empty unless Kassel
    std::string algebra;
    std::size_t trials = 0;
    std::size_t violations = 0;
    std::optional<ScanWitness> witness;  // first violation found
};

/// Random (e, a, b, m, n) with every component of e, m, n in [-bound, bound]
/// and e != 0. Deterministic in `seed`.
ScanReport cocycle_scan(const Flavor& flavor, const MatrixLieAlgebra& alg, std::size_t trials, std::uint64_t seed,
                        std::int64_t bound = 10);

/// Every e in [-e_bound, e_bound]^3 \ {0}, every basis pair, every m, n in
/// [-mode_bound, mode_bound].
ScanReport cocycle_grid(const Flavor& flavor, const MatrixLieAlgebra& alg, std::int64_t e_bound,
                        std::int64_t mode_bound);

}  // namespace currents
