#include "currents/loop_restrict.hpp"

#include "currents/random.hpp"

namespace currents {

Direction::Direction(const Momentum& e) : e_(e) {
    if (e.is_zero()) throw InvalidArgument("loop direction e must be nonzero");
}

CurrentElement embed(std::size_t a, std::int64_t m, const Direction& e) {
    return CurrentElement::of(GenSymbol::J(a, e.vector().scaled(m)));
}

CurrentElement central_element(const Direction& e) {
    CurrentElement k;
    for (int mu = 1; mu <= 3; ++mu) k.add_term(GenSymbol::S(mu, Momentum{}), Gaussian(Rational(e.vector()[mu - 1])));
    return k;
}

RestrictedBracketReport restricted_bracket(std::size_t a, std::size_t b, std::int64_t m, std::int64_t n,
                                           const Direction& e, const Flavor& flavor, const MatrixLieAlgebra& alg) {
    alg.check_index(a);
    alg.check_index(b);
    const CurrentElement full = bracket(embed(a, m, e), embed(b, n, e), flavor, alg);

    RestrictedBracketReport report;
    if (__builtin_add_overflow(m, n, &report.mode)) throw std::overflow_error("loop mode overflow");
    const Momentum target = e.vector().scaled(report.mode);
    report.extension_part.bind(alg.name());
    for (const auto& [sym, coeff] : full.terms()) {
        if (sym.kind == SymbolKind::J) {
            if (sym.m != target)
                throw InvariantViolation("restricted bracket produced " + sym.to_string(&alg) + " off the loop line");
            report.loop_part.emplace(sym.color, coeff);
        } else {
            report.extension_part.add_term(sym, coeff);
        }
    }
    report.matches_loop_algebra = report.extension_part.is_zero();
    return report;
}

CurrentElement predicted_extension(std::size_t a, std::size_t b, std::int64_t m, std::int64_t n,
                                   const Direction& e, const Flavor& flavor, const MatrixLieAlgebra& alg) {
    CurrentElement out;
    if (flavor.kind() != Flavor::Kind::Kassel || m + n != 0) return out;
    const Gaussian coeff = Gaussian(flavor.level()) * alg.kappa(a, b) * Gaussian(Rational(m));
    return coeff * central_element(e);
}

std::optional<std::string> check_restriction(std::size_t a, std::size_t b, std::int64_t m, std::int64_t n,
                                             const Direction& e, const Flavor& flavor, const MatrixLieAlgebra& alg) {
    const auto report = restricted_bracket(a, b, m, n, e, flavor, alg);

    std::map<std::size_t, Gaussian> expected_loop;
    for (const auto& [c, f] : alg.bracket_terms(a, b)) expected_loop.emplace(c, f);
    if (report.loop_part != expected_loop) return "loop part differs from f^{ab}_c";

    if (!(report.extension_part == predicted_extension(a, b, m, n, e, flavor, alg)))
        return flavor.kind() == Flavor::Kind::Kassel ? "extension differs from k kappa^{ab} m delta_{m+n,0} K_e"
                                                     : "extension does not vanish on the loop subalgebra";
    return std::nullopt;
}

namespace {

class ScanAccumulator {
public:
    ScanAccumulator(const Flavor& flavor, const MatrixLieAlgebra& alg) : flavor_(flavor), alg_(alg) {
        report_.flavor = flavor.name();
        if (flavor.kind() == Flavor::Kind::Kassel) report_.level = flavor.level().to_string();
        report_.algebra = alg.name();
    }

    void run(const Momentum& ev, std::size_t a, std::size_t b, std::int64_t m, std::int64_t n) {
        ++report_.trials;
        const Direction e(ev);
        auto reason = check_restriction(a, b, m, n, e, flavor_, alg_);
        if (!reason) return;
        ++report_.violations;
        if (report_.witness) return;
        ScanWitness w;
        w.e = ev;
        w.a = a;
        w.b = b;
        w.m = m;
        w.n = n;
        w.reason = *reason;
        w.extension_part = restricted_bracket(a, b, m, n, e, flavor_, alg_).extension_part.to_string(&alg_);
        w.predicted = predicted_extension(a, b, m, n, e, flavor_, alg_).to_string(&alg_);
        report_.witness = std::move(w);
    }

    ScanReport take() { return std::move(report_); }

private:
    const Flavor& flavor_;
    const MatrixLieAlgebra& alg_;
    ScanReport report_;
};

}  // namespace

ScanReport cocycle_scan(const Flavor& flavor, const MatrixLieAlgebra& alg, std::size_t trials, std::uint64_t seed,
                        std::int64_t bound) {
    if (trials == 0) throw InvalidArgument("cocycle scan needs at least one trial");
    if (bound < 1) throw InvalidArgument("cocycle scan bound must be at least 1");
    ScanAccumulator acc(flavor, alg);
    for (std::size_t t = 0; t < trials; ++t) {
        TrialRng rng(seed, t);
        Momentum e;
        do {
            e = Momentum{rng.uniform(-bound, bound), rng.uniform(-bound, bound), rng.uniform(-bound, bound)};
        } while (e.is_zero());
        const std::size_t a = rng.index(alg.dim());
        const std::size_t b = rng.index(alg.dim());
        const std::int64_t m = rng.uniform(-bound, bound);
        const std::int64_t n = rng.uniform(-bound, bound);
        acc.run(e, a, b, m, n);
    }
    return acc.take();
}

ScanReport cocycle_grid(const Flavor& flavor, const MatrixLieAlgebra& alg, std::int64_t e_bound,
                        std::int64_t mode_bound) {
    if (e_bound < 1 || mode_bound < 0) throw InvalidArgument("cocycle grid bounds must be positive");
    ScanAccumulator acc(flavor, alg);
    for (std::int64_t e1 = -e_bound; e1 <= e_bound; ++e1)
        for (std::int64_t e2 = -e_bound; e2 <= e_bound; ++e2)
            for (std::int64_t e3 = -e_bound; e3 <= e_bound; ++e3) {
                const Momentum e{e1, e2, e3};
                if (e.is_zero()) continue;
                for (std::size_t a = 0; a < alg.dim(); ++a)
                    for (std::size_t b = 0; b < alg.dim(); ++b)
                        for (std::int64_t m = -mode_bound; m <= mode_bound; ++m)
                            for (std::int64_t n = -mode_bound; n <= mode_bound; ++n) acc.run(e, a, b, m, n);
            }
    return acc.take();
}

}  // namespace currents
