#include "currents/current_algebra.hpp"

#include <stdexcept>

namespace currents {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("momentum component overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("momentum component overflow");
    return r;
}

}  // namespace

Momentum Momentum::operator+(const Momentum& o) const {
    return {checked_add(c[0], o.c[0]), checked_add(c[1], o.c[1]), checked_add(c[2], o.c[2])};
}

Momentum Momentum::operator-() const { return scaled(-1); }

Momentum Momentum::scaled(std::int64_t t) const {
    return {checked_mul(c[0], t), checked_mul(c[1], t), checked_mul(c[2], t)};
}

Rational Momentum::dot(const Momentum& o) const {
    Rational s;
    for (std::size_t mu = 0; mu < 3; ++mu) s += Rational(c[mu]) * Rational(o.c[mu]);
    return s;
}

std::string Momentum::to_string() const {
    return "(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]) + ")";
}

GenSymbol GenSymbol::J(std::size_t a, const Momentum& m) {
    return {SymbolKind::J, static_cast<std::uint32_t>(a), 0, m};
}

GenSymbol GenSymbol::A(std::size_t a, int mu, const Momentum& m) {
    if (mu < 1 || mu > 3) throw IndexOutOfRange("spatial index " + std::to_string(mu) + " not in 1..3");
    return {SymbolKind::A, static_cast<std::uint32_t>(a), static_cast<std::uint8_t>(mu), m};
}

GenSymbol GenSymbol::S(int mu, const Momentum& m) {
    if (mu < 1 || mu > 3) throw IndexOutOfRange("spatial index " + std::to_string(mu) + " not in 1..3");
    return {SymbolKind::S, 0, static_cast<std::uint8_t>(mu), m};
}

std::string GenSymbol::to_string(const MatrixLieAlgebra* alg) const {
    auto color_name = [&] {
        if (alg && color < alg->dim()) return alg->labels()[color];
        return std::to_string(color);
    };
    switch (kind) {
        case SymbolKind::J: return "J[" + color_name() + "]" + m.to_string();
        case SymbolKind::A: return "A[" + color_name() + "," + std::to_string(mu) + "]" + m.to_string();
        case SymbolKind::S: return "S[" + std::to_string(mu) + "]" + m.to_string();
        case SymbolKind::Unit: break;
    }
    return "1";
}

CurrentElement CurrentElement::of(const GenSymbol& s, const Gaussian& coeff) {
    CurrentElement e;
    e.add_term(s, coeff);
    return e;
}

Gaussian CurrentElement::coefficient(const GenSymbol& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? Gaussian() : it->second;
}

void CurrentElement::add_term(const GenSymbol& s, const Gaussian& coeff) {
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(s, coeff);
    if (inserted) return;
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
}

CurrentElement& CurrentElement::bind(std::string algebra_name) {
    algebra_ = std::move(algebra_name);
    return *this;
}

void CurrentElement::merge_binding(const CurrentElement& o) {
    if (!o.algebra_) return;
    if (algebra_ && *algebra_ != *o.algebra_)
        throw AlgebraMismatch("cannot combine elements of algebras '" + *algebra_ + "' and '" + *o.algebra_ + "'");
    algebra_ = o.algebra_;
}

std::string CurrentElement::to_string(const MatrixLieAlgebra* alg) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [sym, coeff] : terms_) {
        if (!out.empty()) out += " + ";
        out += coeff.to_string() + "·" + sym.to_string(alg);
    }
    return out;
}

CurrentElement& CurrentElement::operator+=(const CurrentElement& o) {
    merge_binding(o);
    for (const auto& [s, c] : o.terms_) add_term(s, c);
    return *this;
}

CurrentElement& CurrentElement::operator-=(const CurrentElement& o) {
    merge_binding(o);
    for (const auto& [s, c] : o.terms_) add_term(s, -c);
    return *this;
}

CurrentElement& CurrentElement::operator*=(const Gaussian& s) {
    if (s.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [sym, c] : terms_) c *= s;
    return *this;
}

std::string Flavor::name() const {
    switch (kind_) {
        case Kind::Plain: return "plain";
        case Kind::MF: return "mf";
        case Kind::Kassel: return "kassel";
    }
    return "plain";
}

int levi_civita(int mu, int nu, int rho) {
    if (mu == nu || nu == rho || mu == rho) return 0;
    // even permutations of (1,2,3) are its cyclic shifts
    if ((mu == 1 && nu == 2) || (mu == 2 && nu == 3) || (mu == 3 && nu == 1)) return 1;
    return -1;
}

namespace {

/// Accumulates coeff * [x, y] for two generator symbols.
class GeneratorBracket {
public:
    GeneratorBracket(const Flavor& flavor, const MatrixLieAlgebra& alg, CurrentElement& out)
        : flavor_(flavor), alg_(alg), out_(out) {}

    void operator()(const GenSymbol& x, const GenSymbol& y, const Gaussian& coeff) {
        using K = SymbolKind;
        if (x.kind == K::J && y.kind == K::J) return current_current(x, y, coeff);
        if (flavor_.kind() != Flavor::Kind::MF) return;
        if (x.kind == K::J && y.kind == K::A) return current_connection(x, y, coeff);
        if (x.kind == K::A && y.kind == K::J) return current_connection(y, x, -coeff);
    }

private:
    void current_current(const GenSymbol& x, const GenSymbol& y, const Gaussian& coeff) {
        const Momentum total = x.m + y.m;
        for (const auto& [c, f] : alg_.bracket_terms(x.color, y.color)) out_.add_term(GenSymbol::J(c, total), coeff * f);

        if (flavor_.kind() == Flavor::Kind::MF) {
            // epsilon^{mu nu rho} m_mu n_nu = (m x n)_rho
            const Momentum& m = x.m;
            const Momentum& n = y.m;
            const std::array<Rational, 3> cross{
                Rational(m[1]) * Rational(n[2]) - Rational(m[2]) * Rational(n[1]),
                Rational(m[2]) * Rational(n[0]) - Rational(m[0]) * Rational(n[2]),
                Rational(m[0]) * Rational(n[1]) - Rational(m[1]) * Rational(n[0])};
            for (const auto& [c, d] : alg_.d_terms(x.color, y.color))
                for (int rho = 1; rho <= 3; ++rho)
                    if (!cross[rho - 1].is_zero())
                        out_.add_term(GenSymbol::A(c, rho, total), coeff * d * Gaussian(cross[rho - 1]));
        } else if (flavor_.kind() == Flavor::Kind::Kassel) {
            const Gaussian& kappa = alg_.kappa(x.color, y.color);
            if (kappa.is_zero() || flavor_.level().is_zero()) return;
            const Gaussian scale = coeff * Gaussian(flavor_.level()) * kappa;
            for (int rho = 1; rho <= 3; ++rho)
                if (x.m[rho - 1] != 0) out_.add_term(GenSymbol::S(rho, total), scale * Gaussian(Rational(x.m[rho - 1])));
        }
    }

    // [J^a(m), A_{b,nu}(n)] = -f^{ac}_b A_{c,nu}(m+n) + delta^a_b m_nu delta(m+n) 1
    void current_connection(const GenSymbol& j, const GenSymbol& a, const Gaussian& coeff) {
        const Momentum total = j.m + a.m;
        for (const auto& [c, f] : alg_.coadjoint_terms(j.color, a.color))
            out_.add_term(GenSymbol::A(c, a.mu, total), -(coeff * f));
        if (j.color == a.color && total.is_zero() && j.m[a.mu - 1] != 0)
            out_.add_term(GenSymbol::unit(), coeff * Gaussian(Rational(j.m[a.mu - 1])));
    }

    const Flavor& flavor_;
    const MatrixLieAlgebra& alg_;
    CurrentElement& out_;
};

void check_operand(const CurrentElement& x, const MatrixLieAlgebra& alg) {
    if (x.algebra() && *x.algebra() != alg.name())
        throw AlgebraMismatch("element bound to algebra '" + *x.algebra() + "' used with algebra '" + alg.name() +
                              "'");
    for (const auto& [sym, c] : x.terms())
        if (sym.kind == SymbolKind::J || sym.kind == SymbolKind::A) alg.check_index(sym.color);
}

}  // namespace

CurrentElement bracket(const CurrentElement& x, const CurrentElement& y, const Flavor& flavor,
                       const MatrixLieAlgebra& alg) {
    check_operand(x, alg);
    check_operand(y, alg);
    CurrentElement out;
    GeneratorBracket gen(flavor, alg, out);
    for (const auto& [sx, cx] : x.terms())
        for (const auto& [sy, cy] : y.terms()) gen(sx, sy, cx * cy);
    out = canonicalize(out);
    out.bind(alg.name());
    return out;
}

CurrentElement canonicalize(const CurrentElement& x) {
    CurrentElement out;
    if (x.algebra()) out.bind(*x.algebra());

    // S coefficient vectors, gathered by momentum
    std::map<Momentum, std::array<Gaussian, 3>> s_sector;
    for (const auto& [sym, c] : x.terms()) {
        if (sym.kind == SymbolKind::S && !sym.m.is_zero())
            s_sector[sym.m][sym.mu - 1] += c;
        else
            out.add_term(sym, c);
    }
    for (auto& [m, vec] : s_sector) {
        Gaussian along;
        for (std::size_t mu = 0; mu < 3; ++mu) along += vec[mu] * Gaussian(Rational(m[mu]));
        const Gaussian t = along * Gaussian(m.dot(m).inverse());
        for (std::size_t mu = 0; mu < 3; ++mu)
            out.add_term(GenSymbol::S(static_cast<int>(mu) + 1, m), vec[mu] - t * Gaussian(Rational(m[mu])));
    }
    return out;
}

CurrentElement jacobi_defect(const CurrentElement& x, const CurrentElement& y, const CurrentElement& z,
                             const Flavor& flavor, const MatrixLieAlgebra& alg) {
    CurrentElement sum = bracket(bracket(x, y, flavor, alg), z, flavor, alg);
    sum += bracket(bracket(y, z, flavor, alg), x, flavor, alg);
    sum += bracket(bracket(z, x, flavor, alg), y, flavor, alg);
    return canonicalize(sum);
}

}  // namespace currents
