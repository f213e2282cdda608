#pragma once

// The Z^3-graded current algebra map(T^3, g) on finite formal linear
// combinations of generator symbols
//
//   J^a(m)          current
//   A_{a,mu}(m)     Fourier mode of the background connection
//   S^mu(m)         Kassel one-form symbol, subject to m_mu S^mu(m) = 0
//   1               central unit hit by the Kronecker term of [J, A]
//
// with three bracket flavors: Plain, Mickelsson-Faddeev (MF) and Kassel(k).

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "currents/exact.hpp"
#include "currents/lie_algebra.hpp"

namespace currents {

/// Point of Z^3. Arithmetic throws std::overflow_error instead of wrapping.
struct Momentum {
    std::array<std::int64_t, 3> c{0, 0, 0};

    Momentum() = default;
    Momentum(std::int64_t m1, std::int64_t m2, std::int64_t m3) : c{m1, m2, m3} {}

    std::int64_t operator[](std::size_t mu) const { return c[mu]; }
    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0; }

    Momentum operator+(const Momentum& o) const;
    Momentum operator-() const;
    Momentum scaled(std::int64_t t) const;
    /// Euclidean dot product, exact.
    Rational dot(const Momentum& o) const;

    std::string to_string() const;

    friend auto operator<=>(const Momentum&, const Momentum&) = default;
};

enum class SymbolKind : std::uint8_t { J = 0, A = 1, S = 2, Unit = 3 };

/// Generator symbol. Spatial indices mu are 1-based (1..3). Unused fields are
/// zero so the defaulted ordering (kind, color, mu, momentum) is total.
struct GenSymbol {
    SymbolKind kind = SymbolKind::Unit;
    std::uint32_t color = 0;
    std::uint8_t mu = 0;
    Momentum m;

    static GenSymbol J(std::size_t a, const Momentum& m);
    static GenSymbol A(std::size_t a, int mu, const Momentum& m);
    static GenSymbol S(int mu, const Momentum& m);
    static GenSymbol unit() { return {}; }

    /// Momentum grade; the unit counts as momentum zero.
    Momentum grade() const { return kind == SymbolKind::Unit ? Momentum{} : m; }

    /// "J[a](m1,m2,m3)", "A[a,mu](...)", "S[mu](...)" or "1"; color indices
    /// print as algebra labels when `alg` is given.
    std::string to_string(const MatrixLieAlgebra* alg = nullptr) const;

    friend auto operator<=>(const GenSymbol&, const GenSymbol&) = default;
};

class CurrentElement {
public:
    using Terms = std::map<GenSymbol, Gaussian>;

    CurrentElement() = default;
    static CurrentElement of(const GenSymbol& s, const Gaussian& coeff = Gaussian(1));

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Gaussian coefficient(const GenSymbol& s) const;

    /// Adds coeff * s, dropping the entry if it cancels to zero.
    void add_term(const GenSymbol& s, const Gaussian& coeff);

    /// Name of the algebra the element was produced over, if any.
    const std::optional<std::string>& algebra() const { return algebra_; }
    CurrentElement& bind(std::string algebra_name);

    /// Terms in GenSymbol order joined by " + ", e.g. "2·A[H1,3](1,1,0) + -2·A[H2,3](1,1,0)".
    std::string to_string(const MatrixLieAlgebra* alg = nullptr) const;

    CurrentElement& operator+=(const CurrentElement& o);
    CurrentElement& operator-=(const CurrentElement& o);
    CurrentElement& operator*=(const Gaussian& s);
    friend CurrentElement operator+(CurrentElement a, const CurrentElement& b) { return a += b; }
    friend CurrentElement operator-(CurrentElement a, const CurrentElement& b) { return a -= b; }
    friend CurrentElement operator*(const Gaussian& s, CurrentElement a) { return a *= s; }
    CurrentElement operator-() const { return Gaussian(-1) * *this; }

    /// Compares terms only; binding is provenance, not value.
    friend bool operator==(const CurrentElement& a, const CurrentElement& b) { return a.terms_ == b.terms_; }

private:
    void merge_binding(const CurrentElement& o);

    Terms terms_;
    std::optional<std::string> algebra_;
};

class Flavor {
public:
    enum class Kind { Plain, MF, Kassel };

    static Flavor plain() { return Flavor(Kind::Plain, Rational(0)); }
    static Flavor mf() { return Flavor(Kind::MF, Rational(0)); }
    static Flavor kassel(Rational level) { return Flavor(Kind::Kassel, std::move(level)); }

    Kind kind() const { return kind_; }
    /// Level k; zero unless kind() == Kassel.
    const Rational& level() const { return level_; }
    /// "plain", "mf" or "kassel"
    std::string name() const;

    friend bool operator==(const Flavor&, const Flavor&) = default;

private:
    Flavor(Kind k, Rational level) : kind_(k), level_(std::move(level)) {}
    Kind kind_;
    Rational level_;
};

/// Bilinear extension of the generator brackets of `flavor`, canonicalized.
/// Throws IndexOutOfRange on invalid color indices and AlgebraMismatch when
/// an operand is bound to a different algebra.
CurrentElement bracket(const CurrentElement& x, const CurrentElement& y, const Flavor& flavor,
                       const MatrixLieAlgebra& alg);

/// Projects every S-sector coefficient vector at momentum m != 0 onto the
/// complement of m, the unique representative modulo m_mu S^mu(m) = 0.
CurrentElement canonicalize(const CurrentElement& x);

/// [[x,y],z] + [[y,z],x] + [[z,x],y], canonicalized.
CurrentElement jacobi_defect(const CurrentElement& x, const CurrentElement& y, const CurrentElement& z,
                             const Flavor& flavor, const MatrixLieAlgebra& alg);

/// Levi-Civita symbol on 1-based indices, epsilon^{123} = +1.
int levi_civita(int mu, int nu, int rho);

}  // namespace currents
