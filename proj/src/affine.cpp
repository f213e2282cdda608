#include "currents/affine.hpp"

#include <algorithm>
#include <functional>

namespace currents::affine {

Generator Generator::dagger() const {
    switch (letter) {
        case Letter::E: return {-mode, Letter::F};
        case Letter::F: return {-mode, Letter::E};
        case Letter::H: break;
    }
    return {-mode, Letter::H};
}

std::string Generator::to_string() const {
    static constexpr const char* names[] = {"E", "H", "F"};
    return std::string(names[static_cast<int>(letter)]) + "_{" + std::to_string(mode) + "}";
}

Commutator affine_bracket(const Generator& x, const Generator& y) {
    Commutator out;
    const std::int64_t total = x.mode + y.mode;
    const bool resonant = total == 0;
    using L = Letter;
    if (x.letter == L::E && y.letter == L::F) {
        out.terms.push_back({{total, L::H}, Rational(1)});
        if (resonant) out.central = Rational(x.mode);
    } else if (x.letter == L::F && y.letter == L::E) {
        out.terms.push_back({{total, L::H}, Rational(-1)});
        if (resonant) out.central = Rational(-y.mode);
    } else if (x.letter == L::H && y.letter == L::E) {
        out.terms.push_back({{total, L::E}, Rational(2)});
    } else if (x.letter == L::E && y.letter == L::H) {
        out.terms.push_back({{total, L::E}, Rational(-2)});
    } else if (x.letter == L::H && y.letter == L::F) {
        out.terms.push_back({{total, L::F}, Rational(-2)});
    } else if (x.letter == L::F && y.letter == L::H) {
        out.terms.push_back({{total, L::F}, Rational(2)});
    } else if (x.letter == L::H && y.letter == L::H) {
        if (resonant) out.central = Rational(2 * x.mode);
    }
    return out;
}

PBWMonomial::PBWMonomial(std::vector<Generator> letters) : letters_(std::move(letters)) {
    for (const auto& g : letters_)
        if (!g.is_creation()) throw InvalidArgument(g.to_string() + " is not a lowering letter");
    std::sort(letters_.begin(), letters_.end());
}

std::int64_t PBWMonomial::grade() const {
    std::int64_t g = 0;
    for (const auto& l : letters_) g -= l.mode;
    return g;
}

std::int64_t PBWMonomial::charge() const {
    std::int64_t q = 0;
    for (const auto& l : letters_) {
        if (l.letter == Letter::E) q += 2;
        if (l.letter == Letter::F) q -= 2;
    }
    return q;
}

std::size_t PBWMonomial::f0_count() const {
    return static_cast<std::size_t>(
        std::count_if(letters_.begin(), letters_.end(), [](const Generator& g) { return g.mode == 0; }));
}

std::string PBWMonomial::to_string() const {
    if (letters_.empty()) return "v";
    std::string out;
    for (const auto& l : letters_) {
        if (!out.empty()) out += " ";
        out += l.to_string();
    }
    return out;
}

namespace {

/// Canonical sequences of negative-mode letters with total depth `grade`.
void loop_monomials(std::int64_t remaining, const Generator& floor, std::vector<Generator>& prefix,
                    std::vector<std::vector<Generator>>& out) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (std::int64_t depth = remaining; depth >= 1; --depth)
        for (Letter l : {Letter::E, Letter::H, Letter::F}) {
            const Generator g{-depth, l};
            if (g < floor) continue;
            prefix.push_back(g);
            loop_monomials(remaining - depth, g, prefix, out);
            prefix.pop_back();
        }
}

std::vector<std::vector<Generator>> loop_monomials(std::int64_t grade) {
    std::vector<std::vector<Generator>> out;
    std::vector<Generator> prefix;
    loop_monomials(grade, Generator{-grade, Letter::E}, prefix, out);
    return out;
}

PBWMonomial dress_with_f0(const std::vector<Generator>& loop, std::size_t count) {
    std::vector<Generator> letters = loop;
    letters.insert(letters.end(), count, Generator{0, Letter::F});
    return PBWMonomial(std::move(letters));
}

std::int64_t loop_charge(const std::vector<Generator>& loop) { return PBWMonomial(loop).charge(); }

}  // namespace

std::vector<PBWMonomial> pbw_basis(std::int64_t grade, std::int64_t charge, std::optional<std::size_t> max_f0) {
    if (grade < 0) throw InvalidArgument("grade must be non-negative");
    std::vector<PBWMonomial> out;
    for (const auto& loop : loop_monomials(grade)) {
        const std::int64_t excess = loop_charge(loop) - charge;
        if (excess < 0 || excess % 2 != 0) continue;
        const auto count = static_cast<std::size_t>(excess / 2);
        if (max_f0 && count > *max_f0) continue;
        out.push_back(dress_with_f0(loop, count));
    }
    std::sort(out.begin(), out.end());
    return out;
}

const Shapovalov::Vector& Shapovalov::apply(const Generator& x, const PBWMonomial& mono) {
    auto key = std::make_pair(x, mono);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    Vector v = compute(x, mono);
    return cache_.emplace(std::move(key), std::move(v)).first->second;
}

void Shapovalov::apply_to_vector(const Generator& x, const Vector& in, const Rational& scale, Vector& out) {
    for (const auto& [mono, c] : in)
        for (const auto& [m2, c2] : apply(x, mono)) out[m2] += scale * c * c2;
}

Shapovalov::Vector Shapovalov::compute(const Generator& x, const PBWMonomial& mono) {
    Vector out;
    if (!x.is_creation()) {
        if (x.mode == 0 && x.letter == Letter::H) {
            const Rational eigen = weight_.h + Rational(mono.charge());
            if (!eigen.is_zero()) out.emplace(mono, eigen);
            return out;
        }
        if (mono.empty()) return out;
    } else if (mono.empty() || !(mono.letters_.front() < x)) {
        PBWMonomial grown = mono;
        grown.letters_.insert(grown.letters_.begin(), x);
        out.emplace(std::move(grown), Rational(1));
        return out;
    }

    // x Y rest = Y (x rest) + [x, Y] rest
    const Generator y = mono.letters_.front();
    PBWMonomial rest;
    rest.letters_.assign(mono.letters_.begin() + 1, mono.letters_.end());

    apply_to_vector(y, apply(x, rest), Rational(1), out);
    const Commutator comm = affine_bracket(x, y);
    for (const auto& [z, c] : comm.terms)
        for (const auto& [m2, c2] : apply(z, rest)) out[m2] += c * c2;
    if (!comm.central.is_zero()) out[rest] += comm.central * weight_.k;

    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

Rational Shapovalov::pair(const PBWMonomial& x, const PBWMonomial& y) {
    Vector current{{y, Rational(1)}};
    for (const auto& letter : x.letters()) {
        Vector next;
        apply_to_vector(letter.dagger(), current, Rational(1), next);
        std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
        current = std::move(next);
    }
    auto it = current.find(PBWMonomial{});
    return it == current.end() ? Rational(0) : it->second;
}

Rational shapovalov_pair(const PBWMonomial& x, const PBWMonomial& y, const AffineWeight& w) {
    Shapovalov engine(w);
    return engine.pair(x, y);
}

CongruenceDiagonalization diagonalize_congruence(const RationalMatrix& m) {
    if (!m.is_symmetric()) throw InvalidArgument("inertia requires a symmetric matrix");
    const std::size_t n = m.rows();
    RationalMatrix a = m;
    RationalMatrix t = RationalMatrix::identity(n);
    std::vector<Rational> diag(n);
    std::vector<bool> active(n, true);

    // column j -= factor * column p, then the same on rows
    auto eliminate = [&](std::size_t p, std::size_t j, const Rational& factor) {
        for (std::size_t i = 0; i < n; ++i) a(i, j) -= factor * a(i, p);
        for (std::size_t i = 0; i < n; ++i) a(j, i) -= factor * a(p, i);
        for (std::size_t i = 0; i < n; ++i) t(i, j) -= factor * t(i, p);
    };

    for (std::size_t step = 0; step < n; ++step) {
        std::optional<std::size_t> pivot;
        for (std::size_t p = 0; p < n && !pivot; ++p)
            if (active[p] && !a(p, p).is_zero()) pivot = p;

        if (!pivot) {
            for (std::size_t p = 0; p < n && !pivot; ++p)
                for (std::size_t q = p + 1; q < n && !pivot; ++q)
                    if (active[p] && active[q] && !a(p, q).is_zero()) {
                        // p += q turns the hyperbolic pair into a nonzero diagonal 2 a_pq
                        eliminate(q, p, Rational(-1));
                        pivot = p;
                    }
        }
        if (!pivot) break;  // remaining block is identically zero

        const std::size_t p = *pivot;
        const Rational inv = a(p, p).inverse();
        for (std::size_t j = 0; j < n; ++j)
            if (j != p && active[j] && !a(p, j).is_zero()) eliminate(p, j, a(p, j) * inv);
        diag[p] = a(p, p);
        active[p] = false;
    }
    return {std::move(t), std::move(diag)};
}

Inertia inertia(const RationalMatrix& m) {
    Inertia out;
    for (const auto& d : diagonalize_congruence(m).diagonal) {
        if (d.sign() > 0) ++out.positive;
        else if (d.sign() < 0) ++out.negative;
        else ++out.zero;
    }
    return out;
}

namespace {

GramReport make_block(std::int64_t grade, std::int64_t charge, std::vector<PBWMonomial> basis, Shapovalov& engine) {
    GramReport r;
    r.grade = grade;
    r.charge = charge;
    r.basis = std::move(basis);
    const std::size_t n = r.basis.size();
    r.matrix = RationalMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            r.matrix(i, j) = engine.pair(r.basis[i], r.basis[j]);
            r.matrix(j, i) = r.matrix(i, j);
        }
    r.inertia = inertia(r.matrix);
    r.null_basis = null_space(r.matrix);
    return r;
}

void check_grade(std::int64_t grade, const GramOptions& options) {
    if (grade < 0) throw InvalidArgument("grade must be non-negative");
    if (grade > options.max_grade)
        throw LimitExceeded("grade " + std::to_string(grade) + " exceeds the configured maximum " +
                            std::to_string(options.max_grade));
}

std::vector<GramReport> gram_with(std::int64_t grade, const GramOptions& options, Shapovalov& engine) {
    check_grade(grade, options);
    std::map<std::int64_t, std::vector<PBWMonomial>, std::greater<>> blocks;
    for (const auto& loop : loop_monomials(grade))
        for (std::size_t j = 0; j <= options.max_f0; ++j) {
            PBWMonomial mono = dress_with_f0(loop, j);
            blocks[mono.charge()].push_back(std::move(mono));
        }
    std::vector<GramReport> out;
    for (auto& [charge, basis] : blocks) {
        std::sort(basis.begin(), basis.end());
        out.push_back(make_block(grade, charge, std::move(basis), engine));
    }
    return out;
}

}  // namespace

std::vector<GramReport> gram(std::int64_t grade, const AffineWeight& w, const GramOptions& options) {
    Shapovalov engine(w);
    return gram_with(grade, options, engine);
}

GramReport gram_block(std::int64_t grade, std::int64_t charge, const AffineWeight& w, const GramOptions& options) {
    check_grade(grade, options);
    Shapovalov engine(w);
    return make_block(grade, charge, pbw_basis(grade, charge, options.max_f0), engine);
}

std::string to_string(Verdict v) { return v == Verdict::NonUnitary ? "NON_UNITARY" : "CANDIDATE_UNITARY"; }

namespace {

NormWitness negative_witness(const GramReport& block) {
    NormWitness w;
    w.grade = block.grade;
    w.charge = block.charge;
    const std::size_t n = block.basis.size();
    for (std::size_t i = 0; i < n; ++i)
        if (block.matrix(i, i).sign() < 0) {
            w.vector.emplace_back(block.basis[i], Rational(1));
            w.norm = block.matrix(i, i);
            return w;
        }
    const auto cd = diagonalize_congruence(block.matrix);
    for (std::size_t p = 0; p < n; ++p) {
        if (cd.diagonal[p].sign() >= 0) continue;
        for (std::size_t i = 0; i < n; ++i)
            if (!cd.transform(i, p).is_zero()) w.vector.emplace_back(block.basis[i], cd.transform(i, p));
        w.norm = cd.diagonal[p];
        return w;
    }
    throw InvariantViolation("negative-norm witness requested for a positive semidefinite block");
}

}  // namespace

ScanRow classify(const AffineWeight& w, std::int64_t max_grade, const GramOptions& options) {
    check_grade(max_grade, options);
    ScanRow row;
    row.weight = w;
    row.max_grade = max_grade;
    row.all_null = true;
    Shapovalov engine(w);
    for (std::int64_t g = 0; g <= max_grade; ++g) {
        for (const auto& block : gram_with(g, options, engine)) {
            for (std::size_t i = 0; i < block.basis.size(); ++i)
                for (std::size_t j = 0; j < block.basis.size(); ++j) {
                    if (block.basis[i].empty() && block.basis[j].empty()) continue;
                    if (!block.matrix(i, j).is_zero()) row.all_null = false;
                }
            if (block.inertia.zero > 0 && !row.first_null_grade) row.first_null_grade = g;
            if (block.inertia.negative > 0) {
                row.verdict = Verdict::NonUnitary;
                row.witness = negative_witness(block);
                row.all_null = false;
                return row;
            }
        }
    }
    return row;
}

std::vector<ScanRow> unitarity_scan(const std::vector<Rational>& levels, const std::vector<Rational>& weights,
                                    std::int64_t max_grade, const GramOptions& options) {
    std::vector<ScanRow> rows;
    for (const auto& k : levels)
        for (const auto& h : weights) rows.push_back(classify({k, h}, max_grade, options));
    return rows;
}

}  // namespace currents::affine
