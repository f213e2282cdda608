#include <functional>
#include <map>
#include <set>

#include <gtest/gtest.h>

#include "currents/affine.hpp"
#include "currents/errors.hpp"
#include "currents/random.hpp"

using namespace currents;
using namespace currents::affine;

namespace {

// ---------------------------------------------------------------------------
// Reference Shapovalov form: <v| w |v> for a raw word w, by pushing
// annihilators right with the bracket relations typed in again here.

struct Gen {
    std::int64_t mode;
    int letter;  // 0 = E, 1 = H, 2 = F
    auto operator<=>(const Gen&) const = default;
};

using Word = std::vector<Gen>;

struct Comm {
    std::vector<std::pair<Gen, Rational>> terms;
    Rational central;
};

Comm comm(const Gen& x, const Gen& y, const Rational& k) {
    const std::int64_t s = x.mode + y.mode;
    const bool delta = s == 0;
    Comm c;
    auto kd = [&](std::int64_t m) { return delta ? Rational(static_cast<long>(m)) * k : Rational(0); };
    if (x.letter == 0 && y.letter == 2) {
        c.terms.push_back({{s, 1}, Rational(1)});
        c.central = kd(x.mode);
    } else if (x.letter == 2 && y.letter == 0) {
        c.terms.push_back({{s, 1}, Rational(-1)});
        c.central = -kd(y.mode);
    } else if (x.letter == 1 && y.letter == 1) {
        c.central = Rational(2) * kd(x.mode);
    } else if (x.letter == 1 && y.letter != 1) {
        c.terms.push_back({{s, y.letter}, Rational(y.letter == 0 ? 2 : -2)});
    } else if (y.letter == 1 && x.letter != 1) {
        c.terms.push_back({{s, x.letter}, Rational(x.letter == 0 ? -2 : 2)});
    }
    return c;
}

bool kills_vacuum(const Gen& g) { return g.mode > 0 || (g.mode == 0 && g.letter == 0); }
bool killed_by_covacuum(const Gen& g) { return g.mode < 0 || (g.mode == 0 && g.letter == 2); }

class WordOracle {
public:
    WordOracle(Rational k, Rational h) : k_(std::move(k)), h_(std::move(h)) {}

    Rational eval(const Word& w) {
        if (w.empty()) return Rational(1);
        if (auto it = memo_.find(w); it != memo_.end()) return it->second;
        Rational r;
        const Gen& last = w.back();
        const Gen& first = w.front();
        if (kills_vacuum(last) || killed_by_covacuum(first)) {
            r = Rational(0);
        } else if (last.mode == 0 && last.letter == 1) {
            r = h_ * eval(Word(w.begin(), w.end() - 1));
        } else if (first.mode == 0 && first.letter == 1) {
            r = h_ * eval(Word(w.begin() + 1, w.end()));
        } else {
            // first is an annihilator: X w1 ... wn = sum_j w1..[X,wj]..wn + w1..wn X
            const Gen x = first;
            Word rest(w.begin() + 1, w.end());
            r = Rational(0);
            for (std::size_t j = 0; j < rest.size(); ++j) {
                const Comm c = comm(x, rest[j], k_);
                Word pre(rest.begin(), rest.begin() + j), post(rest.begin() + j + 1, rest.end());
                for (const auto& [g, coeff] : c.terms) {
                    Word nw = pre;
                    nw.push_back(g);
                    nw.insert(nw.end(), post.begin(), post.end());
                    r += coeff * eval(nw);
                }
                if (!c.central.is_zero()) {
                    Word nw = pre;
                    nw.insert(nw.end(), post.begin(), post.end());
                    r += c.central * eval(nw);
                }
            }
        }
        memo_.emplace(w, r);
        return r;
    }

    Rational pair(const PBWMonomial& x, const PBWMonomial& y) {
        Word w;
        const auto& xs = x.letters();
        for (auto it = xs.rbegin(); it != xs.rend(); ++it) {
            const int l = static_cast<int>(it->letter);
            w.push_back({-it->mode, 2 - l});
        }
        for (const auto& g : y.letters()) w.push_back({g.mode, static_cast<int>(g.letter)});
        return eval(w);
    }

private:
    Rational k_, h_;
    std::map<Word, Rational> memo_;
};

// ---------------------------------------------------------------------------
// Reference inertia: characteristic polynomial by Faddeev-LeVerrier, then
// Descartes' rule, which is exact for real-rooted polynomials.

Inertia charpoly_inertia(const RationalMatrix& a) {
    const std::size_t n = a.rows();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    RationalMatrix m(n, n);
    for (std::size_t k = 1; k <= n; ++k) {
        RationalMatrix next = a * m;
        for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
        m = next;
        c[n - k] = -(a * m).trace() / Rational(static_cast<long>(k));
    }
    std::size_t zero = 0;
    while (zero <= n && c[zero].is_zero()) ++zero;
    std::size_t changes = 0;
    int prev = 0;
    for (std::size_t i = zero; i <= n; ++i) {
        if (c[i].is_zero()) continue;
        if (prev != 0 && c[i].sign() != prev) ++changes;
        prev = c[i].sign();
    }
    return {changes, zero, n - zero - changes};
}

Rational random_rational(TrialRng& rng, std::int64_t bound = 6) {
    return Rational::of(rng.uniform(-bound, bound), rng.uniform(1, bound));
}

RationalMatrix random_symmetric(TrialRng& rng, std::size_t n) {
    RationalMatrix m(n, n);
    const bool hollow = rng.uniform(0, 2) == 0;  // zero diagonal forces the hyperbolic pivot
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            if (i == j && hollow) continue;
            const Rational v = rng.uniform(0, 3) == 0 ? Rational(0) : random_rational(rng);
            m(i, j) = v;
            m(j, i) = v;
        }
    return m;
}

// Multisets of creation letters by brute force.
std::size_t count_monomials(std::int64_t grade, std::int64_t charge, std::size_t max_f0) {
    std::vector<Generator> letters;
    for (std::int64_t mode = -grade; mode <= 0; ++mode)
        for (Letter l : {Letter::E, Letter::H, Letter::F}) {
            Generator g{mode, l};
            if (g.is_creation()) letters.push_back(g);
        }
    std::size_t count = 0;
    std::function<void(std::size_t, std::int64_t, std::int64_t, std::size_t)> rec =
        [&](std::size_t from, std::int64_t g, std::int64_t q, std::size_t f0) {
            if (g == grade && q == charge) ++count;
            for (std::size_t i = from; i < letters.size(); ++i) {
                const auto& L = letters[i];
                const std::int64_t ng = g - L.mode;
                const std::int64_t nq = q + (L.letter == Letter::E ? 2 : L.letter == Letter::F ? -2 : 0);
                const std::size_t nf0 = f0 + (L.mode == 0 ? 1 : 0);
                if (ng > grade || nf0 > max_f0) continue;
                rec(i, ng, nq, nf0);
            }
        };
    rec(0, 0, 0, 0);
    return count;
}

}  // namespace

TEST(AffineBracket, MatchesMatrixLoopRealization) {
    // sl2 matrices: E = e12, H = diag(1,-1), F = e21; [X t^m, Y t^n] = [X,Y] t^{m+n} + m k delta tr(XY)
    using M2 = std::array<std::array<long, 2>, 2>;
    const M2 mats[3] = {{{{0, 1}, {0, 0}}}, {{{1, 0}, {0, -1}}}, {{{0, 0}, {1, 0}}}};
    auto mul = [](const M2& a, const M2& b) {
        M2 p{};
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) p[i][j] += a[i][k] * b[k][j];
        return p;
    };
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            for (std::int64_t m = -2; m <= 2; ++m)
                for (std::int64_t n = -2; n <= 2; ++n) {
                    const M2 xy = mul(mats[x], mats[y]), yx = mul(mats[y], mats[x]);
                    M2 c{};
                    for (int i = 0; i < 2; ++i)
                        for (int j = 0; j < 2; ++j) c[i][j] = xy[i][j] - yx[i][j];
                    const long tr = xy[0][0] + xy[1][1];
                    const auto got = affine_bracket({m, Letter(x)}, {n, Letter(y)});
                    M2 rebuilt{};
                    for (const auto& [g, coeff] : got.terms) {
                        ASSERT_EQ(g.mode, m + n);
                        ASSERT_TRUE(coeff.is_integer());
                        const long v = coeff.numerator().get_si();
                        for (int i = 0; i < 2; ++i)
                            for (int j = 0; j < 2; ++j) rebuilt[i][j] += v * mats[static_cast<int>(g.letter)][i][j];
                    }
                    ASSERT_EQ(rebuilt, c);
                    ASSERT_EQ(got.central, m + n == 0 ? Rational(m * tr) : Rational(0));
                }
}

TEST(Pbw, KnownBases) {
    EXPECT_EQ(pbw_basis(0, 0).size(), 1u);
    const auto f0 = pbw_basis(0, -2);
    ASSERT_EQ(f0.size(), 1u);
    EXPECT_EQ(f0[0].to_string(), "F_{0}");
    EXPECT_TRUE(pbw_basis(0, -2, 0).empty());
    const auto g1 = pbw_basis(1, 2);
    ASSERT_EQ(g1.size(), 1u);
    EXPECT_EQ(g1[0].to_string(), "E_{-1}");
    const auto g2 = pbw_basis(2, 4);
    ASSERT_EQ(g2.size(), 1u);
    EXPECT_EQ(g2[0].to_string(), "E_{-1} E_{-1}");
    EXPECT_EQ(pbw_basis(2, 2, 0).size(), 2u);  // E_{-2}, E_{-1} H_{-1}
    EXPECT_EQ(PBWMonomial().to_string(), "v");
    EXPECT_THROW(PBWMonomial({Generator{1, Letter::E}}), InvalidArgument);
}

TEST(Pbw, MonomialInvariants) {
    const PBWMonomial m({Generator{0, Letter::F}, Generator{-2, Letter::E}, Generator{-1, Letter::H}});
    EXPECT_EQ(m.to_string(), "E_{-2} H_{-1} F_{0}");
    EXPECT_EQ(m.grade(), 3);
    EXPECT_EQ(m.charge(), 0);
    EXPECT_EQ(m.f0_count(), 1u);
}

TEST(Pbw, CountsMatchBruteForce) {
    for (std::int64_t g = 0; g <= 4; ++g)
        for (std::int64_t q = -2 * (g + 2); q <= 2 * (g + 2); q += 2)
            for (std::size_t f0 = 0; f0 <= 2; ++f0) {
                const auto basis = pbw_basis(g, q, f0);
                ASSERT_EQ(basis.size(), count_monomials(g, q, f0)) << g << " " << q << " " << f0;
                std::set<PBWMonomial> seen(basis.begin(), basis.end());
                ASSERT_EQ(seen.size(), basis.size());
                for (const auto& b : basis) {
                    ASSERT_EQ(b.grade(), g);
                    ASSERT_EQ(b.charge(), q);
                    ASSERT_LE(b.f0_count(), f0);
                }
            }
}

TEST(Shapovalov, GradeOneNormsSymbolic) {
    for (std::uint64_t t = 0; t < 20; ++t) {
        TrialRng rng(31, t);
        const Rational k = random_rational(rng, 9), h = random_rational(rng, 9);
        const AffineWeight w{k, h};
        EXPECT_EQ(shapovalov_pair(PBWMonomial({{-1, Letter::E}}), PBWMonomial({{-1, Letter::E}}), w), k - h);
        EXPECT_EQ(shapovalov_pair(PBWMonomial({{-1, Letter::H}}), PBWMonomial({{-1, Letter::H}}), w), Rational(2) * k);
        EXPECT_EQ(shapovalov_pair(PBWMonomial({{-1, Letter::F}}), PBWMonomial({{-1, Letter::F}}), w), k + h);
        EXPECT_EQ(shapovalov_pair(PBWMonomial({{0, Letter::F}}), PBWMonomial({{0, Letter::F}}), w), h);
    }
}

TEST(Shapovalov, MatchesWordOracle) {
    for (std::uint64_t t = 0; t < 6; ++t) {
        TrialRng rng(41, t);
        const Rational k = random_rational(rng), h = random_rational(rng);
        WordOracle ref(k, h);
        for (std::int64_t g = 0; g <= 3; ++g)
            for (const auto& block : gram(g, {k, h}, {.max_grade = 4, .max_f0 = 1}))
                for (std::size_t i = 0; i < block.basis.size(); ++i)
                    for (std::size_t j = 0; j < block.basis.size(); ++j)
                        ASSERT_EQ(block.matrix(i, j), ref.pair(block.basis[i], block.basis[j]))
                            << block.basis[i].to_string() << " | " << block.basis[j].to_string();
    }
}

TEST(Shapovalov, DifferentChargesAreOrthogonal) {
    const AffineWeight w{rat(3, 2), rat(1, 2)};
    const auto a = pbw_basis(2, 2, 0), b = pbw_basis(2, 0, 0);
    for (const auto& x : a)
        for (const auto& y : b) EXPECT_TRUE(shapovalov_pair(x, y, w).is_zero());
}

TEST(Shapovalov, ContravarianceOfGenerators) {
    // <X u, w> = <u, X^dagger w> for X in the loop algebra
    Shapovalov form({rat(5, 3), rat(2, 3)});
    const auto grade1 = pbw_basis(1, 0, 1);
    for (Letter l : {Letter::E, Letter::H, Letter::F}) {
        const Generator x{-1, l};
        for (const auto& u : grade1)
            for (const auto& w : pbw_basis(2, u.charge() + (l == Letter::E ? 2 : l == Letter::F ? -2 : 0), 1)) {
                Rational lhs, rhs;
                for (const auto& [mono, c] : form.apply(x, u)) lhs += c * form.pair(mono, w);
                for (const auto& [mono, c] : form.apply(x.dagger(), w)) rhs += c * form.pair(u, mono);
                ASSERT_EQ(lhs, rhs) << u.to_string() << " " << w.to_string();
            }
    }
}

TEST(Inertia, MatchesCharpolyOracle) {
    for (std::uint64_t t = 0; t < 300; ++t) {
        TrialRng rng(51, t);
        const auto m = random_symmetric(rng, rng.uniform(1, 5));
        ASSERT_EQ(inertia(m), charpoly_inertia(m)) << t;
    }
}

TEST(Inertia, CongruenceCertificate) {
    for (std::uint64_t t = 0; t < 300; ++t) {
        TrialRng rng(61, t);
        const auto m = random_symmetric(rng, rng.uniform(1, 5));
        const auto cd = diagonalize_congruence(m);
        const auto prod = cd.transform.transpose() * m * cd.transform;
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.rows(); ++j)
                ASSERT_EQ(prod(i, j), i == j ? cd.diagonal[i] : Rational(0));
        ASSERT_EQ(rank(cd.transform), m.rows());
    }
}

TEST(Inertia, HyperbolicPair) {
    RationalMatrix m(2, 2);
    m(0, 1) = 1;
    m(1, 0) = 1;
    EXPECT_EQ(inertia(m), (Inertia{1, 0, 1}));
    RationalMatrix ns(2, 3);
    EXPECT_THROW(inertia(ns), InvalidArgument);
    RationalMatrix asym(2, 2);
    asym(0, 1) = 1;
    EXPECT_THROW(inertia(asym), InvalidArgument);
}

TEST(Gram, LevelOneGradeTwo) {
    const auto blocks = gram(2, {rat(1), rat(0)});
    ASSERT_EQ(blocks.size(), 5u);
    EXPECT_EQ(blocks[0].charge, 4);
    EXPECT_EQ(blocks[0].matrix(0, 0), Rational(0));
    EXPECT_EQ(blocks[0].inertia, (Inertia{0, 1, 0}));
    ASSERT_EQ(blocks[0].null_basis.size(), 1u);
    for (std::size_t i = 1; i < blocks.size(); ++i) EXPECT_GT(blocks[i - 1].charge, blocks[i].charge);
    for (const auto& b : blocks) {
        EXPECT_TRUE(b.matrix.is_symmetric());
        EXPECT_EQ(b.inertia.negative, 0u);
        EXPECT_EQ(b.inertia.zero, b.null_basis.size());
    }
}

TEST(Gram, GradeOneAtLevelOneIsPositive) {
    for (const auto& b : gram(1, {rat(1), rat(0)})) EXPECT_EQ(b.inertia, (Inertia{1, 0, 0}));
}

TEST(Gram, ChargeFourNormIsQuadraticInLevel) {
    for (std::uint64_t t = 0; t < 20; ++t) {
        TrialRng rng(71, t);
        const Rational k = random_rational(rng, 9), h = random_rational(rng, 9);
        const auto b = gram_block(2, 4, {k, h});
        ASSERT_EQ(b.basis.size(), 1u);
        // <E_{-1}^2 v, E_{-1}^2 v> = 2 (k - h)(k - h - 1)
        EXPECT_EQ(b.matrix(0, 0), Rational(2) * (k - h) * (k - h - Rational(1)));
    }
}

TEST(Gram, LimitEnforced) {
    EXPECT_THROW(gram(5, {rat(1), rat(0)}), LimitExceeded);
    EXPECT_NO_THROW(gram(5, {rat(1), rat(0)}, {.max_grade = 5, .max_f0 = 0}));
}

TEST(Classify, Verdicts) {
    const auto a = classify({rat(0), rat(1)}, 2);
    EXPECT_EQ(a.verdict, Verdict::NonUnitary);
    ASSERT_TRUE(a.witness.has_value());
    EXPECT_EQ(a.witness->norm, rat(-1));
    EXPECT_EQ(a.witness->grade, 1);

    const auto b = classify({rat(1, 2), rat(0)}, 2);
    EXPECT_EQ(b.verdict, Verdict::NonUnitary);
    EXPECT_EQ(b.witness->grade, 2);
    EXPECT_EQ(b.witness->norm, rat(-1, 2));

    const auto c = classify({rat(1), rat(0)}, 3);
    EXPECT_EQ(c.verdict, Verdict::CandidateUnitary);
    EXPECT_FALSE(c.witness.has_value());
    EXPECT_EQ(c.first_null_grade, 2);
    EXPECT_FALSE(c.all_null);

    const auto d = classify({rat(0), rat(0)}, 3);
    EXPECT_EQ(d.verdict, Verdict::CandidateUnitary);
    EXPECT_TRUE(d.all_null);
    EXPECT_EQ(to_string(Verdict::NonUnitary), "NON_UNITARY");
    EXPECT_EQ(to_string(Verdict::CandidateUnitary), "CANDIDATE_UNITARY");
}

TEST(Classify, WitnessNormIsRecomputable) {
    for (std::uint64_t t = 0; t < 30; ++t) {
        TrialRng rng(81, t);
        const AffineWeight w{random_rational(rng, 4), random_rational(rng, 4)};
        const auto row = classify(w, 3);
        if (!row.witness) continue;
        Rational norm;
        for (const auto& [x, cx] : row.witness->vector)
            for (const auto& [y, cy] : row.witness->vector) norm += cx * cy * shapovalov_pair(x, y, w);
        ASSERT_EQ(norm, row.witness->norm);
        ASSERT_LT(norm.sign(), 0);
    }
}

TEST(Classify, ScanOrderAndNegativeLevels) {
    const auto rows = unitarity_scan({rat(-1), rat(2)}, {rat(0), rat(1)}, 2);
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0].weight.k, rat(-1));
    EXPECT_EQ(rows[1].weight.h, rat(1));
    EXPECT_EQ(rows[0].verdict, Verdict::NonUnitary);  // <H_{-1} v, H_{-1} v> = 2k < 0
    EXPECT_EQ(rows[2].verdict, Verdict::CandidateUnitary);
    EXPECT_EQ(rows[3].verdict, Verdict::CandidateUnitary);
}

TEST(Classify, IntegrableWeightsSurvive) {
    // 0 <= h <= k with k, h integers: the integrable highest weights
    for (long k = 1; k <= 3; ++k)
        for (long h = 0; h <= k; ++h) EXPECT_EQ(classify({rat(k), rat(h)}, 3).verdict, Verdict::CandidateUnitary);
    EXPECT_EQ(classify({rat(2), rat(3)}, 2).verdict, Verdict::NonUnitary);
}
