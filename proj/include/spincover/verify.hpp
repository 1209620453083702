#pragma once

#include <cstdint>
#include <functional>
#include <future>
#include <sstream>
#include <string>
#include <vector>

#include "spincover/congruence.hpp"
#include "spincover/covering.hpp"
#include "spincover/fox.hpp"
#include "spincover/quadform.hpp"
#include "spincover/stabilizers.hpp"
#include "spincover/symplectic.hpp"

namespace spincover {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail; // counterexample on failure, case count on success
};

namespace detail {

// Deterministic splitmix64 stream so verification output is reproducible.
class Rng {
public:
    explicit Rng(uint64_t seed) : s_(seed) {}
    uint64_t next() {
        s_ += 0x9e3779b97f4a7c15ull;
        uint64_t z = s_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    uint64_t below(uint64_t n) { return next() % n; }

private:
    uint64_t s_;
};

inline BitVector random_vector(int len, Rng& rng) {
    BitVector v(len);
    const uint64_t bits = rng.next();
    for (int i = 1; i <= len; ++i)
        v.set(i, (bits >> (i - 1)) & 1u);
    return v;
}

// Deterministic pseudo-random group element: a short product of generators.
inline SymplecticMatrix random_element(int g, const std::vector<SymplecticMatrix>& gens, Rng& rng) {
    SymplecticMatrix a = SymplecticMatrix::identity(g);
    const int len = 4 + static_cast<int>(rng.below(8));
    for (int i = 0; i < len; ++i)
        a = a * gens[rng.below(gens.size())];
    return a;
}

inline CheckResult pass_result(std::string name, std::size_t cases) {
    return {std::move(name), true, std::to_string(cases) + " cases"};
}

inline CheckResult fail_result(std::string name, std::string counterexample) {
    return {std::move(name), false, std::move(counterexample)};
}

} // namespace detail

// ---------------------------------------------------------------- arf suite

inline std::vector<CheckResult> verify_arf(int g) {
    std::vector<CheckResult> out;
    const int n = 2 * g;
    const std::string tag = " (g=" + std::to_string(g) + ")";

    { // polarization: omega(x+y) = omega(x) + omega(y) + x.y
        std::size_t cases = 0;
        std::string bad;
        detail::Rng rng(11);
        auto check_form = [&](const QuadraticForm& w) {
            auto try_pair = [&](const BitVector& x, const BitVector& y) {
                ++cases;
                const bool rhs = (evaluate(w, x) != evaluate(w, y)) != intersection_product(x, y);
                return evaluate(w, x ^ y) == rhs;
            };
            if (g <= 2) {
                for (uint64_t xb = 0; xb < (uint64_t{1} << n); ++xb)
                    for (uint64_t yb = 0; yb < (uint64_t{1} << n); ++yb) {
                        BitVector x(n), y(n);
                        for (int i = 1; i <= n; ++i) {
                            x.set(i, (xb >> (i - 1)) & 1u);
                            y.set(i, (yb >> (i - 1)) & 1u);
                        }
                        if (!try_pair(x, y)) {
                            bad = "omega=" + w.basis_values().to_string() + " x=" + x.to_string() +
                                  " y=" + y.to_string();
                            return false;
                        }
                    }
            } else {
                for (int trial = 0; trial < 256; ++trial) {
                    BitVector x = detail::random_vector(n, rng), y = detail::random_vector(n, rng);
                    if (!try_pair(x, y)) {
                        bad = "omega=" + w.basis_values().to_string() + " x=" + x.to_string() +
                              " y=" + y.to_string();
                        return false;
                    }
                }
            }
            return true;
        };
        bool ok = true;
        for (const auto& w : all_forms(g))
            if (!check_form(w)) {
                ok = false;
                break;
            }
        out.push_back(ok ? detail::pass_result("polarization identity" + tag, cases)
                         : detail::fail_result("polarization identity" + tag, bad));
    }

    { // Arf is a symplectic invariant
        std::size_t cases = 0;
        std::string bad;
        bool ok = true;
        std::vector<SymplecticMatrix> elements;
        if (g <= 2) {
            elements = sp_group(g);
        } else {
            detail::Rng rng(12);
            const auto gens = sp_generating_set(g);
            for (int i = 0; i < 64; ++i)
                elements.push_back(detail::random_element(g, gens, rng));
        }
        for (const auto& w : all_forms(g)) {
            for (const auto& a : elements) {
                ++cases;
                if (arf(compose(w, a)) != arf(w)) {
                    ok = false;
                    bad = "omega=" + w.basis_values().to_string();
                    break;
                }
            }
            if (!ok)
                break;
        }
        out.push_back(ok ? detail::pass_result("arf symplectic invariance" + tag, cases)
                         : detail::fail_result("arf symplectic invariance" + tag, bad));
    }

    { // arf(w2) - arf(w) = w(V) for the difference vector V
        std::size_t cases = 0;
        std::string bad;
        bool ok = true;
        for (const auto& w : all_forms(g)) {
            for (const auto& w2 : all_forms(g)) {
                ++cases;
                const BitVector v = difference_vector(w, w2);
                if ((arf(w2) != arf(w)) != evaluate(w, v)) {
                    ok = false;
                    bad = "omega=" + w.basis_values().to_string() +
                          " omega'=" + w2.basis_values().to_string();
                    break;
                }
            }
            if (!ok)
                break;
        }
        out.push_back(ok ? detail::pass_result("arf difference identity" + tag, cases)
                         : detail::fail_result("arf difference identity" + tag, bad));
    }

    { // level-set counts of the two reference forms
        auto zeros = [&](const QuadraticForm& w) {
            std::size_t count = 0;
            for (uint64_t xb = 0; xb < (uint64_t{1} << n); ++xb) {
                BitVector x(n);
                for (int i = 1; i <= n; ++i)
                    x.set(i, (xb >> (i - 1)) & 1u);
                if (!evaluate(w, x))
                    ++count;
            }
            return count;
        };
        const std::size_t plus = (std::size_t{1} << (g - 1)) * ((std::size_t{1} << g) + 1);
        const std::size_t minus = (std::size_t{1} << (g - 1)) * ((std::size_t{1} << g) - 1);
        const std::size_t z0 = zeros(QuadraticForm::omega0(g));
        const std::size_t z1 = zeros(QuadraticForm::omega1(g));
        const bool ok = z0 == plus && z1 == minus;
        std::ostringstream detail_s;
        detail_s << "zeros(omega0)=" << z0 << " zeros(omega1)=" << z1 << " expected " << plus
                 << "," << minus;
        out.push_back({"level set counts" + tag, ok, detail_s.str()});
    }

    if (g <= 2) { // s-related (full group search) iff equal Arf
        std::size_t cases = 0;
        std::string bad;
        bool ok = true;
        const QuadraticSection s = QuadraticSection::zero(g);
        const auto group = sp_group(g);
        for (const auto& phi : all_coverings(g, 2)) {
            for (const auto& phi2 : all_coverings(g, 2)) {
                ++cases;
                bool related = false;
                for (const auto& a : group)
                    if (s_related(phi, phi2, a, s)) {
                        related = true;
                        break;
                    }
                const bool arf_equal = arf(omega_of(phi, s)) == arf(omega_of(phi2, s));
                if (related != arf_equal) {
                    ok = false;
                    bad = "phi=" + phi.bits().to_string() + " phi'=" + phi2.bits().to_string();
                    break;
                }
            }
            if (!ok)
                break;
        }
        out.push_back(ok ? detail::pass_result("arf classification" + tag, cases)
                         : detail::fail_result("arf classification" + tag, bad));
    }

    return out;
}

// ------------------------------------------------------------- orbits suite

inline std::vector<CheckResult> verify_orbits(int g) {
    std::vector<CheckResult> out;
    const std::string tag = " (g=" + std::to_string(g) + ")";
    const std::size_t plus = (std::size_t{1} << (g - 1)) * ((std::size_t{1} << g) + 1);
    const std::size_t minus = (std::size_t{1} << (g - 1)) * ((std::size_t{1} << g) - 1);

    { // census sizes; orbits() itself cross-checks the group action at g <= 2
        const OrbitPartition part = orbits(g, 2, QuadraticSection::zero(g));
        const bool ok = part.arf_zero.size() == plus && part.arf_one.size() == minus;
        std::ostringstream d;
        d << "sizes " << part.arf_zero.size() << "," << part.arf_one.size() << " expected " << plus
          << "," << minus;
        out.push_back({"orbit census" + tag, ok, d.str()});
    }

    { // the census does not depend on the section
        std::size_t cases = 0;
        std::string bad;
        bool ok = true;
        std::vector<QuadraticSection> sections;
        if (g == 1) {
            for (const auto& phi : all_coverings(1, 2))
                sections.emplace_back(1, phi.bits());
        } else {
            detail::Rng rng(21);
            for (int i = 0; i < 32; ++i)
                sections.emplace_back(g, detail::random_vector(2 * g, rng));
        }
        for (const auto& s : sections) {
            ++cases;
            const OrbitPartition part = orbits(g, 2, s);
            if (part.arf_zero.size() != plus || part.arf_one.size() != minus) {
                ok = false;
                bad = "section=" + s.r().to_string();
                break;
            }
        }
        out.push_back(ok ? detail::pass_result("section independence" + tag, cases)
                         : detail::fail_result("section independence" + tag, bad));
    }

    { // act(I) = id and act(a*b, phi) = act(b, act(a, phi))
        std::size_t cases = 0;
        std::string bad;
        bool ok = true;
        const QuadraticSection s = QuadraticSection::zero(g);
        std::vector<SymplecticMatrix> elements;
        if (g == 1) {
            elements = sp_group(1);
        } else {
            detail::Rng rng(22);
            const auto gens = sp_generating_set(g);
            for (int i = 0; i < 12; ++i)
                elements.push_back(detail::random_element(g, gens, rng));
        }
        const SymplecticMatrix id = SymplecticMatrix::identity(g);
        for (const auto& phi : all_coverings(g, 2)) {
            if (!(act(id, phi, s) == phi)) {
                ok = false;
                bad = "identity moved phi=" + phi.bits().to_string();
                break;
            }
            for (const auto& a : elements) {
                for (const auto& b : elements) {
                    ++cases;
                    if (!(act(a * b, phi, s) == act(b, act(a, phi, s), s))) {
                        ok = false;
                        bad = "phi=" + phi.bits().to_string();
                        break;
                    }
                }
                if (!ok)
                    break;
            }
            if (!ok)
                break;
        }
        out.push_back(ok ? detail::pass_result("action composition" + tag, cases)
                         : detail::fail_result("action composition" + tag, bad));
    }

    if (g <= 2) { // |stabilizer| * |orbit| = |Sp|
        std::size_t cases = 0;
        std::string bad;
        bool ok = true;
        const QuadraticSection s = QuadraticSection::zero(g);
        const std::size_t group_order = sp_group_keys(g).size();
        const OrbitPartition part = orbits(g, 2, s);
        for (const auto& phi : all_coverings(g, 2)) {
            ++cases;
            const std::size_t orbit_size =
                arf(omega_of(phi, s)) ? part.arf_one.size() : part.arf_zero.size();
            if (stabilizer(phi, s).size() * orbit_size != group_order) {
                ok = false;
                bad = "phi=" + phi.bits().to_string();
                break;
            }
        }
        out.push_back(ok ? detail::pass_result("orbit stabilizer product" + tag, cases)
                         : detail::fail_result("orbit stabilizer product" + tag, bad));
    }

    return out;
}

// ---------------------------------------------------------- generators suite

inline std::vector<CheckResult> verify_generators(int g) {
    std::vector<CheckResult> out;
    const std::string tag = " (g=" + std::to_string(g) + ")";
    const std::size_t plus = (std::size_t{1} << (g - 1)) * ((std::size_t{1} << g) + 1);
    const std::size_t minus = (std::size_t{1} << (g - 1)) * ((std::size_t{1} << g) - 1);

    { // permutation generators close to the signed-permutation order 2^g g!
        std::size_t expected = std::size_t{1} << g;
        for (int k = 2; k <= g; ++k)
            expected *= static_cast<std::size_t>(k);
        const std::size_t got = group_closure_order(g, symplectic_permutations(g));
        out.push_back({"permutation subgroup order" + tag, got == expected,
                       "order " + std::to_string(got) + " expected " + std::to_string(expected)});
    }

    for (int which = 0; which <= 1; ++which) {
        const std::string name =
            (which == 0 ? "arf0 stabilizer generators" : "arf1 stabilizer generators") + tag;
        const auto gens = sp_generators(which, g);
        bool members = true;
        for (const auto& a : gens)
            if (!membership(a, which)) {
                members = false;
                break;
            }
        const std::size_t closure = group_closure_order(g, gens);
        std::size_t expected;
        if (g <= 2) {
            // independent count: scan the whole group for the fixing subgroup
            expected = 0;
            for (uint64_t key : sp_group_keys(g))
                if (membership(key_matrix(g, key), which))
                    ++expected;
        } else {
            expected = sp_group_keys(g).size() / (which == 0 ? plus : minus);
        }
        std::ostringstream d;
        d << "closure " << closure << " expected " << expected
          << (members ? "" : "; a generator does not fix the form");
        out.push_back({name, members && closure == expected, d.str()});
    }

    { // stabilizer generators plus the shear generate the whole group
        auto gens = sp_generators(0, g);
        gens.push_back(shear_generator(g));
        const std::size_t got = group_closure_order(g, gens);
        const std::size_t expected = sp_group_keys(g).size();
        out.push_back({"full group from stabilizer generators" + tag, got == expected,
                       "order " + std::to_string(got) + " expected " + std::to_string(expected)});
    }

    { // transitivity on the omega_0 level sets away from zero
        const VectorOrbits orbits2 = sp0_vector_orbits(g);
        const bool ok = orbits2.zero_set.size() == plus - 1 && orbits2.one_set.size() == minus;
        std::ostringstream d;
        d << "orbit sizes " << orbits2.zero_set.size() << "," << orbits2.one_set.size()
          << " expected " << (plus - 1) << "," << minus;
        out.push_back({"level set transitivity" + tag, ok, d.str()});
    }

    return out;
}

// -------------------------------------------------------------- cover suite

inline std::vector<CheckResult> verify_cover(int g) {
    std::vector<CheckResult> out;
    const std::string tag = " (g=" + std::to_string(g) + ")";

    {
        std::size_t cases = 0;
        std::string bad;
        bool ok = true;
        std::vector<SymplecticMatrix> elements;
        if (g <= 2) {
            elements = sp_group(g);
        } else {
            detail::Rng rng(31);
            const auto gens = sp_generating_set(g);
            for (int i = 0; i < 128; ++i)
                elements.push_back(detail::random_element(g, gens, rng));
        }
        for (const auto& a : elements) {
            ++cases;
            try {
                const CoverWitness w = cover_witness(a); // certifies internally
                const SymplecticMatrix t = transvection(w.y);
                if (!membership(t * a * t, w.which)) {
                    ok = false;
                    bad = "witness not certified";
                    break;
                }
            } catch (const std::logic_error& e) {
                ok = false;
                bad = e.what();
                break;
            }
        }
        out.push_back(ok ? detail::pass_result("conjugacy covering" + tag, cases)
                         : detail::fail_result("conjugacy covering" + tag, bad));
    }

    return out;
}

// ---------------------------------------------------------------- fox suite

inline std::vector<CheckResult> verify_fox(int g) {
    std::vector<CheckResult> out;
    const std::string tag = " (g=" + std::to_string(g) + ")";

    {
        std::size_t cases = 0;
        std::string bad;
        bool ok = true;
        for (long long c = 1; c <= 3 && ok; ++c)
            for (const auto& phi : all_coverings(g, 2 * c)) {
                ++cases;
                if (!(derived_matrix(phi) == derived_matrix_closed_form(phi))) {
                    ok = false;
                    bad = "phi=" + phi.bits().to_string() + " c=" + std::to_string(c);
                    break;
                }
            }
        out.push_back(ok ? detail::pass_result("fox engine vs closed form" + tag, cases)
                         : detail::fail_result("fox engine vs closed form" + tag, bad));
    }

    {
        std::size_t cases = 0;
        std::string bad;
        bool ok = true;
        for (const auto& phi : all_coverings(g, 2)) {
            ++cases;
            long long sum = 0;
            for (int i = 1; i <= 2 * g; ++i)
                sum += n_integral(phi, i) * epsilon_integral(phi, i);
            if (sum != 0) {
                ok = false;
                bad = "phi=" + phi.bits().to_string();
                break;
            }
        }
        out.push_back(ok ? detail::pass_result("epsilon relation" + tag, cases)
                         : detail::fail_result("epsilon relation" + tag, bad));
    }

    { // sum_j dR/du_j (phi(u_j) - 1) = phi(R) - 1 = 0 for every relator
        std::size_t cases = 0;
        std::string bad;
        bool ok = true;
        for (long long c = 1; c <= 3 && ok; ++c)
            for (const auto& phi : all_coverings(g, 2 * c)) {
                for (int i = 0; i <= 2 * g; ++i) {
                    ++cases;
                    const Word r = relator(i, g, 2 * c);
                    GroupRingElementZ sum = GroupRingElementZ::zero();
                    for (int j = 0; j <= 2 * g; ++j)
                        sum += fox_derivative(r, j, phi) * (phi_image(phi, j) - GroupRingElementZ::one());
                    if (!(sum == GroupRingElementZ::zero())) {
                        ok = false;
                        bad = "phi=" + phi.bits().to_string() + " relator " + std::to_string(i);
                        break;
                    }
                }
                if (!ok)
                    break;
            }
        out.push_back(ok ? detail::pass_result("fundamental identity" + tag, cases)
                         : detail::fail_result("fundamental identity" + tag, bad));
    }

    {
        std::size_t cases = 0;
        std::string bad;
        bool ok = true;
        for (long long c = 1; c <= 2 && ok; ++c)
            for (const auto& phi : all_coverings(g, 2 * c)) {
                ++cases;
                if (!(derived_matrix(phi).reduce_mod2() == derived_matrix_mod2(phi))) {
                    ok = false;
                    bad = "phi=" + phi.bits().to_string() + " c=" + std::to_string(c);
                    break;
                }
            }
        out.push_back(ok ? detail::pass_result("mod2 reduction" + tag, cases)
                         : detail::fail_result("mod2 reduction" + tag, bad));
    }

    {
        std::size_t cases = 0;
        std::string bad;
        bool ok = true;
        for (long long c = 1; c <= 4 && ok; ++c)
            for (const auto& phi : all_coverings(g, 2 * c)) {
                ++cases;
                try {
                    const VqDecomposition d = vq_decomposition(phi);
                    if (!is_invertible(d.left) || !is_invertible(d.right)) {
                        ok = false;
                        bad = "transform not invertible, phi=" + phi.bits().to_string();
                        break;
                    }
                } catch (const std::logic_error& e) {
                    ok = false;
                    bad = e.what();
                    break;
                }
            }
        out.push_back(ok ? detail::pass_result("vq normal form" + tag, cases)
                         : detail::fail_result("vq normal form" + tag, bad));
    }

    {
        std::size_t cases = 0;
        std::string bad;
        bool ok = true;
        for (long long c = 1; c <= 2 && ok; ++c)
            for (const auto& phi : all_coverings(g, 2 * c)) {
                for (uint64_t ab = 0; ab < (uint64_t{1} << (2 * g)); ++ab) {
                    ++cases;
                    BitVector alpha(2 * g);
                    for (int i = 1; i <= 2 * g; ++i)
                        alpha.set(i, (ab >> (i - 1)) & 1u);
                    try {
                        const GeneratorChange gc = change_generators(phi, alpha); // asserts M' = phi(C) M
                        if (!(gc.phi_prime.bits() == (phi.bits() ^ alpha))) {
                            ok = false;
                            bad = "wrong shifted monodromy";
                            break;
                        }
                    } catch (const std::logic_error& e) {
                        ok = false;
                        bad = e.what();
                        break;
                    }
                }
                if (!ok)
                    break;
            }
        out.push_back(ok ? detail::pass_result("change of generators" + tag, cases)
                         : detail::fail_result("change of generators" + tag, bad));
    }

    return out;
}

// --------------------------------------------------------- congruence suite

inline std::vector<CheckResult> verify_congruence(int g) {
    std::vector<CheckResult> out;
    const std::string tag = " (g=" + std::to_string(g) + ")";
    const QuadraticSection s = QuadraticSection::zero(g);

    { // congruence witness exists iff the Arf invariants agree
        std::size_t cases = 0;
        std::string bad;
        bool ok = true;
        const std::vector<long long> qs = g == 1 ? std::vector<long long>{2, 4}
                                                 : std::vector<long long>{2};
        for (long long q : qs) {
            for (const auto& phi : all_coverings(g, q)) {
                for (const auto& phi2 : all_coverings(g, q)) {
                    ++cases;
                    const bool arf_equal = arf(omega_of(phi, s)) == arf(omega_of(phi2, s));
                    const auto witness = congruent(phi, phi2, s); // verifies its own diagram
                    if (witness.has_value() != arf_equal) {
                        ok = false;
                        bad = "phi=" + phi.bits().to_string() + " phi'=" + phi2.bits().to_string() +
                              " q=" + std::to_string(q);
                        break;
                    }
                }
                if (!ok)
                    break;
            }
            if (!ok)
                break;
        }
        out.push_back(ok ? detail::pass_result("derived matrix congruence" + tag, cases)
                         : detail::fail_result("derived matrix congruence" + tag, bad));
    }

    if (g == 1) { // parameter conditions match the literal diagram, all theta
        std::size_t cases = 0;
        std::string bad;
        bool ok = true;
        const auto group = sp_group(1);
        for (long long c = 1; c <= 2 && ok; ++c) {
            const auto coverings = all_coverings(1, 2 * c);
            for (const auto& phi : coverings) {
                for (const auto& phi2 : coverings) {
                    for (const auto& a : group) {
                        for (uint64_t tb = 0; tb < (uint64_t{1} << 9); ++tb) {
                            ++cases;
                            BitMatrix b1(2, 2);
                            b1.set(1, 1, tb & 1);
                            b1.set(1, 2, (tb >> 1) & 1);
                            b1.set(2, 1, (tb >> 2) & 1);
                            b1.set(2, 2, (tb >> 3) & 1);
                            BitVector b2(2), b3(2);
                            b2.set(1, (tb >> 4) & 1);
                            b2.set(2, (tb >> 5) & 1);
                            b3.set(1, (tb >> 6) & 1);
                            b3.set(2, (tb >> 7) & 1);
                            const ThetaParams theta{b1, b2, b3, static_cast<bool>((tb >> 8) & 1)};
                            const bool by_conditions = check_dn(a, theta, phi, phi2, s, c);
                            const bool by_diagram = diagram_commutes(a, theta, phi, phi2, s) &&
                                                    is_invertible(theta.matrix());
                            if (by_conditions != by_diagram) {
                                ok = false;
                                bad = "phi=" + phi.bits().to_string() +
                                      " phi'=" + phi2.bits().to_string() + " c=" + std::to_string(c);
                                break;
                            }
                        }
                        if (!ok)
                            break;
                    }
                    if (!ok)
                        break;
                }
                if (!ok)
                    break;
            }
        }
        out.push_back(ok ? detail::pass_result("parameter conditions vs diagram" + tag, cases)
                         : detail::fail_result("parameter conditions vs diagram" + tag, bad));
    }

    { // under the constrained shape, (delta) is automatic and (gamma) is
      // the s-relation
        std::size_t cases = 0;
        std::string bad;
        bool ok = true;
        std::vector<SymplecticMatrix> elements;
        if (g == 1) {
            elements = sp_group(1);
        } else {
            detail::Rng rng(41);
            const auto gens = sp_generating_set(g);
            for (int i = 0; i < 16; ++i)
                elements.push_back(detail::random_element(g, gens, rng));
        }
        for (long long c = 1; c <= 2 && ok; ++c) {
            const auto coverings = all_coverings(g, 2 * c);
            for (const auto& phi : coverings) {
                for (const auto& phi2 : coverings) {
                    for (const auto& a : elements) {
                        ++cases;
                        const ThetaParams theta = detail::build_theta(a, phi, phi2);
                        const bool conditions = check_dn(a, theta, phi, phi2, s, c);
                        if (conditions != s_related(phi, phi2, a, s)) {
                            ok = false;
                            bad = "phi=" + phi.bits().to_string() +
                                  " phi'=" + phi2.bits().to_string() + " c=" + std::to_string(c);
                            break;
                        }
                    }
                    if (!ok)
                        break;
                }
                if (!ok)
                    break;
            }
        }
        out.push_back(ok ? detail::pass_result("constrained theta consistency" + tag, cases)
                         : detail::fail_result("constrained theta consistency" + tag, bad));
    }

    if (g == 1) { // for odd c every s-relating matrix completes to a witness
        std::size_t cases = 0;
        std::string bad;
        bool ok = true;
        const auto coverings = all_coverings(1, 2);
        for (const auto& phi : coverings) {
            for (const auto& phi2 : coverings) {
                for (const auto& a : sp_group(1)) {
                    if (!s_related(phi, phi2, a, s))
                        continue;
                    ++cases;
                    const ThetaParams theta = detail::build_theta(a, phi, phi2);
                    if (!diagram_commutes(a, theta, phi, phi2, s) ||
                        !is_invertible(theta.matrix())) {
                        ok = false;
                        bad = "phi=" + phi.bits().to_string() + " phi'=" + phi2.bits().to_string();
                        break;
                    }
                }
                if (!ok)
                    break;
            }
            if (!ok)
                break;
        }
        out.push_back(ok ? detail::pass_result("odd chern theta construction" + tag, cases)
                         : detail::fail_result("odd chern theta construction" + tag, bad));
    }

    return out;
}

// ---------------------------------------------------------------- star suite

inline std::vector<CheckResult> verify_star(int g) {
    std::vector<CheckResult> out;
    const std::string tag = " (g=" + std::to_string(g) + ")";
    const SpecialCovering phi0(g, 2, BitVector(2 * g));

    { // block criterion equals brute-force preservation over basis pairs
        std::size_t cases = 0;
        std::string bad;
        bool ok = true;
        if (g == 1) {
            for (uint64_t ab = 0; ab < 16 && ok; ++ab) {
                BitMatrix a(2, 2);
                a.set(1, 1, ab & 1);
                a.set(1, 2, (ab >> 1) & 1);
                a.set(2, 1, (ab >> 2) & 1);
                a.set(2, 2, (ab >> 3) & 1);
                for (uint64_t rest = 0; rest < (1u << 6); ++rest) {
                    ++cases;
                    BitVector b(2), c(2);
                    b.set(1, rest & 1);
                    b.set(2, (rest >> 1) & 1);
                    c.set(1, (rest >> 2) & 1);
                    c.set(2, (rest >> 3) & 1);
                    const PsiMatrix psi{a, b, c,
                                        GroupRingElement2((rest >> 4) & 1, (rest >> 5) & 1)};
                    if (psi_respects_product(psi) != !star_violation(psi, phi0).has_value()) {
                        ok = false;
                        bad = "A rows " + a.to_strings()[0] + "|" + a.to_strings()[1];
                        break;
                    }
                }
            }
        } else {
            detail::Rng rng(51);
            for (int trial = 0; trial < 512; ++trial) {
                ++cases;
                BitMatrix a(2 * g, 2 * g);
                for (int i = 1; i <= 2 * g; ++i)
                    for (int j = 1; j <= 2 * g; ++j)
                        a.set(i, j, rng.below(2));
                const PsiMatrix psi{a, detail::random_vector(2 * g, rng),
                                    detail::random_vector(2 * g, rng),
                                    GroupRingElement2(rng.below(2), rng.below(2))};
                if (psi_respects_product(psi) != !star_violation(psi, phi0).has_value()) {
                    ok = false;
                    bad = "trial " + std::to_string(trial);
                    break;
                }
            }
        }
        out.push_back(ok ? detail::pass_result("star criterion vs brute force" + tag, cases)
                         : detail::fail_result("star criterion vs brute force" + tag, bad));
    }

    { // quotient condition is the s-relation
        std::size_t cases = 0;
        std::string bad;
        bool ok = true;
        const QuadraticSection s = QuadraticSection::zero(g);
        std::vector<SymplecticMatrix> elements;
        if (g == 1) {
            elements = sp_group(1);
        } else {
            detail::Rng rng(52);
            const auto gens = sp_generating_set(g);
            for (int i = 0; i < 16; ++i)
                elements.push_back(detail::random_element(g, gens, rng));
        }
        const auto coverings = all_coverings(g, 2);
        for (const auto& phi : coverings) {
            for (const auto& phi2 : coverings) {
                for (const auto& a : elements) {
                    ++cases;
                    if (is_quotient(a, phi, phi2, s) != s_related(phi, phi2, a, s)) {
                        ok = false;
                        bad = "phi=" + phi.bits().to_string() + " phi'=" + phi2.bits().to_string();
                        break;
                    }
                }
                if (!ok)
                    break;
            }
            if (!ok)
                break;
        }
        out.push_back(ok ? detail::pass_result("quotient condition" + tag, cases)
                         : detail::fail_result("quotient condition" + tag, bad));
    }

    return out;
}

// ----------------------------------------------------------------- dispatch

inline const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names{"arf",  "orbits",     "generators", "cover",
                                                "fox",  "congruence", "star",       "all"};
    return names;
}

inline std::vector<CheckResult> verify_suite(const std::string& suite, int g_min, int g_max,
                                             bool parallel = false) {
    if (g_min < 1 || g_max > 3 || g_min > g_max)
        throw std::invalid_argument("verify_suite: genus range must lie in 1..3");

    std::vector<std::function<std::vector<CheckResult>()>> jobs;
    auto add = [&](const std::string& name) {
        for (int g = g_min; g <= g_max; ++g) {
            if (name == "arf")
                jobs.emplace_back([g] { return verify_arf(g); });
            else if (name == "orbits")
                jobs.emplace_back([g] { return verify_orbits(g); });
            else if (name == "generators")
                jobs.emplace_back([g] { return verify_generators(g); });
            else if (name == "cover")
                jobs.emplace_back([g] { return verify_cover(g); });
            else if (name == "fox")
                jobs.emplace_back([g] { return verify_fox(g); });
            else if (name == "congruence")
                jobs.emplace_back([g] { return verify_congruence(g); });
            else if (name == "star")
                jobs.emplace_back([g] { return verify_star(g); });
        }
    };
    if (suite == "all") {
        for (const std::string& name : verify_suite_names())
            if (name != "all")
                add(name);
    } else {
        bool known = false;
        for (const std::string& name : verify_suite_names())
            if (name == suite && name != "all")
                known = true;
        if (!known)
            throw std::invalid_argument("verify_suite: unknown suite '" + suite + "'");
        add(suite);
    }

    std::vector<CheckResult> results;
    if (parallel) {
        // Deterministic merge: futures are collected in job order.
        std::vector<std::future<std::vector<CheckResult>>> futures;
        futures.reserve(jobs.size());
        for (auto& job : jobs)
            futures.push_back(std::async(std::launch::async, job));
        for (auto& f : futures)
            for (auto& r : f.get())
                results.push_back(std::move(r));
    } else {
        for (auto& job : jobs)
            for (auto& r : job())
                results.push_back(std::move(r));
    }
    return results;
}

} // namespace spincover
