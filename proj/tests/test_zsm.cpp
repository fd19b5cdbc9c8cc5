#include <doctest.h>

#include <random>

#include "absirr/errors.hpp"
#include "absirr/zsm.hpp"
#include "oracles.hpp"

using namespace absirr;

namespace {

// G = Z^n, G0 = {e1, -e1, ..., en, -en, f, -f} with f = e1 + ... + en.
ClassSet r1_classes(std::size_t n) {
    const auto g = FinGenAbelianGroup::free(n);
    std::vector<GroupElement> cls;
    std::vector<std::string> labels;
    GroupElement f = g.zero();
    for (std::size_t i = 0; i < n; ++i) {
        const auto e = g.basis_element(i);
        cls.push_back(e);
        cls.push_back(g.negate(e));
        labels.push_back("e" + std::to_string(i + 1));
        labels.push_back("-e" + std::to_string(i + 1));
        f = g.add(f, e);
    }
    cls.push_back(f);
    cls.push_back(g.negate(f));
    labels.push_back("f");
    labels.push_back("-f");
    return ClassSet(g, cls, labels);
}

Sequence seq(const ClassSet& c, std::initializer_list<std::pair<const char*, Exponent>> items) {
    Sequence s = Sequence::empty(c.size());
    for (const auto& [label, k] : items) s = s * Sequence::single(c.size(), *c.index_of_label(label), k);
    return s;
}

// Minimality by listing every sub-vector and summing with group arithmetic.
bool oracle_minimal(const ClassSet& c, const Sequence& s) {
    const auto& g = c.group();
    auto sum_of = [&](const std::vector<Exponent>& e) {
        GroupElement acc = g.zero();
        for (std::size_t i = 0; i < e.size(); ++i) acc = g.add(acc, g.scale(Integer(static_cast<long>(e[i])), c[i]));
        return acc;
    };
    if (s.is_empty() || !sum_of(s.exponents()).is_zero()) return false;
    std::vector<Exponent> t(s.size(), 0);
    for (;;) {
        std::size_t i = 0;
        while (i < t.size()) {
            if (t[i] < s[i]) {
                ++t[i];
                break;
            }
            t[i] = 0;
            ++i;
        }
        if (i == t.size()) return true;
        if (Sequence(t) == s) continue;
        if (sum_of(t).is_zero()) return false;
    }
}

// All zero-sum exponent vectors of total length <= bound that are minimal.
std::vector<Sequence> oracle_atoms(const ClassSet& c, long bound) {
    std::vector<Sequence> out;
    std::vector<Exponent> e(c.size(), 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
        if (i == c.size()) {
            Sequence s(e);
            if (!s.is_empty() && is_zero_sum(c, s) && oracle_minimal(c, s)) out.push_back(s);
            return;
        }
        for (long k = 0; k <= left; ++k) {
            e[i] = k;
            rec(i + 1, left - k);
        }
        e[i] = 0;
    };
    rec(0, bound);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("class set validation") {
    const auto g = FinGenAbelianGroup::cyclic(3);
    CHECK_THROWS_AS(ClassSet(g, {}), InvalidArgument);
    CHECK_THROWS_AS(ClassSet(g, {g.element({1}), g.element({4})}), InvalidArgument);
    CHECK_NOTHROW(ClassSet::with_repeated_values(g, {g.element({1}), g.element({1})}, {"p", "q"}));
    CHECK_THROWS_AS(ClassSet(g, {g.element({1, 0})}), DimensionMismatch);
}

TEST_CASE("sigma, length and support") {
    const auto c = r1_classes(2);
    const auto empty = Sequence::empty(c.size());
    CHECK(sigma(c, empty).is_zero());
    CHECK(length(empty) == 0);
    CHECK(support(empty).empty());

    const auto s = seq(c, {{"e1", 1}, {"e2", 1}, {"-f", 1}});
    CHECK(sigma(c, s).is_zero());
    CHECK(length(s) == 3);
    CHECK(support(s).size() == 3);

    const auto z3 = FinGenAbelianGroup::cyclic(3);
    const ClassSet c3(z3, {z3.element({1})}, {"g"});
    CHECK(sigma(c3, Sequence({3})).is_zero());
    CHECK(length(Sequence({3})) == 3);
    CHECK_FALSE(is_zero_sum(c3, Sequence({2})));
    CHECK_THROWS_AS(sigma(c3, Sequence({1, 1})), DimensionMismatch);
}

TEST_CASE("minimal zero-sum sequences") {
    const auto c = r1_classes(2);
    CHECK(is_minimal_zero_sum(c, seq(c, {{"e1", 1}, {"-e1", 1}})));
    CHECK_FALSE(is_minimal_zero_sum(c, seq(c, {{"e1", 1}, {"-e1", 1}, {"e2", 1}, {"-e2", 1}})));
    CHECK_FALSE(is_minimal_zero_sum(c, seq(c, {{"e1", 2}, {"-e1", 2}})));

    const auto z = FinGenAbelianGroup::free(1);
    const ClassSet cz(z, {z.element({-1}), z.element({-2}), z.element({3})}, {"-g", "-2g", "3g"});
    CHECK(is_minimal_zero_sum(cz, Sequence({1, 1, 1})));
    CHECK(is_minimal_zero_sum(cz, Sequence({3, 0, 1})));
    CHECK(is_minimal_zero_sum(cz, Sequence({0, 3, 2})));
    CHECK_FALSE(is_minimal_zero_sum(cz, Sequence({4, 1, 2})));
}

TEST_CASE("atoms of the R1 class set") {
    const auto c = r1_classes(2);
    const auto atoms = enumerate_atoms(c);
    REQUIRE(atoms.size() == 5);
    for (const auto& s : {seq(c, {{"e1", 1}, {"-e1", 1}}), seq(c, {{"e2", 1}, {"-e2", 1}}),
                          seq(c, {{"f", 1}, {"-f", 1}}), seq(c, {{"e1", 1}, {"e2", 1}, {"-f", 1}}),
                          seq(c, {{"-e1", 1}, {"-e2", 1}, {"f", 1}})})
        CHECK(atoms.index_of(s).has_value());
    CHECK(atoms.certificate().slack_columns == 0);
}

TEST_CASE("atoms over small cyclic groups") {
    const auto z2 = FinGenAbelianGroup::cyclic(2);
    const ClassSet c2(z2, {z2.element({0}), z2.element({1})}, {"0", "g"});
    const auto a2 = enumerate_atoms(c2);
    CHECK(a2.atoms() == std::vector<Sequence>{Sequence({0, 2}), Sequence({1, 0})});

    const auto z3 = FinGenAbelianGroup::cyclic(3);
    const ClassSet c3(z3, {z3.element({1}), z3.element({2})}, {"g", "2g"});
    const auto a3 = enumerate_atoms(c3);
    // Brute force over length <= |G| = 3.
    const auto brute = oracle_atoms(c3, 3);
    CHECK(brute == std::vector<Sequence>{Sequence({0, 3}), Sequence({1, 1}), Sequence({3, 0})});
    CHECK(a3.atoms() == brute);
    CHECK(a3.certificate().slack_columns == 1);
}

TEST_CASE("atom length bound") {
    const auto z6 = FinGenAbelianGroup::cyclic(6);
    CHECK(atom_length_bound(ClassSet(z6, {z6.element({1})})) == 6);
    const FinGenAbelianGroup v4(0, {2, 2});
    CHECK(atom_length_bound(ClassSet(v4, {v4.element({1, 0})})) == 4);
    CHECK_THROWS_AS(atom_length_bound(r1_classes(2)), InfiniteGroupNoBound);
    const FinGenAbelianGroup mixed(1, {3});
    CHECK(atom_length_bound(ClassSet(mixed, {mixed.element({0, 1})})) == 3);
}

TEST_CASE("atom enumeration matches brute force for |G| <= 8") {
    for (long n = 1; n <= 8; ++n) {
        for (const auto& g : abelian_groups_of_order(n)) {
            const auto elems = g.elements();
            const std::size_t m = elems.size();
            for (unsigned mask = 1; mask < (1u << m); ++mask) {
                std::vector<GroupElement> cls;
                for (std::size_t i = 0; i < m; ++i)
                    if (mask & (1u << i)) cls.push_back(elems[i]);
                const ClassSet c(g, cls);
                const auto atoms = enumerate_atoms(c);
                // Cheaper oracle filter here; the full sub-vector oracle runs on small masks.
                std::vector<Sequence> brute;
                std::vector<Exponent> e(c.size(), 0);
                const long bound = atom_length_bound(c).get_si();
                std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
                    if (i == c.size()) {
                        Sequence s(e);
                        if (is_minimal_zero_sum(c, s)) brute.push_back(s);
                        return;
                    }
                    for (long k = 0; k <= left; ++k) {
                        e[i] = k;
                        rec(i + 1, left - k);
                    }
                    e[i] = 0;
                };
                rec(0, bound);
                std::sort(brute.begin(), brute.end());
                CHECK_MESSAGE(atoms.atoms() == brute, g.describe(), " mask ", mask);
                for (const auto& a : atoms.atoms()) CHECK(is_minimal_zero_sum(c, a));
                if (c.size() <= 3)
                    for (const auto& a : atoms.atoms()) CHECK(oracle_minimal(c, a));
            }
        }
    }
}

TEST_CASE("minimality agrees with the sub-vector oracle") {
    std::mt19937 rng(3);
    const FinGenAbelianGroup g(0, {2, 4});
    const auto elems = g.elements();
    const ClassSet c(g, elems);
    std::uniform_int_distribution<int> ex(0, 2);
    for (int t = 0; t < 400; ++t) {
        std::vector<Exponent> e(c.size(), 0);
        for (int k = 0; k < 3; ++k) e[rng() % c.size()] = ex(rng);
        const Sequence s(e);
        CHECK(is_minimal_zero_sum(c, s) == oracle_minimal(c, s));
    }
}

TEST_CASE("factorizations of UV in the R1 class set") {
    const auto c = r1_classes(2);
    const auto atoms = enumerate_atoms(c);
    const auto u = seq(c, {{"e1", 1}, {"e2", 1}, {"-f", 1}});
    const auto v = seq(c, {{"-e1", 1}, {"-e2", 1}, {"f", 1}});
    const auto fs = factorizations(u * v, atoms);
    REQUIRE(fs.size() == 2);
    for (const auto& f : fs) CHECK(f.product(atoms) == u * v);
    CHECK(length_set(u * v, atoms) == std::set<std::size_t>{2, 3});
    CHECK(elasticity(u * v, atoms) == mpq_class(3, 2));
    CHECK(length_set(u, atoms) == std::set<std::size_t>{1});
    CHECK(elasticity(u, atoms) == 1);
    CHECK(factorizations(u, atoms).size() == 1);
    CHECK(factorizations(Sequence::empty(c.size()), atoms) == std::vector<Factorization>{Factorization{}});
    CHECK_THROWS_AS(factorizations(seq(c, {{"e1", 1}}), atoms), NotZeroSum);

    FactorOptions par;
    par.parallel = true;
    CHECK(factorizations(u * v, atoms, par) == fs);

    FactorOptions tiny;
    tiny.budget = 2;
    CHECK_THROWS_AS(factorizations(u * v, atoms, tiny), BudgetExceeded);
}

TEST_CASE("factorizations over Z/3 and Z") {
    const auto z3 = FinGenAbelianGroup::cyclic(3);
    const ClassSet c3(z3, {z3.element({1}), z3.element({2})}, {"g", "2g"});
    const auto a3 = enumerate_atoms(c3);
    const Sequence t({1, 1});
    const auto fs = factorizations(t.pow(3), a3);
    const Factorization ttt{{a3.require_index(t), a3.require_index(t), a3.require_index(t)}};
    Factorization split{{a3.require_index(Sequence({3, 0})), a3.require_index(Sequence({0, 3}))}};
    std::sort(split.atoms.begin(), split.atoms.end());
    CHECK(std::find(fs.begin(), fs.end(), ttt) != fs.end());
    CHECK(std::find(fs.begin(), fs.end(), split) != fs.end());

    const auto z = FinGenAbelianGroup::free(1);
    const ClassSet cz(z, {z.element({-1}), z.element({-2}), z.element({3})}, {"-g", "-2g", "3g"});
    const auto az = enumerate_atoms(cz);
    const Sequence s({3, 0, 1}), s2({0, 3, 2});
    const auto ls = length_set(s * s2, az);
    CHECK(ls.count(2) == 1);
    CHECK(ls.count(3) == 1);
}

TEST_CASE("factorization invariants on random atom pairs") {
    std::mt19937 rng(5);
    const FinGenAbelianGroup g(0, {2, 4});
    const ClassSet c(g, g.elements());
    const auto atoms = enumerate_atoms(c);
    std::uniform_int_distribution<std::size_t> pick(0, atoms.size() - 1);
    for (int t = 0; t < 60; ++t) {
        const std::size_t i = pick(rng), j = pick(rng);
        const auto b = atoms[i] * atoms[j];
        const auto fs = factorizations(b, atoms);
        Factorization pair{{std::min(i, j), std::max(i, j)}};
        CHECK(std::find(fs.begin(), fs.end(), pair) != fs.end());
        for (const auto& f : fs) {
            CHECK(f.length() >= 2);
            CHECK(f.product(atoms) == b);
        }
        CHECK(std::adjacent_find(fs.begin(), fs.end()) == fs.end());
    }
}
