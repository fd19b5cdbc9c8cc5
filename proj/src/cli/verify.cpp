#include "absirr/cli/verify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "absirr/errors.hpp"
#include "absirr/ivpoly.hpp"
#include "absirr/krull.hpp"
#include "absirr/nummon.hpp"
#include "absirr/quadratic.hpp"

namespace absirr::cli {

namespace {

std::string set_str(const std::vector<std::string>& items) {
    std::vector<std::string> v = items;
    std::sort(v.begin(), v.end());
    std::string out = "{";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "; " : "") + v[i];
    return out + "}";
}

template <class T>
std::string num_set(const std::set<T>& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& x : s) {
        out += (first ? "" : ", ") + std::to_string(x);
        first = false;
    }
    return out + "}";
}

std::string tf(bool b) { return b ? "true" : "false"; }

class Suite {
public:
    explicit Suite(const CommandOptions& opts) {
        if (opts.budget) {
            completion_.budget = *opts.budget;
            factor_.budget = *opts.budget;
        }
        factor_.parallel = opts.parallel;
    }

    void check(const std::string& group, const std::string& name, const std::string& expected,
               const std::function<std::string()>& actual) {
        std::string got;
        try {
            got = actual();
        } catch (const std::exception& e) {
            got = std::string("error: ") + e.what();
        }
        checks_.push_back({group, name, expected, got});
    }

    void block_monoid();
    void krull();
    void numerical_monoids();
    void int_z();
    void r_p();
    void quadratic();

    std::vector<VerifyCheck> take() { return std::move(checks_); }

private:
    CompletionOptions completion_;
    FactorOptions factor_;
    std::vector<VerifyCheck> checks_;
};

KrullSpec z2_spec(Multiplicity mult_g) {
    const auto g = FinGenAbelianGroup::cyclic(2);
    return KrullSpec(ClassSet(g, {g.element({0}), g.element({1})}, {"0", "g"}), {Multiplicity::finite(1), mult_g});
}

KrullSpec trivial_spec() {
    const FinGenAbelianGroup g;
    return KrullSpec(ClassSet(g, {g.zero()}, {"0"}));
}

void Suite::block_monoid() {
    for (std::size_t n = 2; n <= 4; ++n) {
        const auto spec = r1_spec(n);
        const auto& c = spec.class_set();
        std::vector<std::string> expected;
        std::string pos, neg;
        for (std::size_t i = 1; i <= n; ++i) {
            const auto k = std::to_string(i);
            expected.push_back("e" + k + " -e" + k);
            pos += "e" + k + " ";
            neg += "-e" + k + " ";
        }
        expected.push_back("f -f");
        expected.push_back(pos + "-f");
        expected.push_back(neg + "f");
        const std::string tag = "R1 n=" + std::to_string(n);
        check("block-monoid", tag + " atoms", set_str(expected), [&] {
            std::vector<std::string> got;
            const auto atoms = enumerate_atoms(c, completion_);
            for (const auto& a : atoms.atoms()) got.push_back(format_sequence(c, a));
            return set_str(got);
        });
        check("block-monoid", tag + " L(UV)", "{2, " + std::to_string(n + 1) + "}", [&] {
            const auto atoms = enumerate_atoms(c, completion_);
            Sequence uv = Sequence::empty(c.size());
            for (std::size_t i = 0; i < c.size(); ++i) uv = uv * Sequence::single(c.size(), i);
            return num_set(length_set(uv, atoms, factor_));
        });
    }

    for (long n : {1, 2, 3, 4}) {
        check("block-monoid", "B(Z/" + std::to_string(n) + ") all atoms abs-irred", tf(n <= 2),
              [&] { return tf(check_bg_all_absirred(FinGenAbelianGroup::cyclic(n)).all_absirred); });
    }
    check("block-monoid", "B(Z/3) witness S S' = T^3", "true", [] {
        const auto r = check_bg_all_absirred(FinGenAbelianGroup::cyclic(3));
        return tf(r.witness && r.witness->n == 3 && verify_bg_witness(*r.witness));
    });
    check("block-monoid", "B(Z/2 + Z/2) witness g^2 h^2 (g+h)^2 = T^2", "true", [] {
        const auto r = check_bg_all_absirred(FinGenAbelianGroup(0, {2, 2}));
        return tf(r.witness && r.witness->n == 2 &&
                  r.witness->kind == BgWitness::Kind::TwoIndependentInvolutions && verify_bg_witness(*r.witness));
    });
    check("block-monoid", "Z subset {-g,-2g,3g} witness S S' = T^3", "true", [] {
        const auto r = check_bg_all_absirred(FinGenAbelianGroup::free(1));
        return tf(r.witness && r.witness->n == 3 && r.witness->kind == BgWitness::Kind::InfiniteOrder &&
                  verify_bg_witness(*r.witness));
    });
}

void Suite::krull() {
    ScenarioBounds b;
    b.completion = completion_;
    b.factor = factor_;
    check("krull", "R1 row", "(-, +, -)", [&] { return classify_scenario(r1_spec(2), b).row_label; });
    check("krull", "R2 row", "(-, +, +)", [&] { return classify_scenario(r2_spec(2), b).row_label; });
    check("krull", "Z/2 G0={0,g} mult(g)=2 row", "(+, +, +)",
          [&] { return classify_scenario(z2_spec(Multiplicity::finite(2)), b).row_label; });
    check("krull", "trivial group row", "(-, -, +)", [&] { return classify_scenario(trivial_spec(), b).row_label; });
    check("krull", "Z/2 mult(g)=2 lifted witness a | b^2", "true", [&] {
        const auto spec = z2_spec(Multiplicity::finite(2));
        const auto all = all_irreducibles_absirred(spec, completion_);
        const auto w = lift_repeated_class_witness(spec, all, factor_);
        return tf(w.a.divides(w.b.pow(2)) && !brute_force_absirred(w.b, w.divisor_atoms, 2, factor_));
    });
    check("krull", "R1 abs-irred nonprime e1 e2 -f", "true", [] {
        const auto spec = r1_spec(2);
        const auto atoms = enumerate_atoms(spec.class_set());
        const auto& c = spec.class_set();
        Sequence u = Sequence::empty(c.size());
        for (const char* l : {"e1", "e2", "-f"}) u = u * Sequence::single(c.size(), *c.index_of_label(l));
        return tf(is_absirred_support(u, atoms) && !has_prime_element(spec));
    });
    for (const auto& [name, spec] : std::vector<std::pair<std::string, KrullSpec>>{
             {"trivial", trivial_spec()}, {"R1", r1_spec(2)}, {"Z/2 mult(g)=2", z2_spec(Multiplicity::finite(2))}}) {
        const bool factorial = name == "trivial";
        check("krull", "Angermueller " + name, tf(factorial) + " <=> " + tf(factorial), [&, spec = spec] {
            const auto a = angermueller_check(spec, b);
            return tf(a.absirred_are_prime) + " <=> " + tf(a.factorial);
        });
    }
}

void Suite::numerical_monoids() {
    check("nummon", "M2 atoms", "{2, 3}", [] {
        const auto a = nm_atoms(NumericalMonoid::interval(2));
        return num_set(std::set<std::int64_t>(a.begin(), a.end()));
    });
    check("nummon", "M2 L(6)", "{2, 3}", [] { return num_set(nm_length_set(NumericalMonoid::interval(2), 6)); });
    for (std::int64_t n = 2; n <= 6; ++n) {
        check("nummon", "M" + std::to_string(n) + " every atom has a witness", "true", [n] {
            const auto m = NumericalMonoid::interval(n);
            for (auto a : nm_atoms(m)) {
                const auto w = nm_witness_non_absirred(m, a);
                const auto all = nm_factorizations(m, w.element);
                if (std::find(all.begin(), all.end(), w.other) == all.end()) return tf(false);
            }
            return tf(true);
        });
    }
    check("nummon", "M1 factorial up to 30", "true", [] {
        const auto m = NumericalMonoid::interval(1);
        for (std::int64_t x = 1; x <= 30; ++x)
            if (nm_factorizations(m, x).size() != 1) return tf(false);
        return tf(true);
    });
}

void Suite::int_z() {
    const RatPoly x = RatPoly::x();
    check("int-z", "x(x^2+3)/2 integer-valued", "true", [] {
        return tf(is_integer_valued(intz_square_split_witness().f));
    });
    check("int-z", "f^2 = x^2(x^2+3)/4 * (x^2+3) essentially different", "true",
          [] { return tf(intz_square_split_witness().verified()); });
    check("int-z", "2 | x(x-1), 2 does not divide x or x-1", "true", [&] {
        const RatPoly two = RatPoly::constant(2);
        const RatPoly xm1 = x - RatPoly::constant(1);
        return tf(divides_in_intz(two, x * xm1) && !divides_in_intz(two, x) && !divides_in_intz(two, xm1));
    });
    check("int-z", "no-prime witness G=x p=2", "true", [&] { return tf(verify_no_prime_witness(x, 2).verified()); });
    check("int-z", "no-prime witness G=x^2+1 p=5", "true", [&] {
        return tf(verify_no_prime_witness(x * x + RatPoly::constant(1), 5).verified());
    });
    check("int-z", "constant 2 is not prime", "true", [] { return tf(verify_constant_no_prime_witness(2).verified()); });
    for (long p : {2, 3, 5})
        check("int-z", "v_" + std::to_string(p) + "(" + std::to_string(p * p) + "!)", std::to_string(p + 1),
              [p] { return legendre_vp_factorial(p, p * p).get_str(); });
}

void Suite::r_p() {
    for (long p : {2, 3}) {
        const std::string tag = "R(" + std::to_string(p) + ")";
        check("r-p", tag + " (x-r_1)...(x-r_p)/p abs-irred non-prime witness", "true",
              [p] { return tf(rp_nonprime_witness(p).verified()); });
        check("r-p", tag + " f^2 splits differently", "true", [p] { return tf(rp_square_split_witness(p).verified()); });
    }
}

void Suite::quadratic() {
    const QuadRing r(-14);
    const QuadInt two{2, 0}, s{0, 1};
    check("quadratic", "Z[sqrt(-14)] norm 2 elements", "0", [&] { return std::to_string(elements_of_norm(r, 2).size()); });
    check("quadratic", "Z[sqrt(-14)] 2 irreducible", "true", [&] { return tf(quad_is_irreducible(r, two)); });
    check("quadratic", "Z[sqrt(-14)] 2 | sqrt(-14)^2", "non-prime-witness sqrt(-14) sqrt(-14)", [&] {
        const auto w = quad_is_prime_witness(r, two);
        std::string out = prime_report_kind_name(w.kind);
        if (w.x) out += " " + r.format(*w.x) + " " + r.format(*w.y);
        return out;
    });
    check("quadratic", "Z[sqrt(-14)] 2 abs-irred up to n=3", "true",
          [&] { return tf(quad_brute_absirred(r, two, 3).absolutely_irreducible); });
    check("quadratic", "Z[sqrt(-14)] sqrt(-14)^2 = -1 * 2 * 7", "-1 * 2 * 7", [&] {
        const auto w = quad_brute_absirred(r, s, 2);
        if (!w.witness) return std::string("none");
        std::string out = r.format(w.witness->unit);
        for (const auto& f : w.witness->factors) out += " * " + r.format(f);
        return out;
    });
    check("quadratic", "Z[sqrt(-14)] 11 prime", "prime-by-euler",
          [&] { return prime_report_kind_name(quad_is_prime_witness(r, {11, 0}).kind); });
    check("quadratic", "Z[sqrt(-5)] half-factorial up to norm 200", "true",
          [] { return tf(quad_half_factorial_check(QuadRing(-5), 200).holds); });
}

}  // namespace

std::vector<VerifyCheck> run_verify_suite(const CommandOptions& opts) {
    Suite s(opts);
    s.block_monoid();
    s.krull();
    s.numerical_monoids();
    s.int_z();
    s.r_p();
    s.quadratic();
    return s.take();
}

}  // namespace absirr::cli
