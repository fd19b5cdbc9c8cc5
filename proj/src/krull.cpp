#include "absirr/krull.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "absirr/errors.hpp"

namespace absirr {

KrullSpec::KrullSpec(ClassSet classes, std::vector<Multiplicity> mult)
    : classes_(std::move(classes)), mult_(std::move(mult)) {
    if (mult_.size() != classes_.size()) throw DimensionMismatch("one multiplicity per class required");
    if (classes_.has_repeated_values()) throw InvalidArgument("Krull spec classes must be distinct");
    for (const auto& m : mult_)
        if (m.count && *m.count == 0) throw InvalidArgument("every class in G0 holds at least one prime divisor");
}

KrullSpec::KrullSpec(ClassSet classes)
    : KrullSpec(classes, std::vector<Multiplicity>(classes.size(), Multiplicity::finite(1))) {}

std::vector<std::size_t> KrullSpec::g1() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < mult_.size(); ++i)
        if (mult_[i].is_one()) out.push_back(i);
    return out;
}

namespace {

KrullSpec r_spec(std::size_t n, bool with_zero) {
    if (n < 1) throw InvalidArgument("rank must be positive");
    const auto g = FinGenAbelianGroup::free(n);
    std::vector<GroupElement> cls;
    std::vector<std::string> labels;
    if (with_zero) {
        cls.push_back(g.zero());
        labels.push_back("0");
    }
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
    return KrullSpec(ClassSet(g, std::move(cls), std::move(labels)));
}

bool support_within(const Sequence& inner, const Sequence& outer) {
    for (std::size_t i = 0; i < inner.size(); ++i)
        if (inner[i] > 0 && outer[i] == 0) return false;
    return true;
}

Factorization repeated(std::size_t atom, Exponent n) {
    return Factorization{std::vector<std::size_t>(static_cast<std::size_t>(n), atom)};
}

}  // namespace

KrullSpec r1_spec(std::size_t n) { return r_spec(n, false); }
KrullSpec r2_spec(std::size_t n) { return r_spec(n, true); }

// ---------------------------------------------------------------------------

bool is_absirred_support(const Sequence& u, const AtomSet& atoms) {
    const std::size_t idx = atoms.require_index(u);
    for (std::size_t j = 0; j < atoms.size(); ++j)
        if (j != idx && support_within(atoms[j], u)) return false;
    return true;
}

bool is_absirred_kernel(const FinGenAbelianGroup& group, const std::vector<GroupElement>& family) {
    if (family.empty()) throw InvalidArgument("family must be nonempty");
    if (!positive_kernel_vector(group, family)) return false;
    // Subfamilies of Z-independent families are independent, so the maximal
    // proper ones suffice.
    for (std::size_t skip = 0; skip < family.size(); ++skip) {
        std::vector<GroupElement> sub;
        for (std::size_t i = 0; i < family.size(); ++i)
            if (i != skip) sub.push_back(family[i]);
        if (!is_z_independent(group, sub)) return false;
    }
    return true;
}

std::optional<NonAbsWitness> witness_non_absirred(const Sequence& u, const AtomSet& atoms,
                                                  const FactorOptions& options) {
    const std::size_t idx = atoms.require_index(u);
    for (std::size_t j = 0; j < atoms.size(); ++j) {
        if (j == idx || !support_within(atoms[j], u)) continue;
        const Sequence& v = atoms[j];
        // Smallest n with V | U^n.
        Exponent n = 1;
        for (std::size_t g = 0; g < v.size(); ++g)
            if (v[g] > 0) n = std::max(n, (v[g] + u[g] - 1) / u[g]);
        const Sequence cofactor = u.pow(n).quotient(v);
        FactorOptions first = options;
        first.max_results = 1;
        first.parallel = false;
        const auto fs = factorizations(cofactor, atoms, first);
        if (fs.empty()) throw std::logic_error("zero-sum cofactor without a factorization");
        Factorization other = fs.front();
        other.atoms.push_back(j);
        std::sort(other.atoms.begin(), other.atoms.end());
        return NonAbsWitness{n, idx, j, repeated(idx, n), std::move(other)};
    }
    return std::nullopt;
}

bool brute_force_absirred(const Sequence& u, const AtomSet& atoms, Exponent n_max, const FactorOptions& options) {
    if (n_max < 1) throw InvalidArgument("n_max must be at least 1");
    atoms.require_index(u);
    FactorOptions two = options;
    two.max_results = 2;
    two.parallel = false;
    for (Exponent n = 1; n <= n_max; ++n)
        if (factorizations(u.pow(n), atoms, two).size() != 1) return false;
    return true;
}

// ---------------------------------------------------------------------------

AllAbsirredResult all_irreducibles_absirred(const KrullSpec& spec, const CompletionOptions& options) {
    AllAbsirredResult r{enumerate_atoms(spec.class_set(), options)};
    const auto& atoms = r.atoms;
    for (std::size_t i = 0; i < atoms.size(); ++i)
        if (!is_absirred_support(atoms[i], atoms)) {
            r.holds = false;
            r.failure = AllAbsirredResult::Failure::NotAbsolutelyIrreducible;
            r.failing_atom = i;
            return r;
        }
    for (std::size_t i = 0; i < atoms.size(); ++i)
        for (std::size_t g = 0; g < atoms[i].size(); ++g)
            if (atoms[i][g] > 1 && !spec.in_g1(g)) {
                r.holds = false;
                r.failure = AllAbsirredResult::Failure::RepeatedClassOutsideG1;
                r.failing_atom = i;
                r.failing_class = g;
                return r;
            }
    return r;
}

LiftedWitness lift_repeated_class_witness(const KrullSpec& spec, const AllAbsirredResult& result,
                                          const FactorOptions& options) {
    if (result.failure != AllAbsirredResult::Failure::RepeatedClassOutsideG1)
        throw InvalidArgument("no multiplicity-condition failure to lift");
    const auto& c = spec.class_set();
    const Sequence& u = result.atoms[*result.failing_atom];
    const std::size_t g = *result.failing_class;

    std::vector<GroupElement> values;
    std::vector<std::string> labels;
    std::vector<Exponent> a_exp, b_exp;
    for (auto i : u.support()) {
        values.push_back(c[i]);
        labels.push_back(c.label(i));
        a_exp.push_back(u[i]);
        b_exp.push_back(i == g ? u[i] - 1 : u[i]);
    }
    values.push_back(c[g]);
    labels.push_back(c.label(g) + "'");
    a_exp.push_back(0);
    b_exp.push_back(1);

    ClassSet divisors = ClassSet::with_repeated_values(c.group(), std::move(values), std::move(labels));
    Sequence a(std::move(a_exp)), b(std::move(b_exp));
    AtomSet divisor_atoms = enumerate_atoms(divisors);

    if (!a.divides(b.pow(2))) throw std::logic_error("lifted witness: a does not divide b^2");
    if (!divisor_atoms.index_of(a) || !divisor_atoms.index_of(b))
        throw std::logic_error("lifted witness: a or b is not irreducible");
    auto w = witness_non_absirred(b, divisor_atoms, options);
    if (!w) throw std::logic_error("lifted witness: b is absolutely irreducible");
    return LiftedWitness{*result.failing_atom, g, std::move(divisors), std::move(a), std::move(b),
                         std::move(divisor_atoms), std::move(*w)};
}

// ---------------------------------------------------------------------------

BgResult check_bg_all_absirred(const FinGenAbelianGroup& group) {
    if (!group.is_finite()) {
        const auto g = group.basis_element(0);
        std::vector<GroupElement> cls = {group.scale(-1, g), group.scale(-2, g), group.scale(3, g)};
        ClassSet c(group, std::move(cls), {"-g", "-2g", "3g"});
        // S = (3g)(-g)^3, S' = (3g)^2(-2g)^3, T = (-g)(-2g)(3g); S S' = T^3.
        return {false, BgWitness{BgWitness::Kind::InfiniteOrder, std::move(c),
                                 {Sequence({3, 0, 1}), Sequence({0, 3, 2})}, Sequence({1, 1, 1}), 3}};
    }
    if (*group.cardinality() <= 2) return {true, std::nullopt};

    const auto elems = group.elements();
    for (const auto& g : elems) {
        const auto n = *order(group, g);
        if (n < 3) continue;
        ClassSet c(group, {g, group.negate(g)}, {"g", "-g"});
        const Exponent k = n.get_si();
        // S = g^n, S' = (-g)^n, T = g(-g); S S' = T^n.
        return {false, BgWitness{BgWitness::Kind::OrderAtLeastThree, std::move(c),
                                 {Sequence({k, 0}), Sequence({0, k})}, Sequence({1, 1}), k}};
    }
    // Elementary abelian 2-group of order >= 4.
    std::optional<GroupElement> g, h;
    for (const auto& x : elems) {
        if (x.is_zero()) continue;
        if (!g)
            g = x;
        else if (x != *g) {
            h = x;
            break;
        }
    }
    ClassSet c(group, {*g, *h, group.add(*g, *h)}, {"g", "h", "g+h"});
    // S = g^2, S' = h^2, S'' = (g+h)^2, T = g h (g+h); S S' S'' = T^2.
    return {false, BgWitness{BgWitness::Kind::TwoIndependentInvolutions, std::move(c),
                             {Sequence({2, 0, 0}), Sequence({0, 2, 0}), Sequence({0, 0, 2})}, Sequence({1, 1, 1}), 2}};
}

bool verify_bg_witness(const BgWitness& w) {
    const auto& c = w.classes;
    if (!is_minimal_zero_sum(c, w.t)) return false;
    Sequence prod = Sequence::empty(c.size());
    for (const auto& s : w.factors) {
        if (!is_minimal_zero_sum(c, s) || s == w.t) return false;
        prod = prod * s;
    }
    return prod == w.t.pow(w.n);
}

// ---------------------------------------------------------------------------

bool has_prime_element(const KrullSpec& spec) {
    const auto& cls = spec.class_set().classes();
    return std::any_of(cls.begin(), cls.end(), [](const GroupElement& g) { return g.is_zero(); });
}

namespace {

constexpr std::uint64_t kMultCap = 2;

struct Symbol {
    std::size_t cls;
    std::uint64_t copy;
};

std::vector<Symbol> divisor_symbols(const KrullSpec& spec) {
    std::vector<Symbol> out;
    for (std::size_t i = 0; i < spec.class_set().size(); ++i)
        for (std::uint64_t k = 0; k < spec.mult(i).capped(kMultCap); ++k) out.push_back({i, k});
    return out;
}

// Visits families in order of size, then lexicographically; stops when f returns true.
void for_each_family(const KrullSpec& spec, std::size_t bound,
                     const std::function<bool(const DivisorFamily&)>& f) {
    const auto symbols = divisor_symbols(spec);
    const auto& c = spec.class_set();
    std::vector<std::size_t> pick;
    bool stop = false;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t size) {
        if (stop) return;
        if (pick.size() == size) {
            if (size == 1 && c[symbols[pick[0]].cls].is_zero()) return;  // a prime
            std::vector<GroupElement> values;
            for (auto p : pick) values.push_back(c[symbols[p].cls]);
            if (!is_absirred_kernel(c.group(), values)) return;
            DivisorFamily fam;
            for (auto p : pick) {
                fam.classes.push_back(symbols[p].cls);
                fam.copies.push_back(symbols[p].copy);
            }
            fam.kernel_vector = *positive_kernel_vector(c.group(), values);
            stop = f(fam);
            return;
        }
        for (std::size_t i = start; i < symbols.size() && !stop; ++i) {
            pick.push_back(i);
            rec(i + 1, size);
            pick.pop_back();
        }
    };
    for (std::size_t size = 1; size <= std::min(bound, symbols.size()) && !stop; ++size) rec(0, size);
}

}  // namespace

FamilySearch exists_absirred_nonprime(const KrullSpec& spec, std::size_t support_bound) {
    if (support_bound < 1) throw InvalidArgument("support bound must be at least 1");
    FamilySearch r;
    r.support_bound = support_bound;
    r.mult_cap = kMultCap;
    r.exhaustive = support_bound >= divisor_symbols(spec).size();
    for_each_family(spec, support_bound, [&](const DivisorFamily& fam) {
        r.found = true;
        r.witness = fam;
        return true;
    });
    return r;
}

std::vector<DivisorFamily> absirred_families(const KrullSpec& spec, std::size_t support_bound) {
    std::vector<DivisorFamily> out;
    for_each_family(spec, support_bound, [&](const DivisorFamily& fam) {
        out.push_back(fam);
        return false;
    });
    return out;
}

// ---------------------------------------------------------------------------

std::string presence_symbol(Presence p) {
    switch (p) {
        case Presence::Present: return "+";
        case Presence::Absent: return "-";
        case Presence::NotFoundWithinBound: return "-?";
        case Presence::Undecided: return "?";
    }
    return "?";
}

std::string presence_name(Presence p) {
    switch (p) {
        case Presence::Present: return "present";
        case Presence::Absent: return "absent";
        case Presence::NotFoundWithinBound: return "not-found-within-bound";
        case Presence::Undecided: return "undecided";
    }
    return "undecided";
}

ScenarioReport classify_scenario(const KrullSpec& spec, const ScenarioBounds& bounds) {
    ScenarioReport r;
    r.bounds = bounds;
    r.mult_cap = kMultCap;
    for (const auto& m : spec.multiplicities())
        if (m.is_infinite() || *m.count > kMultCap) r.mult_capped = true;

    r.has_prime = has_prime_element(spec) ? Presence::Present : Presence::Absent;

    const auto search = exists_absirred_nonprime(spec, bounds.support_bound);
    if (search.found) {
        r.has_absirred_nonprime = Presence::Present;
        r.absirred_nonprime_witness = search.witness;
    } else {
        r.has_absirred_nonprime = search.exhaustive ? Presence::Absent : Presence::NotFoundWithinBound;
    }

    try {
        const auto all = all_irreducibles_absirred(spec, bounds.completion);
        if (all.holds) {
            r.has_nonabsirred = Presence::Absent;
        } else {
            r.has_nonabsirred = Presence::Present;
            try {
                if (all.failure == AllAbsirredResult::Failure::NotAbsolutelyIrreducible)
                    r.block_witness = witness_non_absirred(all.atoms[*all.failing_atom], all.atoms, bounds.factor);
                else
                    r.lifted_witness = lift_repeated_class_witness(spec, all, bounds.factor);
            } catch (const BudgetExceeded& e) {
                r.notes.push_back(std::string("witness construction: ") + e.what());
            }
        }
    } catch (const BudgetExceeded& e) {
        r.has_nonabsirred = Presence::Undecided;
        r.notes.push_back(std::string("atom enumeration: ") + e.what());
    }

    r.row_label = "(" + presence_symbol(r.has_nonabsirred) + ", " + presence_symbol(r.has_absirred_nonprime) +
                  ", " + presence_symbol(r.has_prime) + ")";
    return r;
}

AngermuellerCheck angermueller_check(const KrullSpec& spec, const ScenarioBounds& bounds) {
    AngermuellerCheck r;
    r.absirred_are_prime = !exists_absirred_nonprime(spec, bounds.support_bound).found;
    const auto& cls = spec.class_set().classes();
    r.factorial = std::all_of(cls.begin(), cls.end(), [](const GroupElement& g) { return g.is_zero(); });
    return r;
}

}  // namespace absirr
