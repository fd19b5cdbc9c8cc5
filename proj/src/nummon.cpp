#include "absirr/nummon.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "absirr/errors.hpp"

namespace absirr {

NumericalMonoid NumericalMonoid::interval(std::int64_t n) {
    if (n < 1) throw InvalidArgument("M_n requires n >= 1");
    NumericalMonoid m;
    m.kind_ = Kind::Interval;
    m.n_ = n;
    return m;
}

NumericalMonoid NumericalMonoid::generated(std::vector<std::int64_t> generators) {
    if (generators.empty()) throw InvalidArgument("a numerical monoid needs at least one generator");
    std::int64_t g = 0;
    for (auto x : generators) {
        if (x <= 0) throw InvalidArgument("generators must be positive");
        g = std::gcd(g, x);
    }
    if (g != 1) throw InvalidArgument("generators must have gcd 1");
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    NumericalMonoid m;
    m.kind_ = Kind::Generated;
    m.gens_ = std::move(generators);
    return m;
}

std::int64_t NumericalMonoid::n() const {
    if (kind_ != Kind::Interval) throw InvalidArgument("not an interval monoid");
    return n_;
}

const std::vector<std::int64_t>& NumericalMonoid::generators() const {
    if (kind_ != Kind::Generated) throw InvalidArgument("not a generated monoid");
    return gens_;
}

std::int64_t NumericalMonoid::conductor_bound() const noexcept {
    if (kind_ == Kind::Interval) return n_ == 1 ? 0 : n_;
    // Schur's bound: (min - 1)(max - 1) for coprime generators.
    return (gens_.front() - 1) * (gens_.back() - 1);
}

bool NumericalMonoid::contains(std::int64_t x) const {
    if (x < 0) return false;
    if (x == 0) return true;
    if (kind_ == Kind::Interval) return x >= n_;
    if (x >= conductor_bound()) return true;
    std::vector<char> reach(static_cast<std::size_t>(x) + 1, 0);
    reach[0] = 1;
    for (std::int64_t v = 1; v <= x; ++v)
        for (auto g : gens_)
            if (g <= v && reach[v - g]) {
                reach[v] = 1;
                break;
            }
    return reach[x];
}

std::string NumericalMonoid::describe() const {
    if (kind_ == Kind::Interval) return "M_" + std::to_string(n_);
    std::string s = "<";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? "," : "") + std::to_string(gens_[i]);
    return s + ">";
}

std::vector<std::int64_t> nm_atoms(const NumericalMonoid& m) {
    std::vector<std::int64_t> out;
    if (m.kind() == NumericalMonoid::Kind::Interval) {
        for (std::int64_t a = m.n(); a <= 2 * m.n() - 1; ++a) out.push_back(a);
        return out;
    }
    // A generator is minimal iff it is not a sum of smaller generators.
    const auto& gens = m.generators();
    std::vector<char> reach(static_cast<std::size_t>(gens.back()) + 1, 0);
    reach[0] = 1;
    std::size_t used = 0;
    for (std::int64_t v = 1; v <= gens.back(); ++v) {
        while (used < gens.size() && gens[used] < v) ++used;
        bool r = false;
        for (std::size_t i = 0; i < used && !r; ++i) r = reach[v - gens[i]];
        if (used < gens.size() && gens[used] == v && !r) out.push_back(v);
        reach[v] = r || (used < gens.size() && gens[used] == v);
    }
    return out;
}

std::vector<NmFactorization> nm_factorizations(const NumericalMonoid& m, std::int64_t x, std::uint64_t budget) {
    if (!m.contains(x)) throw NotMember(std::to_string(x) + " is not in " + m.describe());
    const auto atoms = nm_atoms(m);
    std::vector<NmFactorization> out;
    NmFactorization cur;
    std::uint64_t nodes = 0;
    std::function<void(std::size_t, std::int64_t)> dfs = [&](std::size_t from, std::int64_t rest) {
        if (++nodes > budget) throw BudgetExceeded("numerical monoid factorization", static_cast<long long>(budget));
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (std::size_t i = from; i < atoms.size() && atoms[i] <= rest; ++i) {
            cur.push_back(atoms[i]);
            dfs(i, rest - atoms[i]);
            cur.pop_back();
        }
    };
    dfs(0, x);
    return out;
}

std::set<std::size_t> nm_length_set(const NumericalMonoid& m, std::int64_t x, std::uint64_t budget) {
    std::set<std::size_t> out;
    for (const auto& f : nm_factorizations(m, x, budget)) out.insert(f.size());
    return out;
}

NmWitness nm_witness_non_absirred(const NumericalMonoid& m, std::int64_t atom) {
    if (m.kind() != NumericalMonoid::Kind::Interval)
        throw InvalidArgument("witness construction is defined for interval monoids M_n");
    const auto atoms = nm_atoms(m);
    if (!std::binary_search(atoms.begin(), atoms.end(), atom)) throw AtomNotInSet();
    if (m.n() == 1) throw NoWitness("M_1 is factorial: every atom is prime");
    NmWitness w;
    w.m = atom;
    w.t = atoms.front() == atom ? atoms[1] : atoms.front();
    w.element = w.m * w.t;
    w.trivial.assign(static_cast<std::size_t>(w.t), w.m);
    w.other.assign(static_cast<std::size_t>(w.m), w.t);
    std::sort(w.other.begin(), w.other.end());
    const auto sum = [](const NmFactorization& f) { return std::accumulate(f.begin(), f.end(), std::int64_t{0}); };
    if (sum(w.trivial) != w.element || sum(w.other) != w.element || w.trivial == w.other)
        throw Error("internal: numerical monoid witness failed verification");
    return w;
}

}  // namespace absirr
