#include "absirr/zsm.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <sstream>
#include <unordered_set>

#include "absirr/errors.hpp"

namespace absirr {

// ---------------------------------------------------------------------------
// ClassSet

namespace {

std::string default_label(const GroupElement& g) {
    std::ostringstream os;
    os << g;
    return os.str();
}

std::int64_t to_small(const Integer& x) {
    if (!x.fits_slong_p()) throw ArithmeticOverflow("coordinate exceeds 64 bits: " + x.get_str());
    return x.get_si();
}

}  // namespace

ClassSet::ClassSet(FinGenAbelianGroup group, std::vector<GroupElement> classes, std::vector<std::string> labels)
    : ClassSet(std::move(group), std::move(classes), std::move(labels), false) {}

ClassSet ClassSet::with_repeated_values(FinGenAbelianGroup group, std::vector<GroupElement> classes,
                                        std::vector<std::string> labels) {
    return ClassSet(std::move(group), std::move(classes), std::move(labels), true);
}

ClassSet::ClassSet(FinGenAbelianGroup group, std::vector<GroupElement> classes, std::vector<std::string> labels,
                   bool allow_repeats)
    : group_(std::move(group)), classes_(std::move(classes)), labels_(std::move(labels)) {
    if (classes_.empty()) throw InvalidArgument("class set must be nonempty");
    for (const auto& g : classes_)
        if (!group_.contains(g)) throw DimensionMismatch("class " + default_label(g) + " not in " + group_.describe());
    for (std::size_t i = 0; i < classes_.size(); ++i)
        for (std::size_t j = i + 1; j < classes_.size(); ++j)
            if (classes_[i] == classes_[j]) {
                if (!allow_repeats) throw InvalidArgument("duplicate class " + default_label(classes_[i]));
                repeated_ = true;
            }
    if (labels_.empty()) {
        for (const auto& g : classes_) labels_.push_back(default_label(g));
    } else if (labels_.size() != classes_.size()) {
        throw DimensionMismatch("labels and classes differ in length");
    }
    std::set<std::string> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw InvalidArgument("duplicate class label");

    for (std::size_t i = 0; i < group_.free_rank(); ++i) moduli_.push_back(0);
    for (const auto& d : group_.torsion()) moduli_.push_back(to_small(d));
    for (const auto& g : classes_) {
        SmallVector v;
        for (const auto& x : g.free_part()) v.push_back(to_small(x));
        for (const auto& x : g.torsion_part()) v.push_back(to_small(x));
        coords_.push_back(std::move(v));
    }
}

std::optional<std::size_t> ClassSet::index_of(const GroupElement& g) const {
    for (std::size_t i = 0; i < classes_.size(); ++i)
        if (classes_[i] == g) return i;
    return std::nullopt;
}

std::optional<std::size_t> ClassSet::index_of_label(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Sequence

Sequence::Sequence(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
    for (auto e : exps_)
        if (e < 0) throw InvalidArgument("negative exponent in sequence");
}

Sequence Sequence::single(std::size_t n, std::size_t index, Exponent count) {
    std::vector<Exponent> e(n, 0);
    e.at(index) = count;
    return Sequence(std::move(e));
}

Exponent Sequence::length() const {
    Exponent s = 0;
    for (auto e : exps_) s = checked_add(s, e);
    return s;
}

std::vector<std::size_t> Sequence::support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0) s.push_back(i);
    return s;
}

bool Sequence::is_empty() const {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Sequence::divides(const Sequence& other) const {
    if (size() != other.size()) throw DimensionMismatch("sequences over different class sets");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Sequence Sequence::operator*(const Sequence& other) const {
    if (size() != other.size()) throw DimensionMismatch("sequences over different class sets");
    std::vector<Exponent> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(exps_[i], other.exps_[i]);
    return Sequence(std::move(e));
}

Sequence Sequence::quotient(const Sequence& other) const {
    if (!other.divides(*this)) throw InvalidArgument("sequence does not divide");
    std::vector<Exponent> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = exps_[i] - other.exps_[i];
    return Sequence(std::move(e));
}

Sequence Sequence::pow(Exponent n) const {
    if (n < 0) throw InvalidArgument("negative power");
    std::vector<Exponent> e(exps_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_mul(exps_[i], n);
    return Sequence(std::move(e));
}

// ---------------------------------------------------------------------------
// Sums

namespace {

void check_dims(const ClassSet& c, const Sequence& s) {
    if (s.size() != c.size())
        throw DimensionMismatch("sequence has " + std::to_string(s.size()) + " exponents, class set has " +
                                std::to_string(c.size()) + " classes");
}

std::int64_t reduce(std::int64_t x, std::int64_t mod) {
    if (mod == 0) return x;
    x %= mod;
    return x < 0 ? x + mod : x;
}

SmallVector small_sigma(const ClassSet& c, const Sequence& s) {
    const auto& mods = c.moduli();
    SmallVector acc(mods.size(), 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 0) continue;
        const auto& g = c.coordinates()[i];
        for (std::size_t k = 0; k < acc.size(); ++k) {
            const std::int64_t coeff = mods[k] ? reduce(s[i], mods[k]) : s[i];
            acc[k] = reduce(checked_add(acc[k], checked_mul(coeff, g[k])), mods[k]);
        }
    }
    return acc;
}

bool all_zero(const SmallVector& v) {
    return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

struct StateHash {
    std::size_t operator()(const SmallVector& v) const noexcept {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};

}  // namespace

GroupElement sigma(const ClassSet& c, const Sequence& s) {
    check_dims(c, s);
    GroupElement acc = c.group().zero();
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] > 0) acc = c.group().add(acc, c.group().scale(Integer(static_cast<long>(s[i])), c[i]));
    return acc;
}

bool is_zero_sum(const ClassSet& c, const Sequence& s) {
    check_dims(c, s);
    return all_zero(small_sigma(c, s));
}

bool is_minimal_zero_sum(const ClassSet& c, const Sequence& s) {
    check_dims(c, s);
    if (s.is_empty() || !is_zero_sum(c, s)) return false;
    // Reachable (partial sum, nonempty?, proper?) states over subsequences.
    // The last entry of each state vector packs the two flags.
    const auto& mods = c.moduli();
    const std::size_t dim = mods.size();
    std::unordered_set<SmallVector, StateHash> states;
    states.insert(SmallVector(dim + 1, 0));
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 0) continue;
        const auto& g = c.coordinates()[i];
        std::unordered_set<SmallVector, StateHash> next;
        for (const auto& st : states) {
            SmallVector cur = st;
            for (Exponent k = 0; k <= s[i]; ++k) {
                if (k > 0)
                    for (std::size_t d = 0; d < dim; ++d) cur[d] = reduce(checked_add(cur[d], g[d]), mods[d]);
                std::int64_t flags = st[dim];
                if (k > 0) flags |= 1;
                if (k < s[i]) flags |= 2;
                SmallVector ns = cur;
                ns[dim] = flags;
                next.insert(std::move(ns));
            }
        }
        states = std::move(next);
    }
    SmallVector target(dim + 1, 0);
    target[dim] = 3;
    return states.count(target) == 0;
}

std::string format_sequence(const ClassSet& c, const Sequence& s) {
    check_dims(c, s);
    if (s.is_empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == 0) continue;
        os << (first ? "" : " ") << c.label(i);
        if (s[i] > 1) os << '^' << s[i];
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Atoms

AtomSet::AtomSet(ClassSet class_set, std::vector<Sequence> atoms, AtomCertificate certificate)
    : class_set_(std::move(class_set)), atoms_(std::move(atoms)), certificate_(std::move(certificate)) {
    std::sort(atoms_.begin(), atoms_.end());
    atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
}

std::optional<std::size_t> AtomSet::index_of(const Sequence& s) const {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), s);
    if (it == atoms_.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - atoms_.begin());
}

std::size_t AtomSet::require_index(const Sequence& s) const {
    auto idx = index_of(s);
    if (!idx) throw AtomNotInSet();
    return *idx;
}

AtomSet enumerate_atoms(const ClassSet& c, const CompletionOptions& options) {
    const std::size_t m = c.size();
    const auto& mods = c.moduli();
    const std::size_t rows = mods.size();
    std::vector<SmallVector> columns = c.coordinates();
    std::size_t slack = 0;
    for (std::size_t r = 0; r < rows; ++r) {
        if (mods[r] == 0) continue;
        SmallVector col(rows, 0);
        col[r] = -mods[r];
        columns.push_back(std::move(col));
        ++slack;
    }
    CompletionStats stats;
    const auto sols = minimal_nonnegative_solutions(columns, options, &stats);
    std::vector<Sequence> atoms;
    atoms.reserve(sols.size());
    for (const auto& x : sols) atoms.emplace_back(std::vector<Exponent>(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(m)));
    AtomCertificate cert{"contejean-devie completion", columns.size(), slack, stats.levels, stats.nodes};
    return AtomSet(c, std::move(atoms), std::move(cert));
}

Integer atom_length_bound(const ClassSet& c) {
    const auto& g = c.group();
    if (g.is_finite()) return *g.cardinality();
    for (const auto& cls : c.classes())
        for (const auto& x : cls.free_part())
            if (x != 0) throw InfiniteGroupNoBound();
    Integer t = 1;
    for (const auto& d : g.torsion()) t *= d;
    return t;
}

// ---------------------------------------------------------------------------
// Factorizations

Sequence Factorization::product(const AtomSet& a) const {
    Sequence acc = Sequence::empty(a.class_set().size());
    for (auto i : atoms) acc = acc * a[i];
    return acc;
}

std::string format_factorization(const AtomSet& a, const Factorization& f) {
    if (f.atoms.empty()) return "1";
    std::ostringstream os;
    for (std::size_t k = 0; k < f.atoms.size(); ++k) {
        os << (k ? " * " : "") << '[' << format_sequence(a.class_set(), a[f.atoms[k]]) << ']';
    }
    return os.str();
}

namespace {

class FactorSearch {
public:
    FactorSearch(const AtomSet& a, const FactorOptions& opts, std::atomic<long long>& nodes)
        : a_(a), opts_(opts), nodes_(nodes) {
        const std::size_t n = a.size();
        const std::size_t m = a.class_set().size();
        // suffix_[i][g]: some atom with index >= i contains class g.
        suffix_.assign(n + 1, std::vector<char>(m, 0));
        for (std::size_t i = n; i-- > 0;) {
            suffix_[i] = suffix_[i + 1];
            for (auto g : a[i].support()) suffix_[i][g] = 1;
        }
    }

    void run(std::size_t start, std::vector<Exponent> rem, std::vector<std::size_t> chosen) {
        rem_ = std::move(rem);
        chosen_ = std::move(chosen);
        rec(start);
    }

    std::vector<Factorization>& results() { return results_; }

private:
    bool full() const { return results_.size() >= opts_.max_results; }

    void rec(std::size_t i) {
        if (full()) return;
        if (++nodes_ > opts_.budget) throw BudgetExceeded("factorization search", opts_.budget);
        bool empty = true;
        for (std::size_t g = 0; g < rem_.size(); ++g) {
            if (rem_[g] == 0) continue;
            empty = false;
            if (i >= a_.size() || !suffix_[i][g]) return;
        }
        if (empty) {
            results_.push_back(Factorization{chosen_});
            return;
        }
        const auto& atom = a_[i].exponents();
        Exponent kmax = std::numeric_limits<Exponent>::max();
        for (std::size_t g = 0; g < atom.size(); ++g)
            if (atom[g] > 0) kmax = std::min(kmax, rem_[g] / atom[g]);
        Exponent k = 0;
        for (; k < kmax; ++k) take(atom, i);
        for (;;) {
            rec(i + 1);
            if (k == 0 || full()) break;
            untake(atom);
            --k;
        }
        for (; k > 0; --k) untake(atom);
    }

    void take(const std::vector<Exponent>& atom, std::size_t i) {
        for (std::size_t g = 0; g < atom.size(); ++g) rem_[g] -= atom[g];
        chosen_.push_back(i);
    }
    void untake(const std::vector<Exponent>& atom) {
        for (std::size_t g = 0; g < atom.size(); ++g) rem_[g] += atom[g];
        chosen_.pop_back();
    }

    const AtomSet& a_;
    const FactorOptions& opts_;
    std::atomic<long long>& nodes_;
    std::vector<std::vector<char>> suffix_;
    std::vector<Exponent> rem_;
    std::vector<std::size_t> chosen_;
    std::vector<Factorization> results_;
};

}  // namespace

std::vector<Factorization> factorizations(const Sequence& b, const AtomSet& a, const FactorOptions& options) {
    if (!is_zero_sum(a.class_set(), b)) throw NotZeroSum();
    std::atomic<long long> nodes{0};
    std::vector<Factorization> out;
    const bool parallel = options.parallel && options.max_results == std::numeric_limits<std::size_t>::max() &&
                          !b.is_empty() && a.size() > 1;
    if (!parallel) {
        FactorSearch search(a, options, nodes);
        search.run(0, b.exponents(), {});
        out = std::move(search.results());
    } else {
        // Branch on the smallest atom index used; branches are disjoint.
        std::vector<std::future<std::vector<Factorization>>> tasks;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (!a[i].divides(b)) continue;
            tasks.push_back(std::async(std::launch::async, [&, i] {
                FactorSearch search(a, options, nodes);
                search.run(i, b.quotient(a[i]).exponents(), {i});
                return std::move(search.results());
            }));
        }
        for (auto& t : tasks) {
            auto part = t.get();
            out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::set<std::size_t> length_set(const Sequence& b, const AtomSet& a, const FactorOptions& options) {
    std::set<std::size_t> lengths;
    for (const auto& f : factorizations(b, a, options)) lengths.insert(f.length());
    return lengths;
}

mpq_class elasticity(const Sequence& b, const AtomSet& a, const FactorOptions& options) {
    const auto lengths = length_set(b, a, options);
    if (lengths.empty() || *lengths.begin() == 0) return mpq_class(1);
    mpq_class r(static_cast<unsigned long>(*lengths.rbegin()), static_cast<unsigned long>(*lengths.begin()));
    r.canonicalize();
    return r;
}

}  // namespace absirr
