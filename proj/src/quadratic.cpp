#include "absirr/quadratic.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

#include "absirr/errors.hpp"

namespace absirr {

namespace {

std::strong_ordering cmp(const Integer& x, const Integer& y) {
    const int c = ::cmp(x, y);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::vector<Integer> divisors(const Integer& n) {
    std::vector<Integer> small, large;
    for (Integer k = 1; k * k <= n; ++k)
        if (n % k == 0) {
            small.push_back(k);
            if (k * k != n) large.push_back(n / k);
        }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

bool is_prime(const Integer& p) { return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 40) > 0; }

}  // namespace

std::strong_ordering operator<=>(const QuadInt& x, const QuadInt& y) {
    if (auto c = cmp(x.a, y.a); c != 0) return c;
    return cmp(x.b, y.b);
}

QuadRing::QuadRing(Integer d) : d_(std::move(d)) {
    if (d_ >= 0) throw InvalidArgument("d must be negative");
    const Integer m = -d_;
    for (Integer k = 2; k * k <= m; ++k)
        if (m % (k * k) == 0) throw InvalidArgument("d must be squarefree");
    Integer r = d_ % 4;
    if (r < 0) r += 4;
    if (r != 2 && r != 3) throw InvalidArgument("d must be 2 or 3 mod 4");
}

QuadInt QuadRing::mul(const QuadInt& x, const QuadInt& y) const {
    return {x.a * y.a + d_ * x.b * y.b, x.a * y.b + x.b * y.a};
}

QuadInt QuadRing::pow(const QuadInt& x, unsigned n) const {
    QuadInt r{1, 0};
    for (unsigned i = 0; i < n; ++i) r = mul(r, x);
    return r;
}

Integer QuadRing::norm(const QuadInt& x) const { return x.a * x.a - d_ * x.b * x.b; }

std::optional<QuadInt> QuadRing::exact_div(const QuadInt& z, const QuadInt& w) const {
    if (w.is_zero()) throw ZeroDivisor();
    const Integer n = norm(w);
    const QuadInt t = mul(z, conj(w));
    if (t.a % n != 0 || t.b % n != 0) return std::nullopt;
    return QuadInt{t.a / n, t.b / n};
}

QuadInt QuadRing::canonical(const QuadInt& x) const {
    if (x.a < 0 || (x.a == 0 && x.b < 0)) return negate(x);
    return x;
}

std::string QuadRing::format(const QuadInt& x) const {
    const std::string root = "sqrt(" + d_.get_str() + ")";
    std::ostringstream os;
    if (x.b == 0) {
        os << x.a;
        return os.str();
    }
    const Integer mag = abs(x.b);
    const std::string tail = (mag == 1 ? std::string() : mag.get_str() + "*") + root;
    if (x.a == 0) {
        os << (x.b < 0 ? "-" : "") << tail;
    } else {
        os << x.a << (x.b < 0 ? " - " : " + ") << tail;
    }
    return os.str();
}

std::vector<QuadInt> elements_of_norm(const QuadRing& r, const Integer& m) {
    if (m < 0) throw InvalidArgument("norm must be nonnegative");
    std::vector<QuadInt> out;
    const Integer md = -r.d();
    for (Integer b = 0; md * b * b <= m; ++b) {
        const Integer rest = m - md * b * b;
        if (!mpz_perfect_square_p(rest.get_mpz_t())) continue;
        const Integer a = sqrt(rest);
        for (int sa : {1, -1}) {
            if (sa == -1 && a == 0) continue;
            for (int sb : {1, -1}) {
                if (sb == -1 && b == 0) continue;
                out.push_back({sa * a, sb * b});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool quad_divides(const QuadRing& r, const QuadInt& w, const QuadInt& z) { return r.exact_div(z, w).has_value(); }

bool quad_is_irreducible(const QuadRing& r, const QuadInt& z) {
    const Integer n = r.norm(z);
    if (n <= 1) throw ZeroOrUnit();
    for (const auto& k : divisors(n)) {
        if (k == 1 || k == n) continue;
        for (const auto& w : elements_of_norm(r, k))
            if (quad_divides(r, w, z)) return false;
    }
    return true;
}

std::string prime_report_kind_name(PrimeReport::Kind k) {
    switch (k) {
        case PrimeReport::Kind::NonPrimeWitness: return "non-prime-witness";
        case PrimeReport::Kind::PrimeByEuler: return "prime-by-euler";
        case PrimeReport::Kind::Unknown: return "unknown";
    }
    return "unknown";
}

PrimeReport quad_is_prime_witness(const QuadRing& r, const QuadInt& z) {
    if (z.is_zero()) throw ZeroDivisor();
    PrimeReport rep;
    if (z.a % 2 == 0 && z.b % 2 == 0) {
        Integer m = r.d() % 4;
        if (m < 0) m += 4;
        const QuadInt x = m == 2 ? r.sqrt_d() : QuadInt{1, 1};
        const QuadInt y = m == 2 ? r.sqrt_d() : QuadInt{1, -1};
        if (quad_divides(r, z, r.mul(x, y)) && !quad_divides(r, z, x) && !quad_divides(r, z, y)) {
            rep.kind = PrimeReport::Kind::NonPrimeWitness;
            rep.x = x;
            rep.y = y;
            return rep;
        }
    }
    const Integer p = abs(z.a);
    if (z.b == 0 && p % 2 == 1 && is_prime(p) && r.d() % p != 0) {
        Integer dm = r.d() % p;
        if (dm < 0) dm += p;
        Integer e;
        const Integer exp = (p - 1) / 2;
        mpz_powm(e.get_mpz_t(), dm.get_mpz_t(), exp.get_mpz_t(), p.get_mpz_t());
        if (e == p - 1) rep.kind = PrimeReport::Kind::PrimeByEuler;
    }
    return rep;
}

std::vector<QuadFactorization> quad_factorizations(const QuadRing& r, const QuadInt& z, std::uint64_t budget) {
    if (r.norm(z) <= 1) throw ZeroOrUnit();
    using Key = std::tuple<Integer, Integer, Integer>;
    const auto key = [&](const QuadInt& w) { return Key{r.norm(w), w.a, w.b}; };
    std::map<QuadInt, bool> irreducible;
    const auto is_irr = [&](const QuadInt& w) {
        auto it = irreducible.find(w);
        if (it == irreducible.end()) it = irreducible.emplace(w, quad_is_irreducible(r, w)).first;
        return it->second;
    };

    std::vector<QuadFactorization> out;
    std::vector<QuadInt> cur;
    std::uint64_t nodes = 0;
    std::function<void(const QuadInt&)> rec = [&](const QuadInt& y) {
        if (++nodes > budget) throw BudgetExceeded("quadratic factorization", static_cast<long long>(budget));
        const Integer n = r.norm(y);
        if (n == 1) {
            out.push_back({y, cur});
            return;
        }
        for (const auto& k : divisors(n)) {
            if (k == 1) continue;
            if (!cur.empty() && k < r.norm(cur.back())) continue;
            for (const auto& w : elements_of_norm(r, k)) {
                if (r.canonical(w) != w) continue;
                if (!cur.empty() && key(w) < key(cur.back())) continue;
                const auto q = r.exact_div(y, w);
                if (!q || !is_irr(w)) continue;
                cur.push_back(w);
                rec(*q);
                cur.pop_back();
            }
        }
    };
    rec(z);
    return out;
}

QuadAbsirredResult quad_brute_absirred(const QuadRing& r, const QuadInt& z, unsigned n_max, std::uint64_t budget) {
    if (n_max < 1) throw InvalidArgument("n_max must be at least 1");
    if (!quad_is_irreducible(r, z)) throw InvalidArgument("element is not irreducible");
    QuadAbsirredResult res;
    res.n_max = n_max;
    const QuadInt cz = r.canonical(z);
    for (unsigned n = 1; n <= n_max; ++n) {
        const std::vector<QuadInt> trivial(n, cz);
        for (const auto& f : quad_factorizations(r, r.pow(z, n), budget)) {
            if (f.factors == trivial) continue;
            res.absolutely_irreducible = false;
            res.n = n;
            res.witness = f;
            return res;
        }
    }
    return res;
}

HalfFactorialCheck quad_half_factorial_check(const QuadRing& r, const Integer& max_norm, std::uint64_t budget) {
    HalfFactorialCheck res;
    res.max_norm = max_norm;
    for (Integer m = 2; m <= max_norm; ++m)
        for (const auto& z : elements_of_norm(r, m)) {
            if (r.canonical(z) != z) continue;
            ++res.elements_checked;
            const auto fs = quad_factorizations(r, z, budget);
            for (const auto& f : fs)
                if (f.factors.size() != fs.front().factors.size()) {
                    res.holds = false;
                    res.counterexample = z;
                    return res;
                }
        }
    return res;
}

}  // namespace absirr
