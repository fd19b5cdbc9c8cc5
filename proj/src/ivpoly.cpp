#include "absirr/ivpoly.hpp"

#include <sstream>

#include "absirr/errors.hpp"

namespace absirr {

namespace {

bool is_integral(const Rational& q) { return q.get_den() == 1; }

bool is_prime(const Integer& p) { return p >= 2 && mpz_probab_prime_p(p.get_mpz_t(), 40) > 0; }

// a is a rational multiple of b (both nonzero).
bool proportional(const RatPoly& a, const RatPoly& b) {
    if (a.degree() != b.degree()) return false;
    return b.leading() * a == a.leading() * b;
}

std::optional<RatPoly> exact_quotient(const RatPoly& f, const RatPoly& g) {
    auto [q, r] = RatPoly::divmod(g, f);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

}  // namespace

RatPoly::RatPoly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
    for (auto& q : c_) q.canonicalize();
    trim();
}

RatPoly::RatPoly(std::initializer_list<Rational> coefficients) : RatPoly(std::vector<Rational>(coefficients)) {}

void RatPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly({c}); }

RatPoly RatPoly::x() { return RatPoly({Rational(0), Rational(1)}); }

RatPoly RatPoly::from_roots(const std::vector<Integer>& roots) {
    RatPoly p = constant(1);
    for (const auto& r : roots) p = p * RatPoly({Rational(-r), Rational(1)});
    return p;
}

Rational RatPoly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    acc.canonicalize();
    return acc;
}

bool RatPoly::has_integer_coefficients() const {
    for (const auto& q : c_)
        if (!is_integral(q)) return false;
    return true;
}

Integer RatPoly::denominator() const {
    Integer l = 1;
    for (const auto& q : c_) l = lcm(l, Integer(q.get_den()));
    return l;
}

RatPoly RatPoly::operator-() const {
    RatPoly r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coefficient(i) + b.coefficient(i);
    return RatPoly(std::move(c));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(c));
}

RatPoly operator*(const Rational& s, const RatPoly& a) { return RatPoly::constant(s) * a; }

RatPoly RatPoly::pow(unsigned n) const {
    RatPoly r = constant(1);
    for (unsigned i = 0; i < n; ++i) r = r * *this;
    return r;
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
    if (a.degree() < b.degree()) return {RatPoly(), a};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    std::vector<Rational> r = a.c_;
    const Rational lead = b.leading();
    for (long k = a.degree() - b.degree(); k >= 0; --k) {
        const Rational t = r[static_cast<std::size_t>(k + b.degree())] / lead;
        q[static_cast<std::size_t>(k)] = t;
        if (t == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[static_cast<std::size_t>(k) + j] -= t * b.c_[j];
    }
    return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

std::ostream& operator<<(std::ostream& os, const RatPoly& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (long i = p.degree(); i >= 0; --i) {
        Rational c = p.c_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        c = abs(c);
        if (i == 0) {
            os << c;
            continue;
        }
        if (c != 1) os << c << "*";
        os << "x";
        if (i > 1) os << "^" << i;
    }
    return os;
}

std::string RatPoly::str() const {
    std::ostringstream os;
    os << *this;
    return os.str();
}

bool is_integer_valued(const RatPoly& f) {
    for (long k = 0; k <= f.degree(); ++k)
        if (!is_integral(f(Rational(k)))) return false;
    return true;
}

std::vector<Rational> binomial_coefficients(const RatPoly& f) {
    std::vector<Rational> values;
    for (long k = 0; k <= f.degree(); ++k) values.push_back(f(Rational(k)));
    std::vector<Rational> out;
    while (!values.empty()) {
        out.push_back(values.front());
        for (std::size_t i = 0; i + 1 < values.size(); ++i) values[i] = values[i + 1] - values[i];
        values.pop_back();
    }
    return out;
}

bool is_integer_valued_binomial(const RatPoly& f) {
    for (const auto& c : binomial_coefficients(f))
        if (!is_integral(c)) return false;
    return true;
}

Integer fixed_divisor(const RatPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial();
    if (!is_integer_valued(f)) throw NotIntegerValued("fixed divisor needs an integer-valued polynomial");
    Integer g = 0;
    for (long k = 0; k <= f.degree(); ++k) g = gcd(g, Integer(f(Rational(k)).get_num()));
    return g;
}

std::optional<RatPoly> intz_quotient(const RatPoly& f, const RatPoly& g) {
    if (f.is_zero()) throw InvalidArgument("divisor must be nonzero");
    if (!is_integer_valued(f) || !is_integer_valued(g))
        throw NotIntegerValued("divisibility in Int(Z) needs integer-valued inputs");
    auto q = exact_quotient(f, g);
    if (!q || !is_integer_valued(*q)) return std::nullopt;
    return q;
}

bool divides_in_intz(const RatPoly& f, const RatPoly& g) { return intz_quotient(f, g).has_value(); }

RatPoly binomial_poly(unsigned long n) {
    RatPoly p = RatPoly::constant(1);
    for (unsigned long k = 0; k < n; ++k)
        p = Rational(1, k + 1) * (p * RatPoly({Rational(-Integer(k)), Rational(1)}));
    return p;
}

Integer legendre_vp_factorial(const Integer& p, const Integer& n) {
    if (!is_prime(p)) throw NotPrime(p.get_str());
    if (n < 0) throw InvalidArgument("n must be nonnegative");
    Integer sum = 0;
    for (Integer q = p; q <= n; q *= p) sum += n / q;
    return sum;
}

bool rp_membership(const RatPoly& f, const Integer& p) {
    if (!is_prime(p)) throw NotPrime(p.get_str());
    if (!is_integer_valued(f)) return false;
    Integer d = f.denominator();
    while (d % p == 0) d /= p;
    return d == 1;
}

NoPrimeWitness verify_no_prime_witness(const RatPoly& G, const Integer& p) {
    if (G.is_constant()) throw PreconditionFailed("G non-constant");
    if (!is_integer_valued(G)) throw PreconditionFailed("G integer-valued");
    if (!is_prime(p)) throw PreconditionFailed("p prime");
    NoPrimeWitness w;
    w.d = G.denominator();
    w.g = Rational(w.d) * G;
    w.p = p;
    bool has_root = false;
    for (Integer r = 0; r < p; ++r) {
        const Integer v = Integer(w.g(Rational(r)).get_num());
        if (v % p == 0)
            has_root = true;
        else
            w.residues.push_back(r);
    }
    if (!has_root) throw PreconditionFailed("g has a root mod p");
    if (w.residues.empty()) throw PreconditionFailed("g not identically 0 mod p");
    w.h = RatPoly::from_roots(w.residues);
    const Rational inv_p(Integer(1), p);
    const RatPoly gp = G + RatPoly::constant(Rational(p));
    w.hg_over_p_integer_valued = is_integer_valued(inv_p * (w.h * G));
    w.gp_h_over_p_integer_valued = is_integer_valued(inv_p * (gp * w.h));
    w.g_does_not_divide_g_plus_p = !exact_quotient(G, gp).has_value();
    w.h_over_p_not_integer_valued = !is_integer_valued(inv_p * w.h);
    return w;
}

ConstantNoPrimeWitness verify_constant_no_prime_witness(const Integer& c) {
    if (abs(c) <= 1) throw ZeroOrUnit();
    ConstantNoPrimeWitness w;
    w.c = c;
    const Integer m = abs(c);
    std::vector<Integer> roots;
    for (Integer r = 0; r < m; ++r) roots.push_back(r);
    w.product = RatPoly::from_roots(roots);
    const RatPoly cp = RatPoly::constant(Rational(c));
    w.divides_product = divides_in_intz(cp, w.product);
    w.divides_no_factor = true;
    for (const auto& r : roots)
        if (divides_in_intz(cp, RatPoly::from_roots({r}))) w.divides_no_factor = false;
    return w;
}

SquareSplitWitness intz_square_split_witness() {
    SquareSplitWitness w;
    const RatPoly x2p3({Rational(3), Rational(0), Rational(1)});
    w.f = Rational(1, 2) * (RatPoly::x() * x2p3);
    w.a = Rational(1, 4) * (RatPoly::x().pow(2) * x2p3);
    w.b = x2p3;
    w.all_integer_valued = is_integer_valued(w.f) && is_integer_valued(w.a) && is_integer_valued(w.b);
    w.product_is_square = w.a * w.b == w.f.pow(2);
    w.essentially_different = !proportional(w.a, w.f) && !proportional(w.b, w.f);
    return w;
}

RpNonPrimeWitness rp_nonprime_witness(const Integer& p) {
    RpNonPrimeWitness w;
    w.p = p;
    std::vector<Integer> roots;
    for (Integer r = 0; r < p; ++r) roots.push_back(r);
    const RatPoly prod = RatPoly::from_roots(roots);
    w.f = Rational(Integer(1), p) * prod;
    w.in_rp = rp_membership(w.f, p);
    const auto divides = [&](const RatPoly& g) {
        auto q = exact_quotient(w.f, g);
        return q && rp_membership(*q, p);
    };
    w.divides_product = divides(prod);
    w.divides_no_factor = true;
    for (const auto& r : roots)
        if (divides(RatPoly::from_roots({r}))) w.divides_no_factor = false;
    return w;
}

RpSquareSplitWitness rp_square_split_witness(const Integer& p) {
    RpSquareSplitWitness w;
    w.p = p;
    const Integer p2 = p * p;
    w.e = legendre_vp_factorial(p, p2);
    const unsigned long e = w.e.get_ui();
    std::vector<Integer> bs;
    for (Integer b = 1; b < p2; ++b)
        if (b % p != 0) bs.push_back(b);
    const RatPoly g = RatPoly::from_roots(bs);
    const RatPoly l1 = RatPoly::from_roots({Integer(0)});
    const RatPoly l2 = RatPoly::from_roots({p2});
    Integer pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    const Rational inv(Integer(1), pe);
    w.f = inv * (g * l1 * l2.pow(static_cast<unsigned>(e - 1)));
    w.a = inv * (g * l1.pow(2) * l2.pow(static_cast<unsigned>(e - 2)));
    w.b = inv * (g * l2.pow(static_cast<unsigned>(e)));
    w.all_in_rp = rp_membership(w.f, p) && rp_membership(w.a, p) && rp_membership(w.b, p);
    w.product_is_square = w.a * w.b == w.f.pow(2);
    w.essentially_different = !proportional(w.a, w.f) && !proportional(w.b, w.f);
    return w;
}

}  // namespace absirr
