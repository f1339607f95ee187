#include "knotperiod/poly.hpp"

#include "knotperiod/errors.hpp"
#include "knotperiod/intmath.hpp"

#include <algorithm>
#include <map>

namespace knotperiod {

Poly::Poly(PrimeField F, std::vector<std::uint64_t> coeffs) : F_(F), c_(std::move(coeffs)) {
    for (auto& c : c_)
        c %= F_.p();
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

Poly Poly::constant(PrimeField F, std::uint64_t c) {
    return Poly(F, {c});
}

Poly Poly::t(PrimeField F) {
    return Poly(F, {0, 1});
}

Poly Poly::from_ints(PrimeField F, const std::vector<std::int64_t>& c) {
    std::vector<std::uint64_t> r(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        r[i] = F.reduce(c[i]);
    return Poly(F, std::move(r));
}

std::uint64_t Poly::lead() const {
    if (c_.empty())
        throw ZeroPolynomial("leading coefficient of zero polynomial");
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<std::uint64_t> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = F_.add((*this)[i], o[i]);
    return Poly(F_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<std::uint64_t> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = F_.sub((*this)[i], o[i]);
    return Poly(F_, std::move(r));
}

Poly Poly::operator-() const {
    std::vector<std::uint64_t> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        r[i] = F_.neg(c_[i]);
    return Poly(F_, std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero())
        return Poly(F_);
    std::vector<std::uint64_t> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0)
            continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = F_.add(r[i + j], F_.mul(c_[i], o.c_[j]));
    }
    return Poly(F_, std::move(r));
}

Poly Poly::operator*(std::uint64_t scalar) const {
    std::vector<std::uint64_t> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        r[i] = F_.mul(c_[i], scalar % F_.p());
    return Poly(F_, std::move(r));
}

Poly Poly::shifted(unsigned k) const {
    if (is_zero())
        return *this;
    std::vector<std::uint64_t> r(c_.size() + k, 0);
    std::copy(c_.begin(), c_.end(), r.begin() + k);
    return Poly(F_, std::move(r));
}

std::strong_ordering Poly::operator<=>(const Poly& o) const {
    if (auto c = deg() <=> o.deg(); c != 0)
        return c;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (auto c = c_[i] <=> o.c_[i]; c != 0)
            return c;
    return std::strong_ordering::equal;
}

std::uint64_t Poly::eval(std::uint64_t x) const {
    std::uint64_t acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
        acc = F_.add(F_.mul(acc, x), c_[i]);
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1)
        return Poly(F_);
    std::vector<std::uint64_t> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r[i - 1] = F_.mul(c_[i], i % F_.p());
    return Poly(F_, std::move(r));
}

Poly Poly::monic() const {
    if (is_zero())
        throw ZeroPolynomial("monic form of zero polynomial");
    if (c_.back() == 1)
        return *this;
    return *this * F_.inv(c_.back());
}

unsigned Poly::t_multiplicity() const {
    unsigned k = 0;
    while (k < c_.size() && c_[k] == 0)
        ++k;
    return k == c_.size() ? 0 : k;
}

Poly Poly::shifted_down(unsigned k) const {
    if (k == 0)
        return *this;
    if (t_multiplicity() < k && !is_zero())
        throw InternalError("shifted_down: t^k does not divide");
    if (is_zero())
        return *this;
    return Poly(F_, std::vector<std::uint64_t>(c_.begin() + k, c_.end()));
}

std::string Poly::str() const {
    if (is_zero())
        return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0)
            continue;
        if (!out.empty())
            out += " + ";
        if (i == 0 || c_[i] != 1)
            out += std::to_string(c_[i]);
        if (i >= 1) {
            if (c_[i] != 1)
                out += "*";
            out += "t";
            if (i >= 2)
                out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    if (b.is_zero())
        throw ZeroPolynomial("division by zero polynomial");
    const PrimeField& F = a.field();
    if (a.deg() < b.deg())
        return {Poly(F), a};
    std::vector<std::uint64_t> rem(a.coeffs());
    std::vector<std::uint64_t> quo(a.deg() - b.deg() + 1, 0);
    std::uint64_t lead_inv = F.inv(b.lead());
    for (int k = a.deg() - b.deg(); k >= 0; --k) {
        std::uint64_t top = rem[k + b.deg()];
        if (top == 0)
            continue;
        std::uint64_t q = F.mul(top, lead_inv);
        quo[k] = q;
        for (int i = 0; i <= b.deg(); ++i)
            rem[k + i] = F.sub(rem[k + i], F.mul(q, b[i]));
    }
    return {Poly(F, std::move(quo)), Poly(F, std::move(rem))};
}

Poly poly_divexact(const Poly& a, const Poly& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero())
        throw InternalError("poly_divexact: nonzero remainder");
    return q;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero())
        throw BothZero("gcd(0, 0)");
    Poly x = a, y = b;
    while (!y.is_zero()) {
        auto [q, r] = poly_divmod(x, y);
        (void)q;
        x = y;
        y = r;
    }
    return x.monic();
}

Poly poly_powmod(const Poly& a, std::uint64_t e, const Poly& m) {
    Poly base = poly_divmod(a, m).second;
    Poly acc = Poly::constant(a.field(), 1);
    while (e) {
        if (e & 1)
            acc = poly_divmod(acc * base, m).second;
        base = poly_divmod(base * base, m).second;
        e >>= 1;
    }
    return acc;
}

Poly Factorization::product(PrimeField F) const {
    Poly acc = Poly::constant(F, unit);
    for (const auto& [f, e] : parts)
        for (unsigned i = 0; i < e; ++i)
            acc = acc * f;
    return acc;
}

namespace {

// p-th root of a polynomial with zero derivative: f(t) = g(t^p) and the
// coefficients are fixed by Frobenius, so g just gathers every p-th one.
Poly pth_root(const Poly& f) {
    if (!f.derivative().is_zero())
        throw InternalError("pth_root: derivative is nonzero");
    std::uint64_t p = f.p();
    std::vector<std::uint64_t> r;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(f.deg()); i += p)
        r.push_back(f[i]);
    return Poly(f.field(), std::move(r));
}

Poly random_poly_below(PrimeField F, int deg_bound, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint64_t> coef(0, F.p() - 1);
    std::vector<std::uint64_t> c(static_cast<std::size_t>(deg_bound));
    for (auto& x : c)
        x = coef(rng);
    return Poly(F, std::move(c));
}

// Cantor-Zassenhaus equal-degree splitting: g is monic squarefree, all its
// irreducible factors have degree d.
void equal_degree(const Poly& g, unsigned d, unsigned mult,
                  std::vector<std::pair<Poly, unsigned>>& out,
                  std::mt19937_64& rng) {
    const PrimeField& F = g.field();
    if (g.deg() == static_cast<int>(d)) {
        out.emplace_back(g, mult);
        return;
    }
    std::uint64_t p = F.p();
    Poly one = Poly::constant(F, 1);
    for (;;) {
        Poly u = random_poly_below(F, g.deg(), rng);
        if (u.deg() < 1)
            continue;
        Poly w(F);
        if (p == 2) {
            // trace map over GF(2^d)
            Poly v = poly_divmod(u, g).second;
            Poly acc = v;
            for (unsigned i = 1; i < d; ++i) {
                v = poly_divmod(v * v, g).second;
                acc = acc + v;
            }
            w = poly_gcd(acc, g);
        } else {
            std::uint64_t e = (pow_checked_u64(p, d) - 1) / 2;
            Poly v = poly_powmod(u, e, g) - one;
            w = poly_gcd(v, g);
        }
        if (w.deg() > 0 && w.deg() < g.deg()) {
            equal_degree(w, d, mult, out, rng);
            equal_degree(poly_divexact(g, w), d, mult, out, rng);
            return;
        }
    }
}

// Distinct-degree stage on a monic squarefree input.
void distinct_degree(Poly f, unsigned mult,
                     std::vector<std::pair<Poly, unsigned>>& out,
                     std::mt19937_64& rng) {
    const PrimeField& F = f.field();
    Poly t = Poly::t(F);
    Poly h = poly_divmod(t, f).second;
    unsigned d = 0;
    while (f.deg() > 0 && 2 * static_cast<int>(d + 1) <= f.deg()) {
        ++d;
        h = poly_powmod(h, F.p(), f);
        Poly g = poly_gcd(h - t, f);  // gcd(0, f) = f covers the all-factors-divide case
        if (g.deg() > 0) {
            equal_degree(g, d, mult, out, rng);
            f = poly_divexact(f, g);
            h = poly_divmod(h, f).second;
        }
    }
    if (f.deg() > 0)
        out.emplace_back(f, mult);
}

// Squarefree decomposition in characteristic p, then hand the pieces on.
// mult scales every multiplicity found below (used for the p-th root
// recursion, where each factor's multiplicity is divided by p).
void squarefree_split(const Poly& f, unsigned mult,
                      std::vector<std::pair<Poly, unsigned>>& out,
                      std::mt19937_64& rng) {
    if (f.deg() < 1)
        return;
    Poly d = f.derivative();
    if (d.is_zero()) {
        squarefree_split(pth_root(f), mult * static_cast<unsigned>(f.p()), out, rng);
        return;
    }
    Poly c = poly_gcd(f, d);
    Poly w = poly_divexact(f, c);
    unsigned i = 1;
    while (w.deg() > 0) {
        Poly y = poly_gcd(w, c);
        Poly z = poly_divexact(w, y);
        if (z.deg() > 0)
            distinct_degree(z, i * mult, out, rng);
        w = y;
        c = poly_divexact(c, y);
        ++i;
    }
    if (c.deg() > 0)
        squarefree_split(pth_root(c), mult * static_cast<unsigned>(f.p()), out, rng);
}

} // namespace

Factorization factor(const Poly& a, std::mt19937_64& rng) {
    if (a.is_zero())
        throw ZeroPolynomial("factor(0)");
    Factorization out;
    out.unit = a.lead();
    std::vector<std::pair<Poly, unsigned>> parts;
    squarefree_split(a.monic(), 1, parts, rng);
    std::sort(parts.begin(), parts.end());
    // merge any repeats defensively; the decomposition keeps parts coprime
    std::vector<std::pair<Poly, unsigned>> merged;
    for (auto& pr : parts) {
        if (!merged.empty() && merged.back().first == pr.first)
            merged.back().second += pr.second;
        else
            merged.push_back(std::move(pr));
    }
    out.parts = std::move(merged);
    return out;
}

Factorization factor(const Poly& a) {
    std::mt19937_64 rng(kDefaultFactorSeed);
    return factor(a, rng);
}

bool is_irreducible(const Poly& f_in) {
    if (f_in.deg() < 1)
        return false;
    Poly f = f_in.monic();
    unsigned n = static_cast<unsigned>(f.deg());
    if (n == 1)
        return true;
    const PrimeField& F = f.field();
    Poly t = Poly::t(F);
    // frob[i] = t^(p^i) mod f, built by repeated p-th powering
    std::vector<Poly> frob{poly_divmod(t, f).second};
    for (unsigned i = 1; i <= n; ++i)
        frob.push_back(poly_powmod(frob.back(), F.p(), f));
    if (!(frob[n] - poly_divmod(t, f).second).is_zero())
        return false;
    for (auto [q, e] : factorize_u64(n)) {
        (void)e;
        Poly diff = frob[n / q] - poly_divmod(t, f).second;
        if (diff.is_zero())
            return false;
        if (poly_gcd(diff, f).deg() > 0)
            return false;
    }
    return true;
}

std::uint64_t root_order(const Poly& f) {
    if (f.is_zero() || f.deg() < 1)
        throw NotIrreducible("root_order needs an irreducible polynomial");
    if (!f.is_monic())
        throw NotMonic("root_order needs a monic polynomial");
    if (f == Poly::t(f.field()))
        throw ZeroRoot("root_order of t: root is 0");
    if (!is_irreducible(f))
        throw NotIrreducible("root_order: " + f.str() + " is reducible");
    const PrimeField& F = f.field();
    std::uint64_t n = pow_checked_u64(F.p(), static_cast<unsigned>(f.deg())) - 1;
    Poly t = Poly::t(F);
    Poly one = Poly::constant(F, 1);
    for (auto [q, e] : factorize_u64(n)) {
        (void)e;
        while (n % q == 0 && poly_powmod(t, n / q, f) == one)
            n /= q;
    }
    return n;
}

namespace {

// C(a, b) mod p for 0 <= a, b < p
std::uint64_t small_binomial(std::uint64_t a, std::uint64_t b, const PrimeField& F) {
    if (b > a)
        return 0;
    b = std::min(b, a - b);
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < b; ++i) {
        num = F.mul(num, (a - i) % F.p());
        den = F.mul(den, (i + 1) % F.p());
    }
    return F.mul(num, F.inv(den));
}

} // namespace

std::uint64_t hasse_binomial(std::int64_t n, std::uint64_t k, PrimeField F) {
    if (k == 0)
        return 1;
    if (n < 0) {
        // C(n,k) = (-1)^k C(k-n-1, k)
        std::uint64_t m = k + static_cast<std::uint64_t>(-(n + 1));
        std::uint64_t c = hasse_binomial(static_cast<std::int64_t>(m), k, F);
        return (k % 2 == 0) ? c : F.neg(c);
    }
    // Lucas
    std::uint64_t a = static_cast<std::uint64_t>(n), b = k, out = 1;
    while (a > 0 || b > 0) {
        std::uint64_t ai = a % F.p(), bi = b % F.p();
        if (bi > ai)
            return 0;
        out = F.mul(out, small_binomial(ai, bi, F));
        a /= F.p();
        b /= F.p();
    }
    return out;
}

} // namespace knotperiod
