#include "contact_sextic/unipoly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>

#include "contact_sextic/error.hpp"
#include "contact_sextic/polyroots.hpp"

namespace contact_sextic {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(const Rational& c) {
    if (c != 0) coeffs_.push_back(c);
}

UniPoly UniPoly::monomial(const Rational& c, unsigned degree) {
    if (c == 0) return {};
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(unsigned k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

Rational UniPoly::leading() const { return coeffs_.empty() ? Rational(0) : coeffs_.back(); }

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    Rational tmp;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            mpq_mul(tmp.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
            out[i + j] += tmp;
        }
    }
    return UniPoly(std::move(out));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly& UniPoly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

UniPoly UniPoly::pow(unsigned n) const {
    UniPoly result(Rational(1));
    UniPoly base = *this;
    while (n) {
        if (n & 1U) result *= base;
        n >>= 1U;
        if (n) base = base * base;
    }
    return result;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return {};
    return *this * Rational(1 / leading());
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
    if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (degree() < divisor.degree()) return {UniPoly{}, *this};
    std::vector<Rational> rem = coeffs_;
    const int dd = divisor.degree();
    std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1));
    const Rational inv_lead = 1 / divisor.leading();
    Rational tmp;
    for (int k = degree() - dd; k >= 0; --k) {
        const Rational q = rem[static_cast<std::size_t>(k + dd)] * inv_lead;
        quot[static_cast<std::size_t>(k)] = q;
        if (q == 0) continue;
        for (int j = 0; j <= dd; ++j) {
            mpq_mul(tmp.get_mpq_t(), q.get_mpq_t(), divisor.coeffs_[static_cast<std::size_t>(j)].get_mpq_t());
            rem[static_cast<std::size_t>(k + j)] -= tmp;
        }
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::exact_div(const UniPoly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero()) throw Error(ErrorCode::InexactDivision, "univariate division leaves a remainder");
    return q;
}

Rational UniPoly::evaluate(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

double UniPoly::evaluate(double t) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
    return acc;
}

std::complex<double> UniPoly::evaluate(std::complex<double> t) const {
    std::complex<double> acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
    return acc;
}

std::vector<double> UniPoly::to_doubles() const {
    // Scale by the largest coefficient first so huge exact values stay finite.
    Rational scale = 0;
    for (const auto& c : coeffs_) scale = std::max(scale, Rational(abs(c)));
    std::vector<double> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(scale == 0 ? 0.0 : Rational(c / scale).get_d());
    return out;
}

namespace {

using IntPoly = std::vector<Integer>;

void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(IntPoly& p) {
    trim(p);
    if (p.empty()) return;
    Integer g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    if (p.back() < 0) g = -g;
    if (g != 1)
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

IntPoly primitive_integer(const UniPoly& p) {
    Integer l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    IntPoly out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.get_num() * (l / c.get_den()));
    make_primitive(out);
    return out;
}

// a <- prem(a, b) in the "lazy" form lc(b)*a - lc(a)*x^k*b, repeated.
void pseudo_remainder(IntPoly& a, const IntPoly& b) {
    const std::size_t db = b.size() - 1;
    Integer tmp;
    while (!a.empty() && a.size() - 1 >= db) {
        const Integer la = a.back();
        const Integer& lb = b.back();
        const std::size_t shift = a.size() - 1 - db;
        for (auto& c : a) c *= lb;
        for (std::size_t j = 0; j <= db; ++j) {
            mpz_mul(tmp.get_mpz_t(), la.get_mpz_t(), b[j].get_mpz_t());
            a[shift + j] -= tmp;
        }
        trim(a);
        make_primitive(a);
    }
}

}  // namespace

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    IntPoly p = primitive_integer(a);
    IntPoly q = primitive_integer(b);
    if (p.size() < q.size()) std::swap(p, q);
    while (!q.empty()) {
        if (q.size() == 1) return UniPoly(Rational(1));
        pseudo_remainder(p, q);
        std::swap(p, q);
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(p.size());
    for (auto& c : p) coeffs.emplace_back(c);
    return UniPoly(std::move(coeffs)).monic();
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
    n = abs(n);
    std::vector<std::pair<Integer, unsigned>> factors;
    for (unsigned long d = 2; d < 1000000UL && Integer(d) * d <= n; ++d) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
            n /= d;
            ++e;
        }
        if (e) factors.emplace_back(Integer(d), e);
    }
    // Whatever remains is treated as prime; a composite cofactor only costs
    // missed candidates, never wrong answers, since every candidate is checked.
    if (n > 1) factors.emplace_back(n, 1U);
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [p, e] : factors) {
        const std::size_t base = divs.size();
        Integer pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    return divs;
}

}  // namespace

std::vector<Rational> rational_roots(const UniPoly& p) {
    std::vector<Rational> roots;
    if (p.degree() < 1) return roots;
    std::size_t lowest = 0;
    while (p.coeffs()[lowest] == 0) ++lowest;
    UniPoly rest(std::vector<Rational>(p.coeffs().begin() + static_cast<std::ptrdiff_t>(lowest), p.coeffs().end()));
    if (lowest > 0) roots.emplace_back(0);
    if (rest.degree() < 1) return roots;

    const UniPoly squarefree = rest.exact_div(gcd(rest, rest.derivative()));
    if (squarefree.degree() == 1) {
        roots.push_back(-squarefree.coeff(0) / squarefree.coeff(1));
        return roots;
    }
    const IntPoly ip = primitive_integer(squarefree);
    const auto denominators = positive_divisors(ip.back());
    const auto approx = aberth_roots(std::span<const double>(squarefree.to_doubles()));

    std::set<Rational> found;
    for (const auto& r : approx) {
        if (std::abs(r.imag()) > 1e-6 * (1.0 + std::abs(r.real()))) continue;
        for (const auto& q : denominators) {
            const double scaled = r.real() * q.get_d();
            if (!std::isfinite(scaled) || std::abs(scaled) > 9e15) continue;
            const auto numer = static_cast<std::int64_t>(std::llround(scaled));
            for (std::int64_t delta : {0, -1, 1}) {
                Rational candidate(Integer(static_cast<long>(numer + delta)), q);
                candidate.canonicalize();
                if (!found.count(candidate) && squarefree.evaluate(candidate) == 0) found.insert(candidate);
            }
        }
    }
    roots.insert(roots.end(), found.begin(), found.end());
    return roots;
}

}  // namespace contact_sextic

namespace contact_sextic {

namespace {

int sign_changes(const std::vector<int>& signs) {
    int changes = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

unsigned count_real_roots(const UniPoly& p) {
    if (p.degree() < 1) return 0;
    std::vector<UniPoly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        UniPoly r = chain[chain.size() - 2].divmod(chain.back()).second;
        if (r.is_zero()) break;
        chain.push_back(-r);
    }
    // Signs at -infinity and +infinity come from leading terms.
    std::vector<int> at_neg, at_pos;
    for (const auto& q : chain) {
        const int s = sgn(q.leading());
        at_pos.push_back(s);
        at_neg.push_back(q.degree() % 2 ? -s : s);
    }
    return static_cast<unsigned>(sign_changes(at_neg) - sign_changes(at_pos));
}

}  // namespace contact_sextic
