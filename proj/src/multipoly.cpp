#include "contact_sextic/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "contact_sextic/error.hpp"
#include "expression_parser.hpp"

namespace contact_sextic {

namespace {

int fixed_rank(std::string_view v) {
    if (v == "t") return 0;
    if (v == "x") return 1;
    if (v == "y") return 2;
    if (v == "z") return 3;
    return 4;
}

bool natural_less(std::string_view a, std::string_view b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
        const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
        if (da && db) {
            std::size_t ie = i, je = j;
            while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
            while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
            const auto na = std::stoull(std::string(a.substr(i, ie - i)));
            const auto nb = std::stoull(std::string(b.substr(j, je - j)));
            if (na != nb) return na < nb;
            i = ie;
            j = je;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
    return a < b;
}

std::uint32_t total(const Exponents& e) { return std::accumulate(e.begin(), e.end(), std::uint32_t{0}); }

}  // namespace

bool variable_less(std::string_view a, std::string_view b) {
    const int ra = fixed_rank(a), rb = fixed_rank(b);
    if (ra != rb) return ra < rb;
    if (ra < 4) return false;
    return natural_less(a, b);
}

std::vector<std::string> merge_variables(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::vector<std::string> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
               [](const std::string& l, const std::string& r) { return variable_less(l, r); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool MultiPoly::GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
    const auto ta = total(a), tb = total(b);
    if (ta != tb) return ta > tb;
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

MultiPoly::MultiPoly(const Rational& c) {
    if (c != 0) terms_.emplace(Exponents{}, c);
}

MultiPoly::MultiPoly(std::vector<std::string> variables, TermMap terms)
    : vars_(std::move(variables)), terms_(std::move(terms)) {
    std::vector<std::size_t> order(vars_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t l, std::size_t r) { return variable_less(vars_[l], vars_[r]); });
    if (!std::is_sorted(order.begin(), order.end())) {
        std::vector<std::string> sorted;
        for (auto i : order) sorted.push_back(vars_[i]);
        TermMap remapped;
        for (const auto& [e, c] : terms_) {
            Exponents ne(e.size());
            for (std::size_t k = 0; k < order.size(); ++k) ne[k] = e[order[k]];
            remapped[ne] += c;
        }
        vars_ = std::move(sorted);
        terms_ = std::move(remapped);
    }
    canonicalize();
}

void MultiPoly::canonicalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
    std::vector<std::string> kept;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) kept.push_back(vars_[i]);
    TermMap reduced;
    for (const auto& [e, c] : terms_) {
        Exponents ne;
        ne.reserve(kept.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            if (used[i]) ne.push_back(e[i]);
        reduced.emplace(std::move(ne), c);
    }
    vars_ = std::move(kept);
    terms_ = std::move(reduced);
}

MultiPoly MultiPoly::embedded(const std::vector<std::string>& vars) const {
    if (vars == vars_) return *this;
    std::vector<std::size_t> pos(vars_.size());
    for (std::size_t i = 0, j = 0; i < vars_.size(); ++i) {
        while (vars[j] != vars_[i]) ++j;
        pos[i] = j;
    }
    MultiPoly out;
    out.vars_ = vars;
    for (const auto& [e, c] : terms_) {
        Exponents ne(vars.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

int MultiPoly::index_of(std::string_view var) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == var) return static_cast<int>(i);
    return -1;
}

MultiPoly MultiPoly::variable(const std::string& name) {
    MultiPoly p;
    p.vars_ = {name};
    p.terms_.emplace(Exponents{1}, Rational(1));
    return p;
}

MultiPoly MultiPoly::from_unipoly(const UniPoly& p, const std::string& var) {
    MultiPoly out;
    out.vars_ = {var};
    for (std::size_t k = 0; k < p.coeffs().size(); ++k)
        if (p.coeffs()[k] != 0) out.terms_.emplace(Exponents{static_cast<std::uint32_t>(k)}, p.coeffs()[k]);
    out.canonicalize();
    return out;
}

MultiPoly MultiPoly::parse(std::string_view text) {
    struct Ops {
        MultiPoly identifier(const std::string& name) const { return MultiPoly::variable(name); }
        MultiPoly divide(const MultiPoly& a, const MultiPoly& b) const {
            if (!b.is_constant() || b.is_zero())
                throw Error(ErrorCode::Parse, "polynomials may only be divided by nonzero constants");
            return a.scaled(1 / b.constant_value());
        }
    };
    return detail::ExpressionParser<MultiPoly, Ops>(text, Ops{}).parse();
}

Rational MultiPoly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw Error(ErrorCode::InvalidArgument, "polynomial is not constant: " + to_string());
    return terms_.begin()->second;
}

bool MultiPoly::has_variable(std::string_view v) const { return index_of(v) >= 0; }

unsigned MultiPoly::degree(std::string_view var) const {
    const int i = index_of(var);
    if (i < 0) return 0;
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[static_cast<std::size_t>(i)]);
    return d;
}

unsigned MultiPoly::total_degree() const {
    // First term has the largest total degree in grlex order.
    return terms_.empty() ? 0 : total(terms_.begin()->first);
}

MultiPoly MultiPoly::coefficient(std::string_view var, unsigned k) const {
    const int i = index_of(var);
    if (i < 0) return k == 0 ? *this : MultiPoly{};
    MultiPoly out;
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[static_cast<std::size_t>(i)] != k) continue;
        Exponents ne = e;
        ne[static_cast<std::size_t>(i)] = 0;
        out.terms_.emplace(std::move(ne), c);
    }
    out.canonicalize();
    return out;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::string_view var) const {
    const int i = index_of(var);
    if (i < 0) return {*this};
    std::vector<MultiPoly> out(degree(var) + 1);
    for (auto& p : out) p.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        Exponents ne = e;
        const auto k = ne[static_cast<std::size_t>(i)];
        ne[static_cast<std::size_t>(i)] = 0;
        out[k].terms_.emplace(std::move(ne), c);
    }
    for (auto& p : out) p.canonicalize();
    return out;
}

MultiPoly MultiPoly::leading_coefficient(std::string_view var) const { return coefficient(var, degree(var)); }

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.is_zero()) return *this;
    if (vars_ != o.vars_) {
        const auto vars = merge_variables(vars_, o.vars_);
        *this = embedded(vars);
        const MultiPoly oe = o.embedded(vars);
        for (const auto& [e, c] : oe.terms_) terms_[e] += c;
    } else {
        for (const auto& [e, c] : o.terms_) terms_[e] += c;
    }
    canonicalize();
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto vars = merge_variables(a.vars_, b.vars_);
    const MultiPoly ae = a.embedded(vars);
    const MultiPoly be = b.embedded(vars);
    MultiPoly out;
    out.vars_ = vars;
    Rational tmp;
    Exponents e(vars.size());
    for (const auto& [ea, ca] : ae.terms_) {
        auto hint = out.terms_.begin();
        for (const auto& [eb, cb] : be.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            mpq_mul(tmp.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
            hint = out.terms_.lower_bound(e);
            if (hint != out.terms_.end() && hint->first == e)
                hint->second += tmp;
            else
                hint = out.terms_.emplace_hint(hint, e, tmp);
        }
    }
    out.canonicalize();
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly MultiPoly::scaled(const Rational& c) const {
    if (c == 0) return {};
    MultiPoly r = *this;
    for (auto& [e, v] : r.terms_) v *= c;
    return r;
}

MultiPoly MultiPoly::pow(unsigned n) const {
    MultiPoly result(Rational(1));
    MultiPoly base = *this;
    while (n) {
        if (n & 1U) result *= base;
        n >>= 1U;
        if (n) base = base * base;
    }
    return result;
}

MultiPoly MultiPoly::derivative(std::string_view var) const {
    const int i = index_of(var);
    if (i < 0) return {};
    const auto k = static_cast<std::size_t>(i);
    MultiPoly out;
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        if (e[k] == 0) continue;
        Exponents ne = e;
        --ne[k];
        out.terms_[ne] += c * static_cast<unsigned long>(e[k]);
    }
    out.canonicalize();
    return out;
}

bool MultiPoly::divides_into(const MultiPoly& divisor, MultiPoly* quotient) const {
    if (divisor.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    const auto vars = merge_variables(vars_, divisor.vars_);
    MultiPoly rem = embedded(vars);
    const MultiPoly d = divisor.embedded(vars);
    const auto& [lead_e, lead_c] = *d.terms_.begin();
    const Rational inv_lead = 1 / lead_c;
    TermMap q;
    Exponents qe(vars.size());
    Exponents e(vars.size());
    Rational tmp;
    while (!rem.terms_.empty()) {
        const auto& [re, rc] = *rem.terms_.begin();
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (re[i] < lead_e[i]) return false;
            qe[i] = re[i] - lead_e[i];
        }
        const Rational qc = rc * inv_lead;
        q.emplace(qe, qc);
        for (const auto& [de, dc] : d.terms_) {
            for (std::size_t i = 0; i < vars.size(); ++i) e[i] = qe[i] + de[i];
            mpq_mul(tmp.get_mpq_t(), qc.get_mpq_t(), dc.get_mpq_t());
            auto it = rem.terms_.find(e);
            if (it == rem.terms_.end()) {
                rem.terms_.emplace(e, -tmp);
            } else {
                it->second -= tmp;
                if (it->second == 0) rem.terms_.erase(it);
            }
        }
    }
    if (quotient) {
        MultiPoly out;
        out.vars_ = vars;
        out.terms_ = std::move(q);
        out.canonicalize();
        *quotient = std::move(out);
    }
    return true;
}

MultiPoly MultiPoly::exact_div(const MultiPoly& divisor) const {
    MultiPoly q;
    if (!divides_into(divisor, &q))
        throw Error(ErrorCode::InexactDivision, "exact division leaves a remainder");
    return q;
}

MultiPoly MultiPoly::evaluate(std::string_view var, const Rational& value) const {
    const int i = index_of(var);
    if (i < 0) return *this;
    const auto k = static_cast<std::size_t>(i);
    std::vector<Rational> powers{Rational(1)};
    MultiPoly out;
    out.vars_ = vars_;
    for (const auto& [e, c] : terms_) {
        while (powers.size() <= e[k]) powers.push_back(powers.back() * value);
        Exponents ne = e;
        ne[k] = 0;
        out.terms_[ne] += c * powers[e[k]];
    }
    out.canonicalize();
    return out;
}

MultiPoly MultiPoly::evaluate(const std::map<std::string, Rational>& values) const {
    MultiPoly out = *this;
    for (const auto& [name, v] : values) out = out.evaluate(name, v);
    return out;
}

double MultiPoly::evaluate_double(const std::map<std::string, double>& values) const {
    std::vector<double> point(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = values.find(vars_[i]);
        if (it == values.end()) throw Error(ErrorCode::UnboundVariable, "no value for variable " + vars_[i]);
        point[i] = it->second;
    }
    double acc = 0.0;
    for (const auto& [e, c] : terms_) {
        double term = c.get_d();
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::uint32_t p = 0; p < e[i]; ++p) term *= point[i];
        acc += term;
    }
    return acc;
}

MultiPoly MultiPoly::substitute(std::string_view var, const MultiPoly& replacement) const {
    const int i = index_of(var);
    if (i < 0) return *this;
    const auto coeffs = coefficients_in(var);
    // Horner in the substituted variable.
    MultiPoly acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * replacement + *it;
    return acc;
}

MultiPoly MultiPoly::rename(std::string_view from, const std::string& to) const {
    const int i = index_of(from);
    if (i < 0) return *this;
    if (has_variable(to)) throw Error(ErrorCode::InvalidArgument, "rename target already present: " + to);
    std::vector<std::string> vars = vars_;
    vars[static_cast<std::size_t>(i)] = to;
    return MultiPoly(std::move(vars), terms_);
}

UniPoly MultiPoly::to_unipoly(std::string_view var) const {
    if (vars_.size() > 1 || (vars_.size() == 1 && vars_[0] != var))
        throw Error(ErrorCode::InvalidArgument, "expected a univariate polynomial in " + std::string(var) + ", got " + to_string());
    if (vars_.empty()) return UniPoly(constant_value());
    std::vector<Rational> coeffs(degree(var) + 1);
    for (const auto& [e, c] : terms_) coeffs[e[0]] = c;
    return UniPoly(std::move(coeffs));
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool negative = c < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        const Rational mag = abs(c);
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += vars_[i] + "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            out += contact_sextic::to_string(mag);
        else if (mag == 1)
            out += mono;
        else
            out += contact_sextic::to_string(mag) + "*" + mono;
    }
    return out;
}

}  // namespace contact_sextic
