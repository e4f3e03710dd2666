#include "contact_sextic/algebra.hpp"

#include "contact_sextic/error.hpp"

namespace contact_sextic {

PolyMatrix sylvester_matrix(const MultiPoly& u, const MultiPoly& v, std::string_view var) {
    const unsigned m = u.degree(var);
    const unsigned n = v.degree(var);
    if (m == 0 || n == 0)
        throw Error(ErrorCode::ZeroDegree, "resultant needs positive degree in " + std::string(var));
    const auto uc = u.coefficients_in(var);
    const auto vc = v.coefficients_in(var);
    const unsigned size = m + n;
    PolyMatrix s(size, std::vector<MultiPoly>(size));
    for (unsigned row = 0; row < n; ++row)
        for (unsigned k = 0; k <= m; ++k) s[row][row + k] = uc[m - k];
    for (unsigned row = 0; row < m; ++row)
        for (unsigned k = 0; k <= n; ++k) s[n + row][row + k] = vc[n - k];
    return s;
}

MultiPoly bareiss_determinant(PolyMatrix m) {
    const std::size_t size = m.size();
    if (size == 0) return MultiPoly(Rational(1));
    bool negate = false;
    MultiPoly prev(Rational(1));
    for (std::size_t k = 0; k + 1 < size; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < size && m[pivot][k].is_zero()) ++pivot;
            if (pivot == size) return {};
            std::swap(m[k], m[pivot]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < size; ++i) {
            for (std::size_t j = k + 1; j < size; ++j) {
                MultiPoly entry = m[k][k] * m[i][j];
                if (!m[i][k].is_zero()) entry -= m[i][k] * m[k][j];
                m[i][j] = entry.exact_div(prev);
            }
            m[i][k] = MultiPoly{};
        }
        prev = m[k][k];
    }
    MultiPoly det = m[size - 1][size - 1];
    return negate ? -det : det;
}

MultiPoly resultant(const MultiPoly& u, const MultiPoly& v, std::string_view var) {
    return bareiss_determinant(sylvester_matrix(u, v, var));
}

MultiPoly discriminant_wrt(const MultiPoly& f, std::string_view var) {
    const unsigned d = f.degree(var);
    const MultiPoly lead = f.leading_coefficient(var);
    if (lead.is_zero()) throw Error(ErrorCode::ZeroLeadingCoefficient, "leading coefficient is zero");
    if (d < 2) throw Error(ErrorCode::ZeroDegree, "discriminant needs degree >= 2 in " + std::string(var));
    MultiPoly r = resultant(f, f.derivative(var), var).exact_div(lead);
    return (d * (d - 1) / 2) % 2 ? -r : r;
}

namespace {

std::string sole_variable(const MultiPoly& f) {
    if (f.variables().size() > 1)
        throw Error(ErrorCode::InvalidArgument, "expected a univariate polynomial, got " + f.to_string());
    return f.variables().empty() ? std::string("x") : f.variables().front();
}

}  // namespace

MultiPoly SquareFreeDecomposition::reassemble() const {
    MultiPoly out(content);
    for (const auto& part : parts) out *= part.factor.pow(part.multiplicity);
    return out;
}

SquareFreeDecomposition square_free_decomposition(const MultiPoly& f) {
    if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "square-free decomposition of zero");
    const std::string var = sole_variable(f);
    const UniPoly p = f.to_unipoly(var);
    SquareFreeDecomposition out{p.leading(), {}};
    if (p.degree() == 0) return out;

    // Yun: b = gcd(p, p'), c = p/b, d = p'/b - c'; each round peels one multiplicity.
    const UniPoly dp = p.derivative();
    const UniPoly b = gcd(p, dp);
    UniPoly c = p.exact_div(b);
    UniPoly d = dp.exact_div(b) - c.derivative();
    for (unsigned i = 1; c.degree() > 0; ++i) {
        const UniPoly a = gcd(c, d);
        if (a.degree() > 0) out.parts.push_back({MultiPoly::from_unipoly(a, var), i});
        c = c.exact_div(a);
        d = d.exact_div(a) - c.derivative();
    }
    return out;
}

MultiPoly poly_gcd(const MultiPoly& f, const MultiPoly& g) {
    if (f.is_zero() && g.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "gcd(0, 0) is undefined");
    const auto vars = merge_variables(f.variables(), g.variables());
    if (vars.size() > 1) throw Error(ErrorCode::InvalidArgument, "poly_gcd expects univariate input in one variable");
    const std::string var = vars.empty() ? std::string("x") : vars.front();
    return MultiPoly::from_unipoly(gcd(f.to_unipoly(var), g.to_unipoly(var)), var);
}

namespace {

struct ClearedSubstitution {
    UniPoly numerator;
    UniPoly denominator;  // prod_v den(v)^deg_v(f)
};

ClearedSubstitution substitute_cleared(const MultiPoly& f, const Bindings& bindings) {
    const auto& vars = f.variables();
    std::vector<std::vector<UniPoly>> num_pow(vars.size()), den_pow(vars.size());
    std::vector<unsigned> degs(vars.size());
    UniPoly total_den(Rational(1));
    for (std::size_t i = 0; i < vars.size(); ++i) {
        auto it = bindings.find(vars[i]);
        if (it == bindings.end()) throw Error(ErrorCode::UnboundVariable, "no binding for variable " + vars[i]);
        degs[i] = f.degree(vars[i]);
        num_pow[i].push_back(UniPoly(Rational(1)));
        den_pow[i].push_back(UniPoly(Rational(1)));
        for (unsigned k = 1; k <= degs[i]; ++k) {
            num_pow[i].push_back(num_pow[i].back() * it->second.numerator());
            den_pow[i].push_back(den_pow[i].back() * it->second.denominator());
        }
        total_den *= den_pow[i][degs[i]];
    }
    UniPoly acc;
    for (const auto& [e, c] : f.terms()) {
        UniPoly term(c);
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (e[i]) term *= num_pow[i][e[i]];
            if (degs[i] - e[i]) term *= den_pow[i][degs[i] - e[i]];
        }
        acc += term;
    }
    return {std::move(acc), std::move(total_den)};
}

}  // namespace

MultiPoly substitute_rational(const MultiPoly& f, const Bindings& bindings) {
    return MultiPoly::from_unipoly(substitute_cleared(f, bindings).numerator, "t");
}

RationalFunction evaluate_rational(const MultiPoly& f, const Bindings& bindings) {
    auto [num, den] = substitute_cleared(f, bindings);
    return RationalFunction(std::move(num), std::move(den));
}

}  // namespace contact_sextic
