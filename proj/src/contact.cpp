#include "contact_sextic/contact.hpp"

#include <map>

#include "contact_sextic/error.hpp"

namespace contact_sextic {

namespace {

const MultiPoly& var_z() {
    static const MultiPoly v = MultiPoly::variable("z");
    return v;
}

// Directional derivative X(f).
MultiPoly apply_field(const ContactField& X, const MultiPoly& f) {
    return X.xx * f.derivative("x") + X.xy * f.derivative("y") + X.xz * f.derivative("z");
}

}  // namespace

ContactField field_from_hamiltonian(const ContactHamiltonian& h) {
    const MultiPoly hz = h.H.derivative("z");
    return {-hz, h.H - var_z() * hz, h.H.derivative("x") + var_z() * h.H.derivative("y")};
}

ContactHamiltonian contract_with_contact_form(const ContactField& field) { return {field.xy - var_z() * field.xx}; }

ContactField commutator(const ContactField& a, const ContactField& b) {
    return {apply_field(a, b.xx) - apply_field(b, a.xx), apply_field(a, b.xy) - apply_field(b, a.xy),
            apply_field(a, b.xz) - apply_field(b, a.xz)};
}

OneForm lie_derivative_of_contact_form(const ContactField& field) {
    // d(omega) = dx ^ dz, so X _| d(omega) = X^x dz - X^z dx.
    const MultiPoly h = contract_with_contact_form(field).H;
    return {h.derivative("x") - field.xz, h.derivative("y"), h.derivative("z") + field.xx};
}

std::optional<MultiPoly> contact_multiplier(const ContactField& field) {
    const OneForm form = lie_derivative_of_contact_form(field);
    const MultiPoly& c = form.dy;
    // form - c * (dy - z dx) must vanish.
    if (!(form.dx + c * var_z()).is_zero() || !form.dz.is_zero()) return std::nullopt;
    return c;
}

ContactHamiltonian lagrange_bracket(const ContactHamiltonian& h, const ContactHamiltonian& g) {
    return contract_with_contact_form(commutator(field_from_hamiltonian(h), field_from_hamiltonian(g)));
}

std::array<ContactHamiltonian, 10> symmetry_generators() {
    std::array<ContactHamiltonian, 10> out;
    const auto names = symmetry_generator_names();
    for (std::size_t i = 0; i < names.size(); ++i) out[i] = {MultiPoly::parse(names[i])};
    return out;
}

std::array<std::string, 10> symmetry_generator_names() {
    return {"1", "x", "x^2", "y", "z", "x*z", "x^2*z - 2*x*y", "z^2", "2*y*z - x*z^2", "4*x*y*z - 4*y^2 - x^2*z^2"};
}

namespace {

// Rows are monomials, columns are the given polynomials.
RationalMatrix coefficient_matrix(const std::vector<MultiPoly>& polys) {
    std::vector<std::string> vars;
    for (const auto& p : polys) vars = merge_variables(vars, p.variables());
    std::map<std::vector<std::pair<std::string, std::uint32_t>>, std::size_t> index;
    RationalMatrix rows;
    for (std::size_t col = 0; col < polys.size(); ++col) {
        const auto& p = polys[col];
        for (const auto& [e, c] : p.terms()) {
            std::vector<std::pair<std::string, std::uint32_t>> key;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i]) key.emplace_back(p.variables()[i], e[i]);
            auto [it, inserted] = index.emplace(key, rows.size());
            if (inserted) rows.emplace_back(polys.size(), Rational(0));
            rows[it->second][col] = c;
        }
    }
    return rows;
}

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < ncols && r < m.size(); ++col) {
        std::size_t p = r;
        while (p < m.size() && m[p][col] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[r], m[p]);
        const Rational inv = 1 / m[r][col];
        for (auto& v : m[r]) v *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][col] == 0) continue;
            const Rational f = m[i][col];
            for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(col);
        ++r;
    }
    return pivots;
}

}  // namespace

int span_dimension(const std::vector<MultiPoly>& polys) {
    RationalMatrix m = coefficient_matrix(polys);
    return static_cast<int>(row_reduce(m, polys.size()).size());
}

std::optional<std::vector<Rational>> solve_in_span(const std::vector<MultiPoly>& basis, const MultiPoly& target) {
    std::vector<MultiPoly> cols = basis;
    cols.push_back(target);
    RationalMatrix m = coefficient_matrix(cols);
    const auto pivots = row_reduce(m, cols.size());
    if (!pivots.empty() && pivots.back() == basis.size()) return std::nullopt;
    std::vector<Rational> coords(basis.size(), Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) coords[pivots[r]] = m[r][basis.size()];
    return coords;
}

Rational determinant(RationalMatrix m) {
    Rational det = 1;
    const std::size_t n = m.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(m[p], m[k]);
            det = -det;
        }
        det *= m[k][k];
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m[i][k] == 0) continue;
            const Rational f = m[i][k] / m[k][k];
            for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
        }
    }
    return det;
}

Signature symmetric_signature(RationalMatrix a) {
    const std::size_t n = a.size();
    Signature s;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t j = k + 1;
            while (j < n && a[j][j] == 0) ++j;
            if (j < n) {
                std::swap(a[k], a[j]);
                for (auto& row : a) std::swap(row[k], row[j]);
            } else {
                j = k + 1;
                while (j < n && a[k][j] == 0) ++j;
                if (j == n) {
                    ++s.zero;
                    continue;
                }
                // Row/column k += row/column j makes the pivot 2 a[k][j].
                for (std::size_t i = 0; i < n; ++i) a[k][i] += a[j][i];
                for (std::size_t i = 0; i < n; ++i) a[i][k] += a[i][j];
            }
        }
        const Rational pivot = a[k][k];
        (pivot > 0 ? s.positive : s.negative)++;
        // Schur complement keeps the trailing block symmetric.
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            const Rational f = a[i][k] / pivot;
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
        }
        for (std::size_t i = k + 1; i < n; ++i) a[i][k] = a[k][i] = 0;
    }
    return s;
}

bool AlgebraTable::is_antisymmetric() const {
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 10; ++j)
            for (std::size_t k = 0; k < 10; ++k)
                if (structure[i][j][k] != -structure[j][i][k]) return false;
    return true;
}

bool AlgebraTable::satisfies_jacobi() const {
    const auto& C = structure;
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = i + 1; j < 10; ++j)
            for (std::size_t k = j + 1; k < 10; ++k)
                for (std::size_t n = 0; n < 10; ++n) {
                    Rational sum = 0;
                    for (std::size_t m = 0; m < 10; ++m)
                        sum += C[j][k][m] * C[i][m][n] + C[k][i][m] * C[j][m][n] + C[i][j][m] * C[k][m][n];
                    if (sum != 0) return false;
                }
    return true;
}

Rational AlgebraTable::killing_determinant() const { return determinant(killing); }

Signature AlgebraTable::killing_signature() const { return symmetric_signature(killing); }

int AlgebraTable::point_type_count() const {
    int n = 0;
    for (const auto& h : basis) n += h.is_point_type() ? 1 : 0;
    return n;
}

AlgebraTable build_algebra_table() {
    AlgebraTable table;
    table.basis = symmetry_generators();
    std::vector<MultiPoly> polys;
    for (const auto& h : table.basis) polys.push_back(h.H);
    table.span_dimension = span_dimension(polys);
    table.structure.assign(10, RationalMatrix(10, std::vector<Rational>(10, Rational(0))));
    for (std::size_t i = 0; i < 10; ++i) {
        for (std::size_t j = i + 1; j < 10; ++j) {
            const MultiPoly bracket = lagrange_bracket(table.basis[i], table.basis[j]).H;
            const auto coords = solve_in_span(polys, bracket);
            if (!coords)
                throw Error(ErrorCode::ClosureFailure, "bracket of generators " + std::to_string(i) + " and " +
                                                           std::to_string(j) + " leaves the span: " + bracket.to_string());
            for (std::size_t k = 0; k < 10; ++k) {
                table.structure[i][j][k] = (*coords)[k];
                table.structure[j][i][k] = -(*coords)[k];
            }
        }
    }
    table.killing.assign(10, std::vector<Rational>(10, Rational(0)));
    const auto& C = table.structure;
    for (std::size_t i = 0; i < 10; ++i)
        for (std::size_t j = 0; j < 10; ++j) {
            Rational tr = 0;
            for (std::size_t k = 0; k < 10; ++k)
                for (std::size_t l = 0; l < 10; ++l) tr += C[i][l][k] * C[j][k][l];
            table.killing[i][j] = tr;
        }
    return table;
}

ParametricCurve apply_point_transformation(const ParametricCurve& curve, const PointTransformationParams& p) {
    if (p.c4 == 0 || p.c5 == 0) throw Error(ErrorCode::DegenerateMap, "point transformation needs c4 != 0 and c5 != 0");
    const RationalFunction x1 = RationalFunction(p.c5) * curve.x() + RationalFunction(p.c6);
    const RationalFunction d = RationalFunction(1) + RationalFunction(p.c7) * x1;
    if (d.is_zero()) throw Error(ErrorCode::DegenerateDenominator, "1 + c7 x vanishes identically on the curve");
    const RationalFunction x2 = x1 / d;
    const RationalFunction y2 = curve.y() / d.pow(2);
    const RationalFunction y3 =
        RationalFunction(p.c4) * y2 + RationalFunction(p.c1) + RationalFunction(p.c2) * x2 + RationalFunction(p.c3) * x2.pow(2);
    return ParametricCurve(x2, y3);
}

RationalFunction slope(const ParametricCurve& curve) {
    const RationalFunction xdot = curve.x().derivative();
    if (xdot.is_zero()) throw Error(ErrorCode::VerticalCurve, "xdot vanishes identically");
    return curve.y().derivative() / xdot;
}

ContactCurve apply_contact_flow(const ParametricCurve& curve, const ContactFlowParams& flow) {
    return apply_contact_flow(ContactCurve{curve, slope(curve)}, flow);
}

ContactCurve apply_contact_flow(const ContactCurve& lifted, const ContactFlowParams& flow) {
    const RationalFunction& x = lifted.curve.x();
    const RationalFunction& y = lifted.curve.y();
    const RationalFunction& z = lifted.z;
    const RationalFunction c(flow.parameter);
    const RationalFunction one(1);
    const RationalFunction two(2);
    const RationalFunction four(4);
    switch (flow.generator) {
        case ContactGenerator::H8:
            return {ParametricCurve(x - two * c * z, y - c * z.pow(2)), z};
        case ContactGenerator::H9: {
            const RationalFunction d = one - c * z;
            if (d.is_zero()) throw Error(ErrorCode::DegenerateDenominator, "1 - c z vanishes identically");
            const RationalFunction xt = (x * (one + c * z) - two * c * y) / d;
            const RationalFunction yt = (y * (one - two * c * z) + c * x * z.pow(2)) / d.pow(2);
            return {ParametricCurve(xt, yt), z / d};
        }
        case ContactGenerator::H10: {
            const RationalFunction d = one + four * c * y - two * c * x * z;
            if (d.is_zero()) throw Error(ErrorCode::DegenerateDenominator, "1 + 4c y - 2c x z vanishes identically");
            const RationalFunction yt =
                (y + four * c * y.pow(2) - four * c * x * y * z + c * x.pow(2) * z.pow(2)) / d.pow(2);
            return {ParametricCurve(x / d, yt), z / d};
        }
    }
    throw Error(ErrorCode::InvalidArgument, "unknown contact generator");
}

}  // namespace contact_sextic
