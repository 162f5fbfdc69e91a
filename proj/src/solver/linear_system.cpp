#include <map>

#include "lagrforge/solver/multiplier.hpp"
#include "lagrforge/symexpr/polynomial.hpp"

namespace lagrforge::solver {

bool LinearSystem::satisfied_by(const std::vector<Rational>& v) const {
    for (const auto& row : rows) {
        Rational acc = 0;
        for (std::size_t c = 0; c < row.size(); ++c)
            if (row[c] != 0 && v.at(c) != 0) acc += row[c] * v[c];
        if (acc != 0) return false;
    }
    return true;
}

LinearSystem LinearSystem::restricted_to(const std::vector<std::size_t>& columns) const {
    LinearSystem out;
    for (std::size_t c : columns) out.unknowns.push_back(unknowns.at(c));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<Rational> row;
        bool nonzero = false;
        for (std::size_t c : columns) {
            row.push_back(rows[i][c]);
            nonzero = nonzero || rows[i][c] != 0;
        }
        if (!nonzero) continue;
        out.rows.push_back(std::move(row));
        out.tags.push_back(tags[i]);
    }
    return out;
}

LinearSystem collect_system(const std::vector<Expr>& residuals, const std::vector<RowTag>& tags,
                            const std::vector<Symbol>& unknowns) {
    LinearSystem sys;
    sys.unknowns = unknowns;
    std::map<std::string, std::size_t> column;
    for (std::size_t c = 0; c < unknowns.size(); ++c) column.emplace(unknowns[c].name, c);

    auto is_unknown = [](const Expr& atom) { return atom.is_symbol() && atom.sym().role == sym::Role::Unknown; };

    for (std::size_t i = 0; i < residuals.size(); ++i) {
        const auto f = sym::to_rational_function(residuals[i]);
        if (f.is_zero()) continue;
        for (const auto& [mono, c] : f.den().terms())
            for (const auto& [atom, e] : mono.factors())
                if (is_unknown(atom))
                    throw NonlinearInUnknowns("unknown " + atom.sym().name + " appears in a denominator");

        // rest-monomial -> row
        std::map<sym::Monomial, std::vector<Rational>> rows;
        for (const auto& [mono, coeff] : f.num().terms()) {
            sym::Monomial rest;
            std::optional<std::size_t> col;
            for (const auto& [atom, e] : mono.factors()) {
                if (is_unknown(atom)) {
                    if (e != 1 || col)
                        throw NonlinearInUnknowns("residual term is not linear in the unknowns");
                    auto it = column.find(atom.sym().name);
                    if (it == column.end())
                        throw NonlinearInUnknowns("residual mentions undeclared unknown " + atom.sym().name);
                    col = it->second;
                } else {
                    rest = rest * sym::Monomial::of(atom, e);
                }
            }
            if (!col) throw NonlinearInUnknowns("residual has a term free of unknowns (inhomogeneous)");
            auto& row = rows[rest];
            if (row.empty()) row.assign(unknowns.size(), Rational(0));
            row[*col] += coeff;
        }
        for (auto& [mono, row] : rows) {
            RowTag tag = i < tags.size() ? tags[i] : RowTag{};
            tag.monomial = sym::to_prefix(sym::laurent_to_expr(sym::Polynomial::term(mono, 1), {}));
            sys.rows.push_back(std::move(row));
            sys.tags.push_back(std::move(tag));
        }
    }
    return sys;
}

Nullspace nullspace(const LinearSystem& system) {
    const std::size_t C = system.cols();
    std::vector<std::vector<mpz_class>> m;
    for (const auto& row : system.rows) {
        mpz_class lcm = 1;
        for (const auto& q : row)
            if (q != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
        std::vector<mpz_class> ints(C);
        bool nonzero = false;
        for (std::size_t c = 0; c < C; ++c) {
            const Rational scaled = row[c] * lcm;
            ints[c] = scaled.get_num();
            nonzero = nonzero || ints[c] != 0;
        }
        if (nonzero) m.push_back(std::move(ints));
    }

    auto make_primitive = [](std::vector<mpz_class>& v) {
        mpz_class g = 0;
        for (const auto& x : v)
            if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g > 1)
            for (auto& x : v)
                if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    };

    Nullspace ns;
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
    std::vector<bool> is_pivot(C, false);
    std::size_t next_row = 0;
    for (std::size_t cc = C; cc-- > 0;) {
        std::size_t p = next_row;
        while (p < m.size() && m[p][cc] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[next_row]);
        const auto& prow = m[next_row];
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == next_row || m[i][cc] == 0) continue;
            const mpz_class a = prow[cc];
            const mpz_class b = m[i][cc];
            for (std::size_t c = 0; c < C; ++c)
                if (prow[c] != 0 || m[i][c] != 0) m[i][c] = a * m[i][c] - b * prow[c];
            make_primitive(m[i]);
        }
        pivots.emplace_back(next_row, cc);
        is_pivot[cc] = true;
        ++next_row;
    }

    for (const auto& [row, col] : pivots) ns.pivot_columns.push_back(col);
    for (std::size_t c = 0; c < C; ++c) {
        if (is_pivot[c]) continue;
        ns.free_columns.push_back(c);
        std::vector<Rational> v(C, Rational(0));
        v[c] = 1;
        for (const auto& [row, col] : pivots) {
            if (m[row][c] == 0) continue;
            v[col] = Rational(-m[row][c], m[row][col]);
            v[col].canonicalize();
        }
        ns.basis.push_back(std::move(v));
    }
    return ns;
}

}  // namespace lagrforge::solver
