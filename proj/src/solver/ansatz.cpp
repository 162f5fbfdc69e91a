#include <functional>
#include <map>

#include "lagrforge/solver/multiplier.hpp"
#include "lagrforge/symexpr/polynomial.hpp"

namespace lagrforge::solver {

namespace {

// Exponent vectors of length `len` with total degree in [lo, hi], ordered by
// total degree, then with earlier variables carrying larger exponents first.
std::vector<std::vector<int>> degree_tuples(std::size_t len, int lo, int hi) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(len, 0);
    for (int total = lo; total <= hi; ++total) {
        std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int left) {
            if (pos + 1 == len) {
                cur[pos] = left;
                out.push_back(cur);
                return;
            }
            for (int e = left; e >= 0; --e) {
                cur[pos] = e;
                rec(pos + 1, left - e);
            }
        };
        if (len == 0) {
            if (total == 0) out.emplace_back();
            continue;
        }
        rec(0, total);
    }
    return out;
}

std::vector<std::vector<int>> box_tuples(std::size_t len, int lo, int hi) {
    std::vector<std::vector<int>> out{{}};
    for (std::size_t i = 0; i < len; ++i) {
        std::vector<std::vector<int>> next;
        for (const auto& prefix : out)
            for (int e = lo; e <= hi; ++e) {
                auto t = prefix;
                t.push_back(e);
                next.push_back(std::move(t));
            }
        out = std::move(next);
    }
    return out;
}

std::string unknown_name(std::size_t k, std::size_t a, std::size_t s, std::size_t m) {
    return "c_" + std::to_string(k + 1) + "_" + std::to_string(a + 1) + "_" + std::to_string(s + 1) + "_" +
           std::to_string(m);
}

// Laurent monomial of a canonical monomial expression.
std::optional<sym::Monomial> as_laurent_monomial(const Expr& e, Rational& coeff) {
    const auto f = sym::to_rational_function(e);
    if (f.is_zero() || !f.num().is_monomial() || !f.den().is_monomial()) return std::nullopt;
    const auto& [nm, nc] = f.num().leading();
    const auto& [dm, dc] = f.den().leading();
    coeff = nc / dc;
    return nm / dm;
}

}  // namespace

std::size_t MultiplierAnsatz::unknown_index(std::size_t k, std::size_t alpha, std::size_t s, std::size_t m) const {
    const std::size_t n = lambda.empty() ? 0 : lambda[0].size();
    const std::size_t r = lambda.size();
    return ((k * n + alpha) * r + s) * basis.size() + m;
}

MultiplierAnsatz build_ansatz(const LieData& lie, const AnsatzConfig& config) {
    if (config.deg_x < 0 || config.min_deg_x < 0 || config.min_deg_x > config.deg_x)
        throw std::invalid_argument("field-variable degree bounds must satisfy 0 <= min <= max");
    if (config.deg_g_min > 0 || config.deg_g_max < 0)
        throw std::invalid_argument("the parameter exponent range must contain 0");

    MultiplierAnsatz ans;
    ans.config = config;
    const std::size_t r = lie.r();
    const std::size_t n = lie.n();

    const auto xs = degree_tuples(n, config.min_deg_x, config.deg_x);
    const auto gs = box_tuples(r, config.deg_g_min, config.deg_g_max);
    const std::size_t total = r * n * r * xs.size() * gs.size();
    if (total > config.max_unknowns)
        throw BasisTooLarge("ansatz needs " + std::to_string(total) + " unknowns, cap is " +
                            std::to_string(config.max_unknowns));

    for (const auto& xe : xs) {
        for (const auto& ge : gs) {
            Expr b(1);
            for (std::size_t a = 0; a < n; ++a)
                if (xe[a] != 0) b = b * sym::pow(Expr(lie.vars.field[a]), xe[a]);
            for (std::size_t i = 0; i < r; ++i)
                if (ge[i] != 0) b = b * sym::pow(Expr(lie.spec.params[i]), ge[i]);
            ans.basis.push_back(sym::canonicalize(b));
        }
    }

    ans.lambda.assign(r, std::vector<std::vector<Expr>>(n, std::vector<Expr>(r)));
    for (std::size_t k = 0; k < r; ++k)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t s = 0; s < r; ++s) {
                std::vector<Expr> terms;
                for (std::size_t m = 0; m < ans.basis.size(); ++m) {
                    Symbol c{unknown_name(k, a, s, m), sym::Role::Unknown, -1, -1};
                    ans.unknowns.push_back(c);
                    terms.push_back(Expr(c) * ans.basis[m]);
                }
                ans.lambda[k][a][s] = sym::canonicalize(Expr::add(std::move(terms)));
            }
    return ans;
}

std::optional<std::vector<Rational>> ansatz_coordinates(const MultiplierAnsatz& ansatz, const Multipliers& lambda) {
    std::map<sym::Monomial, std::size_t> index;
    for (std::size_t m = 0; m < ansatz.basis.size(); ++m) {
        Rational c;
        auto mono = as_laurent_monomial(ansatz.basis[m], c);
        if (mono) index.emplace(*mono, m);
    }
    std::vector<Rational> v(ansatz.unknowns.size(), Rational(0));
    const std::size_t r = ansatz.lambda.size();
    if (lambda.size() != r) return std::nullopt;
    for (std::size_t k = 0; k < r; ++k) {
        const std::size_t n = ansatz.lambda[k].size();
        if (lambda[k].size() != n) return std::nullopt;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t s = 0; s < r; ++s) {
                const auto f = sym::to_rational_function(lambda[k][a][s]);
                if (f.is_zero()) continue;
                if (!f.den().is_monomial()) return std::nullopt;
                const auto& dm = f.den().leading().first;
                for (const auto& [mono, coeff] : f.num().terms()) {
                    auto it = index.find(mono / dm);
                    if (it == index.end()) return std::nullopt;
                    v[ansatz.unknown_index(k, a, s, it->second)] = coeff;
                }
            }
    }
    return v;
}

}  // namespace lagrforge::solver
