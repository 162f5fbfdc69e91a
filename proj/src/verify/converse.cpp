#include <algorithm>
#include <random>
#include <sstream>

#include "lagrforge/verify/verify.hpp"

namespace lagrforge::verify {

namespace {

// Entries that are canonically nonzero but vanish at every sample (trig
// identities) are treated as zero so they never become pivots.
bool vanishes(const Expr& e, const sym::SampleOptions& opts) {
    if (e.is_zero()) return true;
    return sym::equals(e, Expr(0), opts) != sym::Equality::ProvedUnequal;
}

std::string env_string(const sym::Env& env) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, v] : env) {
        os << (first ? "" : ", ") << s.name << "=" << v;
        first = false;
    }
    return os.str();
}

}  // namespace

const char* converse_status_name(ConverseResult::Status s) {
    switch (s) {
    case ConverseResult::Status::Match: return "Match";
    case ConverseResult::Status::Underdetermined: return "Underdetermined";
    case ConverseResult::Status::Mismatch: return "Mismatch";
    }
    return "?";
}

ConverseResult converse_check(const LagrangianFamily& family, const LieData& lie, const sym::Substitution& params,
                              const sym::SampleOptions& opts) {
    ConverseResult out;
    out.params = params;
    const auto fam = family.specialized(params);
    const auto jets = lie.vars.all_jets();
    const std::size_t N = jets.size();

    // equation i:  sum_j A[i][j] * jet_j = rhs[i]
    std::vector<std::vector<Expr>> A;
    std::vector<Expr> rhs;
    for (const auto& L : fam.components) {
        for (auto& e : strong_el(lie, L)) {
            out.equations.push_back(e);
            std::vector<Expr> row;
            Expr rest = e;
            for (const auto& j : jets) {
                auto split = sym::split_affine(rest, j);
                row.push_back(split.coefficient);
                rest = split.remainder;
            }
            A.push_back(std::move(row));
            rhs.push_back(sym::canonicalize(-rest));
        }
    }

    const std::size_t M = A.size();
    std::vector<std::size_t> pivot_col_of_row;
    std::vector<bool> is_pivot(N, false);
    std::size_t row = 0;
    for (std::size_t col = 0; col < N && row < M; ++col) {
        std::optional<std::size_t> best;
        for (std::size_t i = row; i < M; ++i) {
            if (vanishes(A[i][col], opts)) {
                A[i][col] = Expr(0);
                continue;
            }
            if (!best || sym::tree_size(A[i][col]) < sym::tree_size(A[*best][col])) best = i;
        }
        if (!best) continue;
        std::swap(A[*best], A[row]);
        std::swap(rhs[*best], rhs[row]);

        const Expr inv = Expr::pow(A[row][col], -1);
        for (std::size_t c = 0; c < N; ++c) A[row][c] = c == col ? Expr(1) : sym::canonicalize(A[row][c] * inv);
        rhs[row] = sym::canonicalize(rhs[row] * inv);

        for (std::size_t i = 0; i < M; ++i) {
            if (i == row || A[i][col].is_zero()) continue;
            const Expr f = A[i][col];
            for (std::size_t c = 0; c < N; ++c)
                A[i][c] = c == col ? Expr(0) : sym::canonicalize(A[i][c] - f * A[row][c]);
            rhs[i] = sym::canonicalize(rhs[i] - f * rhs[row]);
        }
        pivot_col_of_row.push_back(col);
        is_pivot[col] = true;
        ++row;
    }

    bool mismatch = false;
    std::ostringstream diag;
    for (std::size_t i = row; i < M; ++i) {
        if (vanishes(rhs[i], opts)) continue;
        mismatch = true;
        diag << "inconsistent equation: 0 = " << sym::to_prefix(rhs[i]) << "; ";
    }

    for (std::size_t c = 0; c < N; ++c)
        if (!is_pivot[c]) out.unsolved.push_back(jets[c]);

    for (std::size_t i = 0; i < row; ++i) {
        const std::size_t col = pivot_col_of_row[i];
        bool coupled = false;
        for (std::size_t c = 0; c < N; ++c)
            if (!is_pivot[c] && !vanishes(A[i][c], opts)) coupled = true;
        if (coupled) {
            out.unsolved.push_back(jets[col]);
            continue;
        }
        JetValue jv;
        jv.jet = jets[col];
        jv.value = rhs[i];
        auto it = lie.onshell.find(jets[col]);
        jv.expected = it == lie.onshell.end() ? Expr(0) : it->second;
        const auto cmp = sym::compare_exprs(jv.value, jv.expected, opts);
        jv.verdict = to_verdict(cmp.verdict);
        jv.witness = cmp.sampling.witness;
        if (jv.verdict == Verdict::Failed) {
            mismatch = true;
            diag << jv.jet.name << " = " << sym::to_prefix(jv.value) << " but the Lie equation gives "
                 << sym::to_prefix(jv.expected);
            if (jv.witness) diag << " (differ at " << env_string(*jv.witness) << ")";
            diag << "; ";
        }
        out.solved.push_back(std::move(jv));
    }
    std::sort(out.unsolved.begin(), out.unsolved.end());

    if (mismatch) {
        out.status = ConverseResult::Status::Mismatch;
    } else if (!out.unsolved.empty()) {
        out.status = ConverseResult::Status::Underdetermined;
        diag << "undetermined:";
        for (const auto& s : out.unsolved) diag << " " << s.name;
    } else {
        out.status = ConverseResult::Status::Match;
    }
    out.diagnostic = diag.str();
    return out;
}

sym::Substitution complete_params(const LagrangianFamily& family, const sym::Substitution& given, std::uint64_t seed) {
    sym::Substitution out = given;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(1, 97);
    std::uniform_int_distribution<int> den(1, 89);
    std::bernoulli_distribution negative(0.5);
    for (const auto& p : family.free_params) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        if (negative(rng)) q = -q;
        if (!out.count(p)) out[p] = Expr(q);
    }
    return out;
}

std::vector<Specialization> DegeneracyScan::degenerate() const {
    std::vector<Specialization> out;
    for (const auto& s : tried)
        if (s.degenerate()) out.push_back(s);
    return out;
}

DegeneracyScan degeneracy_scan(const LagrangianFamily& family, const LieData& lie, std::uint64_t seed,
                               const sym::SampleOptions& opts) {
    DegeneracyScan scan;
    const std::size_t d = family.free_params.size();
    if (d > kMaxScanParams) {
        scan.note = "skipped: " + std::to_string(d) + " free parameters exceed the scan limit of " +
                    std::to_string(kMaxScanParams);
        return scan;
    }
    scan.performed = true;
    if (family.empty()) {
        scan.tried.push_back(Specialization{"zero family", {}, ConverseResult::Status::Underdetermined});
        scan.note = "the family is identically zero";
        return scan;
    }
    for (std::size_t i = 0; i < d; ++i) {
        Specialization s;
        s.label = "basis " + family.free_params[i].name;
        for (std::size_t j = 0; j < d; ++j) s.params[family.free_params[j]] = Expr(i == j ? 1 : 0);
        s.status = converse_check(family, lie, s.params, opts).status;
        scan.tried.push_back(std::move(s));
    }
    Specialization g;
    g.label = "generic";
    g.params = complete_params(family, {}, seed);
    g.status = converse_check(family, lie, g.params, opts).status;
    scan.tried.push_back(std::move(g));
    return scan;
}

}  // namespace lagrforge::verify
