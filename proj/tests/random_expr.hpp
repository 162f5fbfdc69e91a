#pragma once

#include <random>

#include "support.hpp"

namespace testing {

/// Seeded random expression trees over x, y, z with small rational constants,
/// integer powers (including negative ones), sin and cos.
class ExprGen {
public:
    explicit ExprGen(std::uint64_t seed) : rng_(seed) {}

    std::vector<Symbol> symbols() const {
        return {Symbol{"x", Role::BaseCoord}, Symbol{"y", Role::BaseCoord}, Symbol{"z", Role::BaseCoord}};
    }

    Expr leaf() {
        if (pick(3) == 0) {
            const long n = static_cast<long>(pick(9)) - 4;
            return q(n == 0 ? 1 : n, static_cast<long>(pick(3)) + 1);
        }
        return Expr(symbols()[pick(3)]);
    }

    Expr operator()(int depth) {
        if (depth <= 0) return leaf();
        switch (pick(7)) {
        case 0:
        case 1: return gen(depth - 1) + gen(depth - 1);
        case 2:
        case 3: return gen(depth - 1) * gen(depth - 1);
        case 4: {
            int e = static_cast<int>(pick(5)) - 2;
            if (e == 0) e = 2;
            // keep negative powers on plain symbols shifted away from zero
            if (e < 0) return Expr::pow(Expr(symbols()[pick(3)]) + q(3), e);
            return Expr::pow(gen(depth - 1), e);
        }
        case 5: return sym::sin(gen(depth - 1));
        default: return sym::cos(gen(depth - 1));
        }
    }

    sym::Env point(double lo = -1.0, double hi = 1.0) {
        std::uniform_real_distribution<double> d(lo, hi);
        sym::Env env;
        for (const auto& s : symbols()) env[s] = d(rng_);
        return env;
    }

private:
    Expr gen(int depth) { return (*this)(depth); }
    std::size_t pick(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
    std::mt19937_64 rng_;
};

}  // namespace testing
