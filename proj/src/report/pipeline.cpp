#include <cctype>
#include <cmath>
#include <fstream>
#include <numbers>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "lagrforge/report/report.hpp"

namespace lagrforge::pipeline {

dsl::GroupActionSpec load_spec(const std::string& path_or_name) {
    if (auto src = dsl::bundled_group_source(path_or_name)) return dsl::parse_group(*src);
    std::ifstream in(path_or_name);
    if (!in) throw std::invalid_argument("cannot open " + path_or_name);
    std::stringstream ss;
    ss << in.rdbuf();
    return dsl::parse_group(ss.str());
}

solver::AnsatzConfig example_config(const std::string& name) {
    std::string lower;
    for (char ch : name) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    solver::AnsatzConfig c;
    if (lower == "affine1") c.deg_g_min = -1;
    return c;
}

namespace {

sym::Rational parse_rational(const std::string& text) {
    static const std::regex frac(R"(\s*([+-]?\d+)(?:/(\d+))?\s*)");
    static const std::regex dec(R"(\s*([+-]?)(\d*)\.(\d+)\s*)");
    std::smatch m;
    if (std::regex_match(text, m, frac)) {
        sym::Rational q(mpz_class(m[1].str()), mpz_class(m[2].matched ? m[2].str() : "1"));
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator in " + text);
        q.canonicalize();
        return q;
    }
    if (std::regex_match(text, m, dec)) {
        const std::string digits = m[2].str() + m[3].str();
        mpz_class den = 1;
        for (long i = 0; i < m[3].length(); ++i) den *= 10;
        sym::Rational q(mpz_class(digits.empty() ? "0" : digits), den);
        q.canonicalize();
        return m[1] == "-" ? sym::Rational(-q) : q;
    }
    throw std::invalid_argument("not an exact rational: '" + text + "'");
}

}  // namespace

sym::Substitution parse_params(const std::string& text) {
    static const std::regex name(R"(a[1-9]\d*)");
    sym::Substitution out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("expected name=value, got '" + item + "'");
        const std::string key = item.substr(0, eq);
        if (!std::regex_match(key, name)) throw std::invalid_argument("bad free parameter name '" + key + "'");
        const auto sym = solver::free_parameter(std::stoul(key.substr(1)));
        if (out.count(sym)) throw std::invalid_argument("parameter " + key + " given twice");
        out[sym] = sym::Expr(parse_rational(item.substr(eq + 1)));
    }
    return out;
}

double parse_real(const std::string& text) {
    static const std::regex pi(R"(\s*([+-]?\d*\.?\d*)\s*\*?\s*pi\s*)");
    std::smatch m;
    if (std::regex_match(text, m, pi)) {
        const std::string f = m[1].str();
        double factor = 1.0;
        if (f == "-") factor = -1.0;
        else if (!f.empty() && f != "+") factor = std::stod(f);
        return factor * std::numbers::pi;
    }
    if (text.find('/') != std::string::npos) return parse_rational(text).get_d();
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("not a number: '" + text + "'");
    return v;
}

}  // namespace lagrforge::pipeline
