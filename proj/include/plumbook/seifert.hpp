#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "plumbing_tree.hpp"

namespace plumbook {

struct Rational {
    Integer num;
    Integer den = 1;

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num * b.den == b.num * a.den;
    }
};

inline Integer gcd(Integer a, Integer b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Integer r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

inline Rational reduce(Rational r) {
    if (r.den == 0) throw std::domain_error("rational with zero denominator");
    if (r.den < 0) {
        r.num = -r.num;
        r.den = -r.den;
    }
    Integer g = gcd(r.num, r.den);
    if (g > 1) {
        r.num /= g;
        r.den /= g;
    }
    return r;
}

struct SeifertInput {
    long long e0 = 0;
    std::array<Rational, 3> ratios;
};

/// Coefficients [a1..ak], all ≤ -2, with a1 - 1/(a2 - 1/(...)) = -1/r for r in (0,1).
inline std::vector<long long> negative_continued_fraction(Rational r) {
    r = reduce(r);
    if (!(r.num > 0 && r.num < r.den)) throw ValidationError("ratio must lie in (0,1)");
    // Hirzebruch-Jung expansion of den/num > 1, then negate.
    Integer p = r.den, q = r.num;  // x = p/q
    std::vector<long long> out;
    for (;;) {
        Integer b = (p + q - 1) / q;  // ceil(p/q), p,q > 0
        out.push_back(-static_cast<long long>(b));
        Integer rem = b * q - p;  // x' = 1/(b - x) = q/rem
        if (rem == 0) break;
        p = q;
        q = rem;
    }
    return out;
}

/// Evaluates a1 - 1/(a2 - 1/(... - 1/ak)) exactly.
inline Rational evaluate_continued_fraction(const std::vector<long long>& coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("empty continued fraction");
    Rational v{coeffs.back(), 1};
    for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
        if (v.num == 0) throw std::domain_error("continued fraction hits a zero denominator");
        // a - 1/v = (a*num - den)/num
        v = reduce({Integer(coeffs[i]) * v.num - v.den, v.num});
    }
    return reduce(v);
}

/// Star: centre "c" with euler e0; leg i has vertices "l<i>_<j>", j=1 adjacent to the centre.
inline PlumbingTree seifert_to_tree(const SeifertInput& in) {
    if (in.e0 > -3) throw ValidationError("seifert: e0 = " + std::to_string(in.e0) + " is outside the convertible range e0 <= -3");
    std::vector<PlumbingTree::Vertex> vs{{"c", in.e0}};
    std::vector<std::pair<VertexId, VertexId>> es;
    for (std::size_t i = 0; i < 3; ++i) {
        auto leg = negative_continued_fraction(in.ratios[i]);
        VertexId prev = "c";
        for (std::size_t j = 0; j < leg.size(); ++j) {
            VertexId id = "l" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
            vs.push_back({id, leg[j]});
            es.emplace_back(prev, id);
            prev = id;
        }
    }
    return PlumbingTree(std::move(vs), std::move(es));
}

/// Parses "p/q" (or an integer) into a reduced rational.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return reduce({Integer(s), 1});
        return reduce({Integer(s.substr(0, slash)), Integer(s.substr(slash + 1))});
    } catch (const std::runtime_error&) {
        throw ValidationError("malformed rational '" + s + "'");
    }
}

}  // namespace plumbook
