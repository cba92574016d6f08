#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdlib>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "int_matrix.hpp"
#include "open_book.hpp"
#include "snf.hpp"

namespace plumbook {

struct TwistLetter {
    std::string curve;
    int sign = 1;
    friend bool operator==(const TwistLetter&, const TwistLetter&) = default;
    friend auto operator<=>(const TwistLetter&, const TwistLetter&) = default;
};

/// Written left to right, composed right to left.
using TwistWord = std::vector<TwistLetter>;

class WordSyntaxError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

class WordParser {
public:
    explicit WordParser(std::string_view s) : s_(s) {}

    TwistWord parse() {
        TwistWord w = sequence();
        skip();
        if (i_ != s_.size()) throw err("unexpected '" + std::string(1, s_[i_]) + "'");
        return w;
    }

private:
    WordSyntaxError err(const std::string& m) const {
        return WordSyntaxError("word: " + m + " at offset " + std::to_string(i_));
    }
    void skip() {
        while (i_ < s_.size() && (std::isspace(static_cast<unsigned char>(s_[i_])) || s_[i_] == '*' || s_[i_] == '.'))
            ++i_;
    }
    TwistWord sequence() {
        TwistWord w;
        for (;;) {
            skip();
            if (i_ >= s_.size() || s_[i_] == ')') return w;
            TwistWord f = factor();
            w.insert(w.end(), f.begin(), f.end());
        }
    }
    TwistWord factor() {
        TwistWord base;
        if (s_[i_] == '(') {
            ++i_;
            base = sequence();
            if (i_ >= s_.size() || s_[i_] != ')') throw err("missing ')'");
            ++i_;
        } else {
            base.push_back({name(), 1});
        }
        long long e = exponent();
        TwistWord out;
        if (e < 0) {
            TwistWord inv;
            for (auto it = base.rbegin(); it != base.rend(); ++it) inv.push_back({it->curve, -it->sign});
            base = std::move(inv);
            e = -e;
        }
        for (long long k = 0; k < e; ++k) out.insert(out.end(), base.begin(), base.end());
        return out;
    }
    std::string name() {
        // Accepts a, a1, a_1, t_a, t_{a_1}.
        if (s_.substr(i_, 2) == "t_") i_ += 2;
        std::string n;
        if (i_ < s_.size() && s_[i_] == '{') {
            ++i_;
            while (i_ < s_.size() && s_[i_] != '}') n.push_back(s_[i_++]);
            if (i_ >= s_.size()) throw err("missing '}'");
            ++i_;
        } else {
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_' || s_[i_] == '\''))
                n.push_back(s_[i_++]);
        }
        n.erase(std::remove(n.begin(), n.end(), '_'), n.end());
        if (n.empty()) throw err("expected a curve name");
        return n;
    }
    long long exponent() {
        skip();
        if (i_ >= s_.size() || s_[i_] != '^') return 1;
        ++i_;
        bool brace = i_ < s_.size() && s_[i_] == '{';
        if (brace) ++i_;
        std::string num;
        if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) num.push_back(s_[i_++]);
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) num.push_back(s_[i_++]);
        if (brace) {
            if (i_ >= s_.size() || s_[i_] != '}') throw err("missing '}'");
            ++i_;
        }
        if (num.empty() || num == "-" || num == "+") throw err("expected exponent");
        return std::stoll(num);
    }

    std::string_view s_;
    std::size_t i_ = 0;
};

}  // namespace detail

/// Parses "a^2 c^3 b^5", "(b a)^5", "t_{a_1} t_a^-1" and similar.
inline TwistWord parse_word(std::string_view s) { return detail::WordParser(s).parse(); }

/// Letter-level text, e.g. "a a c^-1".
inline std::string format_word(const TwistWord& w) {
    std::string out;
    for (const auto& l : w) {
        if (!out.empty()) out += ' ';
        out += l.curve;
        if (l.sign < 0) out += "^-1";
    }
    return out;
}

/// Run-length form in twist notation, e.g. "t_a t_c^3 t_b^5".
inline std::string format_twists(const TwistWord& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size();) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        long long e = static_cast<long long>(j - i) * w[i].sign;
        if (!out.empty()) out += ' ';
        out += "t_" + w[i].curve;
        if (e != 1) out += "^" + std::to_string(e);
        i = j;
    }
    return out;
}

inline TwistWord inverse(const TwistWord& w) {
    TwistWord out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->curve, -it->sign});
    return out;
}

inline TwistWord to_twist_word(const std::vector<Letter>& letters) {
    TwistWord w;
    for (const auto& l : letters) w.push_back({l.curve, l.sign});
    return w;
}

class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// t_curve = conjugator⁻¹ · t_target · conjugator
struct ConjugationRelation {
    std::string curve;
    TwistWord conjugator;
    std::string target;
};

/// Curves on a page with classes in H₁(Σ), the intersection form J, the
/// duality pairing P between H₁(Σ,∂Σ) and H₁(Σ), and ι: H₁(Σ) → H₁(Σ,∂Σ).
class CurveAlgebra {
public:
    CurveAlgebra() = default;
    explicit CurveAlgebra(IntMatrix J) : J_(std::move(J)) {
        if (!J_.is_skew()) throw AlgebraError("intersection form must be skew-symmetric");
        P_ = IntMatrix::identity(J_.rows());
        iota_ = J_;
    }

    /// Band-core basis of a built page; cocores are dual to cores.
    static CurveAlgebra from_book(const AbstractOpenBook& book) {
        CurveAlgebra a(book.page.intersection_form());
        for (const auto& c : book.curves) a.add_curve(c.name, book.class_of(c.name));
        a.page_ = book.page;
        a.has_page_ = true;
        return a;
    }

    [[nodiscard]] std::size_t dim() const { return J_.rows(); }
    [[nodiscard]] const IntMatrix& J() const { return J_; }
    [[nodiscard]] const IntMatrix& P() const { return P_; }
    [[nodiscard]] const IntMatrix& iota() const { return iota_; }

    void add_curve(const std::string& name, ClassVector cls) {
        if (cls.size() != dim()) throw AlgebraError("curve '" + name + "' has the wrong dimension");
        if (classes_.count(name)) throw AlgebraError("duplicate curve '" + name + "'");
        classes_[name] = std::move(cls);
        order_.push_back(name);
    }
    [[nodiscard]] bool has(const std::string& name) const { return classes_.count(name) > 0; }
    [[nodiscard]] const ClassVector& cls(const std::string& name) const {
        auto it = classes_.find(name);
        if (it == classes_.end()) throw AlgebraError("unknown curve '" + name + "'");
        return it->second;
    }
    [[nodiscard]] const std::vector<std::string>& names() const { return order_; }
    void require(const std::string& name) const { (void)cls(name); }

    void rename(const std::map<std::string, std::string>& m) {
        std::map<std::string, ClassVector> cl;
        for (auto& n : order_) {
            auto it = m.find(n);
            std::string nn = it == m.end() ? n : it->second;
            if (cl.count(nn)) throw AlgebraError("rename collides on '" + nn + "'");
            cl[nn] = classes_.at(n);
            n = nn;
        }
        classes_ = std::move(cl);
    }

    [[nodiscard]] Integer pairing(const ClassVector& x, const ClassVector& y) const { return bilinear(x, J_, y); }
    [[nodiscard]] Integer pairing(const std::string& x, const std::string& y) const { return pairing(cls(x), cls(y)); }

    void declare_intersection(const std::string& x, const std::string& y, int n) {
        require(x);
        require(y);
        if (n < 0) throw AlgebraError("geometric intersection must be non-negative");
        if (abs(pairing(x, y)) > n || (abs(pairing(x, y)) - n) % 2 != 0)
            throw AlgebraError("declared intersection of " + x + "," + y + " contradicts the algebraic one");
        geometric_[std::minmax(x, y)] = n;
    }

    /// Declared value, else derived for band cores of the page (interleaved feet meet once).
    [[nodiscard]] std::optional<int> geometric_intersection(const std::string& x, const std::string& y) const {
        if (x == y) return 0;
        auto it = geometric_.find(std::minmax(x, y));
        if (it != geometric_.end()) return it->second;
        auto bx = band_core(x), by = band_core(y);
        if (bx && by) return page_.intersection(*bx, *by) != 0 ? 1 : 0;
        return std::nullopt;
    }

    void register_relation(ConjugationRelation r) {
        require(r.curve);
        require(r.target);
        for (const auto& l : r.conjugator) require(l.curve);
        // t_{f(x)} = f t_x f⁻¹ with f = M(conjugator)⁻¹, so [curve] = ±M(conjugator)⁻¹[target].
        ClassVector img = mat_vec(word_matrix(inverse(r.conjugator)), cls(r.target));
        ClassVector neg = img;
        for (auto& v : neg) v = -v;
        if (img != cls(r.curve) && neg != cls(r.curve))
            throw AlgebraError("relation for '" + r.curve + "' is inconsistent with its homology class");
        relations_[r.curve] = std::move(r);
    }
    [[nodiscard]] const ConjugationRelation* relation(const std::string& c) const {
        auto it = relations_.find(c);
        return it == relations_.end() ? nullptr : &it->second;
    }
    [[nodiscard]] const std::map<std::string, ConjugationRelation>& relations() const { return relations_; }

    /// y ↦ y + sign·J(y,c)·c, i.e. I + sign·c·(Jc)ᵀ.
    [[nodiscard]] IntMatrix twist_matrix(const ClassVector& c, int sign = 1) const {
        ClassVector Jc = mat_vec(J_, c);
        IntMatrix T = IntMatrix::identity(dim());
        for (std::size_t r = 0; r < dim(); ++r)
            for (std::size_t k = 0; k < dim(); ++k) T(r, k) += sign * c[r] * Jc[k];
        return T;
    }
    [[nodiscard]] IntMatrix twist_matrix(const std::string& name, int sign = 1) const {
        return twist_matrix(cls(name), sign);
    }

    /// Product T_{L1}···T_{Ln} of the written word.
    [[nodiscard]] IntMatrix word_matrix(const TwistWord& w) const {
        IntMatrix M = IntMatrix::identity(dim());
        for (const auto& l : w) M = M * twist_matrix(l.curve, l.sign);
        return M;
    }

    /// Boundary-type letters act trivially on H₁; their signed counts per class
    /// are recorded separately.
    [[nodiscard]] std::map<ClassVector, long long> boundary_exponents(const TwistWord& w) const {
        std::map<ClassVector, long long> out;
        for (const auto& l : w) {
            ClassVector Jc = mat_vec(J_, cls(l.curve));
            if (std::all_of(Jc.begin(), Jc.end(), [](const Integer& x) { return x == 0; })) {
                ClassVector key = cls(l.curve);
                // Orientation of a curve does not change its twist.
                auto nz = std::find_if(key.begin(), key.end(), [](const Integer& x) { return x != 0; });
                if (nz != key.end() && *nz < 0)
                    for (auto& x : key) x = -x;
                out[key] += l.sign;
            }
        }
        for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
        return out;
    }

private:
    [[nodiscard]] std::optional<std::size_t> band_core(const std::string& n) const {
        if (!has_page_) return std::nullopt;
        const ClassVector& c = cls(n);
        std::optional<std::size_t> b;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            if (b || abs(c[i]) != 1) return std::nullopt;
            b = i;
        }
        return b;
    }

    IntMatrix J_, P_, iota_;
    std::map<std::string, ClassVector> classes_;
    std::vector<std::string> order_;
    std::map<std::pair<std::string, std::string>, int> geometric_;
    std::map<std::string, ConjugationRelation> relations_;
    RibbonPage page_;
    bool has_page_ = false;
};

/// Columns are V(δ_j) = φ_*(δ_j) − δ_j for the relative basis δ_j. Letters act
/// rightmost first: w ← w + sign·(P(δ_j,c) + J(w,c))·c.
inline IntMatrix variation_matrix(const CurveAlgebra& alg, const TwistWord& word) {
    const std::size_t k = alg.dim();
    IntMatrix V(k, k);
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const ClassVector& c = alg.cls(it->curve);
        ClassVector Jc = mat_vec(alg.J(), c);
        ClassVector Pc = mat_vec(alg.P().transpose(), c);
        for (std::size_t j = 0; j < k; ++j) {
            Integer coef = Pc[j];
            for (std::size_t r = 0; r < k; ++r) coef += V(r, j) * Jc[r];
            if (coef == 0) continue;
            coef *= it->sign;
            for (std::size_t r = 0; r < k; ++r) V(r, j) += coef * c[r];
        }
    }
    return V;
}

/// H₁ of the closed manifold: coker of the variation map.
inline SnfResult variation_h1(const CurveAlgebra& alg, const TwistWord& word) {
    return smith_normal_form(variation_matrix(alg, word));
}

inline SnfResult variation_h1(const AbstractOpenBook& book) {
    return variation_h1(CurveAlgebra::from_book(book), to_twist_word(book.monodromy));
}

// ---------------------------------------------------------------- rewriting

enum class Rule { commute, braid, substitute, cyclic, cancel, insert };

inline const char* rule_name(Rule r) {
    switch (r) {
        case Rule::commute: return "commute";
        case Rule::braid: return "braid";
        case Rule::substitute: return "substitute";
        case Rule::cyclic: return "cyclic";
        case Rule::cancel: return "cancel";
        case Rule::insert: return "insert";
    }
    return "?";
}

inline Rule parse_rule(const std::string& s) {
    for (Rule r : {Rule::commute, Rule::braid, Rule::substitute, Rule::cyclic, Rule::cancel, Rule::insert})
        if (s == rule_name(r)) return r;
    throw AlgebraError("unknown rewrite rule '" + s + "'");
}

/// commute: swap letters pos, pos+1. braid: xyx → yxy at pos. substitute:
/// replace the letter at pos by its registered conjugate. cyclic: XY → YX with
/// |X| = pos. cancel: drop x^e x^-e at pos. insert: put arg arg^-1 at pos.
struct RewriteStep {
    Rule rule;
    std::size_t pos = 0;
    std::string arg;
    friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
};

class RewriteError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline TwistWord rewrite_step(const TwistWord& w, const RewriteStep& st, const CurveAlgebra& alg) {
    auto fail = [&](const std::string& m) {
        return RewriteError(std::string(rule_name(st.rule)) + " at " + std::to_string(st.pos) + ": " + m);
    };
    const std::size_t n = w.size();
    TwistWord out = w;
    switch (st.rule) {
        case Rule::commute: {
            if (st.pos + 1 >= n) throw fail("position out of range");
            const auto &x = w[st.pos], &y = w[st.pos + 1];
            if (alg.pairing(x.curve, y.curve) != 0) throw fail("curves " + x.curve + "," + y.curve + " intersect algebraically");
            auto g = alg.geometric_intersection(x.curve, y.curve);
            if (!g || *g != 0) throw fail("curves " + x.curve + "," + y.curve + " are not declared disjoint");
            std::swap(out[st.pos], out[st.pos + 1]);
            return out;
        }
        case Rule::braid: {
            if (st.pos + 2 >= n) throw fail("position out of range");
            const auto &x = w[st.pos], &y = w[st.pos + 1], &z = w[st.pos + 2];
            if (!(x == z) || x.curve == y.curve || x.sign != y.sign) throw fail("not of the form x y x with equal signs");
            auto g = alg.geometric_intersection(x.curve, y.curve);
            if (!g || *g != 1) throw fail("curves " + x.curve + "," + y.curve + " are not declared to meet once");
            out[st.pos] = y;
            out[st.pos + 1] = x;
            out[st.pos + 2] = y;
            return out;
        }
        case Rule::substitute: {
            if (st.pos >= n) throw fail("position out of range");
            const auto& x = w[st.pos];
            const ConjugationRelation* rel = alg.relation(x.curve);
            if (!rel) throw fail("no relation registered for " + x.curve);
            TwistWord rep = inverse(rel->conjugator);
            rep.push_back({rel->target, x.sign});
            rep.insert(rep.end(), rel->conjugator.begin(), rel->conjugator.end());
            out.erase(out.begin() + static_cast<std::ptrdiff_t>(st.pos));
            out.insert(out.begin() + static_cast<std::ptrdiff_t>(st.pos), rep.begin(), rep.end());
            return out;
        }
        case Rule::cyclic: {
            if (st.pos > n) throw fail("position out of range");
            std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(st.pos), out.end());
            return out;
        }
        case Rule::cancel: {
            if (st.pos + 1 >= n) throw fail("position out of range");
            if (w[st.pos].curve != w[st.pos + 1].curve || w[st.pos].sign != -w[st.pos + 1].sign)
                throw fail("letters are not mutually inverse");
            out.erase(out.begin() + static_cast<std::ptrdiff_t>(st.pos), out.begin() + static_cast<std::ptrdiff_t>(st.pos) + 2);
            return out;
        }
        case Rule::insert: {
            if (st.pos > n) throw fail("position out of range");
            if (!alg.has(st.arg)) throw fail("unknown curve '" + st.arg + "'");
            TwistWord pairw{{st.arg, 1}, {st.arg, -1}};
            out.insert(out.begin() + static_cast<std::ptrdiff_t>(st.pos), pairw.begin(), pairw.end());
            return out;
        }
    }
    throw fail("unknown rule");
}

/// Homology image preserved: equal products, or conjugate by M(X) for a cyclic move.
inline bool step_sound(const TwistWord& before, const TwistWord& after, const RewriteStep& st, const CurveAlgebra& alg) {
    IntMatrix M0 = alg.word_matrix(before), M1 = alg.word_matrix(after);
    if (st.rule != Rule::cyclic) return M0 == M1;
    TwistWord X(before.begin(), before.begin() + static_cast<std::ptrdiff_t>(st.pos));
    IntMatrix MX = alg.word_matrix(X);
    return MX * M1 == M0 * MX;
}

struct TraceEntry {
    RewriteStep step;
    TwistWord word;  // after the step
};

struct ReplayResult {
    bool ok = false;
    std::vector<TraceEntry> trace;
    std::string error;
    TwistWord final_word;
};

/// Applies the steps in order, checking homological soundness after each.
inline ReplayResult replay(const TwistWord& start, const std::vector<RewriteStep>& steps, const CurveAlgebra& alg) {
    ReplayResult r;
    TwistWord cur = start;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        TwistWord next;
        try {
            next = rewrite_step(cur, steps[i], alg);
        } catch (const RewriteError& e) {
            r.error = "step " + std::to_string(i + 1) + ": " + e.what();
            r.final_word = cur;
            return r;
        }
        if (!step_sound(cur, next, steps[i], alg)) {
            r.error = "step " + std::to_string(i + 1) + ": homology image changed";
            r.final_word = cur;
            return r;
        }
        r.trace.push_back({steps[i], next});
        cur = std::move(next);
    }
    r.ok = true;
    r.final_word = cur;
    return r;
}

struct RewriteScript {
    std::string name;
    TwistWord start;
    TwistWord target;
    std::vector<RewriteStep> steps;
};

enum class Verdict { proved_equal, homology_equal, distinct_on_homology };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::proved_equal: return "proved-equal";
        case Verdict::homology_equal: return "homology-equal";
        case Verdict::distinct_on_homology: return "distinct-on-homology";
    }
    return "?";
}

struct EquivalenceResult {
    Verdict verdict;
    TwistWord start;
    std::vector<TraceEntry> trace;  // rewrites from start to the other word
    std::string method;             // identical | script:<name> | search | homology
};

inline std::size_t rewrite_budget(std::size_t fallback = 20000) {
    if (const char* e = std::getenv("PLUMBOOK_REWRITE_BUDGET")) {
        try {
            long long v = std::stoll(e);
            if (v >= 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return fallback;
}

namespace detail {

inline const std::set<Rule>& all_rules() {
    static const std::set<Rule> r{Rule::commute, Rule::braid, Rule::substitute, Rule::cyclic, Rule::cancel};
    return r;
}

/// Breadth-first search over single rewrites, words up to max_len letters.
inline std::optional<std::vector<TraceEntry>> search(const TwistWord& from, const TwistWord& to, const CurveAlgebra& alg,
                                                     std::size_t budget, std::size_t max_len,
                                                     const std::set<Rule>& allowed) {
    std::map<TwistWord, std::pair<TwistWord, RewriteStep>> parent;
    std::deque<TwistWord> queue{from};
    parent[from] = {from, {Rule::cyclic, 0, {}}};
    std::size_t expanded = 0;
    while (!queue.empty() && expanded < budget) {
        TwistWord w = queue.front();
        queue.pop_front();
        ++expanded;
        if (w == to) {
            std::vector<TraceEntry> tr;
            for (TwistWord cur = w; cur != from;) {
                auto& [prev, st] = parent.at(cur);
                tr.push_back({st, cur});
                cur = prev;
            }
            std::reverse(tr.begin(), tr.end());
            return tr;
        }
        std::vector<RewriteStep> moves;
        for (std::size_t p = 0; p < w.size(); ++p) {
            moves.push_back({Rule::commute, p, {}});
            moves.push_back({Rule::braid, p, {}});
            moves.push_back({Rule::cancel, p, {}});
            if (w.size() + 2 <= max_len) moves.push_back({Rule::substitute, p, {}});
        }
        if (w.size() > 1) {
            moves.push_back({Rule::cyclic, 1, {}});
            moves.push_back({Rule::cyclic, w.size() - 1, {}});
        }
        for (const auto& m : moves) {
            if (!allowed.count(m.rule)) continue;
            TwistWord nw;
            try {
                nw = rewrite_step(w, m, alg);
            } catch (const RewriteError&) {
                continue;
            }
            if (nw.size() > max_len || parent.count(nw)) continue;
            parent[nw] = {w, m};
            queue.push_back(std::move(nw));
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Guided scripts first, then bounded search, then the homology comparison
/// (transvection products and boundary-twist exponent sums).
inline EquivalenceResult words_equivalent(const TwistWord& w1, const TwistWord& w2, const CurveAlgebra& alg,
                                          const std::vector<RewriteScript>& scripts = {},
                                          std::optional<std::size_t> budget = std::nullopt) {
    for (const auto& l : w1) alg.require(l.curve);
    for (const auto& l : w2) alg.require(l.curve);
    if (w1 == w2) return {Verdict::proved_equal, w1, {}, "identical"};
    for (const auto& s : scripts) {
        bool fwd = s.start == w1 && s.target == w2;
        bool bwd = s.start == w2 && s.target == w1;
        if (!fwd && !bwd) continue;
        ReplayResult r = replay(s.start, s.steps, alg);
        if (r.ok && r.final_word == s.target) return {Verdict::proved_equal, s.start, r.trace, "script:" + s.name};
    }
    std::size_t b = budget ? *budget : rewrite_budget();
    if (b > 0) {
        std::size_t max_len = std::max(w1.size(), w2.size()) + 4;
        if (auto tr = detail::search(w1, w2, alg, b, max_len, detail::all_rules()))
            return {Verdict::proved_equal, w1, *tr, "search"};
    }
    bool same = alg.word_matrix(w1) == alg.word_matrix(w2) && alg.boundary_exponents(w1) == alg.boundary_exponents(w2);
    return {same ? Verdict::homology_equal : Verdict::distinct_on_homology, w1, {}, "homology"};
}

/// Rewrite path from `from` to `to` using only the given rules (by default the
/// open-book isomorphism moves: cyclic permutation and commutation).
inline std::optional<std::vector<TraceEntry>> normalize(const TwistWord& from, const TwistWord& to, const CurveAlgebra& alg,
                                                        const std::set<Rule>& allowed = {Rule::cyclic, Rule::commute},
                                                        std::optional<std::size_t> budget = std::nullopt) {
    if (from == to) return std::vector<TraceEntry>{};
    return detail::search(from, to, alg, budget ? *budget : rewrite_budget(), std::max(from.size(), to.size()), allowed);
}

}  // namespace plumbook
