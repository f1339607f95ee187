#include "knotperiod/foxcalc.hpp"

#include "knotperiod/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace knotperiod {

namespace {

std::int64_t add_i64(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw Overflow("integer coefficient overflow (addition)");
    return r;
}

std::int64_t mul_i64(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Overflow("integer coefficient overflow (multiplication)");
    return r;
}

} // namespace

Word::Word(std::vector<Letter> letters) {
    for (const auto& l : letters)
        push_reduced(l);
}

void Word::push_reduced(const Letter& l) {
    if (l.exp == 0)
        return;
    if (!ls_.empty() && ls_.back().gen == l.gen) {
        std::int64_t e = add_i64(ls_.back().exp, l.exp);
        ls_.pop_back();
        if (e != 0)
            ls_.push_back({l.gen, e});
        return;
    }
    ls_.push_back(l);
}

Word Word::operator*(const Word& o) const {
    Word out = *this;
    for (const auto& l : o.ls_)
        out.push_reduced(l);
    return out;
}

Word Word::inverse() const {
    Word out;
    for (auto it = ls_.rbegin(); it != ls_.rend(); ++it)
        out.ls_.push_back({it->gen, -it->exp});
    return out;
}

Word Word::power(int gen, std::int64_t e) {
    Word out;
    if (e != 0)
        out.ls_.push_back({gen, e});
    return out;
}

GroupRingElement GroupRingElement::word(const Word& w, std::int64_t c) {
    GroupRingElement e;
    e.add_term(w, c);
    return e;
}

void GroupRingElement::add_term(const Word& w, std::int64_t c) {
    if (c == 0)
        return;
    auto it = t_.find(w);
    if (it == t_.end()) {
        t_.emplace(w, c);
        return;
    }
    it->second = add_i64(it->second, c);
    if (it->second == 0)
        t_.erase(it);
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
    GroupRingElement out = *this;
    for (const auto& [w, c] : o.t_)
        out.add_term(w, c);
    return out;
}

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
    GroupRingElement out;
    for (const auto& [w1, c1] : t_)
        for (const auto& [w2, c2] : o.t_)
            out.add_term(w1 * w2, mul_i64(c1, c2));
    return out;
}

void IntLaurentPoly::add_term(std::int64_t exp, std::int64_t coeff) {
    if (coeff == 0)
        return;
    auto it = t_.find(exp);
    if (it == t_.end()) {
        t_.emplace(exp, coeff);
        return;
    }
    it->second = add_i64(it->second, coeff);
    if (it->second == 0)
        t_.erase(it);
}

IntLaurentPoly IntLaurentPoly::operator+(const IntLaurentPoly& o) const {
    IntLaurentPoly out = *this;
    for (const auto& [e, c] : o.t_)
        out.add_term(e, c);
    return out;
}

IntLaurentPoly IntLaurentPoly::operator-(const IntLaurentPoly& o) const {
    IntLaurentPoly out = *this;
    for (const auto& [e, c] : o.t_)
        out.add_term(e, -c);
    return out;
}

IntLaurentPoly IntLaurentPoly::operator*(const IntLaurentPoly& o) const {
    IntLaurentPoly out;
    for (const auto& [e1, c1] : t_)
        for (const auto& [e2, c2] : o.t_)
            out.add_term(add_i64(e1, e2), mul_i64(c1, c2));
    return out;
}

std::int64_t IntLaurentPoly::eval_one() const {
    std::int64_t s = 0;
    for (const auto& [e, c] : t_)
        s = add_i64(s, c);
    return s;
}

std::string IntLaurentPoly::str() const {
    if (t_.empty())
        return "0";
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        auto [e, c] = *it;
        if (out.empty()) {
            if (c < 0)
                out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::int64_t a = std::llabs(c);
        if (a != 1 || e == 0)
            out += std::to_string(a);
        if (e != 0) {
            if (a != 1)
                out += "*";
            out += "t";
            if (e != 1)
                out += "^" + std::to_string(e);
        }
    }
    return out;
}

int Presentation::gen_index(const std::string& name) const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        if (generators[i] == name)
            return static_cast<int>(i);
    return -1;
}

namespace {

struct Token {
    std::string text;
    std::size_t line;
    std::size_t col;
};

[[noreturn]] void syntax_error(std::size_t line, std::size_t col, const std::string& what) {
    throw SyntaxError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + what);
}

bool valid_name(const std::string& s) {
    if (s.empty())
        return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')
        return false;
    for (char ch : s)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
            return false;
    return true;
}

std::int64_t parse_int(const std::string& s, const Token& tok) {
    if (s.empty())
        syntax_error(tok.line, tok.col, "expected an integer in '" + tok.text + "'");
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size())
        syntax_error(tok.line, tok.col, "expected digits in '" + tok.text + "'");
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            syntax_error(tok.line, tok.col, "bad integer in '" + tok.text + "'");
    errno = 0;
    char* end = nullptr;
    long long v = std::strtoll(s.c_str(), &end, 10);
    if (errno != 0 || *end != '\0')
        syntax_error(tok.line, tok.col, "integer out of range in '" + tok.text + "'");
    return v;
}

std::vector<std::vector<Token>> tokenize(const std::string& text) {
    std::vector<std::vector<Token>> lines;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        if (!raw.empty() && raw.back() == '\r')
            raw.pop_back();
        auto hash = raw.find('#');
        if (hash != std::string::npos)
            raw.resize(hash);
        std::vector<Token> toks;
        std::size_t i = 0;
        while (i < raw.size()) {
            if (std::isspace(static_cast<unsigned char>(raw[i]))) {
                ++i;
                continue;
            }
            std::size_t start = i;
            while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i])))
                ++i;
            toks.push_back({raw.substr(start, i - start), lineno, start + 1});
        }
        if (!toks.empty())
            lines.push_back(std::move(toks));
    }
    return lines;
}

} // namespace

Presentation parse_presentation(const std::string& text) {
    Presentation pres;
    auto lines = tokenize(text);
    if (lines.empty())
        throw SyntaxError("line 1, column 1: empty presentation");

    bool seen_gens = false, seen_kappa = false, seen_dist = false;
    std::vector<std::size_t> relator_lines;

    for (const auto& toks : lines) {
        const Token& head = toks[0];
        if (head.text == "gens") {
            if (seen_gens)
                syntax_error(head.line, head.col, "duplicate gens line");
            if (seen_kappa || seen_dist || !pres.relators.empty())
                syntax_error(head.line, head.col, "gens must come first");
            if (toks.size() < 2)
                syntax_error(head.line, head.col, "gens line needs at least one generator");
            for (std::size_t i = 1; i < toks.size(); ++i) {
                const Token& t = toks[i];
                if (!valid_name(t.text))
                    syntax_error(t.line, t.col, "bad generator name '" + t.text + "'");
                if (pres.gen_index(t.text) >= 0)
                    syntax_error(t.line, t.col, "duplicate generator '" + t.text + "'");
                pres.generators.push_back(t.text);
            }
            pres.kappa.assign(pres.generators.size(), 1);
            seen_gens = true;
        } else if (head.text == "kappa") {
            if (!seen_gens)
                syntax_error(head.line, head.col, "kappa before gens");
            if (seen_kappa)
                syntax_error(head.line, head.col, "duplicate kappa line");
            if (seen_dist || !pres.relators.empty())
                syntax_error(head.line, head.col, "kappa must come before dist and rel");
            for (std::size_t i = 1; i < toks.size(); ++i) {
                const Token& t = toks[i];
                auto eq = t.text.find('=');
                if (eq == std::string::npos)
                    syntax_error(t.line, t.col, "expected name=weight, got '" + t.text + "'");
                std::string name = t.text.substr(0, eq);
                int gi = pres.gen_index(name);
                if (gi < 0)
                    throw UnknownGenerator("line " + std::to_string(t.line) + ": unknown generator '" + name + "' in kappa");
                pres.kappa[static_cast<std::size_t>(gi)] = parse_int(t.text.substr(eq + 1), t);
            }
            seen_kappa = true;
        } else if (head.text == "dist") {
            if (!seen_gens)
                syntax_error(head.line, head.col, "dist before gens");
            if (seen_dist)
                syntax_error(head.line, head.col, "duplicate dist line");
            if (!pres.relators.empty())
                syntax_error(head.line, head.col, "dist must come before rel lines");
            if (toks.size() != 2)
                syntax_error(head.line, head.col, "dist line needs exactly one generator");
            int gi = pres.gen_index(toks[1].text);
            if (gi < 0)
                throw UnknownGenerator("line " + std::to_string(toks[1].line) + ": unknown generator '" + toks[1].text + "' in dist");
            pres.distinguished = gi;
            seen_dist = true;
        } else if (head.text == "rel") {
            if (!seen_gens)
                syntax_error(head.line, head.col, "rel before gens");
            std::vector<Letter> letters;
            for (std::size_t i = 1; i < toks.size(); ++i) {
                const Token& t = toks[i];
                auto caret = t.text.find('^');
                std::string name = caret == std::string::npos ? t.text : t.text.substr(0, caret);
                if (!valid_name(name))
                    syntax_error(t.line, t.col, "bad relator token '" + t.text + "'");
                int gi = pres.gen_index(name);
                if (gi < 0)
                    throw UnknownGenerator("line " + std::to_string(t.line) + ": unknown generator '" + name + "' in relator");
                std::int64_t e = 1;
                if (caret != std::string::npos)
                    e = parse_int(t.text.substr(caret + 1), t);
                letters.push_back({gi, e});
            }
            pres.relators.emplace_back(std::move(letters));
            relator_lines.push_back(head.line);
        } else {
            syntax_error(head.line, head.col, "unknown directive '" + head.text + "'");
        }
    }

    if (!seen_gens)
        throw SyntaxError("line 1, column 1: missing gens line");
    if (!seen_dist)
        throw NoDistinguishedGenerator("missing dist line");
    if (pres.kappa[static_cast<std::size_t>(pres.distinguished)] != 1)
        throw NoDistinguishedGenerator(
            "distinguished generator '" + pres.generators[static_cast<std::size_t>(pres.distinguished)] +
            "' must have kappa weight 1");

    for (std::size_t r = 0; r < pres.relators.size(); ++r) {
        if (pres.relators[r].is_identity())
            throw TrivialRelator("line " + std::to_string(relator_lines[r]) +
                                 ": relator freely reduces to the empty word");
        std::int64_t w = 0;
        for (const auto& l : pres.relators[r].letters())
            w = add_i64(w, mul_i64(l.exp, pres.kappa[static_cast<std::size_t>(l.gen)]));
        if (w != 0)
            throw KappaWeightNonzero("line " + std::to_string(relator_lines[r]) +
                                     ": relator has kappa weight " + std::to_string(w) + ", expected 0");
    }
    return pres;
}

GroupRingElement fox_derivative(const Word& w, int g) {
    GroupRingElement out;
    Word prefix;
    for (const auto& l : w.letters()) {
        if (l.gen == g) {
            if (l.exp > 0) {
                for (std::int64_t i = 0; i < l.exp; ++i)
                    out.add_term(prefix * Word::power(g, i), 1);
            } else {
                for (std::int64_t i = 1; i <= -l.exp; ++i)
                    out.add_term(prefix * Word::power(g, -i), -1);
            }
        }
        prefix = prefix * Word::power(l.gen, l.exp);
    }
    return out;
}

IntLaurentPoly gamma(const GroupRingElement& e, const std::vector<std::int64_t>& kappa) {
    IntLaurentPoly out;
    for (const auto& [w, c] : e.terms()) {
        std::int64_t weight = 0;
        for (const auto& l : w.letters())
            weight = add_i64(weight, mul_i64(l.exp, kappa[static_cast<std::size_t>(l.gen)]));
        out.add_term(weight, c);
    }
    return out;
}

LaurentMatrix alexander_matrix(const Presentation& pres) {
    const std::size_t n = pres.generators.size();
    if (pres.relators.size() + 1 != n)
        throw ShapeMismatch("knot presentation needs exactly " + std::to_string(n - 1) +
                            " relators for " + std::to_string(n) + " generators, got " +
                            std::to_string(pres.relators.size()));
    LaurentMatrix m;
    m.rows = pres.relators.size();
    m.cols = n - 1;
    m.entries.resize(m.rows * m.cols);
    std::size_t col = 0;
    for (std::size_t g = 0; g < n; ++g) {
        if (static_cast<int>(g) == pres.distinguished)
            continue;
        for (std::size_t r = 0; r < m.rows; ++r)
            m.at(r, col) = gamma(fox_derivative(pres.relators[r], static_cast<int>(g)), pres.kappa);
        ++col;
    }
    return m;
}

namespace {

// Exact division in Z[t, 1/t]; throws InternalError unless it divides.
IntLaurentPoly laurent_divexact(const IntLaurentPoly& a, const IntLaurentPoly& b) {
    if (b.is_zero())
        throw InternalError("laurent_divexact by zero");
    if (a.is_zero())
        return {};
    std::int64_t amin = a.terms().begin()->first, amax = a.terms().rbegin()->first;
    std::int64_t bmin = b.terms().begin()->first, bmax = b.terms().rbegin()->first;
    if (amax - amin < bmax - bmin)
        throw InternalError("laurent_divexact: degree too small");
    std::vector<std::int64_t> rem(static_cast<std::size_t>(amax - amin) + 1, 0);
    for (const auto& [e, c] : a.terms())
        rem[static_cast<std::size_t>(e - amin)] = c;
    std::vector<std::int64_t> div(static_cast<std::size_t>(bmax - bmin) + 1, 0);
    for (const auto& [e, c] : b.terms())
        div[static_cast<std::size_t>(e - bmin)] = c;
    std::size_t dq = rem.size() - div.size();
    std::vector<std::int64_t> quo(dq + 1, 0);
    for (std::size_t k = dq + 1; k-- > 0;) {
        std::int64_t top = rem[k + div.size() - 1];
        if (top == 0)
            continue;
        if (top % div.back() != 0)
            throw InternalError("laurent_divexact: inexact step");
        std::int64_t q = top / div.back();
        quo[k] = q;
        for (std::size_t i = 0; i < div.size(); ++i)
            rem[k + i] = add_i64(rem[k + i], -mul_i64(q, div[i]));
    }
    for (auto c : rem)
        if (c != 0)
            throw InternalError("laurent_divexact: nonzero remainder");
    IntLaurentPoly out;
    for (std::size_t i = 0; i < quo.size(); ++i)
        out.add_term(static_cast<std::int64_t>(i) + amin - bmin, quo[i]);
    return out;
}

} // namespace

IntLaurentPoly laurent_det(const LaurentMatrix& m_in) {
    if (m_in.rows != m_in.cols)
        throw InternalError("laurent_det: square matrix required");
    const std::size_t n = m_in.rows;
    IntLaurentPoly one;
    one.add_term(0, 1);
    if (n == 0)
        return one;
    LaurentMatrix m = m_in;
    // fraction-free (Bareiss) elimination; divisions are exact
    IntLaurentPoly prev = one;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            std::size_t s = k + 1;
            while (s < n && m.at(s, k).is_zero())
                ++s;
            if (s == n)
                return {};
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m.at(k, j), m.at(s, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = laurent_divexact(
                    m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
        prev = m.at(k, k);
    }
    IntLaurentPoly det = m.at(n - 1, n - 1);
    if (sign < 0) {
        IntLaurentPoly minus;
        minus.add_term(0, -1);
        det = det * minus;
    }
    return det;
}

NormalizedMatrix reduce_normalize(const LaurentMatrix& m, PrimeField F) {
    if (m.rows != m.cols)
        throw InternalError("reduce_normalize: square matrix required");

    std::int64_t det1 = laurent_det(m).eval_one();
    if (det1 != 1 && det1 != -1)
        throw NotKnotDeterminant("matrix determinant at t=1 is " + std::to_string(det1) +
                                 ", expected +-1; input is not knot-shaped");

    bool any = false;
    std::int64_t emin = 0;
    for (const auto& e : m.entries)
        for (const auto& [exp, c] : e.terms())
            if (F.reduce(c) != 0) {
                emin = any ? std::min(emin, exp) : exp;
                any = true;
            }
    if (!any && m.rows > 0)
        throw ZeroMatrixModP("matrix is zero mod " + std::to_string(F.p()));

    PolyMatrix out(F, m.rows, m.cols);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) {
            const auto& terms = m.at(i, j).terms();
            std::vector<std::uint64_t> coeffs;
            for (const auto& [exp, c] : terms) {
                std::uint64_t r = F.reduce(c);
                if (r == 0)
                    continue;
                std::size_t idx = static_cast<std::size_t>(exp - emin);
                if (coeffs.size() <= idx)
                    coeffs.resize(idx + 1, 0);
                coeffs[idx] = r;
            }
            out.at(i, j) = Poly(F, std::move(coeffs));
        }
    return {std::move(out), any ? static_cast<int>(-emin) : 0};
}

} // namespace knotperiod
