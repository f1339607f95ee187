#pragma once

/**
 * @file foxcalc.hpp
 * @brief Free-group words, knot group presentations, Fox derivatives, and
 *        the Alexander matrix they produce.
 *
 * A presentation is read from a small line format:
 *
 *     # comment
 *     gens x y
 *     kappa x=1 y=1      (optional; omitted generators default to 1)
 *     dist x
 *     rel x y x y^-1 x^-1 y^-1
 *
 * Each relator token is g, g^k, or g^-k. Words are freely reduced as they
 * are read. kappa assigns each generator its abelianization weight; every
 * relator must have total weight zero and the distinguished generator must
 * have weight one. A presentation with n generators needs n-1 relators to
 * be knot-shaped; alexander_matrix enforces that.
 *
 * The Fox derivative d/dg is the additive map on the integral group ring
 * with d(uv) = du + u dv on words and
 *     d(g^n)/dg  = 1 + g + ... + g^(n-1)        for n > 0,
 *     d(g^-n)/dg = -g^-1 - g^-2 - ... - g^-n    for n > 0.
 * gamma abelianizes a group ring element by word weight, g^(weights) -> t^w,
 * giving an integer Laurent polynomial. The Alexander matrix applies gamma
 * to every relator/generator derivative and deletes the distinguished
 * generator's column.
 */

#include "knotperiod/polymatrix.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace knotperiod {

struct Letter {
    int gen;           // index into Presentation::generators
    std::int64_t exp;  // nonzero
    auto operator<=>(const Letter&) const = default;
};

/// Freely reduced word: adjacent letters have distinct generators,
/// exponents are nonzero. The empty word is the identity.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters);  // reduces

    const std::vector<Letter>& letters() const { return ls_; }
    bool is_identity() const { return ls_.empty(); }

    Word operator*(const Word& o) const;
    Word inverse() const;

    /// Single letter g^e; e = 0 gives the identity.
    static Word power(int gen, std::int64_t e);

    auto operator<=>(const Word&) const = default;

private:
    void push_reduced(const Letter& l);
    std::vector<Letter> ls_;
};

/// Element of the integral group ring ZF of the free group: finite formal
/// sum of words with 64-bit checked integer coefficients.
class GroupRingElement {
public:
    GroupRingElement() = default;

    static GroupRingElement word(const Word& w, std::int64_t c = 1);

    void add_term(const Word& w, std::int64_t c);
    const std::map<Word, std::int64_t>& terms() const { return t_; }

    GroupRingElement operator+(const GroupRingElement&) const;
    GroupRingElement operator*(const GroupRingElement&) const;

    bool operator==(const GroupRingElement&) const = default;

private:
    std::map<Word, std::int64_t> t_;
};

/// Integer Laurent polynomial, exponent -> coefficient, zeros dropped.
class IntLaurentPoly {
public:
    IntLaurentPoly() = default;

    void add_term(std::int64_t exp, std::int64_t coeff);
    const std::map<std::int64_t, std::int64_t>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }

    IntLaurentPoly operator+(const IntLaurentPoly&) const;
    IntLaurentPoly operator-(const IntLaurentPoly&) const;
    IntLaurentPoly operator*(const IntLaurentPoly&) const;

    /// Value at t = 1, the coefficient sum.
    std::int64_t eval_one() const;

    std::string str() const;

    bool operator==(const IntLaurentPoly&) const = default;

private:
    std::map<std::int64_t, std::int64_t> t_;
};

struct Presentation {
    std::vector<std::string> generators;
    std::vector<std::int64_t> kappa;  // weight per generator
    int distinguished = -1;           // index with kappa = 1
    std::vector<Word> relators;

    int gen_index(const std::string& name) const;
};

/// Parses the line format described above. Throws SyntaxError (with line and
/// column), UnknownGenerator, KappaWeightNonzero, NoDistinguishedGenerator,
/// or TrivialRelator.
Presentation parse_presentation(const std::string& text);

/// Fox derivative of a word with respect to generator index g.
GroupRingElement fox_derivative(const Word& w, int g);

/// gamma: abelianization by kappa-weight into Z[t, 1/t].
IntLaurentPoly gamma(const GroupRingElement& e, const std::vector<std::int64_t>& kappa);

struct LaurentMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<IntLaurentPoly> entries;

    IntLaurentPoly& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const IntLaurentPoly& at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

/// Alexander matrix: rows are relators, columns are the non-distinguished
/// generators in declaration order, entries gamma(d r_i / d g_k).
/// Throws ShapeMismatch unless #relators = #generators - 1.
LaurentMatrix alexander_matrix(const Presentation& pres);

/// Determinant over Z[t, 1/t] by fraction-free elimination; this is the
/// Alexander polynomial up to a unit for knot-shaped input.
IntLaurentPoly laurent_det(const LaurentMatrix& m);

struct NormalizedMatrix {
    PolyMatrix matrix;
    int t_shift;  // the matrix was multiplied by t^t_shift (negative: divided)
};

/// Reduce mod p and shift by one global power of t so every entry is a
/// polynomial and some entry has a nonzero constant term. Validates the
/// knot determinant condition det(m at t=1) = +-1 over Z first
/// (NotKnotDeterminant) and rejects an all-zero reduction (ZeroMatrixModP,
/// impossible for genuine knot input).
NormalizedMatrix reduce_normalize(const LaurentMatrix& m, PrimeField F);

} // namespace knotperiod
