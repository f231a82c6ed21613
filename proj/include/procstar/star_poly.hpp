#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "procstar/core.hpp"

namespace procstar {

/// A letter of a presentation alphabet. Letters are ranked
/// vertices < edges < starred edges, each block by index, so the numeric
/// value is also the reduction-order rank.
using Letter = std::int32_t;
using Word = std::vector<Letter>;

/// Degree-lexicographic order on words.
struct DegLexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// The generator alphabet of one presentation: vertex letters
/// [0, nv), edge letters [nv, nv+ne), starred letters [nv+ne, nv+2ne).
struct Alphabet {
    int num_vertices = 0;
    int num_edges = 0;
    std::vector<std::string> names;  // size nv + 2*ne

    int total() const { return num_vertices + 2 * num_edges; }
    bool is_vertex(Letter l) const { return l < num_vertices; }
    bool is_edge(Letter l) const {
        return l >= num_vertices && l < num_vertices + num_edges;
    }
    bool is_star(Letter l) const { return l >= num_vertices + num_edges; }

    /// The star involution: vertices are self-adjoint, x <-> x*.
    Letter star(Letter l) const {
        if (is_vertex(l)) return l;
        return is_edge(l) ? l + num_edges : l - num_edges;
    }
    const std::string& name(Letter l) const { return names[static_cast<std::size_t>(l)]; }

    bool operator==(const Alphabet&) const = default;
};

/// Adjoint of a word: reverse and star each letter.
Word word_star(const Word& w, const Alphabet& alpha);

/// Integer-linear combination of words over a generator alphabet. Zero
/// coefficients are never stored. The empty word is the unit.
class StarPolynomial {
  public:
    using Terms = std::map<Word, long long, DegLexLess>;

    StarPolynomial() = default;
    static StarPolynomial zero() { return {}; }
    static StarPolynomial unit() { return from_word({}); }
    static StarPolynomial from_word(Word w, long long coeff = 1);
    static StarPolynomial from_letter(Letter l) { return from_word(Word{l}); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const Word& w, long long coeff);

    StarPolynomial operator+(const StarPolynomial& o) const;
    StarPolynomial operator-(const StarPolynomial& o) const;
    StarPolynomial operator*(const StarPolynomial& o) const;
    StarPolynomial operator*(long long c) const;
    StarPolynomial star(const Alphabet& alpha) const;

    bool operator==(const StarPolynomial&) const = default;

  private:
    Terms terms_;
};

/// Renders a word with the alphabet's names, juxtaposed; inserts '.'
/// separators exactly where greedy re-lexing would otherwise mis-tokenize.
std::string print_word(const Word& w, const Alphabet& alpha);
std::string print_polynomial(const StarPolynomial& p, const Alphabet& alpha);

/// Parses the expression micro-grammar: identifiers with optional '*'
/// suffix, juxtaposition or '.' for products, '+'/'-', integer
/// coefficients, and '1' for the unit. Longest-match tokenization.
StarPolynomial parse_polynomial(const std::string& text, const Alphabet& alpha);

}  // namespace procstar
