#include "procstar/star_poly.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <unordered_map>

namespace procstar {

Word word_star(const Word& w, const Alphabet& alpha) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(alpha.star(*it));
    return out;
}

StarPolynomial StarPolynomial::from_word(Word w, long long coeff) {
    StarPolynomial p;
    if (coeff != 0) p.terms_.emplace(std::move(w), coeff);
    return p;
}

void StarPolynomial::add_term(const Word& w, long long coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

StarPolynomial StarPolynomial::operator+(const StarPolynomial& o) const {
    StarPolynomial r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

StarPolynomial StarPolynomial::operator-(const StarPolynomial& o) const {
    StarPolynomial r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
    return r;
}

StarPolynomial StarPolynomial::operator*(const StarPolynomial& o) const {
    StarPolynomial r;
    for (const auto& [w1, c1] : terms_) {
        for (const auto& [w2, c2] : o.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add_term(w, c1 * c2);
        }
    }
    return r;
}

StarPolynomial StarPolynomial::operator*(long long c) const {
    StarPolynomial r;
    if (c == 0) return r;
    for (const auto& [w, k] : terms_) r.add_term(w, k * c);
    return r;
}

StarPolynomial StarPolynomial::star(const Alphabet& alpha) const {
    StarPolynomial r;
    for (const auto& [w, c] : terms_) r.add_term(word_star(w, alpha), c);
    return r;
}

namespace {

// Greedy longest-match lexing of a juxtaposed word body (names plus '*'
// suffixes, '.' separators, no coefficients). Returns nullopt on any
// unmatched input.
std::optional<Word> lex_word(const std::string& text, const Alphabet& alpha) {
    std::size_t max_len = 0;
    std::unordered_map<std::string, Letter> by_name;
    for (Letter l = 0; l < alpha.total(); ++l) {
        by_name.emplace(alpha.name(l), l);
        max_len = std::max(max_len, alpha.name(l).size());
    }
    Word w;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == '.') {
            ++pos;
            continue;
        }
        bool matched = false;
        std::size_t cap = std::min(max_len, text.size() - pos);
        for (std::size_t len = cap; len >= 1 && !matched; --len) {
            auto it = by_name.find(text.substr(pos, len));
            if (it != by_name.end()) {
                w.push_back(it->second);
                pos += len;
                matched = true;
            }
        }
        if (!matched) return std::nullopt;
    }
    return w;
}

}  // namespace

std::string print_word(const Word& w, const Alphabet& alpha) {
    if (w.empty()) return "1";
    std::string flat;
    for (Letter l : w) flat += alpha.name(l);
    if (auto relexed = lex_word(flat, alpha); relexed && *relexed == w) return flat;
    std::string dotted;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) dotted += ".";
        dotted += alpha.name(w[i]);
    }
    return dotted;
}

std::string print_polynomial(const StarPolynomial& p, const Alphabet& alpha) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [w, c] : p.terms()) {
        long long coeff = c;
        if (out.empty()) {
            if (coeff < 0) {
                out += "-";
                coeff = -coeff;
            }
        } else {
            out += coeff < 0 ? "-" : "+";
            if (coeff < 0) coeff = -coeff;
        }
        if (coeff != 1 || w.empty()) {
            out += std::to_string(coeff);
            if (!w.empty()) out += ".";
        }
        if (!w.empty()) out += print_word(w, alpha);
    }
    return out;
}

namespace {

struct Lexer {
    const std::string& text;
    const Alphabet& alpha;
    std::size_t pos = 0;
    std::size_t max_name_len;
    std::unordered_map<std::string, Letter> by_name;

    Lexer(const std::string& t, const Alphabet& a) : text(t), alpha(a) {
        max_name_len = 0;
        for (Letter l = 0; l < alpha.total(); ++l) {
            by_name.emplace(alpha.name(l), l);
            max_name_len = std::max(max_name_len, alpha.name(l).size());
        }
    }
    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    std::optional<Letter> next_name() {
        skip_ws();
        std::size_t cap = std::min(max_name_len, text.size() - pos);
        for (std::size_t len = cap; len >= 1; --len) {
            auto it = by_name.find(text.substr(pos, len));
            if (it != by_name.end()) {
                pos += len;
                return it->second;
            }
        }
        return std::nullopt;
    }
};

}  // namespace

StarPolynomial parse_polynomial(const std::string& text, const Alphabet& alpha) {
    Lexer lx(text, alpha);
    StarPolynomial result;
    bool first = true;
    while (!lx.done()) {
        long long sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            sign = c == '-' ? -1 : 1;
            ++lx.pos;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms near position " +
                             std::to_string(lx.pos));
        }
        first = false;
        // optional integer coefficient ("1" alone is the unit term)
        long long coeff = 1;
        bool saw_int = false;
        lx.skip_ws();
        std::size_t start = lx.pos;
        while (lx.pos < lx.text.size() && std::isdigit(static_cast<unsigned char>(lx.text[lx.pos])))
            ++lx.pos;
        if (lx.pos > start) {
            coeff = std::stoll(lx.text.substr(start, lx.pos - start));
            saw_int = true;
        }
        Word w;
        bool saw_factor = false;
        while (true) {
            char p = lx.peek();
            if (p == '.') {
                ++lx.pos;
                continue;
            }
            auto letter = lx.next_name();
            if (!letter) break;
            Letter l = *letter;
            lx.skip_ws();
            if (lx.pos < lx.text.size() && lx.text[lx.pos] == '*') {
                ++lx.pos;
                l = alpha.star(l);
            }
            w.push_back(l);
            saw_factor = true;
        }
        if (!saw_factor && !saw_int)
            throw ParseError("expected a term near position " + std::to_string(lx.pos));
        result.add_term(w, sign * coeff);
    }
    if (first) throw ParseError("empty expression");
    return result;
}

}  // namespace procstar
