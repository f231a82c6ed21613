#pragma once

#include <optional>
#include <unordered_map>
#include <vector>

#include "procstar/presentation.hpp"

namespace procstar {

/// A monomial rewrite rule: lhs word -> rhs word, or -> 0 (nullopt).
/// Every rule strictly decreases the degree-lexicographic order.
struct RewriteRule {
    Word lhs;
    std::optional<Word> rhs;
    bool derived = false;  // discovered by completion rather than compiled
    bool operator==(const RewriteRule&) const = default;
};

class RewriteSystem {
  public:
    RewriteSystem() = default;

    const std::vector<RewriteRule>& rules() const { return rules_; }
    const Alphabet& alphabet() const { return alphabet_; }
    bool complete() const { return complete_; }
    int completion_bound() const { return bound_; }
    bool has_unit_polynomial() const { return has_unit_poly_; }

    /// Reduces one word to its monomial normal form (nullopt = 0).
    /// Leftmost match, shortest rule first on ties; deterministic.
    std::optional<Word> reduce_word(Word w) const;

    /// [OP] normal_form: linear extension of word reduction. When the
    /// unital relation has no monomial form (more than one vertex), the
    /// deglex-largest vertex letter is additionally eliminated through
    /// z -> 1 - sum(other vertices); every substitution step strictly
    /// decreases the deglex multiset, so the combined reduction terminates.
    StarPolynomial normal_form(const StarPolynomial& p) const;

    friend RewriteSystem compile(const Presentation& P, int completion_bound);

  private:
    struct WordHasher {
        std::size_t operator()(const Word& w) const;
    };
    void index_rule(std::size_t i);
    bool add_rule(Word lhs, std::optional<Word> rhs, bool derived,
                  std::vector<std::size_t>& fresh);

    std::vector<RewriteRule> rules_;
    std::unordered_map<Word, std::size_t, WordHasher> by_lhs_;
    std::vector<std::size_t> lhs_lengths_;  // distinct, ascending
    Alphabet alphabet_;
    bool has_unit_poly_ = false;   // unital relation kept as an elimination
    Letter unit_elim_letter_ = 0;  // the eliminated vertex letter
    StarPolynomial unit_elim_poly_;
    bool zero_algebra_ = false;  // the empty word itself collapses to 0
    bool complete_ = true;
    int bound_ = 0;
};

/// [OP] compile: initial rules from schemas (1)-(4) plus the unital
/// relation when monomial, then Knuth-Bendix completion on monomial
/// overlaps with critical words bounded by completion_bound.
RewriteSystem compile(const Presentation& P, int completion_bound = 6);

enum class Decision { Equal, Distinct, Unknown };
const char* decision_name(Decision d);

/// [OP] decide_equal: equal when the normal forms coincide (possibly after
/// unit substitution); distinct only when completion reached a fixpoint.
Decision decide_equal(const RewriteSystem& rs, const StarPolynomial& p,
                      const StarPolynomial& q);

/// [OP] brute_force_equal: congruence closure of the relation instances
/// over all words of length <= max_len (union-find over ranked words,
/// plus exact linear span reduction for the unital relation). Exact within
/// the bound and independent of the rewrite path.
Decision brute_force_equal(const Presentation& P, const StarPolynomial& p,
                           const StarPolynomial& q, int max_len);

/// Oracle-scale helper: the canonical form used by decide_equal, suitable
/// for grouping many words ("p equals q iff canonical forms coincide").
StarPolynomial decide_canonical_form(const RewriteSystem& rs, const StarPolynomial& p);

/// Partition of all words of length <= max_len into congruence classes per
/// brute_force_equal; entry i is the class id of the word with rank i, and
/// words congruent to 0 get class -1. Used by the exhaustive oracle sweep.
struct OraclePartition {
    std::vector<long long> class_of;  // by word rank
    int alphabet_size = 0;
    int max_len = 0;
    std::size_t word_count = 0;

    Word unrank(std::size_t r) const;
    std::size_t rank(const Word& w) const;
};
OraclePartition oracle_partition(const Presentation& P, int max_len);

}  // namespace procstar
