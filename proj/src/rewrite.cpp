#include "procstar/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include <boost/rational.hpp>

namespace procstar {

namespace {

bool deglex_less(const Word& a, const Word& b) { return DegLexLess{}(a, b); }

}  // namespace

std::size_t RewriteSystem::WordHasher::operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (Letter l : w) {
        h ^= static_cast<std::size_t>(l) + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    }
    return h;
}

void RewriteSystem::index_rule(std::size_t i) {
    const Word& l = rules_[i].lhs;
    by_lhs_.emplace(l, i);
    if (std::find(lhs_lengths_.begin(), lhs_lengths_.end(), l.size()) == lhs_lengths_.end()) {
        lhs_lengths_.push_back(l.size());
        std::sort(lhs_lengths_.begin(), lhs_lengths_.end());
    }
}

bool RewriteSystem::add_rule(Word lhs, std::optional<Word> rhs, bool derived,
                             std::vector<std::size_t>& fresh) {
    if (rhs && *rhs == lhs) return false;
    if (rhs && !deglex_less(*rhs, lhs)) {
        Word tmp = lhs;
        lhs = *rhs;
        rhs = tmp;
    }
    auto existing = by_lhs_.find(lhs);
    if (existing != by_lhs_.end()) {
        const RewriteRule& old = rules_[existing->second];
        if (old.rhs == rhs) return false;
        // Same lhs, different right sides: the right sides are congruent.
        if (!old.rhs) return add_rule(*rhs, std::nullopt, true, fresh);
        if (!rhs) return add_rule(*old.rhs, std::nullopt, true, fresh);
        return add_rule(*old.rhs, *rhs, true, fresh);
    }
    if (lhs.empty() && !rhs) zero_algebra_ = true;
    rules_.push_back(RewriteRule{std::move(lhs), std::move(rhs), derived});
    index_rule(rules_.size() - 1);
    fresh.push_back(rules_.size() - 1);
    return true;
}

std::optional<Word> RewriteSystem::reduce_word(Word w) const {
    if (zero_algebra_) return std::nullopt;
    int guard = 0;
    bool changed = true;
    Word probe;
    while (changed) {
        if (++guard > 1000000) throw Error("reduction exceeded step budget");
        changed = false;
        for (std::size_t pos = 0; pos < w.size() && !changed; ++pos) {
            for (std::size_t len : lhs_lengths_) {
                if (len == 0 || len > w.size() - pos) continue;
                probe.assign(w.begin() + static_cast<std::ptrdiff_t>(pos),
                             w.begin() + static_cast<std::ptrdiff_t>(pos + len));
                auto it = by_lhs_.find(probe);
                if (it == by_lhs_.end()) continue;
                const RewriteRule& r = rules_[it->second];
                if (!r.rhs) return std::nullopt;
                Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
                next.insert(next.end(), r.rhs->begin(), r.rhs->end());
                next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + len),
                            w.end());
                w = std::move(next);
                changed = true;
                break;
            }
        }
    }
    return w;
}

StarPolynomial RewriteSystem::normal_form(const StarPolynomial& p) const {
    StarPolynomial out;
    for (const auto& [w, c] : p.terms()) {
        if (auto r = reduce_word(w)) out.add_term(*r, c);
    }
    if (!has_unit_poly_) return out;
    // Eliminate the largest vertex letter through the unital relation and
    // re-reduce, until no occurrence is left.
    int guard = 0;
    while (true) {
        if (++guard > 100000) throw Error("unit elimination exceeded step budget");
        StarPolynomial next;
        bool eliminated = false;
        for (const auto& [w, c] : out.terms()) {
            if (std::find(w.begin(), w.end(), unit_elim_letter_) == w.end()) {
                next.add_term(w, c);
                continue;
            }
            eliminated = true;
            StarPolynomial expansion = StarPolynomial::unit();
            for (Letter l : w)
                expansion = expansion * (l == unit_elim_letter_ ? unit_elim_poly_
                                                                : StarPolynomial::from_letter(l));
            next = next + expansion * c;
        }
        if (!eliminated) return out;
        StarPolynomial reduced;
        for (const auto& [w, c] : next.terms()) {
            if (auto r = reduce_word(w)) reduced.add_term(*r, c);
        }
        out = std::move(reduced);
    }
}

RewriteSystem compile(const Presentation& P, int completion_bound) {
    RewriteSystem rs;
    rs.alphabet_ = P.alphabet();
    rs.bound_ = completion_bound;

    std::vector<std::size_t> fresh;
    P.for_each_relation([&](const RelationInstance& rel) {
        if (rel.schema == RelationSchema::ApproxUnit) {
            const auto& lt = rel.lhs.terms();
            if (lt.size() == 1 && lt.begin()->second == 1 && rel.rhs == StarPolynomial::unit()) {
                rs.add_rule(lt.begin()->first, Word{}, false, fresh);
            } else if (lt.empty()) {
                rs.add_rule(Word{}, std::nullopt, false, fresh);  // 0 = 1
            } else {
                rs.has_unit_poly_ = true;
                rs.unit_elim_letter_ = P.alphabet().num_vertices - 1;
                rs.unit_elim_poly_ = StarPolynomial::unit();
                for (Letter v = 0; v < rs.unit_elim_letter_; ++v)
                    rs.unit_elim_poly_.add_term(Word{v}, -1);
            }
            return;
        }
        const auto& lt = rel.lhs.terms();
        if (lt.size() != 1 || lt.begin()->second != 1)
            throw Error("monomial schema with non-monomial lhs");
        const Word& lhs = lt.begin()->first;
        if (rel.rhs.is_zero()) {
            rs.add_rule(lhs, std::nullopt, false, fresh);
            return;
        }
        const auto& rt = rel.rhs.terms();
        if (rt.size() != 1 || rt.begin()->second != 1)
            throw Error("monomial schema with non-monomial rhs");
        if (rt.begin()->first == lhs) return;  // composable concatenation, trivial
        rs.add_rule(lhs, rt.begin()->first, false, fresh);
    });

    // Knuth-Bendix completion. Critical words longer than the bound are
    // skipped and mark the system incomplete. Candidate partners are found
    // through first/last-letter indexes; rules with lhs length >= 3 (which
    // these presentations do not produce initially) go through a slow list.
    std::vector<std::vector<std::size_t>> by_first, by_last;
    std::vector<std::size_t> one_letter, long_rules;
    auto index_for_completion = [&](std::size_t i) {
        const Word& l = rs.rules_[i].lhs;
        if (l.empty()) return;
        auto f = static_cast<std::size_t>(l.front());
        auto b = static_cast<std::size_t>(l.back());
        if (by_first.size() <= std::max(f, b)) {
            by_first.resize(std::max(f, b) + 1);
            by_last.resize(std::max(f, b) + 1);
        }
        by_first[f].push_back(i);
        by_last[b].push_back(i);
        if (l.size() == 1) one_letter.push_back(i);
        if (l.size() >= 3) long_rules.push_back(i);
    };

    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < rs.rules_.size(); ++i) {
        index_for_completion(i);
        queue.push_back(i);
    }

    auto reduce_with_rule_at = [&](const Word& w, std::size_t rule, std::size_t pos) {
        const RewriteRule& r = rs.rules_[rule];
        if (!r.rhs) return std::optional<Word>{};
        Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
        next.insert(next.end(), r.rhs->begin(), r.rhs->end());
        next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + r.lhs.size()),
                    w.end());
        return rs.reduce_word(std::move(next));
    };
    auto handle_critical = [&](const Word& w, std::size_t ri, std::size_t pi, std::size_t rj,
                               std::size_t pj) {
        if (static_cast<int>(w.size()) > completion_bound) {
            rs.complete_ = false;
            return;
        }
        auto a = reduce_with_rule_at(w, ri, pi);
        auto b = reduce_with_rule_at(w, rj, pj);
        if (a == b) return;
        fresh.clear();
        if (a && b)
            rs.add_rule(*a, *b, true, fresh);
        else
            rs.add_rule(a ? *a : *b, std::nullopt, true, fresh);
        for (std::size_t f : fresh) {
            index_for_completion(f);
            queue.push_back(f);
        }
    };
    // Overlaps of (i, j): a nonempty proper suffix of lhs(i) equals a
    // prefix of lhs(j); plus containments of shorter rules inside longer.
    auto overlaps = [&](std::size_t i, std::size_t j) {
        const Word li = rs.rules_[i].lhs;
        const Word lj = rs.rules_[j].lhs;
        if (li.empty() || lj.empty()) return;
        for (std::size_t o = 1; o < std::min(li.size(), lj.size()); ++o) {
            if (!std::equal(li.end() - static_cast<std::ptrdiff_t>(o), li.end(), lj.begin()))
                continue;
            Word w = li;
            w.insert(w.end(), lj.begin() + static_cast<std::ptrdiff_t>(o), lj.end());
            handle_critical(w, i, 0, j, li.size() - o);
        }
        if (lj.size() < li.size()) {
            for (std::size_t p = 0; p + lj.size() <= li.size(); ++p) {
                if (std::equal(lj.begin(), lj.end(), li.begin() + static_cast<std::ptrdiff_t>(p)))
                    handle_critical(li, i, 0, j, p);
            }
        }
    };

    long long guard = 0;
    while (!queue.empty()) {
        if (++guard > 20000000) throw Error("completion exceeded step budget");
        std::size_t r = queue.front();
        queue.pop_front();
        const Word lr = rs.rules_[r].lhs;
        if (lr.empty()) continue;
        auto seen = [](std::vector<std::size_t>& v, std::size_t x) {
            if (std::find(v.begin(), v.end(), x) != v.end()) return true;
            v.push_back(x);
            return false;
        };
        std::vector<std::size_t> done;
        auto last = static_cast<std::size_t>(lr.back());
        auto first = static_cast<std::size_t>(lr.front());
        if (last < by_first.size())
            for (std::size_t s : by_first[last])
                if (!seen(done, s * 2)) overlaps(r, s);
        if (first < by_last.size())
            for (std::size_t s : by_last[first])
                if (!seen(done, s * 2 + 1)) overlaps(s, r);
        for (std::size_t s : one_letter) {
            if (!seen(done, s * 2)) overlaps(r, s);
            if (!seen(done, s * 2 + 1)) overlaps(s, r);
        }
        for (std::size_t s : long_rules) {
            if (!seen(done, s * 2)) overlaps(r, s);
            if (!seen(done, s * 2 + 1)) overlaps(s, r);
        }
        if (lr.size() == 1 || lr.size() >= 3) {
            for (std::size_t s = 0; s < rs.rules_.size(); ++s) {
                if (!seen(done, s * 2)) overlaps(r, s);
                if (!seen(done, s * 2 + 1)) overlaps(s, r);
            }
        }
    }
    return rs;
}

const char* decision_name(Decision d) {
    switch (d) {
        case Decision::Equal: return "equal";
        case Decision::Distinct: return "distinct";
        case Decision::Unknown: return "unknown";
    }
    return "?";
}

Decision decide_equal(const RewriteSystem& rs, const StarPolynomial& p,
                      const StarPolynomial& q) {
    if (rs.normal_form(p - q).is_zero()) return Decision::Equal;
    return rs.complete() ? Decision::Distinct : Decision::Unknown;
}

StarPolynomial decide_canonical_form(const RewriteSystem& rs, const StarPolynomial& p) {
    return rs.normal_form(p);
}

namespace {

using Rational = boost::rational<long long>;
using SparseVec = std::map<long long, Rational>;

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(std::size_t n) : parent(n, -1) {}
    int find(int x) {
        int root = x;
        while (parent[static_cast<std::size_t>(root)] >= 0)
            root = parent[static_cast<std::size_t>(root)];
        while (parent[static_cast<std::size_t>(x)] >= 0) {
            int next = parent[static_cast<std::size_t>(x)];
            parent[static_cast<std::size_t>(x)] = root;
            x = next;
        }
        return root;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (parent[static_cast<std::size_t>(a)] > parent[static_cast<std::size_t>(b)])
            std::swap(a, b);
        parent[static_cast<std::size_t>(a)] += parent[static_cast<std::size_t>(b)];
        parent[static_cast<std::size_t>(b)] = a;
    }
};

struct Replacement {
    bool zero = false;
    Word word;
};

struct WordHash {
    std::size_t operator()(const Word& w) const {
        std::size_t h = 1469598103934665603ull;
        for (Letter l : w) {
            h ^= static_cast<std::size_t>(l) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Echelon basis of sparse rational vectors, keyed by pivot index. reduce()
// eliminates every coordinate lying on a pivot, so the result is the
// canonical representative modulo the span (in particular, it is linear).
struct Echelon {
    std::map<long long, SparseVec> rows;

    void reduce(SparseVec& v) const {
        auto it = v.begin();
        while (it != v.end()) {
            auto row = rows.find(it->first);
            if (row == rows.end()) {
                ++it;
                continue;
            }
            long long at = it->first;
            Rational factor = it->second / row->second.begin()->second;
            for (const auto& [k, c] : row->second) {
                auto vt = v.find(k);
                Rational nv = (vt == v.end() ? Rational(0) : vt->second) - factor * c;
                if (nv == Rational(0)) {
                    if (vt != v.end()) v.erase(vt);
                } else {
                    v[k] = nv;
                }
            }
            it = v.upper_bound(at);  // entries below `at` are untouched
        }
    }
    void insert(SparseVec v) {
        reduce(v);
        if (!v.empty()) rows.emplace(v.begin()->first, std::move(v));
    }
};

struct OracleUniverse {
    int A = 0;
    int L = 0;
    std::vector<std::size_t> offsets;
    std::size_t total = 0;

    void init(int alphabet, int len) {
        A = alphabet;
        L = len;
        offsets.assign(static_cast<std::size_t>(len) + 2, 0);
        std::size_t count = 1;
        total = 0;
        for (int k = 0; k <= len; ++k) {
            offsets[static_cast<std::size_t>(k)] = total;
            total += count;
            if (total > 80000000ull) throw InputError("brute_force_equal: universe too large");
            count *= static_cast<std::size_t>(A);
        }
        offsets[static_cast<std::size_t>(len) + 1] = total;
    }
    std::size_t rank(const Word& w) const {
        std::size_t r = offsets[w.size()];
        std::size_t mul = 1;
        for (Letter l : w) {
            r += static_cast<std::size_t>(l) * mul;
            mul *= static_cast<std::size_t>(A);
        }
        return r;
    }
    Word unrank(std::size_t r) const {
        std::size_t len = 0;
        while (offsets[len + 1] <= r) ++len;
        std::size_t v = r - offsets[len];
        Word w(len);
        for (std::size_t i = 0; i < len; ++i) {
            w[i] = static_cast<Letter>(v % static_cast<std::size_t>(A));
            v /= static_cast<std::size_t>(A);
        }
        return w;
    }
};

struct OracleState {
    OracleUniverse uni;
    std::vector<long long> class_of;  // -1 = congruent to zero
    long long num_classes = 0;
    Echelon basis;
    std::vector<SparseVec> class_reduced;

    SparseVec vec_of(const StarPolynomial& p) const {
        SparseVec v;
        for (const auto& [w, c] : p.terms()) {
            if (w.size() > static_cast<std::size_t>(uni.L))
                throw InputError("brute_force_equal: word longer than max_len");
            long long cls = class_of[uni.rank(w)];
            if (cls < 0) continue;
            for (const auto& [k, x] : class_reduced[static_cast<std::size_t>(cls)]) {
                auto vt = v.find(k);
                Rational nv = (vt == v.end() ? Rational(0) : vt->second) + x * Rational(c);
                if (nv == Rational(0)) {
                    if (vt != v.end()) v.erase(vt);
                } else {
                    v[k] = nv;
                }
            }
        }
        return v;
    }
};

OracleState build_oracle(const Presentation& P, int max_len) {
    OracleState st;
    st.uni.init(P.alphabet().total(), max_len);

    std::unordered_map<Word, std::vector<Replacement>, WordHash> patterns;
    bool unital_multi = false;
    P.for_each_relation([&](const RelationInstance& rel) {
        if (rel.schema == RelationSchema::ApproxUnit) {
            const auto& lt = rel.lhs.terms();
            if (lt.size() == 1 && lt.begin()->second == 1) {
                patterns[lt.begin()->first].push_back({false, {}});
                patterns[Word{}].push_back({false, lt.begin()->first});
            } else if (!lt.empty()) {
                unital_multi = true;
            }
            return;
        }
        const Word& lhs = rel.lhs.terms().begin()->first;
        if (rel.rhs.is_zero()) {
            patterns[lhs].push_back({true, {}});
            return;
        }
        const Word& rhs = rel.rhs.terms().begin()->first;
        if (rhs == lhs) return;
        patterns[lhs].push_back({false, rhs});
        patterns[rhs].push_back({false, lhs});
    });

    Dsu dsu(st.uni.total + 1);
    const int zero_node = static_cast<int>(st.uni.total);
    std::size_t max_pat = 0;
    for (const auto& [pat, reps] : patterns) max_pat = std::max(max_pat, pat.size());
    Word pat;
    for (std::size_t r = 0; r < st.uni.total; ++r) {
        Word w = st.uni.unrank(r);
        for (std::size_t pos = 0; pos <= w.size(); ++pos) {
            std::size_t cap = std::min(max_pat, w.size() - pos);
            for (std::size_t len = 0; len <= cap; ++len) {
                pat.assign(w.begin() + static_cast<std::ptrdiff_t>(pos),
                           w.begin() + static_cast<std::ptrdiff_t>(pos + len));
                auto it = patterns.find(pat);
                if (it == patterns.end()) continue;
                for (const Replacement& rep : it->second) {
                    if (rep.zero) {
                        dsu.unite(static_cast<int>(r), zero_node);
                        continue;
                    }
                    if (w.size() - len + rep.word.size() > static_cast<std::size_t>(max_len))
                        continue;
                    Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
                    next.insert(next.end(), rep.word.begin(), rep.word.end());
                    next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + len),
                                w.end());
                    dsu.unite(static_cast<int>(r), static_cast<int>(st.uni.rank(next)));
                }
            }
        }
    }

    st.class_of.assign(st.uni.total, -1);
    std::unordered_map<int, long long> root_class;
    int zero_root = dsu.find(zero_node);
    for (std::size_t r = 0; r < st.uni.total; ++r) {
        int root = dsu.find(static_cast<int>(r));
        if (root == zero_root) continue;
        auto [it, inserted] = root_class.try_emplace(root, st.num_classes);
        if (inserted) ++st.num_classes;
        st.class_of[r] = it->second;
    }

    // The unital relation acts on the span of classes: rows
    // sum_v [u v w] - [u w] over all contexts u, w inside the bound.
    if (unital_multi) {
        std::vector<Letter> verts;
        for (int v = 0; v < P.alphabet().num_vertices; ++v) verts.push_back(v);
        std::size_t ctx_total = st.uni.offsets[static_cast<std::size_t>(max_len)];
        for (std::size_t r = 0; r < ctx_total; ++r) {
            Word z = st.uni.unrank(r);
            long long zc = st.class_of[r];
            for (std::size_t p = 0; p <= z.size(); ++p) {
                SparseVec row;
                auto bump = [&](long long cls, int delta) {
                    if (cls < 0) return;
                    auto it = row.find(cls);
                    Rational nv = (it == row.end() ? Rational(0) : it->second) + Rational(delta);
                    if (nv == Rational(0)) {
                        if (it != row.end()) row.erase(it);
                    } else {
                        row[cls] = nv;
                    }
                };
                for (Letter v : verts) {
                    Word ins(z.begin(), z.begin() + static_cast<std::ptrdiff_t>(p));
                    ins.push_back(v);
                    ins.insert(ins.end(), z.begin() + static_cast<std::ptrdiff_t>(p), z.end());
                    bump(st.class_of[st.uni.rank(ins)], 1);
                }
                bump(zc, -1);
                st.basis.insert(std::move(row));
            }
        }
    }
    st.class_reduced.resize(static_cast<std::size_t>(st.num_classes));
    for (long long c = 0; c < st.num_classes; ++c) {
        SparseVec v{{c, Rational(1)}};
        st.basis.reduce(v);
        st.class_reduced[static_cast<std::size_t>(c)] = std::move(v);
    }
    return st;
}

}  // namespace

Decision brute_force_equal(const Presentation& P, const StarPolynomial& p,
                           const StarPolynomial& q, int max_len) {
    OracleState st = build_oracle(P, max_len);
    return st.vec_of(p - q).empty() ? Decision::Equal : Decision::Distinct;
}

Word OraclePartition::unrank(std::size_t r) const {
    OracleUniverse uni;
    uni.init(alphabet_size, max_len);
    return uni.unrank(r);
}

std::size_t OraclePartition::rank(const Word& w) const {
    OracleUniverse uni;
    uni.init(alphabet_size, max_len);
    return uni.rank(w);
}

OraclePartition oracle_partition(const Presentation& P, int max_len) {
    OracleState st = build_oracle(P, max_len);
    OraclePartition part;
    part.alphabet_size = st.uni.A;
    part.max_len = max_len;
    part.word_count = st.uni.total;
    part.class_of.assign(st.uni.total, -1);
    // Group monomial classes by their reduced span coordinates so the
    // partition reflects the full congruence including the unital relation.
    std::map<std::vector<std::pair<long long, Rational>>, long long> by_vec;
    std::vector<long long> final_of_class(static_cast<std::size_t>(st.num_classes), -1);
    long long next_id = 0;
    for (long long c = 0; c < st.num_classes; ++c) {
        const SparseVec& v = st.class_reduced[static_cast<std::size_t>(c)];
        if (v.empty()) continue;  // collapsed to zero by the unital span
        std::vector<std::pair<long long, Rational>> key(v.begin(), v.end());
        auto [it, inserted] = by_vec.try_emplace(std::move(key), next_id);
        if (inserted) ++next_id;
        final_of_class[static_cast<std::size_t>(c)] = it->second;
    }
    for (std::size_t r = 0; r < st.uni.total; ++r) {
        long long c = st.class_of[r];
        part.class_of[r] = c < 0 ? -1 : final_of_class[static_cast<std::size_t>(c)];
    }
    return part;
}

}  // namespace procstar
