#pragma once

// Slow reference implementations used to cross-check the fast paths.

#include <deque>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "coxeter.hpp"
#include "hecke.hpp"
#include "temperley_lieb.hpp"

namespace ctilde::oracle {

/// All words reachable from `w` by commutation moves st = ts.
inline std::set<Word> commutation_class(const CoxeterGraph& g, const Word& w) {
    std::set<Word> seen{w};
    std::deque<Word> todo{w};
    while (!todo.empty()) {
        Word x = std::move(todo.front());
        todo.pop_front();
        for (std::size_t i = 0; i + 1 < x.size(); ++i) {
            if (x[i] == x[i + 1] || !g.commute(x[i], x[i + 1])) continue;
            Word y = x;
            std::swap(y[i], y[i + 1]);
            if (seen.insert(y).second) todo.push_back(std::move(y));
        }
    }
    return seen;
}

/// Position of a factor sts... of length m(s,t) >= 3, if any.
inline std::optional<std::size_t> braid_factor(const CoxeterGraph& g, const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        const Gen s = w[i];
        const Gen t = w[i + 1];
        if (s == t) continue;
        const auto m = static_cast<std::size_t>(g.order(s, t));
        if (m < 3 || i + m > w.size()) continue;
        bool hit = true;
        for (std::size_t k = 0; k < m && hit; ++k) hit = w[i + k] == (k % 2 == 0 ? s : t);
        if (hit) return i;
    }
    return std::nullopt;
}

/// Full commutativity by exhaustive search of the commutation class.
inline bool is_fc(const CoxeterGraph& g, const Word& reduced) {
    for (const Word& x : commutation_class(g, reduced))
        if (braid_factor(g, x)) return false;
    return true;
}

/// Canonical projection of a Hecke element onto the Temperley-Lieb basis.
///
/// A non-FC g_w has a reduced word a (sts..) b; modulo the ideal generated by
/// V(g_s,g_t) (resp. Z) the braid factor g_{sts} (resp. g_{stst}) equals minus
/// the sum of the shorter terms, so g_w is replaced by a Hecke combination of
/// strictly shorter elements and the process repeats.
inline TLElement project_to_tl(const HeckeElement& x) {
    const GraphPtr& gp = x.graph_ptr();
    const CoxeterGraph& g = *gp;
    HeckeElement pending = x;
    TLElement out(gp);
    while (!pending.is_zero()) {
        // longest term first; replacements only create shorter ones
        auto it = std::prev(pending.terms().end());
        const GroupElement w = it->first;
        const LaurentPoly c = it->second;
        pending.add(w, -c);
        if (is_fully_commutative(w)) {
            out.add(w, c);
            continue;
        }
        bool done = false;
        for (const Word& word : commutation_class(g, w.word())) {
            auto pos = braid_factor(g, word);
            if (!pos) continue;
            const Gen s = word[*pos];
            const Gen t = word[*pos + 1];
            const auto m = static_cast<std::size_t>(g.order(s, t));
            const Word a(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(*pos));
            const Word b(word.begin() + static_cast<std::ptrdiff_t>(*pos + m), word.end());
            std::vector<Word> rest = m == 3 ? std::vector<Word>{{s, t}, {t, s}, {s}, {t}, {}}
                                            : std::vector<Word>{{s, t, s}, {t, s, t}, {s, t}, {t, s}, {s}, {t}, {}};
            const HeckeElement ga = hecke_basis(evaluate(gp, a));
            const HeckeElement gb = hecke_basis(evaluate(gp, b));
            for (const Word& r : rest) {
                HeckeElement term = hecke_multiply(hecke_multiply(ga, hecke_basis(evaluate(gp, r))), gb);
                pending -= term.scaled(c);
            }
            done = true;
            break;
        }
        if (!done) throw InvariantViolation("oracle: non-FC element without braid factor");
    }
    return out;
}

}  // namespace ctilde::oracle
