#pragma once

#include <map>
#include <utility>

#include "coxeter.hpp"
#include "laurent.hpp"

namespace ctilde {

/// Finite K-linear combination of basis symbols indexed by group elements,
/// K = Q[q, q^-1]. Terms are ordered by (length, canonical word); zero
/// coefficients are never stored. Tag distinguishes Hecke (g_w) from
/// Temperley-Lieb (T_w) elements so they cannot be mixed.
template <class Tag>
class AlgebraElement {
public:
    using Terms = std::map<GroupElement, LaurentPoly>;

    explicit AlgebraElement(GraphPtr graph) : graph_(std::move(graph)) {}

    static AlgebraElement basis(const GroupElement& w, const LaurentPoly& c = 1) {
        AlgebraElement x(w.graph_ptr());
        x.add(w, c);
        return x;
    }
    static AlgebraElement one(const GraphPtr& g, const LaurentPoly& c = 1) { return basis(GroupElement(g), c); }

    const CoxeterGraph& graph() const { return *graph_; }
    const GraphPtr& graph_ptr() const { return graph_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    LaurentPoly coefficient(const GroupElement& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? LaurentPoly() : it->second;
    }

    void add(const GroupElement& w, const LaurentPoly& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        require_same_graph(*graph_, *o.graph_);
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& o) {
        require_same_graph(*graph_, *o.graph_);
        for (const auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    AlgebraElement operator-() const { return scaled(LaurentPoly(-1)); }

    AlgebraElement scaled(const LaurentPoly& c) const {
        AlgebraElement r(graph_);
        if (c.is_zero()) return r;
        for (const auto& [w, x] : terms_) r.terms_.emplace(w, x * c);
        return r;
    }
    friend AlgebraElement operator*(const LaurentPoly& c, const AlgebraElement& x) { return x.scaled(c); }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return *a.graph_ == *b.graph_ && a.terms_ == b.terms_;
    }

private:
    GraphPtr graph_;
    Terms terms_;
};

}  // namespace ctilde
