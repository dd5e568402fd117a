#pragma once

#include "pcls/errors.hpp"

#include <algorithm>
#include <compare>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pcls {

// Finitely supported map vertex-id -> positive exponent.  The zero vector is
// the empty map.  Ordered by graded lexicographic comparison of the dense
// exponent tuples, which is also the enumeration and printing order used
// throughout.
class ExponentVec {
public:
    ExponentVec() = default;

    static ExponentVec unit(int v, int e = 1) {
        ExponentVec m;
        m.set(v, e);
        return m;
    }

    // Dense constructor, entry i = exponent of vertex i.
    static ExponentVec dense(const std::vector<int>& exps) {
        ExponentVec m;
        for (int v = 0; v < static_cast<int>(exps.size()); ++v) m.set(v, exps[v]);
        return m;
    }

    int get(int v) const {
        auto it = find(v);
        return it == terms_.end() ? 0 : it->second;
    }

    void set(int v, int e) {
        if (v < 0) throw InvalidInput("exponent vector: negative vertex id");
        if (e < 0) throw InvalidInput("exponent vector: negative exponent");
        auto it = std::lower_bound(terms_.begin(), terms_.end(), v,
                                   [](const auto& t, int key) { return t.first < key; });
        if (it != terms_.end() && it->first == v) {
            if (e == 0) terms_.erase(it);
            else it->second = e;
        } else if (e > 0) {
            terms_.insert(it, {v, e});
        }
    }

    bool is_zero() const { return terms_.empty(); }

    int total() const {
        int s = 0;
        for (const auto& [v, e] : terms_) s += e;
        return s;
    }

    std::vector<int> support() const {
        std::vector<int> s;
        s.reserve(terms_.size());
        for (const auto& [v, e] : terms_) s.push_back(v);
        return s;
    }

    const std::vector<std::pair<int, int>>& terms() const { return terms_; }

    ExponentVec operator+(const ExponentVec& o) const {
        ExponentVec r = *this;
        for (const auto& [v, e] : o.terms_) r.set(v, r.get(v) + e);
        return r;
    }

    // Componentwise difference; nullopt if any entry would go negative.
    std::optional<ExponentVec> minus(const ExponentVec& o) const {
        ExponentVec r = *this;
        for (const auto& [v, e] : o.terms_) {
            int cur = r.get(v);
            if (cur < e) return std::nullopt;
            r.set(v, cur - e);
        }
        return r;
    }

    bool leq(const ExponentVec& o) const {
        for (const auto& [v, e] : terms_)
            if (e > o.get(v)) return false;
        return true;
    }

    ExponentVec scaled(int k) const {
        ExponentVec r;
        for (const auto& [v, e] : terms_) r.set(v, e * k);
        return r;
    }

    int entry_gcd() const {
        int g = 0;
        for (const auto& [v, e] : terms_) g = std::gcd(g, e);
        return g;
    }

    bool divisible(int l) const {
        for (const auto& [v, e] : terms_)
            if (e % l != 0) return false;
        return true;
    }

    ExponentVec divided(int l) const {
        ExponentVec r;
        for (const auto& [v, e] : terms_) {
            if (e % l != 0) throw InvalidInput("exponent vector not divisible");
            r.set(v, e / l);
        }
        return r;
    }

    bool operator==(const ExponentVec& o) const { return terms_ == o.terms_; }

    // Graded lex: first by total degree, then lexicographically on the dense
    // tuple (exponent of vertex 0, of vertex 1, ...).
    bool operator<(const ExponentVec& o) const {
        int ta = total(), tb = o.total();
        if (ta != tb) return ta < tb;
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            const auto& [va, ea] = terms_[i];
            const auto& [vb, eb] = o.terms_[j];
            if (va < vb) return false;      // this has a positive entry first -> dense-greater
            if (vb < va) return true;
            if (ea != eb) return ea < eb;
            ++i, ++j;
        }
        // Equal totals with one list a prefix of the other cannot happen
        // (positive entries), so reaching here means equality.
        return false;
    }

    // Monomial rendering, e.g. "x1^2*x3" with 1-based display ids, or "1" for
    // the zero vector.  `names` overrides the default ids.
    std::string str(const std::vector<std::string>* names = nullptr) const {
        if (terms_.empty()) return "1";
        std::string s;
        for (const auto& [v, e] : terms_) {
            if (!s.empty()) s += "*";
            s += names ? "x[" + (*names)[v] + "]" : "x" + std::to_string(v + 1);
            if (e > 1) s += "^" + std::to_string(e);
        }
        return s;
    }

private:
    std::vector<std::pair<int, int>>::const_iterator find(int v) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), v,
                                   [](const auto& t, int key) { return t.first < key; });
        return (it != terms_.end() && it->first == v) ? it : terms_.end();
    }

    std::vector<std::pair<int, int>> terms_;
};

} // namespace pcls
