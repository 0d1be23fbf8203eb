#pragma once

#include <map>

#include "schur/radical.hpp"

namespace schur {

// Finite formal sum of basis keys with exact amplitudes. Like terms merge on
// insertion and exact zeros are dropped, so no stored amplitude is zero.
template <typename Key, typename Compare = std::less<Key>>
class LinearCombination {
public:
    using Terms = std::map<Key, Radical, Compare>;

    void add(const Key& key, const Radical& amplitude) {
        if (amplitude.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(key, amplitude);
        if (!inserted) {
            it->second += amplitude;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    Radical amplitude(const Key& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? Radical() : it->second;
    }

    Radical norm_squared() const {
        Radical sum;
        for (const auto& [key, a] : terms_) {
            sum += a * a;
        }
        return sum;
    }

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    friend bool operator==(const LinearCombination& a, const LinearCombination& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

}  // namespace schur
