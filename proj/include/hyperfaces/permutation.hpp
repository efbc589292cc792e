#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hyperfaces/errors.hpp"
#include "hyperfaces/partition.hpp"

namespace hyperfaces {

// Permutation of {0..n-1} in one-line form.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    // Canonical representative of a cycle type: cycles laid on consecutive
    // integers, longest cycle first ([4,2] -> (0 1 2 3)(4 5)).
    static Permutation canonical_of_type(const Partition& type);

    int size() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const { return images_[static_cast<size_t>(i)]; }
    const std::vector<int>& images() const { return images_; }

    Permutation compose(const Permutation& rhs) const;  // apply rhs first
    Partition cycle_type() const;
    int cycle_count() const;

    std::string to_cycle_string() const;  // 1-based cycle notation

    friend bool operator==(const Permutation& a, const Permutation& b) = default;

private:
    struct Unchecked {};
    Permutation(Unchecked, std::vector<int> images) : images_(std::move(images)) {}
    std::vector<int> images_;

    template <typename Visit>
    friend void for_each_in_class(const Partition&, Visit&&, int);
};

inline constexpr int kDefaultEnumerationBound = 10;

// Visits every permutation of cycle type lambda exactly once, in a fixed
// deterministic order: the smallest unused element leads each new cycle,
// so cycles of equal length come out ordered by leader and no duplicates
// arise. Throws BoundExceeded when lambda.n() exceeds the bound.
template <typename Visit>
void for_each_in_class(const Partition& lambda, Visit&& visit, int bound = kDefaultEnumerationBound) {
    const int n = lambda.n();
    if (n > bound) {
        throw BoundExceeded("class enumeration bound exceeded: n = " + std::to_string(n) +
                            " > " + std::to_string(bound));
    }
    if (n == 0) {
        visit(Permutation(Permutation::Unchecked{}, {}));
        return;
    }
    // distinct cycle lengths with remaining multiplicities
    std::vector<std::pair<int, int>> lengths;
    for (int p : lambda.parts()) {
        if (!lengths.empty() && lengths.back().first == p) {
            ++lengths.back().second;
        } else {
            lengths.emplace_back(p, 1);
        }
    }
    std::vector<int> images(static_cast<size_t>(n), -1);
    std::vector<char> used(static_cast<size_t>(n), 0);

    auto rec = [&](auto&& self) -> void {
        int lead = 0;
        while (lead < n && used[static_cast<size_t>(lead)]) ++lead;
        if (lead == n) {
            visit(Permutation(Permutation::Unchecked{}, images));
            return;
        }
        used[static_cast<size_t>(lead)] = 1;
        for (auto& [len, cnt] : lengths) {
            if (cnt == 0) continue;
            --cnt;
            // fill the rest of a len-cycle led by `lead`
            auto extend = [&](auto&& eself, int prev, int remaining) -> void {
                if (remaining == 0) {
                    images[static_cast<size_t>(prev)] = lead;
                    self(self);
                    return;
                }
                for (int e = lead + 1; e < n; ++e) {
                    if (used[static_cast<size_t>(e)]) continue;
                    used[static_cast<size_t>(e)] = 1;
                    images[static_cast<size_t>(prev)] = e;
                    eself(eself, e, remaining - 1);
                    used[static_cast<size_t>(e)] = 0;
                }
            };
            extend(extend, lead, len - 1);
            ++cnt;
        }
        used[static_cast<size_t>(lead)] = 0;
    };
    rec(rec);
}

std::vector<Permutation> enumerate_class(const Partition& lambda, int bound = kDefaultEnumerationBound);

}  // namespace hyperfaces
