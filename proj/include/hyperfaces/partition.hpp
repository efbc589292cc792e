#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperfaces/rational.hpp"

namespace hyperfaces {

// Integer partition in weakly decreasing order. Indexes conjugacy classes
// of the symmetric group and Young diagrams. Exponent notation exists only
// at the parse/print boundary; internally there is one canonical form.
class Partition {
public:
    Partition() = default;  // the empty partition of 0
    explicit Partition(std::vector<int> parts);

    // Accepts comma form "3,3" (any order) and exponent form "[3^2]" or
    // "1^2,4"; brackets optional, ^1 omissible. Validates the part sum
    // against n_hint when given (SumMismatch).
    static Partition parse(const std::string& text, std::optional<int> n_hint = std::nullopt);

    int n() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_[static_cast<size_t>(i)]; }
    int min_part() const { return parts_.empty() ? 0 : parts_.back(); }
    int max_part() const { return parts_.empty() ? 0 : parts_.front(); }
    int multiplicity(int size) const;

    std::string to_string() const;           // "3,3"
    std::string to_exponent_string() const;  // "[3^2]"

    friend bool operator==(const Partition& a, const Partition& b) = default;
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// z_lambda = prod i^{m_i} m_i!; the centralizer order.
BigInt z_lambda(const Partition& lam);

// |C_lambda| = n! / z_lambda.
BigInt class_size(const Partition& lam);

// All partitions of n, lexicographically descending ([n] first, [1^n] last).
std::vector<Partition> partitions_of(int n);

// theta_i = [1^{n-i}, i].
Partition theta_partition(int i, int n);

}  // namespace hyperfaces
