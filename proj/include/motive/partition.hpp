#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "json.hpp"

namespace motive {

/// Weakly decreasing sequence of nonnegative integers; trailing zeros are
/// trimmed, so the empty partition is the canonical weight-0 element.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const;
    bool empty() const { return parts_.empty(); }
    /// i-th part (0-based); 0 beyond the length.
    int part(int i) const;
    const std::vector<int>& parts() const { return parts_; }

    bool fits_in_box(int rows, int cols) const;
    bool contains(const Partition& inner) const;

    /// lambda^op in the rows x cols box: op_i = cols - lambda_{rows+1-i}.
    Partition complement_in_box(int rows, int cols) const;

    /// Graded order: weight first, then lexicographic on the parts.
    std::strong_ordering operator<=>(const Partition& other) const;
    bool operator==(const Partition& other) const { return parts_ == other.parts_; }

    std::string to_string() const;  // "(2,1)", "()"
    nlohmann::json to_json() const;
    static Partition from_json(const nlohmann::json& j);

private:
    std::vector<int> parts_;
};

/// All partitions with at most `rows` parts, each at most `cols`, in graded
/// lexicographic order. Count = binomial(rows+cols, rows).
std::vector<Partition> partitions_in_box(int rows, int cols);

}  // namespace motive
