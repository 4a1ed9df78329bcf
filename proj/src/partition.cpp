#include "motive/partition.hpp"

#include <algorithm>
#include <numeric>

#include "motive/error.hpp"

namespace motive {

namespace {

void validate_and_trim(std::vector<int>& parts) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) fail("DomainError", "partition parts must be nonnegative");
        if (i + 1 < parts.size() && parts[i] < parts[i + 1])
            fail("DomainError", "partition parts must be weakly decreasing");
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : parts_(parts) {
    validate_and_trim(parts_);
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    validate_and_trim(parts_);
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
}

bool Partition::fits_in_box(int rows, int cols) const {
    return length() <= rows && part(0) <= cols;
}

bool Partition::contains(const Partition& inner) const {
    for (int i = 0; i < inner.length(); ++i)
        if (inner.part(i) > part(i)) return false;
    return true;
}

Partition Partition::complement_in_box(int rows, int cols) const {
    if (!fits_in_box(rows, cols))
        fail("DomainError", to_string() + " does not fit in the " + std::to_string(rows) + "x" +
                                std::to_string(cols) + " box");
    std::vector<int> out(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) out[static_cast<std::size_t>(i)] = cols - part(rows - 1 - i);
    return Partition(std::move(out));
}

std::strong_ordering Partition::operator<=>(const Partition& other) const {
    if (auto c = weight() <=> other.weight(); c != 0) return c;
    return parts_ <=> other.parts_;
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

nlohmann::json Partition::to_json() const {
    return nlohmann::json(parts_);
}

Partition Partition::from_json(const nlohmann::json& j) {
    return Partition(j.get<std::vector<int>>());
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
    if (rows < 0 || cols < 0) fail("DomainError", "box sides must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int row, int max_part) -> void {
        out.emplace_back(std::vector<int>(current));
        if (row == rows) return;
        for (int v = 1; v <= max_part; ++v) {
            current.push_back(v);
            self(self, row + 1, v);
            current.pop_back();
        }
    };
    rec(rec, 0, cols);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace motive
