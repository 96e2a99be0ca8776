#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace polymat {

// Subsets of a ground set as bitmasks: bit i corresponds to the i-th label.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return std::popcount(m); }

// Ground sets are capped at six elements, so rank vectors have at most 63
// coordinates and masks fit comfortably in 32 bits.
inline constexpr int kMaxGroundSize = 6;

class GroundSet {
public:
    GroundSet() = default;
    // Labels must be distinct, nonempty, 1..kMaxGroundSize of them.
    // Their order is fixed at creation and drives all bitmask indexing.
    explicit GroundSet(std::vector<std::string> labels);

    int size() const { return static_cast<int>(labels_.size()); }
    Mask full_mask() const { return (Mask{1} << size()) - 1; }
    // Number of nonempty subsets, i.e. the rank-vector dimension.
    std::size_t coord_count() const { return full_mask(); }

    const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& labels() const { return labels_; }

    // Index of a label, or -1 when absent.
    int index_of(const std::string& label) const;
    bool contains(const std::string& label) const { return index_of(label) >= 0; }

    Mask singleton(int i) const { return Mask{1} << i; }
    // Mask of the given labels; throws std::invalid_argument on unknown labels.
    Mask mask_of(const std::vector<std::string>& labels) const;

    // Canonical subset name: labels in ground order, '.'-joined when any
    // ground label has more than one character. Empty mask prints as "0".
    std::string subset_name(Mask m) const;
    // Inverse of subset_name; throws std::invalid_argument on bad tokens.
    Mask parse_subset(const std::string& token) const;

    // Ground set formed by the elements of `sub` (order preserved).
    GroundSet sub_ground(Mask sub) const;

    friend bool operator==(const GroundSet&, const GroundSet&) = default;

private:
    std::vector<std::string> labels_;
    bool multi_char_ = false;
};

}  // namespace polymat
