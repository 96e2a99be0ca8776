#include "polymat/ground.hpp"

#include <algorithm>
#include <stdexcept>

namespace polymat {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty() || labels_.size() > kMaxGroundSize)
        throw std::invalid_argument("ground set must have 1.." +
                                    std::to_string(kMaxGroundSize) + " elements");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i].empty()) throw std::invalid_argument("empty ground label");
        if (labels_[i].size() > 1) multi_char_ = true;
        for (std::size_t j = i + 1; j < labels_.size(); ++j)
            if (labels_[i] == labels_[j])
                throw std::invalid_argument("duplicate ground label '" + labels_[i] + "'");
    }
}

int GroundSet::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

Mask GroundSet::mask_of(const std::vector<std::string>& labels) const {
    Mask m = 0;
    for (const auto& l : labels) {
        int i = index_of(l);
        if (i < 0) throw std::invalid_argument("unknown ground label '" + l + "'");
        m |= singleton(i);
    }
    return m;
}

std::string GroundSet::subset_name(Mask m) const {
    if (m == 0) return "0";
    if (m > full_mask()) throw std::invalid_argument("mask out of range");
    std::string out;
    for (int i = 0; i < size(); ++i) {
        if (!(m & singleton(i))) continue;
        if (multi_char_ && !out.empty()) out += '.';
        out += labels_[static_cast<std::size_t>(i)];
    }
    return out;
}

Mask GroundSet::parse_subset(const std::string& token) const {
    if (token == "0") return 0;
    Mask m = 0;
    if (multi_char_) {
        std::size_t pos = 0;
        while (pos <= token.size()) {
            std::size_t dot = token.find('.', pos);
            std::string part = token.substr(pos, dot == std::string::npos ? dot : dot - pos);
            int i = index_of(part);
            if (i < 0) throw std::invalid_argument("unknown label '" + part + "' in subset '" + token + "'");
            if (m & singleton(i)) throw std::invalid_argument("repeated label in subset '" + token + "'");
            m |= singleton(i);
            if (dot == std::string::npos) break;
            pos = dot + 1;
        }
    } else {
        for (char c : token) {
            int i = index_of(std::string(1, c));
            if (i < 0) throw std::invalid_argument(std::string("unknown label '") + c + "' in subset '" + token + "'");
            if (m & singleton(i)) throw std::invalid_argument("repeated label in subset '" + token + "'");
            m |= singleton(i);
        }
    }
    if (m == 0) throw std::invalid_argument("empty subset token");
    return m;
}

GroundSet GroundSet::sub_ground(Mask sub) const {
    if (sub == 0 || sub > full_mask()) throw std::invalid_argument("bad sub-ground mask");
    std::vector<std::string> ls;
    for (int i = 0; i < size(); ++i)
        if (sub & singleton(i)) ls.push_back(labels_[static_cast<std::size_t>(i)]);
    return GroundSet(std::move(ls));
}

}  // namespace polymat
