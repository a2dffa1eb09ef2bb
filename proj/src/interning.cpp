#include "gsum/interning.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsum {

LabelInterner::LabelInterner() {
    sets_.emplace_back();           // id 0: the empty set
    set_to_id_.emplace(std::vector<LabelId>{}, kEmptySet);
}

LabelId LabelInterner::intern_label(std::string_view name) {
    auto it = name_to_id_.find(name);
    if (it != name_to_id_.end()) return it->second;
    LabelId id = static_cast<LabelId>(names_.size());
    names_.emplace_back(name);
    name_to_id_.emplace(names_.back(), id);
    return id;
}

std::optional<LabelId> LabelInterner::find_label(std::string_view name) const {
    auto it = name_to_id_.find(name);
    if (it == name_to_id_.end()) return std::nullopt;
    return it->second;
}

const std::string& LabelInterner::label_name(LabelId id) const {
    if (id >= names_.size()) throw std::out_of_range("label id out of range");
    return names_[id];
}

LabelSetId LabelInterner::intern_set(std::vector<LabelId> labels) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    auto it = set_to_id_.find(labels);
    if (it != set_to_id_.end()) return it->second;
    LabelSetId id = static_cast<LabelSetId>(sets_.size());
    sets_.push_back(labels);
    set_to_id_.emplace(std::move(labels), id);
    return id;
}

std::span<const LabelId> LabelInterner::set_members(LabelSetId id) const {
    if (id >= sets_.size()) throw std::out_of_range("label set id out of range");
    return sets_[id];
}

}  // namespace gsum
